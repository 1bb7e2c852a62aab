#pragma once

#include "skewbrace/brace.hpp"
#include "skewbrace/catalog.hpp"
#include "skewbrace/db.hpp"
#include "skewbrace/descriptor.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/ideal.hpp"
#include "skewbrace/perm.hpp"
#include "skewbrace/radical.hpp"
#include "skewbrace/text_io.hpp"
