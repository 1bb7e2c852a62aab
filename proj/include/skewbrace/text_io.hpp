#pragma once

// Plain-text tables: "group <n>" followed by n rows, and "brace <n>"
// followed by the additive table, a blank line and the multiplicative table.
// Entries are whitespace separated; '#' starts a comment. The identity is
// moved to position 0 on input.

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

namespace detail {

struct TableText {
  std::string kind;
  std::size_t n = 0;
  std::vector<std::size_t> values;
};

inline TableText read_table_text(std::istream& in) {
  TableText t;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string word;
    while (ss >> word) {
      if (!header) {
        t.kind = word;
        if (!(ss >> t.n) || t.n == 0) {
          throw Error(errc::syntax, "line " + std::to_string(line_no) + ": expected '" + word + " <n>'");
        }
        header = true;
        continue;
      }
      if (word.find_first_not_of("0123456789") != std::string::npos || word.size() > 9) {
        throw Error(errc::syntax, "line " + std::to_string(line_no) + ": bad entry '" + word + "'");
      }
      t.values.push_back(std::stoul(word));
    }
  }
  if (!header) throw Error(errc::syntax, "empty table file");
  return t;
}

inline std::vector<Element> checked_flat(std::size_t n, const std::vector<std::size_t>& values,
                                         std::size_t offset) {
  std::vector<Element> flat(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (values[offset + i] >= n) {
      throw Error(errc::not_latin, "entry " + std::to_string(values[offset + i]) + " out of range");
    }
    flat[i] = static_cast<Element>(values[offset + i]);
  }
  return flat;
}

}  // namespace detail

inline CayleyGroup read_group_text(std::istream& in) {
  auto t = detail::read_table_text(in);
  if (t.kind != "group") throw Error(errc::syntax, "expected 'group <n>' header, got '" + t.kind + "'");
  if (t.values.size() != t.n * t.n) {
    throw Error(errc::not_square, "expected " + std::to_string(t.n * t.n) + " entries, got " +
                                      std::to_string(t.values.size()));
  }
  auto flat = detail::checked_flat(t.n, t.values, 0);
  auto fix = identity_normalizer(t.n, flat);
  return CayleyGroup::from_flat(t.n, relabel_flat(t.n, flat, fix));
}

/// Both tables are relabeled by the same swap, which moves the additive
/// identity to 0; the multiplicative identity must then be 0 as well.
inline SkewBrace read_brace_text(std::istream& in) {
  auto t = detail::read_table_text(in);
  if (t.kind != "brace") throw Error(errc::syntax, "expected 'brace <n>' header, got '" + t.kind + "'");
  if (t.values.size() != 2 * t.n * t.n) {
    throw Error(errc::not_square, "expected two tables of " + std::to_string(t.n * t.n) + " entries");
  }
  auto add = detail::checked_flat(t.n, t.values, 0);
  auto mul = detail::checked_flat(t.n, t.values, t.n * t.n);
  auto fix = identity_normalizer(t.n, add);
  return SkewBrace::validate(CayleyGroup::from_flat(t.n, relabel_flat(t.n, add, fix)),
                             CayleyGroup::from_flat(t.n, relabel_flat(t.n, mul, fix)));
}

inline std::string group_text(const CayleyGroup& g) {
  std::string s = "group " + std::to_string(g.order()) + "\n";
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) s += (b ? " " : "") + std::to_string(g.op(a, b));
    s += "\n";
  }
  return s;
}

inline std::string brace_text(const SkewBrace& a) {
  auto add = group_text(a.additive());
  auto mul = group_text(a.multiplicative());
  return "brace" + add.substr(5) + "\n" + mul.substr(mul.find('\n') + 1);
}

}  // namespace skewbrace
