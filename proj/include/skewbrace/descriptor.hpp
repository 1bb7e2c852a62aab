#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "skewbrace/catalog.hpp"
#include "skewbrace/ideal.hpp"

namespace skewbrace {

/// Isomorphism invariant of a brace, used to order and to search the
/// database by structural description.
struct BraceDescriptor {
  std::size_t order = 0;
  GroupDescriptor additive;
  GroupDescriptor multiplicative;
  std::size_t socle_size = 0;
  std::size_t ideal_count = 0;
  std::vector<std::size_t> principal_ideal_sizes;  // sorted
  bool trivial = false;
  bool two_sided = false;
  bool star_associative = false;
  bool classical = false;

  /// Sort key; groups by additive then multiplicative catalog position.
  std::string key() const {
    auto pad = [](std::size_t v) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%04zu", v);
      return std::string(buf);
    };
    auto group_key = [&](const GroupDescriptor& g) {
      return g.catalog_id ? pad(*g.catalog_id) : "z" + g.key();
    };
    std::string k = pad(order) + "|" + group_key(additive) + "|" + group_key(multiplicative) + "|" +
                    pad(socle_size) + "|" + pad(ideal_count) + "|";
    for (auto s : principal_ideal_sizes) k += pad(s) + ".";
    k += "|";
    k += trivial ? 'T' : 't';
    k += two_sided ? 'S' : 's';
    k += star_associative ? 'A' : 'a';
    k += classical ? 'C' : 'c';
    return k;
  }

  /// One-line human summary.
  std::string summary() const {
    std::string s = "add=" + additive.name + " mul=" + multiplicative.name +
                    " socle=" + std::to_string(socle_size) + " ideals=" + std::to_string(ideal_count);
    if (classical) s += " classical";
    if (trivial) s += " trivial";
    if (two_sided) s += " two-sided";
    if (star_associative) s += " star-assoc";
    return s;
  }

  friend bool operator==(const BraceDescriptor& a, const BraceDescriptor& b) { return a.key() == b.key(); }
};

inline BraceDescriptor describe_brace(const SkewBrace& a) {
  BraceDescriptor d;
  d.order = a.order();
  d.additive = describe_group(a.additive());
  d.multiplicative = describe_group(a.multiplicative());
  d.socle_size = socle(a).size();
  d.ideal_count = ideal_lattice(a).size();
  for (Element x = 0; x < a.order(); ++x) d.principal_ideal_sizes.push_back(ideal_closure(a, x).size());
  std::sort(d.principal_ideal_sizes.begin(), d.principal_ideal_sizes.end());
  d.trivial = is_trivial(a);
  d.two_sided = is_two_sided(a);
  d.star_associative = is_star_associative(a);
  d.classical = a.additive().is_abelian();
  return d;
}

}  // namespace skewbrace
