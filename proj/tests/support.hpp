#pragma once

#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/radical.hpp"

namespace sbtest {

using namespace skewbrace;

/// All skew braces of order n (n <= 15), enumerated once per process.
inline const std::vector<SkewBrace>& population(std::size_t n) {
  static std::map<std::size_t, std::vector<SkewBrace>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_order(n, false)).first;
  return it->second;
}

inline std::vector<const SkewBrace*> population_upto(std::size_t hi) {
  std::vector<const SkewBrace*> out;
  for (std::size_t n = 1; n <= hi; ++n)
    for (const auto& b : population(n)) out.push_back(&b);
  return out;
}

inline std::string group_name(const CayleyGroup& g) { return describe_group(g).name; }

/// Braces of order n whose additive and multiplicative groups carry the
/// given catalog names.
inline std::vector<SkewBrace> find_braces(std::size_t n, const std::string& add, const std::string& mul) {
  std::vector<SkewBrace> out;
  for (const auto& b : population(n))
    if (group_name(b.additive()) == add && group_name(b.multiplicative()) == mul) out.push_back(b);
  return out;
}

inline oracle::Raw raw(const SkewBrace& a) {
  oracle::Raw r;
  r.n = a.order();
  r.add.resize(r.n * r.n);
  r.mul.resize(r.n * r.n);
  for (Element x = 0; x < r.n; ++x)
    for (Element y = 0; y < r.n; ++y) {
      r.add[x * r.n + y] = a.plus(x, y);
      r.mul[x * r.n + y] = a.circ(x, y);
    }
  return r;
}

inline oracle::Subset to_bits(const SubsetMask& m) {
  oracle::Subset s = 0;
  for (auto x : m.elements()) s |= oracle::Subset{1} << x;
  return s;
}

inline SubsetMask from_bits(std::size_t n, oracle::Subset s) {
  SubsetMask m(n);
  for (auto x : oracle::members(s, n)) m.insert(x);
  return m;
}

inline std::vector<std::size_t> sizes(const std::vector<SubsetMask>& masks) {
  std::vector<std::size_t> out;
  for (const auto& m : masks) out.push_back(m.size());
  return out;
}

}  // namespace sbtest
