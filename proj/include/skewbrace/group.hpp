#pragma once

// Finite groups as Cayley tables on {0..n-1} with identity 0.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/error.hpp"
#include "skewbrace/morphism.hpp"
#include "skewbrace/perm.hpp"
#include "skewbrace/subset_mask.hpp"

namespace skewbrace {

/// Upper bound on the order for which automorphism groups are computed
/// unless the caller opts in to larger orders.
inline constexpr std::size_t kDefaultAutomorphismBound = 16;

class CayleyGroup {
 public:
  CayleyGroup() = default;

  /// Validates a flat row-major table; see validate_group.
  static CayleyGroup from_flat(std::size_t n, std::vector<Element> table) {
    if (table.size() != n * n || n == 0) {
      throw Error(errc::not_square, "expected " + std::to_string(n * n) + " entries, got " +
                                        std::to_string(table.size()));
    }
    for (auto x : table) {
      if (x >= n) throw Error(errc::not_latin, "entry " + std::to_string(x) + " out of range");
    }
    for (Element x = 0; x < n; ++x) {
      if (table[x] != x || table[x * n] != x) {
        throw Error(errc::identity_not_zero, "row/column 0 is not the identity at " +
                                                 std::to_string(x));
      }
    }
    std::vector<bool> seen(n);
    for (std::size_t r = 0; r < n; ++r) {
      std::fill(seen.begin(), seen.end(), false);
      for (std::size_t c = 0; c < n; ++c) {
        auto v = table[r * n + c];
        if (seen[v]) throw Error(errc::not_latin, "row " + std::to_string(r) + " repeats " + std::to_string(v));
        seen[v] = true;
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::fill(seen.begin(), seen.end(), false);
      for (std::size_t r = 0; r < n; ++r) {
        auto v = table[r * n + c];
        if (seen[v]) throw Error(errc::not_latin, "column " + std::to_string(c) + " repeats " + std::to_string(v));
        seen[v] = true;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto ab = table[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (table[ab * n + c] != table[a * n + table[b * n + c]]) {
            throw Error(errc::not_associative,
                        "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ")",
                        std::array<std::size_t, 3>{a, b, c});
          }
        }
      }
    }
    CayleyGroup g;
    g.n_ = n;
    g.table_ = std::move(table);
    g.inverse_.resize(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (g.table_[a * n + b] == 0) g.inverse_[a] = b;
      }
    }
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  Element op(Element a, Element b) const { return table_[a * n_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  std::span<const Element> flat() const noexcept { return table_; }
  detail::TableView view() const noexcept { return {n_, table_.data()}; }

  std::size_t element_order(Element a) const { return detail::element_order(view(), a); }

  bool is_abelian() const {
    for (Element a = 0; a < n_; ++a) {
      for (Element b = a + 1; b < n_; ++b) {
        if (op(a, b) != op(b, a)) return false;
      }
    }
    return true;
  }

  std::vector<std::vector<Element>> rows() const {
    std::vector<std::vector<Element>> out(n_);
    for (std::size_t r = 0; r < n_; ++r) out[r].assign(table_.begin() + r * n_, table_.begin() + (r + 1) * n_);
    return out;
  }

  /// The group on relabeled elements: new element perm(x) plays the role of x.
  /// perm must fix 0.
  CayleyGroup relabel(const Permutation& perm) const {
    std::vector<Element> t(n_ * n_);
    for (Element a = 0; a < n_; ++a) {
      for (Element b = 0; b < n_; ++b) t[perm(a) * n_ + perm(b)] = perm(op(a, b));
    }
    return from_flat(n_, std::move(t));
  }

  friend bool operator==(const CayleyGroup& a, const CayleyGroup& b) { return a.table_ == b.table_; }

 private:
  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

/// Validates a square table: range, identity 0, Latin rows and columns,
/// associativity (reporting the first failing triple).
inline CayleyGroup validate_group(const std::vector<std::vector<Element>>& rows) {
  std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(errc::not_square, "row of length " + std::to_string(r.size()));
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return CayleyGroup::from_flat(n, std::move(flat));
}

/// Swaps the identity element of a table into position 0. Returns the
/// relabeling used (an involution, identity when already normalized).
inline Permutation identity_normalizer(std::size_t n, std::span<const Element> flat) {
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = flat[e * n + x] == x && flat[x * n + e] == x;
    if (ok) {
      std::vector<Permutation::point_type> images(n);
      for (Element x = 0; x < n; ++x) images[x] = x;
      std::swap(images[0], images[e]);
      return Permutation::from_images(std::move(images));
    }
  }
  throw Error(errc::identity_not_zero, "table has no identity element");
}

inline std::vector<Element> relabel_flat(std::size_t n, std::span<const Element> flat,
                                         const Permutation& perm) {
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) t[perm(a) * n + perm(b)] = perm(flat[a * n + b]);
  }
  return t;
}

inline SubsetMask subgroup_generated(const CayleyGroup& g, const SubsetMask& s) {
  return detail::closure(g.view(), s);
}

inline bool is_subgroup(const CayleyGroup& g, const SubsetMask& s) {
  if (!s.contains(0)) return false;
  auto members = s.elements();
  for (auto a : members) {
    if (!s.contains(g.inv(a))) return false;
    for (auto b : members) {
      if (!s.contains(g.op(a, b))) return false;
    }
  }
  return true;
}

inline bool is_normal_subgroup(const CayleyGroup& g, const SubsetMask& s) {
  if (!is_subgroup(g, s)) throw Error(errc::not_a_subgroup, s.to_string());
  auto members = s.elements();
  for (Element x = 0; x < g.order(); ++x) {
    for (auto m : members) {
      if (!s.contains(g.op(g.op(x, m), g.inv(x)))) return false;
    }
  }
  return true;
}

inline SubsetMask center(const CayleyGroup& g) {
  SubsetMask z(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.op(a, b) == g.op(b, a);
    if (central) z.insert(a);
  }
  return z;
}

/// All automorphisms as permutations of the elements, sorted lexicographically.
inline std::vector<Permutation> automorphisms(const CayleyGroup& g, bool allow_large = false) {
  if (g.order() > kDefaultAutomorphismBound && !allow_large) {
    throw Error(errc::capability, "automorphism search limited to order " +
                                      std::to_string(kDefaultAutomorphismBound));
  }
  std::vector<Permutation> out;
  detail::MorphismSearch search({g.view()}, {g.view()});
  search.run([&](const std::vector<Element>& phi) {
    out.push_back(Permutation::from_images({phi.begin(), phi.end()}));
    return true;
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_compare(a, b) < 0; });
  return out;
}

/// A bijection phi with phi(x*y) = phi(x)*phi(y), if one exists.
inline std::optional<Permutation> are_isomorphic_groups(const CayleyGroup& g, const CayleyGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  std::optional<Permutation> found;
  detail::MorphismSearch search({g.view()}, {h.view()});
  search.run([&](const std::vector<Element>& phi) {
    found = Permutation::from_images({phi.begin(), phi.end()});
    return false;
  });
  return found;
}

/// Left translations: element x maps to the permutation i -> x*i. Under the
/// left-to-right compose this is an anti-homomorphism:
/// compose(p_x, p_y) == p_{y*x}.
inline std::vector<Permutation> regular_representation(const CayleyGroup& g) {
  std::vector<Permutation> out;
  out.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Permutation::point_type> images(g.order());
    for (Element i = 0; i < g.order(); ++i) images[i] = g.op(x, i);
    out.push_back(Permutation::from_images(std::move(images)));
  }
  return out;
}

/// Right translations i -> i*x; compose(p_x, p_y) == p_{x*y}.
inline std::vector<Permutation> right_regular_representation(const CayleyGroup& g) {
  std::vector<Permutation> out;
  out.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Permutation::point_type> images(g.order());
    for (Element i = 0; i < g.order(); ++i) images[i] = g.op(i, x);
    out.push_back(Permutation::from_images(std::move(images)));
  }
  return out;
}

/// Cayley table of an explicit list of distinct permutations closed under
/// compose; entry (i, j) is the index of compose(elems[i], elems[j]).
/// elems[0] must be the identity.
inline CayleyGroup group_from_elements(std::span<const Permutation> elems) {
  std::size_t n = elems.size();
  auto sorted = sort_elements(elems);
  std::vector<Element> position_of_sorted(n);
  for (std::size_t k = 0; k < n; ++k) position_of_sorted[k] = sorted.sigma(static_cast<Element>(k));
  auto index_of = [&](const Permutation& p) -> Element {
    auto it = std::lower_bound(sorted.sorted.begin(), sorted.sorted.end(), p,
                               [](const auto& a, const auto& b) { return lex_compare(a, b) < 0; });
    if (it == sorted.sorted.end() || !(*it == p)) {
      throw Error(errc::not_closed, "product " + p.to_string() + " outside the element list");
    }
    return position_of_sorted[static_cast<std::size_t>(it - sorted.sorted.begin())];
  };
  std::vector<Element> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = index_of(compose(elems[i], elems[j]));
  }
  return CayleyGroup::from_flat(n, std::move(flat));
}

/// The permutation group generated by `gens`, elements sorted
/// lexicographically (so the identity is element 0).
inline CayleyGroup group_from_permutations(std::span<const Permutation> gens, std::size_t degree) {
  auto elems = enumerate_permutation_group(gens, degree);
  auto sorted = sort_elements(elems);
  return group_from_elements(sorted.sorted);
}

// Constructions used by the catalog and by tests.

inline CayleyGroup cyclic_group(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return CayleyGroup::from_flat(n, std::move(t));
}

/// Element (g, h) has index g * |H| + h.
inline CayleyGroup direct_product(const CayleyGroup& g, const CayleyGroup& h) {
  std::size_t m = g.order(), k = h.order(), n = m * k;
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      t[a * n + b] = static_cast<Element>(g.op(a / k, b / k) * k + h.op(a % k, b % k));
    }
  }
  return CayleyGroup::from_flat(n, std::move(t));
}

/// <a, b | a^m = 1, b^k = a^s, b a b^-1 = a^r>; element a^i b^j has index
/// i * k + j. Requires r^k = 1 and r*s = s (mod m).
inline CayleyGroup metacyclic_group(std::size_t m, std::size_t k, std::size_t r, std::size_t s) {
  std::size_t n = m * k;
  std::vector<std::size_t> rpow(k + 1, 1 % m);
  for (std::size_t j = 1; j <= k; ++j) rpow[j] = rpow[j - 1] * r % m;
  if (rpow[k] != 1 % m || (r * s) % m != s % m) {
    throw Error(errc::not_associative, "inconsistent metacyclic parameters");
  }
  std::vector<Element> t(n * n);
  for (std::size_t i1 = 0; i1 < m; ++i1) {
    for (std::size_t j1 = 0; j1 < k; ++j1) {
      for (std::size_t i2 = 0; i2 < m; ++i2) {
        for (std::size_t j2 = 0; j2 < k; ++j2) {
          std::size_t i = i1 + rpow[j1] * i2;
          std::size_t j = j1 + j2;
          if (j >= k) {
            j -= k;
            i += s;
          }
          t[(i1 * k + j1) * n + (i2 * k + j2)] = static_cast<Element>((i % m) * k + j);
        }
      }
    }
  }
  return CayleyGroup::from_flat(n, std::move(t));
}

/// N x| H where h acts on N by action[h] (a homomorphism H -> Aut(N)).
/// Element (x, h) has index x * |H| + h; (x,h)(y,k) = (x * action[h](y), hk).
inline CayleyGroup semidirect_product(const CayleyGroup& normal, const CayleyGroup& acting,
                                      std::span<const Permutation> action) {
  std::size_t m = normal.order(), k = acting.order(), n = m * k;
  if (action.size() != k) throw Error(errc::order_mismatch, "one automorphism per acting element");
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element x = a / k, h = a % k, y = b / k, g = b % k;
      t[a * n + b] = static_cast<Element>(normal.op(x, action[h](y)) * k + acting.op(h, g));
    }
  }
  return CayleyGroup::from_flat(n, std::move(t));
}

}  // namespace skewbrace
