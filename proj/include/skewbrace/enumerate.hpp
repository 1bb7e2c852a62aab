#pragma once

// All skew braces of a given order up to isomorphism.
//
// A brace with additive group A is a map λ: A -> Aut(A) with λ_0 = id such
// that {(x, λ_x)} is a subgroup of A x| Aut(A) (a regular subgroup of the
// holomorph). The search assigns λ_x for the smallest unassigned x, closes
// the partial subgroup under the product (x,f)(y,g) = (x + f(y), fg) and
// backtracks on conflicts. Each regular subgroup is reached along exactly
// one path. Conjugation by automorphisms fixing everything assigned so far
// (and the next x) maps solutions to isomorphic ones, so only one candidate
// per orbit is tried at each node; remaining duplicates are removed by
// isomorphism testing.

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "skewbrace/catalog.hpp"
#include "skewbrace/db.hpp"
#include "skewbrace/descriptor.hpp"

namespace skewbrace {

struct EnumerateOptions {
  /// Required for order 16, whose search over C2^4 is much larger.
  bool deep = false;
  /// Permit orders outside the catalog range for braces_with_additive_group.
  bool allow_large = false;
  /// Orbit pruning during the search; turning it off is only useful for
  /// cross-checking.
  bool symmetry_pruning = true;
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t raw_solutions = 0;
  std::size_t classes = 0;
};

namespace detail {

struct VectorHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h = h * 1000003u ^ x;
    return h;
  }
};

class LambdaSearch {
 public:
  LambdaSearch(const CayleyGroup& additive, const std::vector<Permutation>& auts, bool pruning)
      : add_(additive), n_(additive.order()), pruning_(pruning) {
    auts_.reserve(auts.size());
    for (const auto& p : auts) {
      auto im = p.images();
      auts_.emplace_back(im.begin(), im.end());
    }
    for (std::size_t i = 0; i < auts_.size(); ++i) index_.emplace(auts_[i], static_cast<Element>(i));
    inverse_.resize(auts_.size());
    for (std::size_t i = 0; i < auts_.size(); ++i) {
      std::vector<Element> inv(n_);
      for (Element x = 0; x < n_; ++x) inv[auts_[i][x]] = x;
      inverse_[i] = index_.at(inv);
    }
  }

  /// Calls on_solution(lambda) with lambda[x * n + y] = λ_x(y).
  template <class F>
  SearchStats run(F&& on_solution) {
    State root;
    root.lam.assign(n_ * n_, 0);
    root.assigned.assign(n_, false);
    root.assigned[0] = true;
    for (Element y = 0; y < n_; ++y) root.lam[y] = y;
    root.members.push_back(0);
    std::vector<Element> all(auts_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
    stats_ = {};
    dfs(root, all, on_solution);
    return stats_;
  }

 private:
  struct State {
    std::vector<Element> lam;
    std::vector<bool> assigned;
    std::vector<Element> members;
    std::vector<Element> gens;
  };

  const Element* row(const State& s, Element x) const { return s.lam.data() + x * n_; }

  /// Adds the generator (x, f) and closes; false on a conflict.
  bool add_generator(State& s, Element x, const std::vector<Element>& f) const {
    std::copy(f.begin(), f.end(), s.lam.begin() + x * n_);
    s.assigned[x] = true;
    s.gens.push_back(x);
    std::size_t old = s.members.size();
    s.members.push_back(x);
    std::vector<Element> prod(n_);
    auto multiply = [&](Element a, Element b) -> bool {
      const Element* fa = row(s, a);
      const Element* fb = row(s, b);
      Element c = add_.op(a, fa[b]);
      for (Element z = 0; z < n_; ++z) prod[z] = fa[fb[z]];
      if (s.assigned[c]) return std::equal(prod.begin(), prod.end(), row(s, c));
      std::copy(prod.begin(), prod.end(), s.lam.begin() + c * n_);
      s.assigned[c] = true;
      s.members.push_back(c);
      return true;
    };
    // Old members times the new generator, then every new member times all
    // generators.
    for (std::size_t i = 0; i < old; ++i) {
      if (!multiply(s.members[i], x)) return false;
    }
    for (std::size_t head = old; head < s.members.size(); ++head) {
      for (auto g : s.gens) {
        if (!multiply(s.members[head], g)) return false;
      }
    }
    return true;
  }

  Element conjugate(Element psi, Element f) const {
    const auto& p = auts_[psi];
    const auto& pi = auts_[inverse_[psi]];
    const auto& fv = auts_[f];
    std::vector<Element> c(n_);
    for (Element z = 0; z < n_; ++z) c[z] = p[fv[pi[z]]];
    return index_.at(c);
  }

  template <class F>
  void dfs(const State& s, const std::vector<Element>& stabilizer, F& on_solution) {
    ++stats_.nodes;
    if (s.members.size() == n_) {
      ++stats_.raw_solutions;
      on_solution(s.lam);
      return;
    }
    Element x = 0;
    while (s.assigned[x]) ++x;
    std::vector<Element> fixing;
    if (pruning_) {
      for (auto psi : stabilizer) {
        if (auts_[psi][x] == x) fixing.push_back(psi);
      }
    }
    std::vector<bool> marked;
    if (fixing.size() > 1) marked.assign(auts_.size(), false);
    for (Element f = 0; f < auts_.size(); ++f) {
      if (auts_[f][0] != 0) continue;
      if (fixing.size() > 1) {
        if (marked[f]) continue;
        for (auto psi : fixing) marked[conjugate(psi, f)] = true;
      }
      State child = s;
      if (!add_generator(child, x, auts_[f])) continue;
      std::vector<Element> child_stab;
      if (fixing.size() > 1) {
        for (auto psi : fixing) {
          if (conjugate(psi, f) == f) child_stab.push_back(psi);
        }
      }
      dfs(child, child_stab, on_solution);
    }
  }

  const CayleyGroup& add_;
  std::size_t n_;
  bool pruning_;
  std::vector<std::vector<Element>> auts_;
  std::unordered_map<std::vector<Element>, Element, VectorHash> index_;
  std::vector<Element> inverse_;
  SearchStats stats_;
};

/// Cheap isomorphism invariant for bucketing raw solutions.
inline std::vector<std::size_t> quick_invariant(const CayleyGroup& add, const std::vector<Element>& mul,
                                                const std::vector<Element>& lam) {
  std::size_t n = add.order();
  TableView mv{n, mul.data()};
  std::vector<std::size_t> per;
  std::size_t commuting = 0;
  for (Element x = 0; x < n; ++x) {
    std::size_t fixed = 0;
    for (Element y = 0; y < n; ++y) {
      if (lam[x * n + y] == y) ++fixed;
      if (mul[x * n + y] == mul[y * n + x]) ++commuting;
    }
    std::size_t lam_order = 1;
    std::vector<Element> power(lam.begin() + x * n, lam.begin() + (x + 1) * n);
    auto is_id = [&] {
      for (Element y = 0; y < n; ++y)
        if (power[y] != y) return false;
      return true;
    };
    while (!is_id()) {
      for (Element y = 0; y < n; ++y) power[y] = lam[x * n + power[y]];
      ++lam_order;
    }
    per.push_back(((element_order(mv, x) * 64 + add.element_order(x)) * 64 + lam_order) * 1024 + fixed);
  }
  std::sort(per.begin(), per.end());
  per.push_back(commuting);
  return per;
}

}  // namespace detail

/// Removes isomorphic duplicates: buckets by descriptor, then pairwise
/// isomorphism tests; the representative kept from each class is the one
/// with the lexicographically smallest packed record.
inline std::vector<SkewBrace> dedup_up_to_iso(const std::vector<SkewBrace>& braces) {
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < braces.size(); ++i) buckets[describe_brace(braces[i]).key()].push_back(i);
  std::vector<SkewBrace> out;
  for (auto& [key, members] : buckets) {
    std::vector<std::vector<std::size_t>> classes;
    for (auto i : members) {
      bool placed = false;
      for (auto& c : classes) {
        if (are_isomorphic_braces(braces[c.front()], braces[i])) {
          c.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({i});
    }
    for (const auto& c : classes) {
      std::size_t best = c.front();
      std::string best_text = record_text(pack(braces[best]));
      for (auto i : c) {
        auto t = record_text(pack(braces[i]));
        if (t < best_text) {
          best = i;
          best_text = std::move(t);
        }
      }
      out.push_back(braces[best]);
    }
  }
  return out;
}

namespace detail {

struct Keyed {
  std::string key;
  std::string record;
  SkewBrace brace;
};

inline void sort_canonically(std::vector<Keyed>& v) {
  std::sort(v.begin(), v.end(), [](const Keyed& a, const Keyed& b) {
    return a.key != b.key ? a.key < b.key : a.record < b.record;
  });
}

inline std::vector<Keyed> braces_with_additive_group_keyed(const CayleyGroup& additive,
                                                           const EnumerateOptions& options,
                                                           SearchStats* stats) {
  std::size_t n = additive.order();
  auto auts = automorphisms(additive, options.allow_large || options.deep);
  LambdaSearch search(additive, auts, options.symmetry_pruning);

  struct Raw {
    std::vector<Element> mul;
    std::vector<Element> lam;
  };
  std::map<std::vector<std::size_t>, std::vector<Raw>> buckets;
  auto st = search.run([&](const std::vector<Element>& lam) {
    Raw r;
    r.lam = lam;
    r.mul.resize(n * n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) r.mul[x * n + y] = additive.op(x, lam[x * n + y]);
    auto inv = quick_invariant(additive, r.mul, r.lam);
    buckets[inv].push_back(std::move(r));
  });

  std::vector<Keyed> out;
  for (auto& [inv, raws] : buckets) {
    // Classes within the bucket; braces over the same additive table are
    // isomorphic iff some morphism preserves both tables.
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < raws.size(); ++i) {
      bool placed = false;
      for (auto& c : classes) {
        const auto& rep = raws[c.front()];
        MorphismSearch ms({additive.view(), TableView{n, rep.mul.data()}},
                          {additive.view(), TableView{n, raws[i].mul.data()}});
        bool iso = false;
        ms.run([&](const std::vector<Element>&) {
          iso = true;
          return false;
        });
        if (iso) {
          c.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({i});
    }
    for (const auto& c : classes) {
      std::optional<Keyed> best;
      for (auto i : c) {
        auto brace = SkewBrace::validate(additive, CayleyGroup::from_flat(n, raws[i].mul));
        auto text = record_text(pack(brace));
        if (!best || text < best->record) best = Keyed{"", std::move(text), std::move(brace)};
      }
      best->key = describe_brace(best->brace).key();
      out.push_back(std::move(*best));
    }
  }
  if (stats) {
    *stats = st;
    stats->classes = out.size();
  }
  sort_canonically(out);
  return out;
}

}  // namespace detail

/// Every skew brace with the given additive group, one per isomorphism
/// class, sorted by descriptor and then by packed record.
inline std::vector<SkewBrace> braces_with_additive_group(const CayleyGroup& additive,
                                                         const EnumerateOptions& options = {},
                                                         SearchStats* stats = nullptr) {
  std::vector<SkewBrace> out;
  for (auto& k : detail::braces_with_additive_group_keyed(additive, options, stats)) out.push_back(std::move(k.brace));
  return out;
}

/// All skew braces of order n (only classical ones when requested), in
/// canonical order. Orders up to 15 run by default; 16 needs options.deep.
inline std::vector<SkewBrace> enumerate_order(std::size_t n, bool classical_only,
                                              const EnumerateOptions& options = {}) {
  if (n == 0) throw Error(errc::out_of_range, "order must be positive");
  if (n > kCatalogMaxOrder) {
    throw Error(errc::capability, "enumeration covers orders 1.." + std::to_string(kCatalogMaxOrder));
  }
  if (n == kCatalogMaxOrder && !options.deep) {
    throw Error(errc::capability, "order 16 requires the deep option");
  }
  std::vector<detail::Keyed> all;
  std::vector<std::string> additive_names;
  for (const auto& entry : catalog_entries(n)) {
    if (classical_only && !entry.group.is_abelian()) continue;
    auto part = detail::braces_with_additive_group_keyed(entry.group, options, nullptr);
    for (auto& k : part) all.push_back(std::move(k));
    additive_names.push_back(entry.name);
  }
  // Distinct catalog groups are pairwise non-isomorphic, so no brace can
  // appear under two additive groups.
  for (std::size_t i = 0; i < additive_names.size(); ++i) {
    for (std::size_t j = i + 1; j < additive_names.size(); ++j) {
      if (additive_names[i] == additive_names[j]) {
        throw Error(errc::internal_consistency, "catalog lists " + additive_names[i] + " twice");
      }
    }
  }
  detail::sort_canonically(all);
  std::vector<SkewBrace> out;
  out.reserve(all.size());
  for (auto& k : all) out.push_back(std::move(k.brace));
  return out;
}

}  // namespace skewbrace
