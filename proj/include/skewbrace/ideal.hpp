#pragma once

// Left ideals, ideals, the ideal lattice, X★Y, quotients and sub-braces.

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

inline SubsetMask additive_closure(const SkewBrace& a, const SubsetMask& s) {
  return detail::closure(a.additive().view(), s);
}

inline bool is_left_ideal(const SkewBrace& a, const SubsetMask& s) {
  if (!is_subgroup(a.additive(), s)) return false;
  auto members = s.elements();
  for (Element x = 0; x < a.order(); ++x) {
    for (auto m : members) {
      if (!s.contains(a.lambda(x, m))) return false;
    }
  }
  return true;
}

namespace detail {

inline bool lambda_invariant(const SkewBrace& a, const std::vector<Element>& members, const SubsetMask& s) {
  for (Element x = 0; x < a.order(); ++x) {
    for (auto m : members) {
      if (!s.contains(a.lambda(x, m))) return false;
    }
  }
  return true;
}

/// x * S == S * x as sets, for every x, in the given group.
inline bool conjugation_invariant(const CayleyGroup& g, const std::vector<Element>& members,
                                  const SubsetMask& s) {
  for (Element x = 0; x < g.order(); ++x) {
    for (auto m : members) {
      if (!s.contains(g.op(g.op(x, m), g.inv(x)))) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Normal additive subgroup with a∘I = I∘a and λ_a(I) ⊆ I for all a.
inline bool is_ideal_by_additive_criterion(const SkewBrace& a, const SubsetMask& s) {
  if (!is_subgroup(a.additive(), s)) return false;
  auto members = s.elements();
  return detail::conjugation_invariant(a.additive(), members, s) &&
         detail::conjugation_invariant(a.multiplicative(), members, s) &&
         detail::lambda_invariant(a, members, s);
}

/// Normal subgroup of (A,∘) with λ_a(I) ⊆ I and a+I = I+a for all a.
inline bool is_ideal_by_definition(const SkewBrace& a, const SubsetMask& s) {
  if (!is_subgroup(a.multiplicative(), s)) return false;
  auto members = s.elements();
  return detail::conjugation_invariant(a.multiplicative(), members, s) &&
         detail::lambda_invariant(a, members, s) &&
         detail::conjugation_invariant(a.additive(), members, s);
}

/// Both characterizations are evaluated; disagreement is a library bug.
inline bool is_ideal(const SkewBrace& a, const SubsetMask& s) {
  bool lemma = is_ideal_by_additive_criterion(a, s);
  if (lemma != is_ideal_by_definition(a, s)) {
    throw Error(errc::internal_consistency, "ideal characterizations disagree on " + s.to_string());
  }
  return lemma;
}

/// Smallest ideal containing s: closed under +, λ_x, x + . - x and x ∘ . ∘ x'.
inline SubsetMask ideal_closure(const SkewBrace& a, const SubsetMask& s) {
  SubsetMask out(a.order());
  std::vector<Element> members;
  auto push = [&](Element x) {
    if (!out.contains(x)) {
      out.insert(x);
      members.push_back(x);
    }
  };
  push(0);
  for (auto x : s.elements()) push(x);
  for (std::size_t head = 0; head < members.size(); ++head) {
    Element x = members[head];
    for (Element b = 0; b < a.order(); ++b) {
      push(a.lambda(b, x));
      push(a.minus(a.plus(b, x), b));
      push(a.circ(a.circ(b, x), a.circ_inv(b)));
    }
    for (std::size_t i = 0; i <= head; ++i) {
      push(a.plus(x, members[i]));
      push(a.plus(members[i], x));
    }
  }
  return out;
}

inline SubsetMask ideal_closure(const SkewBrace& a, Element x) {
  return ideal_closure(a, SubsetMask(a.order(), {x}));
}

namespace detail {

/// {u + v : u ∈ I, v ∈ J}; a subgroup when I and J are normal.
inline SubsetMask sum_of_normal(const SkewBrace& a, const SubsetMask& i, const SubsetMask& j) {
  SubsetMask out(a.order());
  auto je = j.elements();
  for (auto u : i.elements()) {
    for (auto v : je) out.insert(a.plus(u, v));
  }
  return out;
}

/// Smallest λ-invariant additive subgroup containing s.
inline SubsetMask left_ideal_closure(const SkewBrace& a, const SubsetMask& s) {
  SubsetMask out(a.order());
  std::vector<Element> members;
  auto push = [&](Element x) {
    if (!out.contains(x)) {
      out.insert(x);
      members.push_back(x);
    }
  };
  push(0);
  for (auto x : s.elements()) push(x);
  for (std::size_t head = 0; head < members.size(); ++head) {
    Element x = members[head];
    for (Element b = 0; b < a.order(); ++b) push(a.lambda(b, x));
    for (std::size_t i = 0; i <= head; ++i) {
      push(a.plus(x, members[i]));
      push(a.plus(members[i], x));
    }
  }
  return out;
}

template <class Join>
std::vector<SubsetMask> close_under_join(std::vector<SubsetMask> principal, Join join) {
  std::unordered_set<SubsetMask, SubsetMaskHash> seen(principal.begin(), principal.end());
  std::vector<SubsetMask> basis(seen.begin(), seen.end());
  std::sort(basis.begin(), basis.end());
  std::vector<SubsetMask> all = basis;
  for (std::size_t head = 0; head < all.size(); ++head) {
    for (const auto& p : basis) {
      if (p.is_subset_of(all[head])) continue;
      SubsetMask joined = join(all[head], p);
      if (seen.insert(joined).second) all.push_back(std::move(joined));
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace detail

/// Every ideal, ordered by size then bitset value. Every ideal is the sum of
/// the principal ideals of its elements, so closing {<a>} under sums is
/// exhaustive.
inline std::vector<SubsetMask> ideal_lattice(const SkewBrace& a) {
  std::vector<SubsetMask> principal;
  for (Element x = 0; x < a.order(); ++x) principal.push_back(ideal_closure(a, x));
  return detail::close_under_join(std::move(principal), [&](const SubsetMask& i, const SubsetMask& j) {
    return detail::sum_of_normal(a, i, j);
  });
}

inline std::vector<SubsetMask> left_ideal_lattice(const SkewBrace& a) {
  std::vector<SubsetMask> principal;
  for (Element x = 0; x < a.order(); ++x) principal.push_back(detail::left_ideal_closure(a, SubsetMask(a.order(), {x})));
  return detail::close_under_join(std::move(principal), [&](const SubsetMask& i, const SubsetMask& j) {
    return additive_closure(a, i | j);
  });
}

inline SubsetMask ideal_sum(const SkewBrace& a, const SubsetMask& i, const SubsetMask& j) {
  if (!is_ideal(a, i)) throw Error(errc::not_an_ideal, i.to_string());
  if (!is_ideal(a, j)) throw Error(errc::not_an_ideal, j.to_string());
  return detail::sum_of_normal(a, i, j);
}

inline SubsetMask ideal_intersection(const SkewBrace& a, const SubsetMask& i, const SubsetMask& j) {
  if (!is_ideal(a, i)) throw Error(errc::not_an_ideal, i.to_string());
  if (!is_ideal(a, j)) throw Error(errc::not_an_ideal, j.to_string());
  return i & j;
}

/// Additive subgroup generated by {x★y : x ∈ X, y ∈ Y}.
inline SubsetMask star_subgroup(const SkewBrace& a, const SubsetMask& x, const SubsetMask& y) {
  SubsetMask gens(a.order());
  gens.insert(0);
  auto ye = y.elements();
  for (auto u : x.elements()) {
    for (auto v : ye) gens.insert(a.star(u, v));
  }
  return additive_closure(a, gens);
}

inline SubsetMask socle(const SkewBrace& a) {
  SubsetMask kernel(a.order());
  for (Element x = 0; x < a.order(); ++x) {
    bool id = true;
    for (Element y = 0; y < a.order() && id; ++y) id = a.lambda(x, y) == y;
    if (id) kernel.insert(x);
  }
  SubsetMask soc = kernel & center(a.additive());
  if (!is_ideal(a, soc)) throw Error(errc::internal_consistency, "socle is not an ideal");
  return soc;
}

struct SubBrace {
  SkewBrace brace;
  /// embedding[k] is the element of the parent labelled k in the sub-brace.
  std::vector<Element> embedding;
};

/// The brace induced on a subset closed under +, -, ∘ and '. Elements keep
/// their relative order, so 0 stays 0.
inline SubBrace sub_brace(const SkewBrace& a, const SubsetMask& s) {
  if (!s.contains(0) || !is_subgroup(a.additive(), s) || !is_subgroup(a.multiplicative(), s)) {
    throw Error(errc::not_closed, s.to_string());
  }
  SubBrace out;
  out.embedding = s.elements();
  std::size_t m = out.embedding.size();
  std::vector<Element> local(a.order(), 0);
  for (std::size_t k = 0; k < m; ++k) local[out.embedding[k]] = static_cast<Element>(k);
  std::vector<Element> add(m * m), mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      add[i * m + j] = local[a.plus(out.embedding[i], out.embedding[j])];
      mul[i * m + j] = local[a.circ(out.embedding[i], out.embedding[j])];
    }
  }
  out.brace = SkewBrace::validate(CayleyGroup::from_flat(m, std::move(add)), CayleyGroup::from_flat(m, std::move(mul)));
  return out;
}

enum class IdealKind { left_ideal, ideal };

struct IdealRecord {
  SubsetMask mask;
  IdealKind kind = IdealKind::ideal;
  SkewBrace as_brace;
};

inline std::vector<IdealRecord> all_ideals(const SkewBrace& a) {
  std::vector<IdealRecord> out;
  for (auto& m : ideal_lattice(a)) {
    if (!is_ideal(a, m)) throw Error(errc::internal_consistency, "lattice member is not an ideal");
    auto sb = sub_brace(a, m);
    out.push_back({std::move(m), IdealKind::ideal, std::move(sb.brace)});
  }
  return out;
}

/// Every left ideal; those that are also ideals are tagged as such.
inline std::vector<IdealRecord> all_left_ideals(const SkewBrace& a) {
  std::vector<IdealRecord> out;
  for (auto& m : left_ideal_lattice(a)) {
    if (!is_left_ideal(a, m)) throw Error(errc::internal_consistency, "lattice member is not a left ideal");
    auto kind = is_ideal(a, m) ? IdealKind::ideal : IdealKind::left_ideal;
    auto sb = sub_brace(a, m);
    out.push_back({std::move(m), kind, std::move(sb.brace)});
  }
  return out;
}

struct Quotient {
  SkewBrace brace;
  /// projection[x] is the coset label of x.
  std::vector<Element> projection;
};

/// A/I; cosets are labelled in order of their smallest member.
inline Quotient quotient(const SkewBrace& a, const SubsetMask& ideal) {
  if (!is_ideal(a, ideal)) throw Error(errc::not_an_ideal, ideal.to_string());
  std::size_t n = a.order();
  constexpr Element kUnset = ~Element{0};
  Quotient out;
  out.projection.assign(n, kUnset);
  std::vector<Element> reps;
  auto members = ideal.elements();
  for (Element x = 0; x < n; ++x) {
    if (out.projection[x] != kUnset) continue;
    auto label = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (auto i : members) {
      out.projection[a.plus(x, i)] = label;
    }
    for (auto i : members) {
      if (out.projection[a.circ(x, i)] != label) {
        throw Error(errc::internal_consistency, "a∘I differs from a+I");
      }
    }
  }
  std::size_t m = reps.size();
  std::vector<Element> add(m * m), mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      add[i * m + j] = out.projection[a.plus(reps[i], reps[j])];
      mul[i * m + j] = out.projection[a.circ(reps[i], reps[j])];
    }
  }
  out.brace = SkewBrace::validate(CayleyGroup::from_flat(m, std::move(add)), CayleyGroup::from_flat(m, std::move(mul)));
  return out;
}

}  // namespace skewbrace
