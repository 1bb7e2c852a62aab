#pragma once

// Left, right and derived series; nilpotency, solvability and simplicity;
// prime and semiprime braces and ideals; Baer and Wedderburn radicals.

#include <string>
#include <vector>

#include "skewbrace/ideal.hpp"

namespace skewbrace {

enum class SeriesKind { left, right, derived };

struct SeriesChain {
  SeriesKind kind = SeriesKind::left;
  /// terms[0] is the starting set; the last term is the stable one.
  std::vector<SubsetMask> terms;
  std::size_t stabilized_at = 0;
  bool reaches_zero = false;
};

namespace detail {

/// Series computed inside the sub-brace on `base` (base must be closed
/// under both operations; X★Y only involves elements of the sub-brace).
inline SeriesChain series_from(const SkewBrace& a, SeriesKind kind, const SubsetMask& base) {
  SeriesChain chain;
  chain.kind = kind;
  chain.terms.push_back(base);
  while (true) {
    const SubsetMask& prev = chain.terms.back();
    SubsetMask next = kind == SeriesKind::left    ? star_subgroup(a, base, prev)
                      : kind == SeriesKind::right ? star_subgroup(a, prev, base)
                                                  : star_subgroup(a, prev, prev);
    if (next == prev) break;
    chain.terms.push_back(std::move(next));
  }
  chain.stabilized_at = chain.terms.size() - 1;
  chain.reaches_zero = chain.terms.back().is_zero();
  return chain;
}

inline bool solvable_on(const SkewBrace& a, const SubsetMask& base) {
  return series_from(a, SeriesKind::derived, base).reaches_zero;
}

inline bool nilpotent_on(const SkewBrace& a, const SubsetMask& base) {
  return series_from(a, SeriesKind::left, base).reaches_zero &&
         series_from(a, SeriesKind::right, base).reaches_zero;
}

inline SubsetMask sum_all(const SkewBrace& a, const std::vector<SubsetMask>& ideals) {
  SubsetMask acc = SubsetMask::zero(a.order());
  for (const auto& i : ideals) acc = sum_of_normal(a, acc, i);
  return acc;
}

inline bool is_prime_given(const SkewBrace& a, const std::vector<SubsetMask>& lattice) {
  if (a.order() < 2) return false;
  for (const auto& i : lattice) {
    if (i.is_zero()) continue;
    for (const auto& j : lattice) {
      if (j.is_zero()) continue;
      if (star_subgroup(a, i, j).is_zero()) return false;
    }
  }
  return true;
}

inline bool is_semiprime_given(const SkewBrace& a, const std::vector<SubsetMask>& lattice) {
  for (const auto& i : lattice) {
    if (!i.is_zero() && star_subgroup(a, i, i).is_zero()) return false;
  }
  return true;
}

inline SubsetMask baer_given(const SkewBrace& a, const std::vector<SubsetMask>& lattice) {
  std::vector<SubsetMask> solvable;
  for (const auto& i : lattice) {
    if (solvable_on(a, i)) solvable.push_back(i);
  }
  SubsetMask b = sum_all(a, solvable);
  if (!solvable_on(a, b)) throw Error(errc::internal_consistency, "sum of solvable ideals is not solvable");
  return b;
}

inline SubsetMask wedderburn_given(const SkewBrace& a, const std::vector<SubsetMask>& lattice) {
  std::vector<SubsetMask> nilpotent;
  for (const auto& i : lattice) {
    if (nilpotent_on(a, i)) nilpotent.push_back(i);
  }
  return sum_all(a, nilpotent);
}

}  // namespace detail

/// A^1 = A, A^{k+1} = A★A^k; every term is checked to be a left ideal.
inline SeriesChain left_series(const SkewBrace& a) {
  auto chain = detail::series_from(a, SeriesKind::left, SubsetMask::full(a.order()));
  for (const auto& t : chain.terms) {
    if (!is_left_ideal(a, t)) throw Error(errc::internal_consistency, "left series term is not a left ideal");
  }
  return chain;
}

/// A^(1) = A, A^(k+1) = A^(k)★A; every term is checked to be an ideal.
inline SeriesChain right_series(const SkewBrace& a) {
  auto chain = detail::series_from(a, SeriesKind::right, SubsetMask::full(a.order()));
  for (const auto& t : chain.terms) {
    if (!is_ideal(a, t)) throw Error(errc::internal_consistency, "right series term is not an ideal");
  }
  return chain;
}

/// A_1 = A, A_{k+1} = A_k★A_k; each term is checked to be an ideal of the
/// sub-brace on the previous one.
inline SeriesChain derived_series(const SkewBrace& a) {
  auto chain = detail::series_from(a, SeriesKind::derived, SubsetMask::full(a.order()));
  for (std::size_t k = 0; k + 1 < chain.terms.size(); ++k) {
    if (!chain.terms[k + 1].is_subset_of(chain.terms[k])) {
      throw Error(errc::internal_consistency, "derived series is not decreasing");
    }
    auto sb = sub_brace(a, chain.terms[k]);
    SubsetMask local(sb.embedding.size());
    for (std::size_t i = 0; i < sb.embedding.size(); ++i) {
      if (chain.terms[k + 1].contains(sb.embedding[i])) local.insert(static_cast<Element>(i));
    }
    if (!is_ideal(sb.brace, local)) {
      throw Error(errc::internal_consistency, "derived term is not an ideal of the previous term");
    }
  }
  return chain;
}

inline bool is_left_nilpotent(const SkewBrace& a) { return left_series(a).reaches_zero; }
inline bool is_right_nilpotent(const SkewBrace& a) { return right_series(a).reaches_zero; }
inline bool is_solvable(const SkewBrace& a) { return derived_series(a).reaches_zero; }

/// Only ideals are {0} and A; the order-1 brace is not simple.
inline bool is_simple(const SkewBrace& a) {
  return a.order() >= 2 && ideal_lattice(a).size() == 2;
}

inline bool is_prime(const SkewBrace& a) { return detail::is_prime_given(a, ideal_lattice(a)); }
inline bool is_semiprime(const SkewBrace& a) { return detail::is_semiprime_given(a, ideal_lattice(a)); }

/// Proper ideals I with A/I prime. The improper ideal A is never listed.
inline std::vector<SubsetMask> prime_ideals(const SkewBrace& a) {
  std::vector<SubsetMask> out;
  for (const auto& i : ideal_lattice(a)) {
    if (i.is_full()) continue;
    if (is_prime(quotient(a, i).brace)) out.push_back(i);
  }
  return out;
}

inline std::vector<SubsetMask> semiprime_ideals(const SkewBrace& a) {
  std::vector<SubsetMask> out;
  for (const auto& i : ideal_lattice(a)) {
    if (i.is_full()) continue;
    if (is_semiprime(quotient(a, i).brace)) out.push_back(i);
  }
  return out;
}

/// True when A itself is the only prime ideal.
inline bool has_no_proper_prime_ideals(const SkewBrace& a) { return prime_ideals(a).empty(); }

/// Intersection of the given ideals; the empty intersection is A.
inline SubsetMask intersect_all(std::size_t n, const std::vector<SubsetMask>& ideals) {
  SubsetMask acc = SubsetMask::full(n);
  for (const auto& i : ideals) acc = acc & i;
  return acc;
}

/// Successor sets of the n-sequence graph: succ[x] = <x>★<x>.
inline std::vector<SubsetMask> n_sequence_successors(const SkewBrace& a) {
  std::vector<SubsetMask> succ;
  succ.reserve(a.order());
  for (Element x = 0; x < a.order(); ++x) {
    auto p = ideal_closure(a, x);
    succ.push_back(star_subgroup(a, p, p));
  }
  return succ;
}

namespace detail {

/// True iff no cycle through non-zero elements is reachable from `start`.
inline bool reaches_zero_from(const std::vector<SubsetMask>& succ, Element start) {
  if (start == 0) return true;
  enum : char { white, grey, black };
  std::vector<char> colour(succ.size(), white);
  std::vector<std::pair<Element, std::vector<Element>>> stack;
  auto nonzero_succ = [&](Element x) {
    auto s = succ[x].elements();
    std::erase(s, Element{0});
    return s;
  };
  colour[start] = grey;
  stack.emplace_back(start, nonzero_succ(start));
  while (!stack.empty()) {
    auto& [node, pending] = stack.back();
    if (pending.empty()) {
      colour[node] = black;
      stack.pop_back();
      continue;
    }
    Element next = pending.back();
    pending.pop_back();
    if (colour[next] == grey) return false;
    if (colour[next] == white) {
      colour[next] = grey;
      stack.emplace_back(next, nonzero_succ(next));
    }
  }
  return true;
}

}  // namespace detail

/// Every sequence a = a_1, a_2, ... with a_{i+1} ∈ <a_i>★<a_i> reaches 0.
/// In a finite brace this fails exactly when a non-zero cycle is reachable.
inline bool every_n_sequence_reaches_zero(const SkewBrace& a, Element x) {
  return detail::reaches_zero_from(n_sequence_successors(a), x);
}

/// The definition of a Baer radical brace, checked through the n-sequence graph.
inline bool is_baer_radical_by_sequences(const SkewBrace& a) {
  auto succ = n_sequence_successors(a);
  for (Element x = 0; x < a.order(); ++x) {
    if (!detail::reaches_zero_from(succ, x)) return false;
  }
  return true;
}

/// Largest solvable ideal (which for finite braces is the largest Baer
/// radical ideal).
inline SubsetMask baer_radical(const SkewBrace& a) { return detail::baer_given(a, ideal_lattice(a)); }

/// Sum of the ideals that are both left and right nilpotent.
inline SubsetMask wedderburn_radical(const SkewBrace& a) {
  return detail::wedderburn_given(a, ideal_lattice(a));
}

struct RadicalReport {
  SubsetMask baer;
  SubsetMask wedderburn;
  std::vector<SubsetMask> prime_ideals;
  bool is_prime = false;
  bool is_semiprime = false;
  bool is_simple = false;
  bool is_solvable = false;
  bool is_left_nilpotent = false;
  bool is_right_nilpotent = false;
};

/// Runs every classifier and checks the relations between them; a violated
/// relation throws internal_consistency.
inline RadicalReport radical_report(const SkewBrace& a) {
  std::size_t n = a.order();
  auto lattice = ideal_lattice(a);
  RadicalReport r;
  r.baer = detail::baer_given(a, lattice);
  r.wedderburn = detail::wedderburn_given(a, lattice);
  for (const auto& i : lattice) {
    if (i.is_full()) continue;
    auto q = quotient(a, i).brace;
    if (detail::is_prime_given(q, ideal_lattice(q))) r.prime_ideals.push_back(i);
  }
  r.is_prime = detail::is_prime_given(a, lattice);
  r.is_semiprime = detail::is_semiprime_given(a, lattice);
  r.is_simple = n >= 2 && lattice.size() == 2;
  r.is_solvable = derived_series(a).reaches_zero;
  r.is_left_nilpotent = left_series(a).reaches_zero;
  r.is_right_nilpotent = right_series(a).reaches_zero;

  auto fail = [](const std::string& what) { throw Error(errc::internal_consistency, what); };
  if (!r.wedderburn.is_subset_of(r.baer)) fail("W(A) is not contained in B(A)");
  if (intersect_all(n, r.prime_ideals) != r.baer) fail("B(A) differs from the intersection of prime ideals");
  if (r.is_semiprime != r.baer.is_zero()) fail("semiprime does not match B(A) = 0");
  if (r.baer.is_zero() != r.wedderburn.is_zero()) fail("B(A) = 0 does not match W(A) = 0");
  if (r.is_solvable != r.baer.is_full()) fail("solvable does not match B(A) = A");
  if (r.is_prime && !r.is_semiprime) fail("prime but not semiprime");
  if (n > 1 && (r.is_left_nilpotent || r.is_right_nilpotent) && r.is_semiprime) {
    fail("nilpotent brace is semiprime");
  }
  {
    auto q = quotient(a, r.baer).brace;
    if (!baer_radical(q).is_zero()) fail("B(A/B(A)) is not zero");
  }
  return r;
}

}  // namespace skewbrace
