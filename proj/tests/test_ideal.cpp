#include <gtest/gtest.h>

#include <bit>

#include "support.hpp"

using namespace sbtest;

namespace {

errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::io;
}

SkewBrace unique(std::size_t n, const std::string& add, const std::string& mul, bool want_trivial = false) {
  std::vector<SkewBrace> hits;
  for (auto& b : find_braces(n, add, mul))
    if (is_trivial(b) == want_trivial) hits.push_back(b);
  if (hits.size() != 1) throw std::logic_error("expected a unique brace " + add + "/" + mul);
  return hits[0];
}

}  // namespace

TEST(LeftIdeal, Basics) {
  for (const auto* a : population_upto(8)) {
    EXPECT_TRUE(is_left_ideal(*a, SubsetMask::zero(a->order())));
    EXPECT_TRUE(is_left_ideal(*a, SubsetMask::full(a->order())));
    EXPECT_TRUE(is_ideal(*a, SubsetMask::zero(a->order())));
    EXPECT_TRUE(is_ideal(*a, SubsetMask::full(a->order())));
  }
}

TEST(LeftIdeal, TrivialBraceLeftIdealsAreSubgroups) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& g : catalog_groups(n)) {
      auto a = trivial_brace(g);
      std::size_t subgroups = 0;
      for (oracle::Subset s = 0; s < (oracle::Subset{1} << n); ++s)
        subgroups += is_subgroup(g, from_bits(n, s));
      EXPECT_EQ(left_ideal_lattice(a).size(), subgroups);
    }
}

TEST(LeftIdeal, CyclicAdditiveSixWithSymmetricMultiplication) {
  auto a = unique(6, "C6", "S3");
  auto left = all_left_ideals(a);
  std::size_t size_two = 0;
  for (const auto& rec : left) {
    if (rec.mask.size() != 2) continue;
    ++size_two;
    EXPECT_EQ(rec.kind, IdealKind::left_ideal);
    EXPECT_FALSE(is_ideal(a, rec.mask));
  }
  EXPECT_EQ(size_two, 1u);
}

TEST(LeftIdeal, CyclicSixBothWays) {
  auto a = unique(6, "C6", "C6", true);
  auto left = all_left_ideals(a);
  EXPECT_EQ(left.size(), 4u);
  for (const auto& rec : left) EXPECT_EQ(rec.kind, IdealKind::ideal);
  EXPECT_EQ(sizes(ideal_lattice(a)), (std::vector<std::size_t>{1, 2, 3, 6}));
}

TEST(Ideal, CriteriaAgreeOnAllSubsets) {
  // Library criteria vs definitional oracles, on every subset for n <= 6.
  for (const auto* a : population_upto(6)) {
    auto r = raw(*a);
    for (oracle::Subset s = 0; s < (oracle::Subset{1} << r.n); ++s) {
      auto m = from_bits(r.n, s);
      bool def = oracle::ideal_by_definition(r, s);
      bool lemma = oracle::ideal_by_lemma(r, s);
      ASSERT_EQ(def, lemma);
      EXPECT_EQ(is_ideal_by_additive_criterion(*a, m), lemma);
      EXPECT_EQ(is_ideal_by_definition(*a, m), def);
      EXPECT_EQ(is_left_ideal(*a, m), oracle::left_ideal(r, s));
    }
  }
}

TEST(Ideal, LatticeMatchesSubsetFilter) {
  for (const auto* a : population_upto(8)) {
    auto r = raw(*a);
    std::vector<oracle::Subset> lib, lib_left;
    for (const auto& m : ideal_lattice(*a)) lib.push_back(to_bits(m));
    for (const auto& m : left_ideal_lattice(*a)) lib_left.push_back(to_bits(m));
    std::sort(lib.begin(), lib.end());
    std::sort(lib_left.begin(), lib_left.end());
    EXPECT_EQ(lib, oracle::ideals(r));
    EXPECT_EQ(lib_left, oracle::left_ideals(r));
  }
}

TEST(Ideal, LatticeOrderIsSizeThenBits) {
  for (const auto* a : population_upto(8)) {
    auto lat = ideal_lattice(*a);
    ASSERT_FALSE(lat.empty());
    EXPECT_TRUE(lat.front().is_zero());
    EXPECT_TRUE(lat.back().is_full());
    for (std::size_t i = 1; i < lat.size(); ++i) EXPECT_LT(lat[i - 1], lat[i]);
  }
}

TEST(Ideal, ClosureIsIntersectionOfContainingIdeals) {
  for (const auto* a : population_upto(8)) {
    auto r = raw(*a);
    auto lat = oracle::ideals(r);
    EXPECT_EQ(ideal_closure(*a, Element{0}), SubsetMask::zero(a->order()));
    for (Element x = 0; x < a->order(); ++x) {
      oracle::Subset meet = (oracle::Subset{1} << r.n) - 1;
      for (auto i : lat)
        if (oracle::has(i, x)) meet &= i;
      EXPECT_EQ(to_bits(ideal_closure(*a, x)), meet);
    }
  }
}

TEST(Ideal, SumAndIntersection) {
  for (const auto* a : population_upto(8)) {
    auto r = raw(*a);
    auto lat = ideal_lattice(*a);
    auto zero = SubsetMask::zero(a->order());
    auto full = SubsetMask::full(a->order());
    for (const auto& i : lat) {
      EXPECT_EQ(ideal_sum(*a, i, zero), i);
      EXPECT_EQ(ideal_sum(*a, i, i), i);
      EXPECT_EQ(ideal_intersection(*a, i, full), i);
      EXPECT_EQ(ideal_intersection(*a, i, zero), zero);
      for (const auto& j : lat) {
        // join = smallest oracle ideal containing both
        auto ib = to_bits(i) | to_bits(j);
        oracle::Subset join = (oracle::Subset{1} << r.n) - 1;
        for (auto k : oracle::ideals(r))
          if ((k & ib) == ib && std::popcount(k) < std::popcount(join)) join = k;
        EXPECT_EQ(to_bits(ideal_sum(*a, i, j)), join);
        EXPECT_EQ(to_bits(ideal_intersection(*a, i, j)), to_bits(i) & to_bits(j));
      }
    }
  }
  auto a = unique(6, "C6", "S3");
  for (const auto& rec : all_left_ideals(a)) {
    if (rec.kind == IdealKind::ideal) continue;
    EXPECT_EQ(code_of([&] { ideal_sum(a, rec.mask, rec.mask); }), errc::not_an_ideal);
    EXPECT_EQ(code_of([&] { ideal_intersection(a, rec.mask, rec.mask); }), errc::not_an_ideal);
    EXPECT_EQ(code_of([&] { quotient(a, rec.mask); }), errc::not_an_ideal);
  }
}

TEST(Ideal, CyclicEightOverC4xC2) {
  auto a = unique(8, "C8", "C4xC2");
  auto ideals = all_ideals(a);
  ASSERT_EQ(ideals.size(), 4u);
  std::vector<std::size_t> quotient_orders;
  for (const auto& rec : ideals) {
    EXPECT_EQ(rec.as_brace.order(), rec.mask.size());
    quotient_orders.push_back(quotient(a, rec.mask).brace.order());
  }
  EXPECT_EQ(sizes(ideal_lattice(a)), (std::vector<std::size_t>{1, 2, 4, 8}));
  EXPECT_EQ(quotient_orders, (std::vector<std::size_t>{8, 4, 2, 1}));
  auto q4 = quotient(a, ideals[1].mask).brace;
  EXPECT_TRUE(is_classical(q4));
  EXPECT_EQ(group_name(q4.additive()), "C4");
  EXPECT_TRUE(are_isomorphic_braces(quotient(a, ideals[0].mask).brace, a));
}

TEST(StarSubgroup, Examples) {
  auto t = trivial_brace(catalog_groups(8)[3]);
  auto full = SubsetMask::full(8);
  EXPECT_EQ(star_subgroup(t, full, full), SubsetMask::zero(8));

  // A classical order-8 brace with ideals 0 < I < A where A★I has size two
  // and so cannot be an ideal.
  bool found = false;
  for (const auto& a : population(8)) {
    if (!is_classical(a)) continue;
    auto lat = ideal_lattice(a);
    if (lat.size() != 3) continue;
    auto ai = star_subgroup(a, SubsetMask::full(8), lat[1]);
    if (ai.size() == 2 && !is_ideal(a, ai)) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(StarSubgroup, MatchesOracle) {
  for (const auto* a : population_upto(8)) {
    auto r = raw(*a);
    auto lat = ideal_lattice(*a);
    for (const auto& i : lat)
      for (const auto& j : lat) EXPECT_EQ(to_bits(star_subgroup(*a, i, j)), oracle::star_span(r, to_bits(i), to_bits(j)));
  }
}

TEST(Quotient, ProjectionIsAHomomorphism) {
  for (const auto* a : population_upto(8)) {
    EXPECT_TRUE(are_isomorphic_braces(quotient(*a, SubsetMask::zero(a->order())).brace, *a));
    EXPECT_EQ(quotient(*a, SubsetMask::full(a->order())).brace.order(), 1u);
    for (const auto& i : ideal_lattice(*a)) {
      auto q = quotient(*a, i);
      EXPECT_EQ(q.brace.order() * i.size(), a->order());
      for (Element x = 0; x < a->order(); ++x)
        for (Element y = 0; y < a->order(); ++y) {
          ASSERT_EQ(q.projection[a->plus(x, y)], q.brace.plus(q.projection[x], q.projection[y]));
          ASSERT_EQ(q.projection[a->circ(x, y)], q.brace.circ(q.projection[x], q.projection[y]));
        }
    }
  }
}

TEST(SubBrace, Examples) {
  for (const auto* a : population_upto(8)) {
    EXPECT_EQ(sub_brace(*a, SubsetMask::zero(a->order())).brace.order(), 1u);
    EXPECT_EQ(sub_brace(*a, SubsetMask::full(a->order())).brace, *a);
    for (const auto& rec : all_ideals(*a)) EXPECT_EQ(rec.as_brace.order(), rec.mask.size());
    for (const auto& rec : all_left_ideals(*a)) EXPECT_EQ(rec.as_brace.order(), rec.mask.size());
  }
  auto c6 = trivial_brace(cyclic_group(6));
  EXPECT_EQ(code_of([&] { sub_brace(c6, SubsetMask(6, {0, 1})); }), errc::not_closed);
}
