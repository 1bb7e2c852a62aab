#include <gtest/gtest.h>

#include "support.hpp"

using namespace sbtest;

namespace {

std::vector<SkewBrace> simple_of_order(std::size_t n) {
  std::vector<SkewBrace> out;
  for (const auto& a : population(n))
    if (is_simple(a)) out.push_back(a);
  return out;
}

/// The simple order-12 brace with additive A4 and multiplicative C3:C4.
SkewBrace simple_a4() {
  for (auto& a : simple_of_order(12))
    if (group_name(a.additive()) == "A4" && group_name(a.multiplicative()) == "C3:C4") return a;
  throw std::logic_error("simple A4 brace not found");
}

SkewBrace nontrivial_s3() {
  for (auto& a : find_braces(6, "S3", "S3"))
    if (!is_trivial(a)) return a;
  throw std::logic_error("non-trivial S3 brace not found");
}

}  // namespace

TEST(Series, TrivialBrace) {
  for (std::size_t n = 2; n <= 8; ++n)
    for (const auto& g : catalog_groups(n)) {
      auto a = trivial_brace(g);
      for (const auto& chain : {left_series(a), right_series(a), derived_series(a)}) {
        ASSERT_EQ(chain.terms.size(), 2u);
        EXPECT_TRUE(chain.terms[0].is_full());
        EXPECT_TRUE(chain.terms[1].is_zero());
        EXPECT_TRUE(chain.reaches_zero);
      }
      EXPECT_TRUE(is_left_nilpotent(a));
      EXPECT_TRUE(is_right_nilpotent(a));
      EXPECT_TRUE(is_solvable(a));
    }
  auto one = trivial_brace(cyclic_group(1));
  EXPECT_EQ(left_series(one).terms.size(), 1u);
  EXPECT_TRUE(is_solvable(one));
}

TEST(Series, SimpleA4IsConstant) {
  auto a = simple_a4();
  for (const auto& chain : {left_series(a), right_series(a), derived_series(a)}) {
    EXPECT_EQ(chain.terms.size(), 1u);
    EXPECT_TRUE(chain.terms.back().is_full());
    EXPECT_FALSE(chain.reaches_zero);
  }
  auto full = SubsetMask::full(12);
  EXPECT_EQ(star_subgroup(a, full, full), full);
  EXPECT_FALSE(is_left_nilpotent(a));
  EXPECT_FALSE(is_right_nilpotent(a));
  EXPECT_FALSE(is_solvable(a));
}

TEST(Series, TermsAreIdealsAndDecrease) {
  for (const auto* a : population_upto(12)) {
    for (const auto& t : left_series(*a).terms) EXPECT_TRUE(is_left_ideal(*a, t));
    for (const auto& t : right_series(*a).terms) EXPECT_TRUE(is_ideal(*a, t));
    auto d = derived_series(*a).terms;
    for (std::size_t i = 1; i < d.size(); ++i) EXPECT_TRUE(d[i].is_subset_of(d[i - 1]));
    if (is_left_nilpotent(*a) || is_right_nilpotent(*a)) EXPECT_TRUE(is_solvable(*a));
  }
}

TEST(Simple, Census) {
  EXPECT_EQ(simple_of_order(12).size(), 2u);
  for (std::size_t n : {4u, 8u, 9u})
    for (const auto& a : population(n))
      if (is_classical(a)) EXPECT_FALSE(is_simple(a));
  for (std::size_t n : {2u, 3u, 5u, 7u, 11u}) {
    ASSERT_EQ(population(n).size(), 1u);
    EXPECT_TRUE(is_simple(population(n)[0]));
  }
  EXPECT_FALSE(is_simple(trivial_brace(cyclic_group(1))));
  for (std::size_t n : {4u, 6u, 8u, 9u, 10u})
    EXPECT_TRUE(simple_of_order(n).empty()) << "n=" << n;
  EXPECT_TRUE(is_simple(simple_a4()));
  for (Element x = 1; x < 12; ++x) EXPECT_TRUE(ideal_closure(simple_a4(), x).is_full());
}

TEST(Prime, Examples) {
  for (const auto& a : simple_of_order(12)) {
    EXPECT_FALSE(is_trivial(a));
    EXPECT_TRUE(is_prime(a));
    auto primes = prime_ideals(a);
    ASSERT_EQ(primes.size(), 1u);
    EXPECT_TRUE(primes[0].is_zero());
  }
  for (const auto* a : population_upto(8))
    if (is_trivial(*a) && a->order() > 1) EXPECT_FALSE(is_semiprime(*a));
  auto c2 = trivial_brace(cyclic_group(2));
  EXPECT_TRUE(has_no_proper_prime_ideals(c2));
  EXPECT_FALSE(is_prime(trivial_brace(cyclic_group(1))));
}

TEST(Prime, SquareOfSimpleIsSemiprimeNotPrime) {
  auto a = simple_a4();
  auto sq = direct_product(a, a);
  ASSERT_EQ(sq.order(), 144u);
  EXPECT_TRUE(is_semiprime(sq));
  EXPECT_FALSE(is_prime(sq));
  EXPECT_TRUE(baer_radical(sq).is_zero());
}

TEST(Prime, SemiprimeIdealsContainPrimeIdeals) {
  for (const auto* a : population_upto(8)) {
    auto primes = prime_ideals(*a);
    auto semi = semiprime_ideals(*a);
    for (const auto& p : primes) EXPECT_NE(std::find(semi.begin(), semi.end(), p), semi.end());
  }
}

TEST(Sequences, Examples) {
  for (const auto* a : population_upto(8)) EXPECT_TRUE(every_n_sequence_reaches_zero(*a, 0));
  auto t = trivial_brace(catalog_groups(8)[4]);
  for (Element x = 0; x < 8; ++x) EXPECT_TRUE(every_n_sequence_reaches_zero(t, x));
  auto a = simple_a4();
  for (Element x = 1; x < 12; ++x) EXPECT_FALSE(every_n_sequence_reaches_zero(a, x));
  auto succ = n_sequence_successors(a);
  for (Element x = 1; x < 12; ++x) EXPECT_TRUE(succ[x].contains(x));
}

TEST(Radicals, Examples) {
  auto t = trivial_brace(catalog_groups(6)[1]);
  EXPECT_TRUE(baer_radical(t).is_full());
  EXPECT_TRUE(wedderburn_radical(t).is_full());

  auto s = nontrivial_s3();
  EXPECT_TRUE(baer_radical(s).is_full());
  auto w = wedderburn_radical(s);
  EXPECT_EQ(w.size(), 3u);
  EXPECT_TRUE(is_ideal(s, w));
  EXPECT_TRUE(is_trivial(sub_brace(s, w).brace));

  auto a = simple_a4();
  EXPECT_TRUE(baer_radical(a).is_zero());
  EXPECT_TRUE(wedderburn_radical(a).is_zero());
}

TEST(Radicals, BaerMatchesSequenceOracle) {
  for (const auto* a : population_upto(8)) {
    auto r = raw(*a);
    EXPECT_EQ(to_bits(baer_radical(*a)), oracle::baer_radical(r)) << describe_brace(*a).summary();
    EXPECT_EQ(is_baer_radical_by_sequences(*a), oracle::baer_radical_by_sequences(r));
    EXPECT_EQ(is_baer_radical_by_sequences(*a), baer_radical(*a).is_full());
  }
}

TEST(Radicals, StructuralIdentities) {
  for (const auto* a : population_upto(12)) {
    auto rep = radical_report(*a);  // throws on any violated relation
    auto n = a->order();
    EXPECT_EQ(intersect_all(n, rep.prime_ideals), rep.baer);
    EXPECT_EQ(rep.is_semiprime, rep.baer.is_zero());
    EXPECT_EQ(rep.baer.is_zero(), rep.wedderburn.is_zero());
    EXPECT_TRUE(rep.wedderburn.is_subset_of(rep.baer));
    EXPECT_EQ(rep.is_solvable, rep.baer.is_full());
    EXPECT_TRUE(baer_radical(quotient(*a, rep.baer).brace).is_zero());
    if (rep.is_semiprime) EXPECT_TRUE(intersect_all(n, rep.prime_ideals).is_zero());
    if (rep.is_simple && !is_trivial(*a)) EXPECT_TRUE(rep.is_prime);
  }
}

TEST(Radicals, ElementwiseSequencesCoverBaer) {
  // Every element of B(A) has all its n-sequences reaching zero inside A.
  for (const auto* a : population_upto(12)) {
    auto b = baer_radical(*a);
    auto succ = n_sequence_successors(*a);
    for (auto x : b.elements()) EXPECT_TRUE(detail::reaches_zero_from(succ, x));
  }
}
