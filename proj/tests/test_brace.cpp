#include <gtest/gtest.h>

#include <random>

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

const CayleyGroup& named(std::size_t n, const std::string& name) {
  for (const auto& e : catalog_entries(n))
    if (e.name == name) return e.group;
  throw std::logic_error("no catalog group " + name);
}

Permutation random_pointed(std::size_t n, std::mt19937& rng) {
  std::vector<Permutation::point_type> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Permutation::point_type>(i);
  std::shuffle(img.begin() + 1, img.end(), rng);
  return Permutation::from_images(img);
}

}  // namespace

TEST(Brace, TrivialBracesValidate) {
  for (std::size_t n = 1; n <= 12; ++n)
    for (const auto& g : catalog_groups(n)) {
      auto a = trivial_brace(g);
      EXPECT_TRUE(is_trivial(a));
      EXPECT_TRUE(is_two_sided(a));
      EXPECT_TRUE(is_star_associative(a));
      for (Element x = 0; x < n; ++x) EXPECT_TRUE(lambda(a, x).is_identity());
    }
}

TEST(Brace, LawViolationReportsWitness) {
  auto c4 = cyclic_group(4);
  auto bent = c4.relabel(Permutation::from_images({0, 2, 1, 3}));
  try {
    SkewBrace::validate(c4, bent);
    FAIL() << "law violation accepted";
  } catch (const Error& e) {
    ASSERT_EQ(e.code(), errc::brace_law);
    ASSERT_TRUE(e.witness());
    auto [a, b, c] = *e.witness();
    auto lhs = bent.op(a, c4.op(b, c));
    auto rhs = c4.op(c4.op(bent.op(a, b), c4.inv(a)), bent.op(a, c));
    EXPECT_NE(lhs, rhs);
  }
  EXPECT_EQ(code_of([&] { SkewBrace::validate(c4, cyclic_group(5)); }), errc::order_mismatch);
  EXPECT_EQ(code_of([] { validate_skew_brace({{0, 1}, {1, 0}}, {{0, 1}, {1, 1}}); }), errc::not_latin);
}

TEST(Brace, OrderFourPairingsFromEnumeration) {
  // The order-4 braces with additive C4 and multiplicative C2xC2 validate
  // and appear among the four braces of that order.
  auto v = find_braces(4, "C4", "C2xC2");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NO_THROW(validate_skew_brace(v[0].additive().rows(), v[0].multiplicative().rows()));
  EXPECT_EQ(population(4).size(), 4u);
}

TEST(Brace, LambdaAgreesWithTableEvaluation) {
  auto v = find_braces(8, "C8", "C4xC2");
  ASSERT_EQ(v.size(), 1u);
  const auto& a = v[0];
  auto r = raw(a);
  for (Element x = 0; x < 8; ++x) {
    auto lx = lambda(a, x);
    for (Element y = 0; y < 8; ++y) EXPECT_EQ(lx(y), r.lam(x, y));
  }
  EXPECT_TRUE(lambda(a, 0).is_identity());
  EXPECT_FALSE(is_trivial(a));
}

TEST(Brace, LambdaIsAHomomorphismIntoAut) {
  for (const auto* a : population_upto(8)) {
    std::size_t n = a->order();
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        EXPECT_EQ(compose(lambda(*a, y), lambda(*a, x)), lambda(*a, a->circ(x, y)));
        for (Element z = 0; z < n; ++z)
          ASSERT_EQ(a->lambda(x, a->plus(y, z)), a->plus(a->lambda(x, y), a->lambda(x, z)));
      }
  }
}

TEST(Brace, StarIdentities) {
  auto t = trivial_brace(named(6, "S3"));
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) EXPECT_EQ(star(t, x, y), 0u);
  for (const auto* a : population_upto(8)) {
    std::size_t n = a->order();
    auto r = raw(*a);
    for (Element x = 0; x < n; ++x) {
      EXPECT_EQ(a->star(x, 0), 0u);
      EXPECT_EQ(a->star(0, x), 0u);
      if (!is_classical(*a)) continue;
      for (Element y = 0; y < n; ++y)
        EXPECT_EQ(a->star(x, y), r.plus(r.plus(r.neg(x), r.circ(x, y)), r.neg(y)));
    }
  }
}

TEST(Socle, Examples) {
  EXPECT_EQ(socle(trivial_brace(named(6, "S3"))), SubsetMask::zero(6));
  EXPECT_TRUE(socle(trivial_brace(named(8, "C4xC2"))).is_full());
  for (const auto* a : population_upto(10)) EXPECT_TRUE(is_ideal(*a, socle(*a)));
}

TEST(Socle, MatchesKernelOfLambdaInCenter) {
  for (const auto* a : population_upto(8)) {
    auto r = raw(*a);
    SubsetMask expected(a->order());
    for (Element x = 0; x < a->order(); ++x) {
      bool in = true;
      for (Element y = 0; y < a->order(); ++y) in &= r.lam(x, y) == y && r.plus(x, y) == r.plus(y, x);
      if (in) expected.insert(x);
    }
    EXPECT_EQ(socle(*a), expected);
  }
}

TEST(Predicates, TwoSidedAndStarAssociative) {
  auto v = find_braces(8, "C8", "C4xC2");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_FALSE(is_trivial(v[0]));
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 12; ++n)
    for (const auto& a : population(n)) {
      if (!is_classical(a) || !is_star_associative(a)) continue;
      EXPECT_TRUE(is_two_sided(a)) << describe_brace(a).summary();
      ++checked;
    }
  EXPECT_GT(checked, 0u);
}

TEST(Predicates, TwoSidedMatchesOppositeLaw) {
  for (const auto* a : population_upto(8)) {
    auto r = raw(*a);
    bool law = true;
    for (Element x = 0; x < a->order(); ++x)
      for (Element y = 0; y < a->order(); ++y)
        for (Element z = 0; z < a->order(); ++z)
          law &= r.circ(r.plus(x, y), z) == r.plus(r.plus(r.circ(x, z), r.neg(z)), r.circ(y, z));
    EXPECT_EQ(is_two_sided(*a), law);
  }
}

TEST(YangBaxter, TrivialAbelianIsFlip) {
  auto a = trivial_brace(named(4, "C2xC2"));
  auto r = yb_map(a);
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) EXPECT_EQ(r(x, y), (std::pair<Element, Element>{y, x}));
  EXPECT_TRUE(verify_yang_baxter(r).ok);
}

TEST(YangBaxter, IdentityMapAndCorruption) {
  YbMap id{3, {}};
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) id.image.push_back({x, y});
  EXPECT_FALSE(verify_yang_baxter(id).ok);  // braid holds, but σ_x is constant

  auto v = find_braces(6, "S3", "S3");
  ASSERT_FALSE(v.empty());
  for (const auto& a : v) {
    auto r = yb_map(a);
    ASSERT_TRUE(verify_yang_baxter(r).ok);
    // Swap two outputs: still a bijection, but the braid relation breaks.
    std::swap(r.image[1 * 6 + 2], r.image[3 * 6 + 4]);
    auto verdict = verify_yang_baxter(r);
    EXPECT_FALSE(verdict.ok);
  }
}

TEST(YangBaxter, AllBracesUpToEight) {
  for (const auto* a : population_upto(8)) {
    auto r = yb_map(*a);
    auto verdict = verify_yang_baxter(r);
    EXPECT_TRUE(verdict.ok) << verdict.failure;
    if (is_classical(*a)) EXPECT_TRUE(is_involutive(r));
  }
}

TEST(Isomorphism, Braces) {
  const auto& a = population(6)[0];
  auto self = are_isomorphic_braces(a, a);
  ASSERT_TRUE(self);
  EXPECT_EQ(a.relabel(*self), a);
  EXPECT_FALSE(are_isomorphic_braces(trivial_brace(cyclic_group(4)), trivial_brace(named(4, "C2xC2"))));

  std::mt19937 rng(7);
  auto v = find_braces(6, "C6", "S3");
  ASSERT_EQ(v.size(), 1u);
  for (int round = 0; round < 5; ++round) {
    auto p = random_pointed(6, rng);
    auto shuffled = v[0].relabel(p);
    auto w = are_isomorphic_braces(v[0], shuffled);
    ASSERT_TRUE(w);
    EXPECT_EQ(v[0].relabel(*w), shuffled);
  }
  // Braces in the same order but different classes are never matched.
  for (std::size_t n : {4u, 6u, 8u}) {
    const auto& pop = population(n);
    for (std::size_t i = 0; i < pop.size(); ++i)
      for (std::size_t j = i + 1; j < pop.size(); ++j) EXPECT_FALSE(are_isomorphic_braces(pop[i], pop[j]));
  }
}

TEST(Cocycle, Construction) {
  auto c4 = cyclic_group(4);
  EXPECT_TRUE(is_trivial(from_cocycle(c4, c4)));
  auto v = find_braces(6, "C6", "S3");
  ASSERT_EQ(v.size(), 1u);
  auto b = from_cocycle(v[0].multiplicative(), v[0].additive());
  EXPECT_FALSE(is_trivial(b));
  EXPECT_EQ(b, v[0]);
  auto bent = c4.relabel(Permutation::from_images({0, 2, 1, 3}));
  EXPECT_EQ(code_of([&] { from_cocycle(bent, c4); }), errc::malformed_record);
}

TEST(DirectProduct, Braces) {
  auto one = trivial_brace(cyclic_group(1));
  for (const auto& a : population(6)) EXPECT_TRUE(are_isomorphic_braces(direct_product(a, one), a));
  const auto& x = population(4)[1];
  const auto& y = population(6)[3];
  auto p = direct_product(x, y);
  EXPECT_EQ(p.order(), 24u);
  EXPECT_EQ(p.additive(), direct_product(x.additive(), y.additive()));
  EXPECT_EQ(p.multiplicative(), direct_product(x.multiplicative(), y.multiplicative()));
}
