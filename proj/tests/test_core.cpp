#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

namespace gag {
namespace {

using test::labels;
using test::dot_example;
using test::worked_example;

constexpr GammaIndex kAlpha = 0;
constexpr GammaIndex kBeta = 1;
constexpr GammaIndex kGamma = 2;

TEST(GammaGroupoid, ApplyReadsTheTables) {
  const auto& G = worked_example();
  EXPECT_EQ(G.apply(4, kGamma, 3), 2u);  // 5 γ 4 = 3
  EXPECT_EQ(G.apply(0, kAlpha, 1), 0u);  // 1 α 2 = 1
  EXPECT_EQ(GammaGroupoid::singleton().apply(0, 0, 0), 0u);
}

TEST(GammaGroupoid, ApplyRejectsOutOfRange) {
  const auto& G = worked_example();
  EXPECT_THROW(G.apply(5, 0, 0), ContractViolation);
  EXPECT_THROW(G.apply(0, 3, 0), ContractViolation);
  EXPECT_THROW(G.apply(0, 0, 7), ContractViolation);
}

TEST(GammaGroupoid, ConstructionEnforcesClosureAndShape) {
  EXPECT_THROW(GammaGroupoid(2, 1, {0, 1, 2, 0}), ContractViolation);
  EXPECT_THROW(GammaGroupoid(2, 1, {0, 1, 1}), ContractViolation);
  EXPECT_THROW(GammaGroupoid(0, 1, {}), ContractViolation);
  EXPECT_THROW(GammaGroupoid(1, 0, {}), ContractViolation);
  EXPECT_THROW(GammaGroupoid(65, 1, std::vector<Element>(65 * 65, 0)), ContractViolation);
  EXPECT_THROW(GammaGroupoid(2, 1, {0, 0, 0, 0}, {"x", "x"}), ContractViolation);
  EXPECT_THROW(GammaGroupoid(2, 1, {0, 0, 0, 0}, {"x", "y z"}), ContractViolation);
  EXPECT_THROW(GammaGroupoid(1, 2, {0, 0}, {}, {"g", "g"}), ContractViolation);
  EXPECT_NO_THROW(GammaGroupoid(2, 2, {0, 0, 0, 0, 1, 1, 1, 1}));
}

TEST(GammaGroupoid, DefaultNames) {
  GammaGroupoid G(2, 2, {0, 0, 0, 0, 1, 1, 1, 1});
  EXPECT_EQ(G.labels(), (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(G.gamma_names(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(default_gamma_names(28).back(), "g28");
}

TEST(CheckLaw, WorkedExampleIsLeftInvertiveAndMedial) {
  const auto& G = worked_example();
  EXPECT_TRUE(check_law(G, Law::LeftInvertive).holds);
  EXPECT_TRUE(check_law(G, Law::Medial).holds);
  EXPECT_FALSE(check_law(G, Law::LeftInvertive).witness.has_value());
}

TEST(CheckLaw, WorkedExampleIsNotAssociative) {
  const auto& G = worked_example();
  const LawVerdict v = check_law(G, Law::Associative);
  ASSERT_FALSE(v.holds);
  ASSERT_TRUE(v.witness);
  // First violation in scan order.
  EXPECT_EQ(v.witness->tuple, interleave({0, 0, 0}, {kAlpha, kBeta}));
  EXPECT_EQ(format_tuple(G, v.witness->tuple), "(1, α, 1, β, 1)");
  // The instance (1 α 2) β 3 versus 1 α (2 β 3) is a violation as well.
  const std::vector<Element> e = {0, 1, 2};
  const std::vector<GammaIndex> g = {kAlpha, kBeta};
  auto [lhs, rhs] = law_sides(G, Law::Associative, e, g);
  EXPECT_EQ(lhs, 1u);
  EXPECT_EQ(rhs, 0u);
}

TEST(CheckLaw, SingletonSatisfiesEverything) {
  for (Law law : kAllLaws) EXPECT_TRUE(check_law(GammaGroupoid::singleton(), law).holds) << to_string(law);
}

TEST(CheckLaw, NamesRoundTrip) {
  for (Law law : kAllLaws) EXPECT_EQ(law_from_string(to_string(law)), law);
  EXPECT_FALSE(law_from_string("nope"));
}

TEST(CheckLaw, LawSidesValidatesArity) {
  const auto& G = worked_example();
  const std::vector<Element> two = {0, 1};
  const std::vector<GammaIndex> one = {0};
  EXPECT_THROW(law_sides(G, Law::Associative, two, one), ContractViolation);
  EXPECT_NO_THROW(law_sides(G, Law::Commutative, two, one));
}

// Every reported witness, re-evaluated with plain table lookups, violates the law.
TEST(CheckLaw, WitnessesReEvaluateUnequal) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const std::size_t m = 1 + rng() % 3;
    std::vector<Element> cells(n * n * m);
    for (auto& c : cells) c = rng() % n;
    GammaGroupoid G(n, m, cells);
    const oracle::Table t = test::to_table(G);
    for (Law law : kAllLaws) {
      const LawVerdict v = check_law(G, law);
      ASSERT_EQ(v.holds, !v.witness.has_value());
      if (!v.witness) continue;
      std::vector<std::size_t> e, g;
      for (std::size_t i = 0; i < v.witness->tuple.size(); ++i) (i % 2 == 0 ? e : g).push_back(v.witness->tuple[i].index);
      std::size_t lhs = 0, rhs = 0;
      switch (law) {
        case Law::LeftInvertive:
          lhs = t.op(t.op(e[0], g[0], e[1]), g[1], e[2]);
          rhs = t.op(t.op(e[2], g[0], e[1]), g[1], e[0]);
          break;
        case Law::AGStarStar:
          lhs = t.op(e[0], g[0], t.op(e[1], g[1], e[2]));
          rhs = t.op(e[1], g[0], t.op(e[0], g[1], e[2]));
          break;
        case Law::Medial:
          lhs = t.op(t.op(e[0], g[0], e[1]), g[1], t.op(e[2], g[2], e[3]));
          rhs = t.op(t.op(e[0], g[0], e[2]), g[1], t.op(e[1], g[2], e[3]));
          break;
        case Law::Paramedial:
          lhs = t.op(t.op(e[0], g[0], e[1]), g[1], t.op(e[2], g[2], e[3]));
          rhs = t.op(t.op(e[3], g[0], e[2]), g[1], t.op(e[1], g[2], e[0]));
          break;
        case Law::Associative:
          lhs = t.op(t.op(e[0], g[0], e[1]), g[1], e[2]);
          rhs = t.op(e[0], g[0], t.op(e[1], g[1], e[2]));
          break;
        case Law::Commutative:
          lhs = t.op(e[0], g[0], e[1]);
          rhs = t.op(e[1], g[0], e[0]);
          break;
      }
      EXPECT_NE(lhs, rhs) << to_string(law);
    }
    EXPECT_EQ(check_law(G, Law::LeftInvertive).holds, oracle::left_invertive(t));
    EXPECT_EQ(check_law(G, Law::AGStarStar).holds, oracle::ag_star_star(t));
    EXPECT_EQ(check_law(G, Law::Associative).holds, oracle::associative(t));
  }
}

TEST(CheckLaw, LeftInvertiveImpliesMedialUpToOrderThree) {
  std::size_t agss = 0;
  for (const auto& G : test::small_left_invertive()) {
    EXPECT_TRUE(check_law(G, Law::Medial).holds);
    if (check_law(G, Law::AGStarStar).holds) {
      ++agss;
      EXPECT_TRUE(check_law(G, Law::Paramedial).holds);
    }
  }
  EXPECT_GT(agss, 0u);
}

TEST(Identities, FixtureTables) {
  EXPECT_EQ(identities(dot_example(), Side::Left), labels(5, {4}));
  EXPECT_TRUE(identities(worked_example(), Side::Left).is_empty());
  EXPECT_EQ(identities(GammaGroupoid::singleton(), Side::Left), Subset::full(1));
  EXPECT_EQ(identities(GammaGroupoid::singleton(), Side::Right), Subset::full(1));
}

TEST(Identities, RightIdentityOfACommutativeTable) {
  // Z/3 under addition: 0 is a two-sided identity.
  GammaGroupoid G(3, 1, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  EXPECT_EQ(identities(G, Side::Right), Subset(3, {0}));
  EXPECT_EQ(identities(G, Side::Left), Subset(3, {0}));
}

TEST(SubsetProduct, WorkedExample) {
  const auto& G = worked_example();
  EXPECT_EQ(subset_product(G, labels(5, {4}), labels(5, {5})), labels(5, {1, 2}));
  EXPECT_EQ(subset_product(G, G.carrier(), labels(5, {1, 2, 3})), labels(5, {1, 2}));
  EXPECT_TRUE(subset_product(G, Subset(5), G.carrier()).is_empty());
  EXPECT_TRUE(subset_product(G, G.carrier(), Subset(5)).is_empty());
  EXPECT_THROW(subset_product(G, Subset(4), G.carrier()), ContractViolation);
}

TEST(SubsetProduct, MatchesOracleAndIsMonotoneAndDistributive) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t m = 1 + rng() % 3;
    std::vector<Element> cells(n * n * m);
    for (auto& c : cells) c = rng() % n;
    GammaGroupoid G(n, m, cells);
    const auto t = test::to_table(G);
    const std::uint64_t mask = Subset::full_mask(n);
    const Subset A(n, rng() & mask), B(n, rng() & mask), C(n, rng() & mask);
    const Subset AB = subset_product(G, A, B);
    EXPECT_EQ(test::to_set(AB), oracle::product(t, test::to_set(A), test::to_set(B)));
    EXPECT_TRUE(AB.is_subset_of(subset_product(G, A | C, B)));
    EXPECT_TRUE(AB.is_subset_of(subset_product(G, A, B | C)));
    EXPECT_EQ(subset_product(G, A | C, B), AB | subset_product(G, C, B));
    EXPECT_EQ(subset_product(G, A, B | C), AB | subset_product(G, A, C));
  }
}

TEST(Regularity, WorkedExample) {
  const auto& G = worked_example();
  // Independent triple loop over (x, beta, gamma), first hit in that order.
  const auto t = test::to_table(G);
  std::optional<RegularityWitness> expected;
  for (std::size_t x = 0; x < 5 && !expected; ++x)
    for (std::size_t b = 0; b < 3 && !expected; ++b)
      for (std::size_t g = 0; g < 3 && !expected; ++g)
        if (t.op(t.op(0, b, x), g, 0) == 0) expected = RegularityWitness{x, b, g};
  ASSERT_TRUE(expected);
  EXPECT_EQ(*expected, (RegularityWitness{0, kAlpha, kAlpha}));  // 1 = (1 α 1) α 1
  EXPECT_EQ(regular_witness(G, 0), expected);
  EXPECT_EQ(regular_witness(G, 1), (RegularityWitness{0, kAlpha, kBeta}));  // 2 = (2 α 1) β 2
  EXPECT_FALSE(regular_witness(G, 3));
  EXPECT_FALSE(is_regular(G));
  EXPECT_THROW(regular_witness(G, 5), ContractViolation);
}

TEST(Regularity, Singleton) {
  EXPECT_EQ(regular_witness(GammaGroupoid::singleton(), 0), (RegularityWitness{0, 0, 0}));
  EXPECT_TRUE(is_regular(GammaGroupoid::singleton()));
}

TEST(Regularity, WitnessesSatisfyTheDefinitionAndAgreeWithOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const std::size_t m = 1 + rng() % 2;
    std::vector<Element> cells(n * n * m);
    for (auto& c : cells) c = rng() % n;
    GammaGroupoid G(n, m, cells);
    const auto t = test::to_table(G);
    for (Element a = 0; a < n; ++a) {
      auto w = regular_witness(G, a);
      EXPECT_EQ(w.has_value(), oracle::element_regular(t, a));
      if (w) EXPECT_EQ(G.apply(G.apply(a, w->beta, w->x), w->gamma, a), a);
    }
    EXPECT_EQ(is_regular(G), oracle::regular(t));
  }
}

TEST(Regularity, LeftZeroTableIsDecidedElementwise) {
  // a g b = a for every gamma: (a b x) g a = a, so every element is regular.
  GammaGroupoid left_zero(3, 2, {0, 0, 0, 1, 1, 1, 2, 2, 2, 0, 0, 0, 1, 1, 1, 2, 2, 2});
  EXPECT_TRUE(is_regular(left_zero));
  // Constant table: only the constant is regular.
  GammaGroupoid constant(3, 1, std::vector<Element>(9, 0));
  EXPECT_TRUE(regular_witness(constant, 0));
  EXPECT_FALSE(regular_witness(constant, 1));
  EXPECT_FALSE(is_regular(constant));
}

}  // namespace
}  // namespace gag
