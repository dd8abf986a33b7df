#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "cosetchar/corpus.hpp"
#include "cosetchar/errors.hpp"
#include "cosetchar/permutation_group.hpp"
#include "oracles.hpp"

namespace cosetchar {
namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> c) { return Permutation::from_cycles(n, c); }

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), ParseError);
  EXPECT_THROW(Permutation({0, 3}), ParseError);
}

TEST(Permutation, ComposeIdentityAndInvolution) {
  const auto p = cyc(4, {{0, 1, 2}});
  EXPECT_EQ(compose(Permutation::identity(4), p), p);
  const auto t = cyc(3, {{0, 1}});
  EXPECT_TRUE(compose(t, t).is_identity());
}

TEST(Permutation, ComposeAppliesRightFactorFirst) {
  const auto p = cyc(3, {{0, 1, 2}});
  const auto q = cyc(3, {{0, 1}});
  const auto r = compose(p, q);
  for (Point i = 0; i < 3; ++i) EXPECT_EQ(r(i), p.images()[q.images()[i]]);
  EXPECT_EQ(r.images(), (std::vector<Point>{2, 1, 0}));
}

TEST(Permutation, ComposeDegreeMismatchThrows) {
  EXPECT_THROW(compose(Permutation::identity(3), Permutation::identity(4)), std::invalid_argument);
}

TEST(Permutation, OrderAndCycleString) {
  const auto p = cyc(5, {{0, 1}, {2, 3, 4}});
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.to_cycle_string(), "(0 1)(2 3 4)");
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
  EXPECT_EQ(compose(p, p.inverse()), Permutation::identity(5));
}

TEST(Permutation, CompositionIsAssociative) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<Permutation> v;
    for (int k = 0; k < 3; ++k) {
      std::vector<Point> im(7);
      std::iota(im.begin(), im.end(), 0);
      std::shuffle(im.begin(), im.end(), rng);
      v.emplace_back(im);
    }
    EXPECT_EQ((v[0] * v[1]) * v[2], v[0] * (v[1] * v[2]));
  }
}

TEST(GenerateGroup, Orders) {
  const std::vector<Permutation> c5{cyc(5, {{0, 1, 2, 3, 4}})};
  EXPECT_EQ(generate_group(5, c5).order(), 5u);
  const auto f5 = corpus::frobenius20();
  EXPECT_EQ(generate_group(5, f5.generators).order(), 20u);
  const std::vector<Permutation> s3{cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})};
  const auto g = generate_group(3, s3);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_TRUE(g.element(0).is_identity());
  EXPECT_EQ(generate_group(4, std::span<const Permutation>{}).order(), 1u);
}

TEST(GenerateGroup, OrderLimit) {
  const auto s4 = corpus::symmetric4_alternating();
  EXPECT_THROW(generate_group(4, s4.generators, 10), HypothesisError);
}

TEST(GenerateGroup, ClosedUnderMultiplication) {
  const auto g = generate_group(8, corpus::quaternion_center().generators);
  std::set<Permutation> all(g.elements().begin(), g.elements().end());
  for (const auto& a : g.elements())
    for (const auto& b : g.elements()) EXPECT_TRUE(all.count(a * b));
  for (ElementIndex a = 0; a < g.order(); ++a) {
    EXPECT_TRUE(g.element(g.multiply(a, g.inverse(a))).is_identity());
    EXPECT_TRUE(g.element(g.power(a, g.element_order(a))).is_identity());
  }
}

TEST(ConjugacyClasses, SizesMatchBruteForce) {
  for (const auto& e : corpus::property_corpus()) {
    const auto g = generate_group(e.spec.degree, e.spec.generators);
    const auto cc = conjugacy_classes(g);
    std::multiset<std::size_t> mine(cc.sizes.begin(), cc.sizes.end()), ref;
    for (const auto& c : testing::brute_classes(g)) ref.insert(c.size());
    EXPECT_EQ(mine, ref) << e.name;
    EXPECT_EQ(cc.sizes[0], 1u);
    EXPECT_EQ(cc.representatives[0], 0u);
  }
}

TEST(ConjugacyClasses, Examples) {
  const auto c5 = corpus::cyclic(5);
  const auto cc5 = conjugacy_classes(generate_group(5, c5.generators));
  EXPECT_EQ(cc5.count(), 5u);
  const auto f5 = corpus::frobenius20();
  const auto ccf = conjugacy_classes(generate_group(5, f5.generators));
  std::multiset<std::size_t> sizes(ccf.sizes.begin(), ccf.sizes.end());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 4, 5, 5, 5}));
  const auto s3 = corpus::symmetric3_alternating();
  const auto ccs = conjugacy_classes(generate_group(3, s3.generators));
  std::multiset<std::size_t> s3sizes(ccs.sizes.begin(), ccs.sizes.end());
  EXPECT_EQ(s3sizes, (std::multiset<std::size_t>{1, 3, 2}));
}

TEST(Subgroup, Normality) {
  const auto s3 = corpus::symmetric3_alternating();
  const auto g = generate_group(3, s3.generators);
  const std::vector<ElementIndex> none;
  EXPECT_TRUE(is_normal(g, subgroup_generated(g, none)));
  const std::vector<ElementIndex> a3{g.index_of(cyc(3, {{0, 1, 2}}))};
  EXPECT_TRUE(is_normal(g, subgroup_generated(g, a3)));
  const std::vector<ElementIndex> t{g.index_of(cyc(3, {{0, 1}}))};
  EXPECT_FALSE(is_normal(g, subgroup_generated(g, t)));
}

TEST(Quotient, Examples) {
  {
    const auto p = testing::load(corpus::frobenius20());
    const auto q = quotient(p.group->group, p.normal);
    EXPECT_EQ(q.order(), 4u);
    EXPECT_TRUE(q.is_cyclic());
    ASSERT_EQ(q.cyclic_factors.size(), 1u);
    EXPECT_EQ(q.cyclic_factors[0].second, 4u);
    const CosetIndex gen = q.cyclic_factors[0].first;
    EXPECT_EQ(power_coset(q, gen, 0), 0u);
    EXPECT_EQ(q.coset_order(power_coset(q, gen, 2)), 2u);
  }
  {
    const auto p = testing::load(corpus::quaternion_center());
    const auto q = quotient(p.group->group, p.normal);
    ASSERT_EQ(q.cyclic_factors.size(), 2u);
    EXPECT_EQ(q.cyclic_factors[0].second, 2u);
    EXPECT_EQ(q.cyclic_factors[1].second, 2u);
  }
  {
    auto spec = corpus::symmetric3_alternating();
    spec.normal_generators = spec.generators;
    const auto p = testing::load(spec);
    const auto q = quotient(p.group->group, p.normal);
    EXPECT_EQ(q.order(), 1u);
    EXPECT_TRUE(q.cyclic_factors.empty());
  }
}

TEST(Quotient, CyclicSixOverThreeExhaustive) {
  const auto p = testing::load(corpus::cyclic_with_subgroup(6, 2));
  const auto& g = p.group->group;
  const auto q = quotient(g, p.normal);
  ASSERT_EQ(q.order(), 2u);
  for (CosetIndex a = 0; a < 2; ++a)
    for (CosetIndex b = 0; b < 2; ++b) EXPECT_EQ(q.mult[a][b], (a + b) % 2);
  for (ElementIndex x = 0; x < g.order(); ++x)
    for (ElementIndex y = 0; y < g.order(); ++y)
      EXPECT_EQ(q.coset_of[g.multiply(x, y)], q.mult[q.coset_of[x]][q.coset_of[y]]);
}

TEST(Quotient, InvariantsOverCorpus) {
  for (const auto& e : corpus::property_corpus()) {
    const auto p = testing::load(e.spec);
    const auto& g = p.group->group;
    const auto q = quotient(g, p.normal);
    std::size_t prod = 1;
    for (std::size_t i = 0; i < q.cyclic_factors.size(); ++i) {
      prod *= q.cyclic_factors[i].second;
      if (i > 0) {
        EXPECT_LE(q.cyclic_factors[i].second, q.cyclic_factors[i - 1].second) << e.name;
      }
    }
    EXPECT_EQ(prod, q.order()) << e.name;
    EXPECT_EQ(q.order() * p.normal.order(), g.order());
    for (const auto& m : q.coset_members) EXPECT_EQ(m.size(), p.normal.order());
    for (CosetIndex c = 0; c < q.order(); ++c) EXPECT_EQ(q.from_exponents(q.exponents[c]), c);
  }
}

TEST(Quotient, Errors) {
  const auto t = testing::load(corpus::symmetric3_transposition());
  EXPECT_THROW(quotient(t.group->group, t.normal), HypothesisError);
  auto spec = corpus::symmetric3_alternating();
  spec.normal_generators.clear();
  const auto p = testing::load(spec);
  try {
    quotient(p.group->group, p.normal);
    FAIL();
  } catch (const HypothesisError& e) {
    EXPECT_NE(std::string(e.what()).find("abelian"), std::string::npos);
  }
}

}  // namespace
}  // namespace cosetchar
