#include <gtest/gtest.h>

#include <random>

#include "cosetchar/corpus.hpp"
#include "cosetchar/errors.hpp"
#include "cosetchar/inversion.hpp"
#include "oracles.hpp"

namespace cosetchar {
namespace {

CosetAnalysis analyze(const GroupSpec& spec) {
  const auto p = testing::load(spec);
  return CosetAnalysis::make(p.group, p.normal);
}

std::vector<std::int64_t> unit_vector(std::size_t n, std::size_t i) {
  std::vector<std::int64_t> v(n, 0);
  v[i] = 1;
  return v;
}

TEST(PowerSums, Examples) {
  const std::vector<Cyclotomic> zeros(3);
  EXPECT_EQ(power_sums_to_multiset(zeros, 4).size(), 0u);

  const std::vector<Cyclotomic> twos(2, Cyclotomic(2L));
  EXPECT_EQ(power_sums_to_multiset(twos, 4).exponents, (std::vector<std::size_t>{0, 0}));

  // p1 = 0, p2 = 2: x^2 - 1, roots +-1.
  const std::vector<Cyclotomic> pm1{Cyclotomic(), Cyclotomic(2L)};
  EXPECT_EQ(power_sums_to_multiset(pm1, 4).exponents, (std::vector<std::size_t>{0, 2}));
  // p1 = 0, p2 = -2: x^2 + 1, roots +-i.
  const std::vector<Cyclotomic> pmi{Cyclotomic(), Cyclotomic(-2L)};
  EXPECT_EQ(power_sums_to_multiset(pmi, 4).exponents, (std::vector<std::size_t>{1, 3}));
  // zero padding: one root z4 with bound 3
  const auto i = root_of_unity(4, 1);
  const std::vector<Cyclotomic> padded{i, i * i, i * i * i};
  EXPECT_EQ(power_sums_to_multiset(padded, 4).exponents, (std::vector<std::size_t>{1}));
}

TEST(PowerSums, RejectsNonRootsOfUnity) {
  const std::vector<Cyclotomic> half{Cyclotomic(ratio(1, 2)), Cyclotomic(ratio(1, 4))};
  EXPECT_THROW(power_sums_to_multiset(half, 4), HypothesisError);
  const std::vector<Cyclotomic> wrong_order{root_of_unity(3, 1), root_of_unity(3, 2)};
  EXPECT_THROW(power_sums_to_multiset(wrong_order, 4), HypothesisError);
}

TEST(PowerSums, RandomMultisetsRoundTrip) {
  std::mt19937 rng(21);
  for (std::size_t n : {1, 2, 4, 6}) {
    for (int t = 0; t < 25; ++t) {
      RootMultiset m;
      m.n = n;
      const std::size_t size = rng() % 5;
      for (std::size_t k = 0; k < size; ++k) m.exponents.push_back(rng() % n);
      std::sort(m.exponents.begin(), m.exponents.end());
      std::vector<Cyclotomic> p;
      const std::size_t bound = size + rng() % 3;
      for (std::size_t d = 1; d <= bound; ++d) p.push_back(m.power_sum(d));
      if (bound == 0) continue;
      EXPECT_EQ(power_sums_to_multiset(p, n).exponents, m.exponents);
    }
  }
}

TEST(ChooseRoots, Examples) {
  RootMultiset l{4, {1, 3}};
  EXPECT_EQ(choose_roots(l, 1).exponents, l.exponents);
  RootMultiset one{2, {0}};
  EXPECT_EQ(choose_roots(one, 2, RootChoice::kPrincipal).exponents, (std::vector<std::size_t>{0}));
  EXPECT_EQ(choose_roots(one, 2, RootChoice::kRotated).exponents, (std::vector<std::size_t>{1}));
  RootMultiset four{4, {0}};
  const auto r = choose_roots(four, 4, RootChoice::kRotated);
  EXPECT_EQ(r.exponents, (std::vector<std::size_t>{1}));
  EXPECT_THROW(choose_roots(four, 3), std::invalid_argument);
}

TEST(PsiPowerValue, Examples) {
  const auto a = analyze(corpus::frobenius20());
  const auto& t = a.table();
  const auto triv = Theta::from_multiplicities(t, unit_vector(t.size(), 0));
  for (std::size_t d = 0; d < 4; ++d) EXPECT_EQ(psi_power_value(a, triv.values, 0, d), Cyclotomic(1L));

  // Theta = rho3 + rho5 where rho3(q) = -i.
  const ClassIndex qc = a.group()->class_of(a.quotient().coset_reps[a.generator_coset()]);
  std::size_t rho3 = t.size();
  for (std::size_t r = 0; r < t.size(); ++r)
    if (t[r][qc] == -root_of_unity(4, 1)) rho3 = r;
  ASSERT_LT(rho3, t.size());
  auto mult = unit_vector(t.size(), rho3);
  mult[4] = 1;
  const auto theta = Theta::from_multiplicities(t, mult);
  EXPECT_EQ(psi_power_value(a, theta.values, 0, 1), -root_of_unity(4, 1));
  EXPECT_EQ(psi_power_value(a, theta.values, 0, 0), Cyclotomic(1L));
  EXPECT_EQ(psi_power_value(a, theta.values, 1, 0), Cyclotomic(1L));

  // Theta = rho with trivial stabilizer: Psi_rho = trivial.
  const auto single = Theta::from_multiplicities(t, unit_vector(t.size(), 0));
  for (std::size_t d = 1; d < 6; ++d) EXPECT_EQ(psi_power_value(a, single.values, 0, d), Cyclotomic(1L));
}

TEST(Decompose, TrivialCharacter) {
  const auto a = analyze(corpus::frobenius20());
  const auto theta = Theta::from_multiplicities(a.table(), unit_vector(a.table().size(), 0));
  const auto comps = decompose(a, theta);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].representative, 0u);
  EXPECT_EQ(comps[0].psi, ClassFunction::constant(a.group(), Cyclotomic(1L)));
}

TEST(Decompose, FrobeniusRegularCharacter) {
  const auto a = analyze(corpus::frobenius20());
  std::vector<Cyclotomic> reg(a.group()->class_count());
  reg[0] = Cyclotomic(20L);
  const auto theta = Theta::from_values(a.table(), ClassFunction(a.group(), reg));
  EXPECT_EQ(theta.multiplicities, (std::vector<std::int64_t>{1, 1, 1, 1, 4}));
  const auto comps = decompose(a, theta);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].dimension(), 4u);
  EXPECT_EQ(comps[0].lambdas.exponents, (std::vector<std::size_t>{0, 1, 2, 3}));
  // rho5 occurs four times in the regular character.
  EXPECT_EQ(comps[1].dimension(), 4u);
  EXPECT_EQ(comps[1].m, 4u);
  EXPECT_EQ(comps[1].lambdas.exponents, (std::vector<std::size_t>{0, 0, 0, 0}));
  EXPECT_TRUE(comps[1].choice_independent);
}

TEST(Decompose, FrobeniusTwoComponents) {
  const auto a = analyze(corpus::frobenius20());
  const std::vector<std::int64_t> mult{0, 0, 1, 0, 1};
  const auto theta = Theta::from_multiplicities(a.table(), mult);
  const auto comps = decompose(a, theta);
  ASSERT_EQ(comps.size(), 2u);
  for (const auto& c : comps) EXPECT_EQ(c.product, testing::orbit_grouped(a, mult, c.orbit));
}

TEST(Decompose, SingleTwoDimensionalWithStabilizer) {
  const auto a = analyze(corpus::quaternion_cyclic());
  std::size_t two = a.table().size();
  for (std::size_t r = 0; r < a.table().size(); ++r)
    if (a.table().degrees()[r] == 2) two = r;
  ASSERT_LT(two, a.table().size());
  const auto theta = Theta::from_multiplicities(a.table(), unit_vector(a.table().size(), two));
  const auto comps = decompose(a, theta);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].m, 2u);
  EXPECT_EQ(comps[0].dimension(), 1u);
  EXPECT_EQ(comps[0].lambdas.exponents, (std::vector<std::size_t>{0}));
  EXPECT_TRUE(comps[0].choice_independent);
  // Both square roots of 1 give the same product with rho.
  for (auto choice : {RootChoice::kPrincipal, RootChoice::kRotated}) {
    const auto psi = quotient_character(a, choose_roots(comps[0].lambdas, 2, choice));
    EXPECT_EQ(psi * a.table()[two], theta.values);
  }
}

TEST(Decompose, RequiresCyclicQuotient) {
  const auto a = analyze(corpus::quaternion_center());
  const auto theta = Theta::from_multiplicities(a.table(), unit_vector(a.table().size(), 4));
  EXPECT_THROW(decompose(a, theta), HypothesisError);
}

TEST(Decompose, RejectsNonCharacters) {
  const auto a = analyze(corpus::frobenius20());
  const auto& t = a.table();
  EXPECT_THROW(Theta::from_values(t, t[1] - t[0]), HypothesisError);
  const std::vector<std::int64_t> neg{1, -1, 0, 0, 0};
  EXPECT_THROW(Theta::from_multiplicities(t, neg), HypothesisError);
  const std::vector<std::int64_t> short_vec{1, 0};
  EXPECT_THROW(Theta::from_multiplicities(t, short_vec), HypothesisError);
}

TEST(Decompose, RandomRoundTripAgainstOrbitGrouping) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dist(0, 3);
  for (const auto& e : corpus::property_corpus()) {
    const auto a = analyze(e.spec);
    if (!a.quotient_is_cyclic()) continue;
    for (int t = 0; t < 20; ++t) {
      std::vector<std::int64_t> mult(a.table().size());
      for (auto& m : mult) m = dist(rng);
      mult[0] += 1;
      const auto theta = Theta::from_multiplicities(a.table(), mult);
      const auto comps = decompose(a, theta);
      ClassFunction sum = ClassFunction::constant(a.group(), Cyclotomic());
      for (const auto& c : comps) {
        EXPECT_EQ(c.product, testing::orbit_grouped(a, mult, c.orbit)) << e.name;
        std::int64_t dim = 0;
        for (auto r : a.orbits()[c.orbit].members) dim += mult[r];
        EXPECT_EQ(static_cast<std::int64_t>(c.dimension()), dim);
        EXPECT_EQ(psi_power_value(a, theta.values, c.orbit, 0), Cyclotomic(static_cast<long>(dim)));
        for (auto x : c.lambdas.exponents) {
          EXPECT_LT(x, a.coset_count());
          EXPECT_EQ(c.lambdas.n, a.coset_count());
        }
        for (std::size_t d = 1; d <= c.bound; ++d) EXPECT_EQ(c.lambdas.power_sum(d), c.power_values[d - 1]);
        sum += c.product;
      }
      EXPECT_EQ(sum, theta.values) << e.name;
    }
  }
}

}  // namespace
}  // namespace cosetchar
