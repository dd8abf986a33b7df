#include <gtest/gtest.h>

#include <random>

#include "cosetchar/errors.hpp"
#include "cosetchar/modular.hpp"

namespace cosetchar::modp {
namespace {

// Determinant by Gaussian elimination over F_p.
Word det(Matrix m, Word p) {
  const std::size_t n = m.size();
  Word d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = (p - d) % p;
    }
    d = d * m[c][c] % p;
    const Word inv = inv_mod(m[c][c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Word f = m[r][c] * inv % p;
      for (std::size_t k = c; k < n; ++k) m[r][k] = (m[r][k] + p - f * m[c][k] % p) % p;
    }
  }
  return d;
}

TEST(Modular, Primes) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(41));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(prime_congruent_to_one(10, 4, 1000), 13u);
  EXPECT_EQ(prime_congruent_to_one(2, 1, 1000), 2u);
  EXPECT_THROW(prime_congruent_to_one(100, 1000, 200), HypothesisError);
  EXPECT_EQ(primitive_root(41), 6u);
  EXPECT_EQ(inv_mod(3, 7) * 3 % 7, 1u);
}

TEST(Modular, CharacteristicPolynomialMatchesDeterminant) {
  const Word p = 101;
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 6;
    Matrix m(n, Vector(n));
    for (auto& r : m)
      for (auto& x : r) x = rng() % p;
    const Vector cp = characteristic_polynomial(m, p);
    ASSERT_EQ(cp.size(), n + 1);
    for (Word x : {Word{0}, Word{1}, Word{5}, Word{77}}) {
      Matrix xm = m;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) xm[i][j] = ((i == j ? x : 0) + p - m[i][j]) % p;
      EXPECT_EQ(eval_poly(cp, x, p), det(xm, p));
    }
  }
}

TEST(Modular, NullspaceIsKernel) {
  const Word p = 31;
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 2 + rng() % 5;
    Matrix m(r, Vector(c));
    for (auto& row : m)
      for (auto& x : row) x = rng() % 3 == 0 ? 0 : rng() % p;
    Matrix copy = m;
    const auto rank = rref(copy, p).size();
    const auto ns = nullspace(m, c, p);
    EXPECT_EQ(ns.size() + rank, c);
    for (const auto& v : ns) {
      for (const auto& row : m) {
        Word s = 0;
        for (std::size_t j = 0; j < c; ++j) s = (s + row[j] * v[j]) % p;
        EXPECT_EQ(s, 0u);
      }
    }
  }
}

}  // namespace
}  // namespace cosetchar::modp
