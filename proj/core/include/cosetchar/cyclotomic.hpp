#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cosetchar {

using Rational = mpq_class;
using ComplexApprox = std::complex<double>;

/// num/den in canonical form.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Cached; safe to call from several threads.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::size_t n);

std::size_t euler_phi(std::size_t n);

/// An exact element of Q(zeta_n), stored in the power basis
/// 1, zeta, ..., zeta^(phi(n)-1) reduced modulo the n-th cyclotomic
/// polynomial. Binary operations on values of different orders promote
/// both operands to the lcm of the orders.
class Cyclotomic {
 public:
  /// Zero in Q(zeta_1) = Q.
  Cyclotomic();
  Cyclotomic(long v);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(const Rational& v);

  /// Builds sum_i c_i zeta_n^i for an arbitrary-length coefficient list,
  /// reducing exponents mod n and the polynomial mod Phi_n.
  static Cyclotomic from_powers(std::size_t n, const std::vector<Rational>& coeffs);

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return Cyclotomic(1L); }

  std::size_t order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; only valid when is_rational().
  Rational to_rational() const;

  /// Same value expressed in Q(zeta_m); m must be a multiple of order().
  Cyclotomic promoted(std::size_t m) const;

  Cyclotomic conjugate() const;
  ComplexApprox to_complex() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic& operator/=(const Rational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& r) { return a /= r; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Exact serialization "n:[c0,c1,...]" with coefficients as p/q or p.
  std::string serialize() const;
  /// Human-readable form such as "1 + z4" or "-2*z5^2 - z5^3".
  std::string to_string() const;

 private:
  Cyclotomic(std::size_t n, std::vector<Rational> coeffs);
  void reduce_poly(std::vector<Rational>& poly) const;

  std::size_t order_ = 1;
  std::vector<Rational> coeffs_;  // length phi(order_)
};

/// zeta_n^k. Throws std::invalid_argument for n == 0.
Cyclotomic root_of_unity(std::size_t n, std::int64_t k);

inline ComplexApprox as_complex(const Cyclotomic& a) { return a.to_complex(); }
inline Cyclotomic conjugate(const Cyclotomic& a) { return a.conjugate(); }

/// (n, k) with a = zeta_n^k, n <= max_order minimal and gcd(k, n) = 1,
/// or nullopt if a is not such a root of unity.
std::optional<std::pair<std::size_t, std::size_t>> is_root_of_unity(const Cyclotomic& a,
                                                                     std::size_t max_order);

/// Total order on values used only for canonical sorting. Compares order
/// first, then coefficients lexicographically (larger rationals first).
bool canonical_less(const Cyclotomic& a, const Cyclotomic& b);

}  // namespace cosetchar
