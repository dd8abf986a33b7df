#include "cosetchar/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "cosetchar/errors.hpp"

namespace cosetchar {

namespace {

std::shared_mutex g_phi_mutex;
std::map<std::size_t, std::vector<std::int64_t>> g_phi_cache;

std::vector<std::int64_t> compute_cyclotomic(std::size_t n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<std::int64_t> quo(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const std::int64_t c = num[i];
      quo[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
    }
    num = std::move(quo);
  }
  return num;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  {
    std::shared_lock lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
  }
  auto poly = n == 1 ? std::vector<std::int64_t>{-1, 1} : compute_cyclotomic(n);
  std::unique_lock lock(g_phi_mutex);
  return g_phi_cache.emplace(n, std::move(poly)).first->second;
}

std::size_t euler_phi(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(long v) : order_(1), coeffs_(1, Rational(v)) {}

Cyclotomic::Cyclotomic(const Rational& v) : order_(1), coeffs_(1, v) {}

Cyclotomic::Cyclotomic(std::size_t n, std::vector<Rational> coeffs)
    : order_(n), coeffs_(std::move(coeffs)) {}

void Cyclotomic::reduce_poly(std::vector<Rational>& poly) const {
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (sgn(poly[i]) == 0) continue;
    const Rational c = poly[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) poly[i - deg + j] -= c * phi[j];
    }
    poly[i] = 0;
  }
  poly.resize(deg, Rational(0));
}

Cyclotomic Cyclotomic::from_powers(std::size_t n, const std::vector<Rational>& coeffs) {
  if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
  std::vector<Rational> folded(n, Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) folded[i % n] += coeffs[i];
  Cyclotomic r(n, {});
  r.reduce_poly(folded);
  r.coeffs_ = std::move(folded);
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  ensure(is_rational(), "to_rational on an irrational cyclotomic");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(std::size_t m) const {
  if (m == order_) return *this;
  if (m == 0 || m % order_ != 0) throw std::invalid_argument("promotion to a non-multiple order");
  const std::size_t step = m / order_;
  std::vector<Rational> poly(m, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  Cyclotomic r(m, {});
  r.reduce_poly(poly);
  r.coeffs_ = std::move(poly);
  return r;
}

Cyclotomic Cyclotomic::conjugate() const {
  if (coeffs_.size() == 1) return *this;
  std::vector<Rational> poly(order_, Rational(0));
  poly[0] = coeffs_[0];
  for (std::size_t i = 1; i < coeffs_.size(); ++i) poly[order_ - i] = coeffs_[i];
  Cyclotomic r(order_, {});
  r.reduce_poly(poly);
  r.coeffs_ = std::move(poly);
  return r;
}

ComplexApprox Cyclotomic::to_complex() const {
  long double re = 0, im = 0;
  const long double two_pi = 6.283185307179586476925286766559L;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const long double c = coeffs_[i].get_d();
    const long double angle = two_pi * static_cast<long double>(i) / static_cast<long double>(order_);
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.coeffs_.size() == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  if (coeffs_.size() == 1) {
    Rational c = coeffs_[0];
    *this = o;
    coeffs_[0] += c;
    return *this;
  }
  if (order_ != o.order_) {
    const std::size_t m = std::lcm(order_, o.order_);
    *this = promoted(m);
    return *this += o.promoted(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& r) {
  if (sgn(r) == 0) throw std::domain_error("cyclotomic division by zero");
  for (auto& c : coeffs_) c /= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.coeffs_.size() == 1) return *this *= o.coeffs_[0];
  if (coeffs_.size() == 1) {
    Rational c = coeffs_[0];
    *this = o;
    return *this *= c;
  }
  if (order_ != o.order_) {
    const std::size_t m = std::lcm(order_, o.order_);
    *this = promoted(m);
    return *this *= o.promoted(m);
  }
  std::vector<Rational> poly(2 * coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (sgn(o.coeffs_[j]) != 0) poly[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  reduce_poly(poly);
  coeffs_ = std::move(poly);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.coeffs_.size() == 1 || b.coeffs_.size() == 1) {
    const Cyclotomic& r = a.coeffs_.size() == 1 ? a : b;
    const Cyclotomic& o = a.coeffs_.size() == 1 ? b : a;
    return o.is_rational() && o.coeffs_[0] == r.coeffs_[0];
  }
  const std::size_t m = std::lcm(a.order_, b.order_);
  return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
}

std::string Cyclotomic::serialize() const {
  std::ostringstream out;
  out << order_ << ":[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ',';
    out << coeffs_[i].get_str();
  }
  out << ']';
  return out.str();
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'z' << order_;
    if (i > 1) out << '^' << i;
  }
  return first ? "0" : out.str();
}

Cyclotomic root_of_unity(std::size_t n, std::int64_t k) {
  if (n == 0) throw std::invalid_argument("root_of_unity: order must be positive");
  const auto sn = static_cast<std::int64_t>(n);
  const auto e = static_cast<std::size_t>(((k % sn) + sn) % sn);
  std::vector<Rational> poly(e + 1, Rational(0));
  poly[e] = 1;
  return Cyclotomic::from_powers(n, poly);
}

std::optional<std::pair<std::size_t, std::size_t>> is_root_of_unity(const Cyclotomic& a,
                                                                     std::size_t max_order) {
  const auto z = a.to_complex();
  if (std::abs(std::abs(z) - 1.0) > 1e-6) return std::nullopt;
  for (std::size_t n = 1; n <= max_order; ++n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      if (root_of_unity(n, static_cast<std::int64_t>(k)) == a) return std::make_pair(n, k);
    }
  }
  return std::nullopt;
}

bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c > 0;
  }
  return false;
}

}  // namespace cosetchar
