#include "cosetchar/modular.hpp"

#include <algorithm>
#include <utility>

#include "cosetchar/errors.hpp"

namespace cosetchar::modp {

bool is_prime(Word n) {
  if (n < 2) return false;
  for (Word d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Word pow_mod(Word base, Word exp, Word p) {
  Word result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

Word inv_mod(Word a, Word p) {
  ensure(a % p != 0, "inverse of zero mod p");
  return pow_mod(a, p - 2, p);
}

Word primitive_root(Word p) {
  if (p == 2) return 1;
  std::vector<Word> factors;
  Word m = p - 1;
  for (Word d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    factors.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) factors.push_back(m);
  for (Word g = 2; g < p; ++g) {
    bool ok = true;
    for (Word f : factors) {
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("no primitive root mod p");
}

Word prime_congruent_to_one(Word lower_bound, Word modulus, Word search_bound) {
  Word p = lower_bound <= 1 ? 1 : lower_bound;
  if (p % modulus != 1 % modulus) p += (modulus + 1 - p % modulus) % modulus;
  if (p < 2) p += modulus;
  for (; p <= search_bound; p += modulus) {
    if (is_prime(p)) return p;
  }
  throw HypothesisError("no prime congruent to 1 mod " + std::to_string(modulus) +
                        " found below " + std::to_string(search_bound));
}

std::vector<std::size_t> rref(Matrix& m, Word p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Word inv = inv_mod(m[row][col], p);
    for (auto& x : m[row]) x = x * inv % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Word f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] = (m[r][c] + (p - f) * m[row][c]) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::vector<Vector> nullspace(Matrix m, std::size_t cols, Word p) {
  const auto pivots = rref(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector characteristic_polynomial(Matrix a, Word p) {
  const std::size_t n = a.size();
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    std::size_t piv = k + 1;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) continue;
    if (piv != k + 1) {
      std::swap(a[piv], a[k + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(a[r][piv], a[r][k + 1]);
    }
    const Word inv = inv_mod(a[k + 1][k], p);
    for (std::size_t i = k + 2; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Word f = a[i][k] * inv % p;
      for (std::size_t c = 0; c < n; ++c) a[i][c] = (a[i][c] + (p - f) * a[k + 1][c]) % p;
      for (std::size_t r = 0; r < n; ++r) a[r][k + 1] = (a[r][k + 1] + f * a[r][i]) % p;
    }
  }
  // polys[k] = charpoly of the leading k x k block.
  std::vector<Vector> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t m = k - 1;  // 0-based index of the new row/column
    Vector next(k + 1, 0);
    for (std::size_t i = 0; i < polys[k - 1].size(); ++i) {
      next[i + 1] = (next[i + 1] + polys[k - 1][i]) % p;
      next[i] = (next[i] + (p - a[m][m]) * polys[k - 1][i]) % p;
    }
    Word prod = 1;
    for (std::size_t i = m; i-- > 0;) {
      prod = prod * a[i + 1][i] % p;
      if (prod == 0) break;
      const Word coef = prod * a[i][m] % p;
      for (std::size_t j = 0; j < polys[i].size(); ++j)
        next[j] = (next[j] + (p - coef) * polys[i][j]) % p;
    }
    polys[k] = std::move(next);
  }
  return polys[n];
}

Word eval_poly(const Vector& poly, Word x, Word p) {
  Word r = 0;
  for (std::size_t i = poly.size(); i-- > 0;) r = (r * x + poly[i]) % p;
  return r;
}

}  // namespace cosetchar::modp
