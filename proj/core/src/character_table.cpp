#include "cosetchar/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cosetchar/errors.hpp"
#include "cosetchar/modular.hpp"

namespace cosetchar {

std::shared_ptr<const GroupContext> GroupContext::make(FiniteGroup g) {
  auto ctx = std::make_shared<GroupContext>();
  ctx->classes = conjugacy_classes(g);
  ctx->inverse_class.resize(ctx->classes.count());
  for (ClassIndex c = 0; c < ctx->classes.count(); ++c) {
    ctx->inverse_class[c] = ctx->classes.class_of[g.inverse(ctx->classes.representatives[c])];
  }
  ctx->group = std::move(g);
  return ctx;
}

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_ || values_.size() != group_->class_count()) {
    throw std::invalid_argument("class function needs exactly one value per conjugacy class");
  }
}

ClassFunction ClassFunction::constant(GroupPtr group, const Cyclotomic& v) {
  const std::size_t n = group->class_count();
  return ClassFunction(std::move(group), std::vector<Cyclotomic>(n, v));
}

void ClassFunction::check_same_group(const ClassFunction& o) const {
  if (group_ != o.group_) throw std::invalid_argument("class functions on different groups");
}

ClassFunction ClassFunction::conjugate() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = v.conjugate();
  return r;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  check_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclotomic& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  a.check_same_group(b);
  ClassFunction r = a;
  for (std::size_t i = 0; i < r.values_.size(); ++i) r.values_[i] *= b.values_[i];
  return r;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group() != g.group()) throw std::invalid_argument("inner_product: group mismatch");
  const auto& ctx = *f.group();
  Cyclotomic sum;
  for (ClassIndex c = 0; c < ctx.class_count(); ++c) {
    if (f[c].is_zero() || g[c].is_zero()) continue;
    sum += f[c] * g[c].conjugate() * Rational(static_cast<long>(ctx.classes.sizes[c]));
  }
  return sum / Rational(static_cast<long>(ctx.order()));
}

ClassConstants class_constants(const GroupContext& g) {
  const std::size_t r = g.class_count();
  ClassConstants a(r, std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
  for (ClassIndex k = 0; k < r; ++k) {
    const ElementIndex z = g.classes.representatives[k];
    for (ClassIndex i = 0; i < r; ++i) {
      for (ElementIndex x : g.classes.members[i]) {
        const ElementIndex y = g.group.multiply(g.group.inverse(x), z);
        ++a[i][g.class_of(y)][k];
      }
    }
  }
  return a;
}

ClassIndex power_map(const GroupContext& g, ClassIndex c, std::size_t k) {
  const auto& members = g.classes.members[c];
  const ClassIndex result = g.class_of(g.group.power(members.front(), k));
  if (members.size() > 1) {
    ensure(g.class_of(g.group.power(members[1], k)) == result, "power map is not well defined");
  }
  return result;
}

std::vector<std::vector<ClassIndex>> power_map_table(const GroupContext& g) {
  const std::size_t e = g.group.exponent();
  std::vector<std::vector<ClassIndex>> table(g.class_count(), std::vector<ClassIndex>(e));
  for (ClassIndex c = 0; c < g.class_count(); ++c) {
    const ElementIndex x = g.classes.representatives[c];
    ElementIndex y = 0;
    for (std::size_t k = 0; k < e; ++k) {
      table[c][k] = g.class_of(y);
      y = g.group.multiply(y, x);
    }
    if (g.classes.sizes[c] > 1) {
      const std::size_t k = 1 + (e > 1 ? 1 : 0);
      ensure(power_map(g, c, k) == table[c][k % e], "power map is not well defined");
    }
  }
  return table;
}

namespace {

using modp::Word;

// A subspace of F_p^r held as RREF basis rows with their pivot columns.
struct Space {
  modp::Matrix basis;
  std::vector<std::size_t> pivots;
};

Space make_space(modp::Matrix rows, Word p) {
  Space s;
  s.pivots = modp::rref(rows, p);
  s.basis = std::move(rows);
  return s;
}

// Splits every common eigenspace of dimension > 1 by the action of `mat`.
std::vector<Space> split(const std::vector<Space>& spaces, const modp::Matrix& mat, Word p) {
  std::vector<Space> out;
  const std::size_t r = mat.size();
  for (const auto& sp : spaces) {
    const std::size_t d = sp.basis.size();
    if (d == 1) {
      out.push_back(sp);
      continue;
    }
    // Matrix of mat restricted to the space, in the RREF basis coordinates.
    modp::Matrix t(d, modp::Vector(d, 0));
    for (std::size_t s = 0; s < d; ++s) {
      modp::Vector img(r, 0);
      for (std::size_t j = 0; j < r; ++j) {
        Word acc = 0;
        for (std::size_t k = 0; k < r; ++k) acc = (acc + mat[j][k] * sp.basis[s][k]) % p;
        img[j] = acc;
      }
      for (std::size_t tt = 0; tt < d; ++tt) t[tt][s] = img[sp.pivots[tt]];
    }
    const auto cp = modp::characteristic_polynomial(t, p);
    std::size_t found = 0;
    for (Word lambda = 0; lambda < p && found < d; ++lambda) {
      if (modp::eval_poly(cp, lambda, p) != 0) continue;
      modp::Matrix shifted = t;
      for (std::size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] + p - lambda) % p;
      const auto null = modp::nullspace(shifted, d, p);
      modp::Matrix rows;
      for (const auto& c : null) {
        modp::Vector v(r, 0);
        for (std::size_t s = 0; s < d; ++s) {
          if (c[s] == 0) continue;
          for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + c[s] * sp.basis[s][k]) % p;
        }
        rows.push_back(std::move(v));
      }
      found += rows.size();
      out.push_back(make_space(std::move(rows), p));
    }
    ensure(found == d, "eigenspace splitting failed: class matrix not diagonalizable mod p");
  }
  return out;
}

Word isqrt(Word n) {
  Word x = static_cast<Word>(std::sqrt(static_cast<long double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

}  // namespace

std::optional<std::size_t> CharacterTable::find_row(const ClassFunction& f) const {
  if (f.group() != group_) return std::nullopt;
  std::vector<ComplexApprox> approx;
  approx.reserve(f.size());
  for (const auto& v : f.values()) approx.push_back(v.to_complex());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    bool close = true;
    for (std::size_t c = 0; c < approx.size() && close; ++c)
      close = std::abs(approx[c] - approx_[i][c]) < 1e-6;
    if (close && rows_[i] == f) return i;
  }
  return std::nullopt;
}

std::vector<std::int64_t> CharacterTable::decompose_character(const ClassFunction& theta) const {
  std::vector<std::int64_t> mult;
  for (const auto& row : rows_) {
    const Cyclotomic m = inner_product(theta, row);
    if (!m.is_rational()) throw HypothesisError("not a character: multiplicity is not rational");
    const Rational q = m.to_rational();
    if (q.get_den() != 1 || sgn(q) < 0 || !q.get_num().fits_slong_p()) {
      throw HypothesisError("not a character: multiplicity " + q.get_str() +
                            " is not a nonnegative integer");
    }
    mult.push_back(q.get_num().get_si());
  }
  return mult;
}

CharacterTable character_table(const GroupPtr& gp) {
  const GroupContext& g = *gp;
  const std::size_t r = g.class_count();
  const Word order = g.order();
  const Word e = g.group.exponent();

  // Smallest integer exceeding 2*sqrt(#G), then the first prime = 1 mod e.
  const Word lower = isqrt(4 * order) + 1;
  const Word p = modp::prime_congruent_to_one(lower, e, Word{1} << 30);
  const Word zeta_e = modp::pow_mod(modp::primitive_root(p), (p - 1) / e, p);

  const auto constants = class_constants(g);
  const auto powers = power_map_table(g);

  std::vector<Space> spaces;
  {
    modp::Matrix id(r, modp::Vector(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(make_space(std::move(id), p));
  }
  for (ClassIndex i = 1; i < r; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() == 1; })) break;
    modp::Matrix mat(r, modp::Vector(r));
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) mat[j][k] = constants[i][j][k] % p;
    spaces = split(spaces, mat, p);
  }
  ensure(spaces.size() == r, "eigenspace splitting failed: common eigenspaces are not one-dimensional");

  CharacterTable table;
  table.group_ = gp;
  table.prime_ = p;
  std::vector<std::pair<std::size_t, ClassFunction>> rows;
  for (const auto& sp : spaces) {
    modp::Vector w = sp.basis.front();
    ensure(w[0] != 0, "central character vanishes on the identity class");
    const Word inv0 = modp::inv_mod(w[0], p);
    for (auto& x : w) x = x * inv0 % p;

    Word s = 0;
    for (ClassIndex j = 0; j < r; ++j) {
      const Word h = g.classes.sizes[j] % p;
      s = (s + w[j] * w[g.inverse_class[j]] % p * modp::inv_mod(h, p)) % p;
    }
    const Word d2 = order % p * modp::inv_mod(s, p) % p;
    Word degree = 0;
    for (Word d = 1; d <= (p - 1) / 2; ++d) {
      if (d * d % p == d2) {
        degree = d;
        break;
      }
    }
    ensure(degree != 0 && order % degree == 0, "character degree could not be recovered");

    std::vector<Word> chi(r);
    for (ClassIndex j = 0; j < r; ++j)
      chi[j] = w[j] * degree % p * modp::inv_mod(g.classes.sizes[j] % p, p) % p;

    std::vector<Cyclotomic> values(r);
    for (ClassIndex j = 0; j < r; ++j) {
      const std::size_t n = g.group.element_order(g.classes.representatives[j]);
      const Word theta = modp::pow_mod(zeta_e, e / n, p);
      const Word inv_n = modp::inv_mod(n % p, p);
      std::vector<Rational> mult(n, Rational(0));
      for (std::size_t l = 0; l < n; ++l) {
        Word acc = 0;
        for (std::size_t k = 0; k < n; ++k) {
          const Word t = modp::pow_mod(theta, (n - (l * k) % n) % n, p);
          acc = (acc + chi[powers[j][k]] * t) % p;
        }
        const Word m = acc * inv_n % p;
        ensure(m <= degree, "eigenvalue multiplicity exceeds the degree during lifting");
        mult[l] = static_cast<long>(m);
      }
      values[j] = Cyclotomic::from_powers(n, mult);
    }
    rows.emplace_back(static_cast<std::size_t>(degree), ClassFunction(gp, std::move(values)));
  }

  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return std::lexicographical_compare(a.second.values().begin(), a.second.values().end(),
                                        b.second.values().begin(), b.second.values().end(),
                                        canonical_less);
  });

  std::size_t sum_sq = 0;
  for (auto& [deg, row] : rows) {
    sum_sq += deg * deg;
    table.degrees_.push_back(deg);
    for (const auto& v : row.values()) {
      for (const auto& c : v.coeffs()) ensure(c.get_den() == 1, "lifted value is not an algebraic integer");
    }
    table.rows_.push_back(std::move(row));
  }
  ensure(sum_sq == order, "sum of squared degrees differs from the group order");

  std::vector<ClassFunction> conj;
  for (const auto& row : table.rows_) conj.push_back(row.conjugate());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      Cyclotomic s;
      for (ClassIndex c = 0; c < r; ++c)
        s += table.rows_[i][c] * conj[j][c] * Rational(static_cast<long>(g.classes.sizes[c]));
      ensure(s == Cyclotomic(i == j ? static_cast<long>(order) : 0L), "row orthogonality failed");
    }
  }
  for (ClassIndex a = 0; a < r; ++a) {
    for (ClassIndex b = a; b < r; ++b) {
      Cyclotomic s;
      for (std::size_t i = 0; i < r; ++i) s += table.rows_[i][a] * conj[i][b];
      const long expected = a == b ? static_cast<long>(order / g.classes.sizes[a]) : 0L;
      ensure(s == Cyclotomic(expected), "column orthogonality failed");
    }
  }

  for (const auto& row : table.rows_) {
    std::vector<ComplexApprox> ap;
    for (const auto& v : row.values()) ap.push_back(v.to_complex());
    table.approx_.push_back(std::move(ap));
  }
  return table;
}

EmbeddedSubgroup EmbeddedSubgroup::make(const FiniteGroup& parent, Subgroup h) {
  std::vector<Permutation> gens;
  for (ElementIndex i : h.generators) gens.push_back(parent.element(i));
  FiniteGroup self = generate_group(parent.degree(), gens, parent.order());
  if (self.order() != h.order()) {
    gens.clear();
    for (ElementIndex i : h.members) gens.push_back(parent.element(i));
    self = generate_group(parent.degree(), gens, parent.order());
  }
  ensure(self.order() == h.order(), "subgroup enumeration disagrees with its member list");

  EmbeddedSubgroup out;
  out.to_parent.reserve(self.order());
  for (const auto& perm : self.elements()) out.to_parent.push_back(parent.index_of(perm));
  out.in_parent = std::move(h);
  out.self = GroupContext::make(std::move(self));
  return out;
}

ClassFunction restrict(const ClassFunction& chi, const EmbeddedSubgroup& h) {
  const auto& ctx = *h.self;
  std::vector<Cyclotomic> values;
  values.reserve(ctx.class_count());
  for (ClassIndex c = 0; c < ctx.class_count(); ++c) {
    values.push_back(chi.at_element(h.to_parent[ctx.classes.representatives[c]]));
  }
  return ClassFunction(h.self, std::move(values));
}

}  // namespace cosetchar
