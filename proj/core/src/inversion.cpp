#include "cosetchar/inversion.hpp"

#include <algorithm>

#include "cosetchar/errors.hpp"

namespace cosetchar {

Theta Theta::from_values(const CharacterTable& table, ClassFunction values) {
  Theta t;
  t.multiplicities = table.decompose_character(values);
  t.values = std::move(values);
  return t;
}

Theta Theta::from_multiplicities(const CharacterTable& table, std::span<const std::int64_t> mult) {
  if (mult.size() != table.size()) {
    throw HypothesisError("multiplicity vector has " + std::to_string(mult.size()) +
                          " entries, expected " + std::to_string(table.size()));
  }
  ClassFunction sum = ClassFunction::constant(table.group(), Cyclotomic());
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] < 0) throw HypothesisError("not a character: negative multiplicity");
    if (mult[i] > 0) sum += table[i] * Cyclotomic(static_cast<long>(mult[i]));
  }
  Theta t;
  t.values = std::move(sum);
  t.multiplicities.assign(mult.begin(), mult.end());
  return t;
}

std::int64_t Theta::degree() const {
  return values.degree().to_rational().get_num().get_si();
}

Cyclotomic RootMultiset::power_sum(std::size_t d) const {
  Cyclotomic s;
  for (std::size_t e : exponents) s += root_of_unity(n, static_cast<std::int64_t>((e * d) % n));
  return s;
}

Cyclotomic psi_power_value(const CosetAnalysis& analysis, const ClassFunction& theta,
                           std::size_t orbit, std::size_t d) {
  const CosetIndex gen = analysis.generator_coset();
  const auto& rec = analysis.orbits().at(orbit);
  const std::size_t m = rec.stabilizer.size();
  const CosetIndex coset = power_coset(analysis.quotient(), gen, d * m);
  const auto& rho = analysis.table()[rec.representative];
  const auto& sizes = analysis.group()->classes.sizes;

  Cyclotomic sum;
  for (ClassIndex k : analysis.classes_in_coset(coset)) {
    if (theta[k].is_zero() || rho[k].is_zero()) continue;
    sum += rho[k].conjugate() * theta[k] * Rational(static_cast<long>(sizes[k]));
  }
  const long n_order = static_cast<long>(analysis.subgroup().in_parent.order());
  return sum / Rational(n_order * static_cast<long>(m));
}

namespace {

// Divides poly (constant term first) by (x - r) if r is a root.
bool divide_out_root(std::vector<Cyclotomic>& poly, const Cyclotomic& r) {
  const std::size_t deg = poly.size() - 1;
  std::vector<Cyclotomic> quo(deg);
  Cyclotomic carry = poly[deg];
  for (std::size_t i = deg; i-- > 0;) {
    quo[i] = carry;
    carry = poly[i] + r * carry;
  }
  if (!carry.is_zero()) return false;
  poly = std::move(quo);
  return true;
}

}  // namespace

RootMultiset power_sums_to_multiset(std::span<const Cyclotomic> power_sums, std::size_t n) {
  const std::size_t bound = power_sums.size();
  // Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i.
  std::vector<Cyclotomic> e(bound + 1);
  e[0] = Cyclotomic(1L);
  for (std::size_t k = 1; k <= bound; ++k) {
    Cyclotomic acc;
    for (std::size_t i = 1; i <= k; ++i) {
      const Cyclotomic term = e[k - i] * power_sums[i - 1];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    e[k] = acc / Rational(static_cast<long>(k));
  }
  // prod (x - nu_k) = sum_k (-1)^k e_k x^(N-k)
  std::vector<Cyclotomic> poly(bound + 1);
  for (std::size_t k = 0; k <= bound; ++k) poly[bound - k] = k % 2 ? -e[k] : e[k];

  std::size_t lead_zeros = 0;
  while (lead_zeros < bound && poly[lead_zeros].is_zero()) ++lead_zeros;
  poly.erase(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(lead_zeros));

  RootMultiset out;
  out.n = n;
  for (std::size_t l = 0; l < n && poly.size() > 1; ++l) {
    const Cyclotomic r = root_of_unity(n, static_cast<std::int64_t>(l));
    while (poly.size() > 1 && divide_out_root(poly, r)) out.exponents.push_back(l);
  }
  if (poly.size() != 1) {
    throw HypothesisError("power sums are not those of a multiset of " + std::to_string(n) +
                          "-th roots of unity");
  }
  for (std::size_t d = 1; d <= bound; ++d) {
    ensure(out.power_sum(d) == power_sums[d - 1], "recovered roots do not reproduce the power sums");
  }
  return out;
}

RootMultiset choose_roots(const RootMultiset& lambdas, std::size_t m, RootChoice choice) {
  if (m == 0 || lambdas.n % m != 0) throw std::invalid_argument("choose_roots: m must divide n");
  RootMultiset out;
  out.n = lambdas.n;
  const std::size_t step = lambdas.n / m;  // zeta_m = zeta_n^step
  for (std::size_t k = 0; k < lambdas.exponents.size(); ++k) {
    const std::size_t e = lambdas.exponents[k];
    ensure(e % m == 0, "eigenvalue is not an m-th power of an n-th root of unity");
    std::size_t root = e / m;
    if (choice == RootChoice::kRotated) root = (root + ((k + 1) % m) * step) % lambdas.n;
    out.exponents.push_back(root);
  }
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

ClassFunction quotient_character(const CosetAnalysis& analysis, const RootMultiset& at_generator) {
  const auto& g = analysis.group();
  std::vector<Cyclotomic> per_coset;
  for (CosetIndex c = 0; c < analysis.coset_count(); ++c)
    per_coset.push_back(at_generator.power_sum(analysis.discrete_log(c)));
  std::vector<Cyclotomic> values;
  for (ClassIndex k = 0; k < g->class_count(); ++k)
    values.push_back(per_coset[analysis.quotient().coset_of[g->classes.representatives[k]]]);
  return ClassFunction(g, std::move(values));
}

std::vector<PsiComponent> decompose(const CosetAnalysis& analysis, const Theta& theta) {
  (void)analysis.generator_coset();
  if (theta.values.group() != analysis.group()) throw std::invalid_argument("Theta lives on a different group");
  const std::size_t n = analysis.coset_count();
  const std::int64_t theta_degree = theta.degree();

  std::vector<PsiComponent> out;
  ClassFunction total = ClassFunction::constant(analysis.group(), Cyclotomic());
  for (std::size_t o = 0; o < analysis.orbits().size(); ++o) {
    const auto& rec = analysis.orbits()[o];
    PsiComponent comp;
    comp.orbit = o;
    comp.representative = rec.representative;
    comp.m = rec.stabilizer.size();
    comp.bound = static_cast<std::size_t>(theta_degree) / analysis.table().degrees()[rec.representative];
    for (std::size_t d = 1; d <= comp.bound; ++d)
      comp.power_values.push_back(psi_power_value(analysis, theta.values, o, d));
    comp.lambdas = power_sums_to_multiset(comp.power_values, n);

    const Cyclotomic dim = psi_power_value(analysis, theta.values, o, 0);
    ensure(dim == Cyclotomic(static_cast<long>(comp.dimension())), "dim Psi differs from the number of eigenvalues");
    if (comp.dimension() == 0) continue;

    const auto& rho = analysis.table()[rec.representative];
    comp.psi_at_q = choose_roots(comp.lambdas, comp.m, RootChoice::kPrincipal);
    comp.psi = quotient_character(analysis, comp.psi_at_q);
    comp.product = comp.psi * rho;
    if (comp.m > 1) {
      const auto alt = choose_roots(comp.lambdas, comp.m, RootChoice::kRotated);
      comp.choice_independent = quotient_character(analysis, alt) * rho == comp.product;
      ensure(comp.choice_independent, "Psi (x) rho depends on the choice of roots");
    }
    total += comp.product;
    out.push_back(std::move(comp));
  }
  ensure(total == theta.values, "reconstruction sum differs from Theta");
  return out;
}

}  // namespace cosetchar
