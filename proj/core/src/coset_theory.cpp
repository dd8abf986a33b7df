#include "cosetchar/coset_theory.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cosetchar/errors.hpp"

namespace cosetchar {

bool DualCharacter::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](std::size_t e) { return e == 0; });
}

namespace {

std::size_t dual_index(const AbelianQuotient& q, const std::vector<std::size_t>& e) {
  std::size_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < q.cyclic_factors.size(); ++i) {
    idx += (e[i] % q.cyclic_factors[i].second) * stride;
    stride *= q.cyclic_factors[i].second;
  }
  return idx;
}

}  // namespace

std::vector<DualCharacter> dual_group(const AbelianQuotient& q) {
  const auto& factors = q.cyclic_factors;
  std::size_t exponent = 1;
  for (const auto& f : factors) exponent = std::lcm(exponent, f.second);

  std::vector<DualCharacter> duals;
  std::vector<std::size_t> e(factors.size(), 0);
  for (std::size_t count = 0; count < q.order(); ++count) {
    DualCharacter chi;
    chi.exponents = e;
    for (CosetIndex c = 0; c < q.order(); ++c) {
      std::size_t k = 0;
      for (std::size_t i = 0; i < factors.size(); ++i)
        k += e[i] * q.exponents[c][i] * (exponent / factors[i].second);
      chi.values.push_back(root_of_unity(exponent, static_cast<std::int64_t>(k % exponent)));
    }
    duals.push_back(std::move(chi));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (++e[i] < factors[i].second) break;
      e[i] = 0;
    }
  }

  // Group structure: chi * (basis character i) is the character with exponent i bumped.
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<std::size_t> unit(factors.size(), 0);
    unit[i] = 1;
    const auto& basis = duals[dual_index(q, unit)];
    for (const auto& chi : duals) {
      auto bumped = chi.exponents;
      ++bumped[i];
      const auto& target = duals[dual_index(q, bumped)];
      for (CosetIndex c = 0; c < q.order(); ++c) {
        ensure(chi.values[c] * basis.values[c] == target.values[c],
               "dual group is not closed under pointwise product");
      }
    }
  }
  return duals;
}

ClassFunction lift_to_group(const DualCharacter& chi, const AbelianQuotient& q, const GroupPtr& g) {
  std::vector<Cyclotomic> values;
  values.reserve(g->class_count());
  for (ClassIndex k = 0; k < g->class_count(); ++k)
    values.push_back(chi.values[q.coset_of[g->classes.representatives[k]]]);
  return ClassFunction(g, std::move(values));
}

std::vector<std::vector<ComplexApprox>> CosetReport::numeric() const {
  std::vector<std::vector<ComplexApprox>> m(values.size());
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t b = 0; b < values[a].size(); ++b)
      m[a].push_back(std::sqrt(radicands[a][b].get_d()) * values[a][b].to_complex());
  return m;
}

bool ExtendabilityCounts::all_equal() const {
  return classes_in_coset == nonvanishing_orbits && nonvanishing_orbits == full_length_orbits &&
         full_length_orbits == irreducible_restrictions_per_index &&
         irreducible_restrictions_per_index == extendable_characters;
}

CosetAnalysis CosetAnalysis::make(GroupPtr g, Subgroup n) {
  // Hypotheses first, so bad input fails before any table is computed.
  (void)cosetchar::quotient(g->group, n);
  CharacterTable table = character_table(g);
  return make(std::move(g), std::move(table), std::move(n));
}

CosetAnalysis CosetAnalysis::make(GroupPtr g, CharacterTable table, Subgroup n) {
  CosetAnalysis a;
  a.quotient_ = cosetchar::quotient(g->group, n);
  a.group_ = std::move(g);
  a.table_ = std::move(table);
  ensure(a.table_.group() == a.group_, "character table belongs to a different group");
  a.subgroup_ = EmbeddedSubgroup::make(a.group_->group, std::move(n));
  a.subgroup_table_ = character_table(a.subgroup_.self);
  a.duals_ = dual_group(a.quotient_);

  const std::size_t rows = a.table_.size();
  for (const auto& chi : a.duals_) a.lifted_duals_.push_back(lift_to_group(chi, a.quotient_, a.group_));

  a.action_.assign(a.duals_.size(), std::vector<std::size_t>(rows));
  for (std::size_t d = 0; d < a.duals_.size(); ++d) {
    for (std::size_t r = 0; r < rows; ++r) {
      const auto hit = a.table_.find_row(a.lifted_duals_[d] * a.table_[r]);
      ensure(hit.has_value(), "tensor product with a dual character is not irreducible");
      a.action_[d][r] = *hit;
    }
  }

  for (std::size_t r = 0; r < rows; ++r) a.restrictions_.push_back(restrict(a.table_[r], a.subgroup_));

  a.orbit_of_row_.assign(rows, rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (a.orbit_of_row_[r] != rows) continue;
    OrbitRecord orbit;
    orbit.representative = r;
    for (std::size_t d = 0; d < a.duals_.size(); ++d) {
      const std::size_t image = a.action_[d][r];
      orbit.members.push_back(image);
      if (image == r) orbit.stabilizer.push_back(d);
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.members.erase(std::unique(orbit.members.begin(), orbit.members.end()), orbit.members.end());
    for (std::size_t m : orbit.members) a.orbit_of_row_[m] = a.orbits_.size();

    ensure(orbit.length() * orbit.stabilizer.size() == a.quotient_.order(),
           "orbit-stabilizer relation fails");
    const Cyclotomic norm = inner_product(a.restrictions_[r], a.restrictions_[r]);
    ensure(norm.is_rational(), "restriction norm is not rational");
    orbit.restriction_norm = norm.to_rational();
    ensure(orbit.restriction_norm == Rational(static_cast<long>(orbit.stabilizer.size())),
           "stabilizer order differs from the restriction norm");
    a.orbits_.push_back(std::move(orbit));
  }
  return a;
}

ClassFunction CosetAnalysis::pi(CosetIndex c) const {
  ClassFunction f = ClassFunction::constant(group_, Cyclotomic());
  for (std::size_t d = 0; d < duals_.size(); ++d) f += lifted_duals_[d] * duals_[d].values[c].conjugate();
  f *= Cyclotomic(ratio(1, static_cast<long>(duals_.size())));
  for (ClassIndex k = 0; k < group_->class_count(); ++k) {
    const bool inside = quotient_.coset_of[group_->classes.representatives[k]] == c;
    ensure(f[k] == Cyclotomic(inside ? 1L : 0L), "pi_q is not the indicator of the coset");
  }
  return f;
}

std::vector<ClassIndex> CosetAnalysis::classes_in_coset(CosetIndex c) const {
  std::vector<ClassIndex> out;
  for (ClassIndex k = 0; k < group_->class_count(); ++k)
    if (quotient_.coset_of[group_->classes.representatives[k]] == c) out.push_back(k);
  return out;
}

bool CosetAnalysis::in_stabilizer_kernel(std::size_t orbit, CosetIndex c) const {
  const Cyclotomic one(1L);
  for (std::size_t d : orbits_[orbit].stabilizer)
    if (!(duals_[d].values[c] == one)) return false;
  return true;
}

std::vector<std::size_t> CosetAnalysis::orbits_nonzero_on_coset(CosetIndex c) const {
  const auto classes = classes_in_coset(c);
  auto nonzero = [&](std::size_t row) {
    return std::any_of(classes.begin(), classes.end(), [&](ClassIndex k) { return !table_[row][k].is_zero(); });
  };
  std::vector<std::size_t> out;
  for (std::size_t o = 0; o < orbits_.size(); ++o) {
    const auto& orbit = orbits_[o];
    const bool hit = nonzero(orbit.representative);
    if (orbit.length() > 1) {
      ensure(nonzero(orbit.members[1]) == hit, "vanishing on a coset depends on the orbit member");
    }
    ensure(in_stabilizer_kernel(o, c) == hit, "kernel criterion disagrees with nonvanishing");
    if (hit) out.push_back(o);
  }
  return out;
}

CosetReport CosetAnalysis::build_matrix(CosetIndex c) const {
  CosetReport rep;
  rep.coset = c;
  rep.label = coset_label(c);
  rep.classes = classes_in_coset(c);
  rep.orbits = orbits_nonzero_on_coset(c);
  ensure(rep.classes.size() == rep.orbits.size(), "#C_q differs from #R_q");

  const auto& sizes = group_->classes.sizes;
  const long order = static_cast<long>(group_->order());
  const std::size_t n = rep.classes.size();
  for (std::size_t o : rep.orbits) {
    const auto& orbit = orbits_[o];
    std::vector<Cyclotomic> vals;
    std::vector<Rational> rads;
    for (ClassIndex k : rep.classes) {
      vals.push_back(table_[orbit.representative][k]);
      rads.push_back(ratio(static_cast<long>(sizes[k] * orbit.length()), order));
    }
    rep.values.push_back(std::move(vals));
    rep.radicands.push_back(std::move(rads));
  }

  rep.gram_exact = true;
  rep.gram.assign(n, std::vector<Cyclotomic>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Cyclotomic s;
      for (std::size_t j = 0; j < n; ++j)
        s += rep.values[a][j] * rep.values[b][j].conjugate() * Rational(static_cast<long>(sizes[rep.classes[j]]));
      const long len = static_cast<long>(orbits_[rep.orbits[a]].length());
      const Cyclotomic expected = a == b ? Cyclotomic(ratio(order, len)) : Cyclotomic();
      rep.gram_exact = rep.gram_exact && s == expected;
      rep.gram[a][b] = std::move(s);
    }
  }
  ensure(rep.gram_exact, "Gram identity for M_q fails");

  const auto m = rep.numeric();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      ComplexApprox s = 0;
      for (std::size_t j = 0; j < n; ++j) s += m[a][j] * std::conj(m[b][j]);
      rep.unitarity_error = std::max(rep.unitarity_error, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  }
  return rep;
}

CosetIndex CosetAnalysis::generator_coset() const {
  if (!quotient_.is_cyclic()) throw HypothesisError("hypothesis violated: the quotient G/N is not cyclic");
  return quotient_.cyclic_factors.empty() ? 0 : quotient_.cyclic_factors.front().first;
}

std::size_t CosetAnalysis::discrete_log(CosetIndex c) const {
  (void)generator_coset();
  return quotient_.cyclic_factors.empty() ? 0 : quotient_.exponents[c][0];
}

ExtendabilityCounts CosetAnalysis::extendability_counts(CosetIndex c) const {
  if (!quotient_.is_cyclic()) throw HypothesisError("hypothesis violated: the quotient G/N is not cyclic");
  const std::size_t index = quotient_.order();
  if (quotient_.coset_order(c) != index) {
    throw HypothesisError("hypothesis violated: coset " + coset_label(c) + " does not generate G/N");
  }

  ExtendabilityCounts counts;
  counts.classes_in_coset = classes_in_coset(c).size();
  counts.nonvanishing_orbits = orbits_nonzero_on_coset(c).size();
  counts.full_length_orbits = static_cast<std::size_t>(
      std::count_if(orbits_.begin(), orbits_.end(), [&](const OrbitRecord& o) { return o.length() == index; }));

  std::size_t irreducible = 0;
  for (const auto& res : restrictions_) {
    if (inner_product(res, res) == Cyclotomic(1L)) ++irreducible;
  }
  ensure(irreducible % index == 0, "irreducible restrictions are not a multiple of the index");
  counts.irreducible_restrictions_per_index = irreducible / index;

  for (const auto& tau : subgroup_table_.rows()) {
    if (std::any_of(restrictions_.begin(), restrictions_.end(), [&](const ClassFunction& r) { return r == tau; }))
      ++counts.extendable_characters;
  }
  ensure(counts.all_equal(), "extendability counts disagree");
  return counts;
}

ExtensionVerdict CosetAnalysis::nontrivial_extension_exists() const {
  if (!quotient_.is_cyclic()) throw HypothesisError("hypothesis violated: the quotient G/N is not cyclic");
  ExtensionVerdict v;
  const Cyclotomic one(1L);
  for (std::size_t t = 0; t < subgroup_table_.size() && !v.extending_character; ++t) {
    const auto& tau = subgroup_table_[t];
    const bool trivial = std::all_of(tau.values().begin(), tau.values().end(), [&](const Cyclotomic& x) { return x == one; });
    if (trivial) continue;
    if (std::any_of(restrictions_.begin(), restrictions_.end(), [&](const ClassFunction& r) { return r == tau; }))
      v.extending_character = t;
  }
  const auto& sizes = group_->classes.sizes;
  for (ClassIndex k = 0; k < sizes.size(); ++k) {
    if (sizes[k] == subgroup_.in_parent.order()) {
      v.class_of_size_n = k;
      break;
    }
  }
  v.exists = v.extending_character.has_value();
  ensure(v.exists == !v.class_of_size_n.has_value(),
         "extension criterion disagrees with the class-size criterion");
  return v;
}

bool CosetAnalysis::monotonicity_holds(CosetIndex c, std::size_t k) const {
  const CosetIndex ck = power_coset(quotient_, c, k);
  const auto r = orbits_nonzero_on_coset(c);
  const auto rk = orbits_nonzero_on_coset(ck);
  return std::includes(rk.begin(), rk.end(), r.begin(), r.end()) &&
         classes_in_coset(c).size() <= classes_in_coset(ck).size();
}

bool CosetAnalysis::cyclic_equivalence_holds(CosetIndex c) const {
  if (!quotient_.is_cyclic() || quotient_.coset_order(c) != quotient_.order()) {
    throw HypothesisError("hypothesis violated: coset " + coset_label(c) + " does not generate a cyclic G/N");
  }
  const auto r = orbits_nonzero_on_coset(c);
  for (std::size_t o = 0; o < orbits_.size(); ++o) {
    const bool in_r = std::binary_search(r.begin(), r.end(), o);
    const bool trivial_stab = orbits_[o].stabilizer.size() == 1;
    const bool irreducible = orbits_[o].restriction_norm == 1;
    if (in_r != trivial_stab || trivial_stab != irreducible) return false;
  }
  return true;
}

std::vector<BasisMember> CosetAnalysis::basis_family() const {
  std::vector<BasisMember> family;
  for (CosetIndex c = 0; c < quotient_.order(); ++c) {
    const ClassFunction indicator = pi(c);
    for (std::size_t o = 0; o < orbits_.size(); ++o) {
      if (!in_stabilizer_kernel(o, c)) continue;
      family.push_back({c, o, indicator * table_[orbits_[o].representative]});
    }
  }
  return family;
}

std::string CosetAnalysis::coset_label(CosetIndex c) const {
  if (c == 0) return "N";
  if (quotient_.is_cyclic()) return "q^" + std::to_string(quotient_.exponents[c][0]);
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < quotient_.exponents[c].size(); ++i) out << (i ? "," : "") << quotient_.exponents[c][i];
  out << ')';
  return out.str();
}

std::optional<CosetIndex> CosetAnalysis::parse_coset_label(const std::string& label) const {
  std::string s;
  for (char ch : label)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') s += ch;
  if (s == "N") return CosetIndex{0};
  if (s.rfind("q^", 0) == 0) s = s.substr(2);
  std::vector<std::size_t> e;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit)) return std::nullopt;
    e.push_back(std::stoul(part));
  }
  if (e.empty() || e.size() > std::max<std::size_t>(1, quotient_.cyclic_factors.size())) return std::nullopt;
  if (quotient_.cyclic_factors.empty()) return CosetIndex{0};
  if (e.size() != quotient_.cyclic_factors.size()) return std::nullopt;
  return quotient_.from_exponents(e);
}

}  // namespace cosetchar
