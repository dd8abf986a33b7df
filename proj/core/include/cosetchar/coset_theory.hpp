#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cosetchar/character_table.hpp"
#include "cosetchar/cyclotomic.hpp"
#include "cosetchar/permutation_group.hpp"

namespace cosetchar {

/// A character of the abelian quotient Q. Its value on the i-th cyclic
/// factor generator is zeta_{n_i}^{exponents[i]}.
struct DualCharacter {
  std::vector<std::size_t> exponents;
  std::vector<Cyclotomic> values;  // indexed by coset

  bool is_trivial() const;
};

/// All #Q characters of Q, enumerated with the first exponent varying
/// fastest; index 0 is the trivial character.
std::vector<DualCharacter> dual_group(const AbelianQuotient& q);

/// chi composed with G -> G/N, as a class function on G.
ClassFunction lift_to_group(const DualCharacter& chi, const AbelianQuotient& q, const GroupPtr& g);

/// A Q^-orbit [rho] on Irr(G).
struct OrbitRecord {
  std::vector<std::size_t> members;     // sorted table rows
  std::size_t representative = 0;       // smallest member
  std::vector<std::size_t> stabilizer;  // dual character indices
  Rational restriction_norm;            // <Res_N rho, Res_N rho>

  std::size_t length() const { return members.size(); }
};

/// M_q and its exactness certificate for one coset.
struct CosetReport {
  CosetIndex coset = 0;
  std::string label;
  std::vector<ClassIndex> classes;  // C_q, in class order
  std::vector<std::size_t> orbits;  // R_q, by representative row
  /// values[a][b] = rho_a(g_b) for the orbit representative rho_a.
  std::vector<std::vector<Cyclotomic>> values;
  /// radicands[a][b] = #[g_b] #[rho_a] / #G; the entry is sqrt(radicand) * value.
  std::vector<std::vector<Rational>> radicands;
  /// gram[a][b] = sum_g #[g] rho_a(g) conj(rho_b(g)); must equal delta_ab #G / #[rho_a].
  std::vector<std::vector<Cyclotomic>> gram;
  bool gram_exact = false;
  double unitarity_error = 0.0;  // max |M M^* - I|

  std::size_t size() const { return classes.size(); }
  std::vector<std::vector<ComplexApprox>> numeric() const;
};

/// The five quantities that coincide when G/N is cyclic generated by qN.
struct ExtendabilityCounts {
  std::size_t classes_in_coset = 0;
  std::size_t nonvanishing_orbits = 0;
  std::size_t full_length_orbits = 0;
  std::size_t irreducible_restrictions_per_index = 0;
  std::size_t extendable_characters = 0;

  bool all_equal() const;
};

struct ExtensionVerdict {
  bool exists = false;
  /// Row of Irr(N) of a nontrivial extendable character, when exists.
  std::optional<std::size_t> extending_character;
  /// A class of G of size #N, when no nontrivial character extends.
  std::optional<ClassIndex> class_of_size_n;
};

/// Pairs (q, rho) whose functions sqrt(#[rho]) (pi_q * rho) form an
/// orthonormal basis of class functions on G.
struct BasisMember {
  CosetIndex coset;
  std::size_t orbit;
  ClassFunction function;  // pi_q * rho, without the sqrt(#[rho]) factor
};

/// Coset/character correspondence for a normal subgroup N of G with G/N
/// abelian. Construction computes the character tables of G and N, the
/// dual group, its action on Irr(G) and the orbits; per-coset queries are
/// pure functions of that data.
class CosetAnalysis {
 public:
  /// Throws HypothesisError if N is not normal or G/N is not abelian.
  static CosetAnalysis make(GroupPtr g, Subgroup n);
  static CosetAnalysis make(GroupPtr g, CharacterTable table, Subgroup n);

  const GroupPtr& group() const { return group_; }
  const CharacterTable& table() const { return table_; }
  const EmbeddedSubgroup& subgroup() const { return subgroup_; }
  const CharacterTable& subgroup_table() const { return subgroup_table_; }
  const AbelianQuotient& quotient() const { return quotient_; }
  const std::vector<DualCharacter>& duals() const { return duals_; }
  const std::vector<OrbitRecord>& orbits() const { return orbits_; }
  const ClassFunction& restriction(std::size_t row) const { return restrictions_[row]; }

  std::size_t coset_count() const { return quotient_.order(); }
  std::size_t orbit_of_row(std::size_t row) const { return orbit_of_row_[row]; }

  /// Row index of chi (x) rho.
  std::size_t tensor_action(std::size_t dual, std::size_t row) const { return action_[dual][row]; }

  /// (1/#Q) sum_chi conj(chi(q)) chi, checked to be the indicator of qN.
  ClassFunction pi(CosetIndex c) const;

  std::vector<ClassIndex> classes_in_coset(CosetIndex c) const;
  /// Orbits whose representative is not identically zero on the coset;
  /// cross-checked against the kernel criterion.
  std::vector<std::size_t> orbits_nonzero_on_coset(CosetIndex c) const;
  /// Whether q lies in the common kernel of Stab(rho).
  bool in_stabilizer_kernel(std::size_t orbit, CosetIndex c) const;

  CosetReport build_matrix(CosetIndex c) const;

  bool quotient_is_cyclic() const { return quotient_.is_cyclic(); }
  /// Coset generating a cyclic quotient; throws HypothesisError otherwise.
  CosetIndex generator_coset() const;
  /// j with c = generator^j, for cyclic quotients.
  std::size_t discrete_log(CosetIndex c) const;

  /// Requires a cyclic quotient generated by c (HypothesisError otherwise).
  /// All five counts are computed independently and asserted equal.
  ExtendabilityCounts extendability_counts(CosetIndex c) const;

  /// Computes both sides of "a nontrivial character of N extends to G iff
  /// G has no class of size #N" and asserts they agree.
  ExtensionVerdict nontrivial_extension_exists() const;

  /// R_c contained in R_{c^k} and #C_c <= #C_{c^k}.
  bool monotonicity_holds(CosetIndex c, std::size_t k) const;

  /// For a cyclic quotient generated by c: R_c membership, trivial
  /// stabilizer and irreducible restriction coincide for every orbit.
  bool cyclic_equivalence_holds(CosetIndex c) const;

  std::vector<BasisMember> basis_family() const;

  /// "N", "q^j" for cyclic quotients, "(e1,e2,...)" otherwise.
  std::string coset_label(CosetIndex c) const;
  /// Inverse of coset_label; also accepts a bare power "j" or "e1,e2".
  std::optional<CosetIndex> parse_coset_label(const std::string& label) const;

 private:
  GroupPtr group_;
  CharacterTable table_;
  EmbeddedSubgroup subgroup_;
  CharacterTable subgroup_table_;
  AbelianQuotient quotient_;
  std::vector<DualCharacter> duals_;
  std::vector<ClassFunction> lifted_duals_;
  std::vector<std::vector<std::size_t>> action_;
  std::vector<OrbitRecord> orbits_;
  std::vector<std::size_t> orbit_of_row_;
  std::vector<ClassFunction> restrictions_;
};

}  // namespace cosetchar
