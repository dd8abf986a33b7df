#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cosetchar/character_table.hpp"
#include "cosetchar/coset_theory.hpp"
#include "cosetchar/cyclotomic.hpp"

namespace cosetchar {

/// A character Theta of G with its multiplicities over Irr(G).
struct Theta {
  ClassFunction values;
  std::vector<std::int64_t> multiplicities;

  /// Throws HypothesisError unless every <values, rho> is a nonnegative integer.
  static Theta from_values(const CharacterTable& table, ClassFunction values);
  /// Throws HypothesisError on negative entries or a length mismatch.
  static Theta from_multiplicities(const CharacterTable& table, std::span<const std::int64_t> mult);

  std::int64_t degree() const;
};

/// Multiset {zeta_n^e : e in exponents} of n-th roots of unity, sorted.
struct RootMultiset {
  std::size_t n = 1;
  std::vector<std::size_t> exponents;

  std::size_t size() const { return exponents.size(); }
  /// sum_k (zeta_n^e_k)^d
  Cyclotomic power_sum(std::size_t d) const;
};

/// Psi_rho(q^(d m_rho)) = 1/(#N m_rho) * sum over g in q^(d m_rho) N of
/// conj(rho(g)) Theta(g), with q the generator of the cyclic quotient.
Cyclotomic psi_power_value(const CosetAnalysis& analysis, const ClassFunction& theta,
                           std::size_t orbit, std::size_t d);

/// Recovers the unique multiset of nonzero values with the given power sums
/// p_1, ..., p_N (zero padding dropped), searching only among n-th roots of
/// unity. Throws HypothesisError if no such multiset exists.
RootMultiset power_sums_to_multiset(std::span<const Cyclotomic> power_sums, std::size_t n);

enum class RootChoice {
  kPrincipal,  // smallest nonnegative argument
  kRotated,    // k-th root multiplied by zeta_m^(k+1)
};

/// An m-th root of each element; every choice is again an n-th root of
/// unity because m divides n.
RootMultiset choose_roots(const RootMultiset& lambdas, std::size_t m,
                          RootChoice choice = RootChoice::kPrincipal);

/// The character of the cyclic quotient with eigenvalues `at_generator` at
/// the generating coset, pulled back to G.
ClassFunction quotient_character(const CosetAnalysis& analysis, const RootMultiset& at_generator);

struct PsiComponent {
  std::size_t orbit = 0;
  std::size_t representative = 0;  // table row rho
  std::size_t m = 1;               // <Res_N rho, Res_N rho>
  std::size_t bound = 0;           // floor(deg Theta / deg rho)
  std::vector<Cyclotomic> power_values;  // Psi(q^(d m)) for d = 1..bound
  RootMultiset lambdas;
  RootMultiset psi_at_q;
  ClassFunction psi;      // Psi_rho on G
  ClassFunction product;  // Psi_rho (x) rho
  bool choice_independent = true;

  std::size_t dimension() const { return lambdas.size(); }
};

/// Theta = sum over orbit representatives of Psi_rho (x) rho. Components
/// with Psi_rho = 0 are omitted. Requires G/N cyclic. The reconstruction
/// sum is checked exactly against Theta.
std::vector<PsiComponent> decompose(const CosetAnalysis& analysis, const Theta& theta);

}  // namespace cosetchar
