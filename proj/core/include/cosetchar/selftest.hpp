#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cosetchar/coset_theory.hpp"

namespace cosetchar {

struct CheckResult {
  std::string subject;  // e.g. "F5 > C5"
  std::string check;    // e.g. "gram identity [q^1]"
  bool passed = false;
  std::string detail;   // failure message, empty on success
};

struct SelftestSummary {
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

/// Every structural identity of the coset correspondence on one (G, N):
/// per-coset #C_q = #R_q, exact Gram identities, pi_q as indicator, the
/// kernel criterion, monotonicity under powers; orbit stabilizers against
/// restriction norms; for cyclic quotients the three-way equivalence, the
/// five equal counts and the class-size extension criterion; the
/// orthonormal basis family; and `inversion_samples` random inversion
/// round trips (cyclic quotients only).
std::vector<CheckResult> run_property_checks(const std::string& subject, const CosetAnalysis& analysis,
                                             std::size_t inversion_samples = 10, unsigned seed = 1);

/// The property suite over the built-in corpus.
SelftestSummary run_selftest(std::size_t inversion_samples = 10);

}  // namespace cosetchar
