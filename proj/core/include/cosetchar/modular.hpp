#pragma once

// Arithmetic and linear algebra over the prime field F_p, p < 2^31.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cosetchar::modp {

using Word = std::uint64_t;
using Vector = std::vector<Word>;
using Matrix = std::vector<Vector>;  // row-major

bool is_prime(Word n);
Word pow_mod(Word base, Word exp, Word p);
Word inv_mod(Word a, Word p);
/// Smallest generator of the multiplicative group of F_p.
Word primitive_root(Word p);

/// Smallest prime p >= lower_bound with p = 1 (mod modulus). Throws
/// HypothesisError if none exists below `search_bound`.
Word prime_congruent_to_one(Word lower_bound, Word modulus, Word search_bound);

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, Word p);

/// Basis of {x : m x = 0} for an r x c matrix.
std::vector<Vector> nullspace(Matrix m, std::size_t cols, Word p);

/// Characteristic polynomial det(xI - m), constant term first.
Vector characteristic_polynomial(Matrix m, Word p);

Word eval_poly(const Vector& poly, Word x, Word p);

}  // namespace cosetchar::modp
