#pragma once

#include <stdexcept>
#include <string>

namespace cosetchar {

/// Malformed input: bad file syntax, invalid permutation, singular matrix.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical hypothesis of the input is violated (N not normal,
/// G/N not abelian or not cyclic, Θ not a character, order limit hit, ...).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold for valid input failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace cosetchar
