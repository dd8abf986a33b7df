#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cosetchar/character_table.hpp"
#include "cosetchar/cyclotomic.hpp"
#include "cosetchar/permutation_group.hpp"

namespace cosetchar {

/// A permutation group G with generators of a subgroup N.
struct GroupSpec {
  std::string label;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> normal_generators;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Row-major 2x2 matrix over F_p: {a, b, c, d} = [[a, b], [c, d]].
using Matrix2 = std::array<std::int64_t, 4>;

struct MatrixGroupSpec {
  std::string label;
  std::uint64_t prime = 2;
  std::vector<Matrix2> generators;
  std::vector<Matrix2> normal_generators;

  friend bool operator==(const MatrixGroupSpec&, const MatrixGroupSpec&) = default;
};

using AnyGroupSpec = std::variant<GroupSpec, MatrixGroupSpec>;

/// Parses the line-oriented format or, if the first non-blank character is
/// '{', the JSON format. Throws ParseError with a line/field diagnostic.
AnyGroupSpec parse_group_text(std::string_view text);
AnyGroupSpec parse_group_file(const std::filesystem::path& path);

/// Canonical line-oriented rendering; parse_group_text inverts it.
std::string format_group_spec(const AnyGroupSpec& spec);

/// Action of the matrices on the p^2 - 1 nonzero column vectors of F_p^2,
/// enumerated lexicographically: (0,1), (0,2), ..., (1,0), (1,1), ...
GroupSpec matrix_to_permutation(const MatrixGroupSpec& spec);
Permutation matrix_permutation(const Matrix2& m, std::uint64_t p);

GroupSpec to_permutation_spec(const AnyGroupSpec& spec);

/// The enumerated group and the subgroup generated by the N generators.
struct Problem {
  std::string label;
  GroupPtr group;
  Subgroup normal;
};

/// Throws HypothesisError if an N generator is not in G or the order limit
/// is exceeded.
Problem build_problem(const GroupSpec& spec, std::size_t order_limit = FiniteGroup::kDefaultOrderLimit);

/// Input for the inversion: either exact values per conjugacy class (in
/// the canonical class order) or multiplicities per character table row.
struct ThetaSpec {
  enum class Kind { kValues, kMultiplicities };
  Kind kind = Kind::kMultiplicities;
  std::vector<Cyclotomic> values;
  std::vector<std::int64_t> multiplicities;
};

ThetaSpec parse_theta_text(std::string_view text);
ThetaSpec parse_theta_file(const std::filesystem::path& path);

/// Parses sums of terms like "3", "-1/2", "z4", "-2*z5^3".
Cyclotomic parse_cyclotomic(std::string_view text);

}  // namespace cosetchar
