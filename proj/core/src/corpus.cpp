#include "cosetchar/corpus.hpp"

#include "cosetchar/errors.hpp"
#include "cosetchar/modular.hpp"

namespace cosetchar::corpus {

namespace {

Permutation cyc(std::size_t degree, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(degree, cycles);
}

GroupSpec make(std::string label, std::size_t degree, std::vector<Permutation> gens,
               std::vector<Permutation> normal) {
  return GroupSpec{std::move(label), degree, std::move(gens), std::move(normal)};
}

}  // namespace

GroupSpec cyclic(std::size_t n) {
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i);
  return make("C" + std::to_string(n), n, {cyc(n, {cycle})}, {});
}

GroupSpec cyclic_with_subgroup(std::size_t n, std::size_t index) {
  if (index == 0 || n % index != 0) throw std::invalid_argument("index must divide n");
  GroupSpec spec = cyclic(n);
  Permutation g = spec.generators.front();
  Permutation h = Permutation::identity(n);
  for (std::size_t i = 0; i < index; ++i) h = g * h;
  spec.normal_generators = {h};
  spec.label = "C" + std::to_string(n) + " > C" + std::to_string(n / index);
  return spec;
}

GroupSpec symmetric3_alternating() {
  return make("S3 > A3", 3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}, {cyc(3, {{0, 1, 2}})});
}

GroupSpec symmetric3_transposition() {
  return make("S3 > <(0 1)>", 3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}, {cyc(3, {{0, 1}})});
}

GroupSpec dihedral8_rotations() {
  return make("D4 > C4", 4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})}, {cyc(4, {{0, 1, 2, 3}})});
}

GroupSpec dihedral8_klein() {
  return make("D4 > V4", 4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})},
              {cyc(4, {{0, 2}, {1, 3}}), cyc(4, {{1, 3}})});
}

namespace {
// Regular representation of Q8: i = (0 1 2 3)(4 5 6 7), j = (0 4 2 6)(1 7 3 5).
Permutation quat_i() { return cyc(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}); }
Permutation quat_j() { return cyc(8, {{0, 4, 2, 6}, {1, 7, 3, 5}}); }
}  // namespace

GroupSpec quaternion_center() {
  return make("Q8 > Z(Q8)", 8, {quat_i(), quat_j()}, {quat_i() * quat_i()});
}

GroupSpec quaternion_cyclic() {
  return make("Q8 > <i>", 8, {quat_i(), quat_j()}, {quat_i()});
}

GroupSpec alternating4_klein() {
  return make("A4 > V4", 4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1}, {2, 3}})},
              {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
}

GroupSpec symmetric4_alternating() {
  return make("S4 > A4", 4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 1}})},
              {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1}, {2, 3}})});
}

GroupSpec frobenius20() {
  // x -> x + 1 and x -> 2x on F_5.
  return make("F5 > C5", 5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 2, 4, 3}})}, {cyc(5, {{0, 1, 2, 3, 4}})});
}

MatrixGroupSpec gl2_sl2(std::uint64_t p) {
  if (p < 3 || !modp::is_prime(p)) throw std::invalid_argument("gl2_sl2 needs an odd prime");
  const auto w = static_cast<std::int64_t>(modp::primitive_root(p));
  MatrixGroupSpec spec;
  spec.label = "GL2(F" + std::to_string(p) + ") > SL2(F" + std::to_string(p) + ")";
  spec.prime = p;
  spec.generators = {{w, 0, 0, 1}, {1, 1, 0, 1}, {1, 0, 1, 1}};
  spec.normal_generators = {{1, 1, 0, 1}, {1, 0, 1, 1}};
  return spec;
}

std::vector<Entry> property_corpus() {
  return {
      {"C6 > C3", cyclic_with_subgroup(6, 2)},
      {"S3 > A3", symmetric3_alternating()},
      {"D4 > C4", dihedral8_rotations()},
      {"D4 > V4", dihedral8_klein()},
      {"Q8 > Z(Q8)", quaternion_center()},
      {"Q8 > <i>", quaternion_cyclic()},
      {"A4 > V4", alternating4_klein()},
      {"S4 > A4", symmetric4_alternating()},
      {"F5 > C5", frobenius20()},
      {"GL2(F3) > SL2(F3)", matrix_to_permutation(gl2_sl2(3))},
  };
}

}  // namespace cosetchar::corpus
