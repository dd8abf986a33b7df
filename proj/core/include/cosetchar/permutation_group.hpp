#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace cosetchar {

using Point = std::uint32_t;
using ElementIndex = std::size_t;
using ClassIndex = std::size_t;
using CosetIndex = std::size_t;

/// A permutation of {0, ..., degree-1} stored as its image array.
///
/// Composition is right-to-left throughout the project:
/// (p * q)(i) = p(q(i)), i.e. q is applied first.
class Permutation {
 public:
  Permutation() = default;

  /// Throws ParseError if `images` is not a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// result(i) = p(q(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// A fully enumerated permutation group. Element 0 is the identity and the
/// remaining elements appear in breadth-first insertion order.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultOrderLimit = 20000;

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(ElementIndex i) const { return elements_[i]; }
  const std::vector<ElementIndex>& generators() const { return generators_; }

  std::optional<ElementIndex> find(const Permutation& p) const;
  /// Like find() but throws HypothesisError if p is not in the group.
  ElementIndex index_of(const Permutation& p) const;

  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const { return inverses_[a]; }
  ElementIndex power(ElementIndex a, std::size_t k) const;
  std::size_t element_order(ElementIndex a) const { return orders_[a]; }
  /// Least common multiple of the element orders.
  std::size_t exponent() const { return exponent_; }

  bool is_abelian() const;

  friend FiniteGroup generate_group(std::size_t degree,
                                    std::span<const Permutation> generators,
                                    std::size_t order_limit);

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementIndex, PermutationHash> index_;
  std::vector<ElementIndex> generators_;
  std::vector<ElementIndex> inverses_;
  std::vector<std::size_t> orders_;
  std::size_t exponent_ = 1;
};

/// Breadth-first closure of the generators. Throws HypothesisError when the
/// order exceeds `order_limit`; an empty generator list gives the trivial group.
FiniteGroup generate_group(std::size_t degree,
                           std::span<const Permutation> generators,
                           std::size_t order_limit = FiniteGroup::kDefaultOrderLimit);

struct ConjugacyClasses {
  std::vector<ClassIndex> class_of;            // element index -> class
  std::vector<ElementIndex> representatives;   // smallest element index in class
  std::vector<std::size_t> sizes;
  std::vector<std::vector<ElementIndex>> members;

  std::size_t count() const { return sizes.size(); }
};

/// Classes sorted by (element order, class size, representative index);
/// class 0 is always {identity}.
ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

struct Subgroup {
  std::vector<ElementIndex> members;     // sorted
  std::vector<ElementIndex> generators;  // as given

  std::size_t order() const { return members.size(); }
  bool contains(ElementIndex e) const;
};

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const ElementIndex> elems);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// G/N for a normal N with abelian quotient, with a cyclic decomposition.
struct AbelianQuotient {
  std::vector<CosetIndex> coset_of;                 // element -> coset
  std::vector<ElementIndex> coset_reps;             // coset 0 is N itself
  std::vector<std::vector<ElementIndex>> coset_members;
  std::vector<std::vector<CosetIndex>> mult;        // coset x coset -> coset
  /// (generator coset, order) pairs; orders are non-increasing.
  std::vector<std::pair<CosetIndex, std::size_t>> cyclic_factors;
  /// exponents[c][i]: coset c = prod_i gen_i^exponents[c][i].
  std::vector<std::vector<std::size_t>> exponents;

  std::size_t order() const { return coset_reps.size(); }
  std::size_t subgroup_order() const { return coset_members.empty() ? 0 : coset_members[0].size(); }
  bool is_cyclic() const { return cyclic_factors.size() <= 1; }
  std::size_t coset_order(CosetIndex c) const;
  CosetIndex inverse(CosetIndex c) const;
  /// Looks up the coset with the given exponent vector (reduced mod factor orders).
  CosetIndex from_exponents(std::span<const std::size_t> e) const;
};

/// Throws HypothesisError naming the failed hypothesis when N is not normal
/// or G/N is not abelian.
AbelianQuotient quotient(const FiniteGroup& g, const Subgroup& n);

CosetIndex power_coset(const AbelianQuotient& q, CosetIndex c, std::size_t k);

}  // namespace cosetchar
