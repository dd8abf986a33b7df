#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "cosetchar/cyclotomic.hpp"
#include "cosetchar/permutation_group.hpp"

namespace cosetchar {

/// A group together with its conjugacy classes. Class functions and
/// character tables refer to one of these by shared pointer so that values
/// are always interpreted against the same class ordering.
struct GroupContext {
  FiniteGroup group;
  ConjugacyClasses classes;
  std::vector<ClassIndex> inverse_class;  // class of g^-1

  static std::shared_ptr<const GroupContext> make(FiniteGroup g);

  std::size_t order() const { return group.order(); }
  std::size_t class_count() const { return classes.count(); }
  ClassIndex class_of(ElementIndex e) const { return classes.class_of[e]; }
};

using GroupPtr = std::shared_ptr<const GroupContext>;

/// One exact value per conjugacy class.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);

  static ClassFunction constant(GroupPtr group, const Cyclotomic& v);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return values_.size(); }
  const Cyclotomic& operator[](ClassIndex c) const { return values_[c]; }
  Cyclotomic& operator[](ClassIndex c) { return values_[c]; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& at_element(ElementIndex e) const { return values_[group_->class_of(e)]; }

  /// Value at the identity.
  const Cyclotomic& degree() const { return values_.front(); }

  ClassFunction conjugate() const;
  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Cyclotomic& s);

  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Cyclotomic& s) { return a *= s; }
  /// Pointwise (tensor) product.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  void check_same_group(const ClassFunction& o) const;

  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

/// (1/#G) sum over classes of size * f * conj(g). Throws
/// std::invalid_argument if the functions live on different groups.
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g);

/// structure[i][j][k] = #{x in class i : x^-1 z_k in class j} for the fixed
/// representative z_k, i.e. the number of pairs (x, y) in K_i x K_j with xy = z_k.
using ClassConstants = std::vector<std::vector<std::vector<std::uint64_t>>>;
ClassConstants class_constants(const GroupContext& g);

/// Class of (representative of class c)^k. Verified on a second class member.
ClassIndex power_map(const GroupContext& g, ClassIndex c, std::size_t k);

/// The full power map table: result[c][k] for 0 <= k < exponent.
std::vector<std::vector<ClassIndex>> power_map_table(const GroupContext& g);

class CharacterTable {
 public:
  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return rows_.size(); }
  const ClassFunction& operator[](std::size_t i) const { return rows_[i]; }
  const std::vector<ClassFunction>& rows() const { return rows_; }
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  /// Prime used by the modular computation.
  std::uint64_t prime() const { return prime_; }

  /// Index of the row equal to f, if any.
  std::optional<std::size_t> find_row(const ClassFunction& f) const;

  /// Multiplicities <theta, row_i>; throws HypothesisError if any is not a
  /// nonnegative integer.
  std::vector<std::int64_t> decompose_character(const ClassFunction& theta) const;

  friend CharacterTable character_table(const GroupPtr& g);

 private:
  GroupPtr group_;
  std::vector<ClassFunction> rows_;
  std::vector<std::size_t> degrees_;
  std::vector<std::vector<ComplexApprox>> approx_;
  std::uint64_t prime_ = 0;
};

/// Dixon's modular method. Rows are sorted by degree, then by the exact
/// values in class order (see canonical_less). The first orthogonality
/// relation, the column relation and sum of squared degrees = #G are
/// verified exactly before returning.
CharacterTable character_table(const GroupPtr& g);

/// A subgroup H of G regarded as a group in its own right on the same points.
struct EmbeddedSubgroup {
  Subgroup in_parent;
  GroupPtr self;
  std::vector<ElementIndex> to_parent;  // element of self -> element of parent

  static EmbeddedSubgroup make(const FiniteGroup& parent, Subgroup h);
};

/// Restriction of a class function on G to the subgroup, as a class
/// function on its own conjugacy classes.
ClassFunction restrict(const ClassFunction& chi, const EmbeddedSubgroup& h);

}  // namespace cosetchar
