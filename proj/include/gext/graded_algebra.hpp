#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "gext/errors.hpp"
#include "gext/matrix.hpp"

namespace gext {

/// One nonzero structure constant: e_i * e_j has coefficient `value` on e_k.
struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Scalar value;
};

/// Unvalidated algebra data as read from a document or built by a generator.
struct AlgebraDescription {
  BaseRing base;
  std::vector<std::string> names;
  std::vector<int> degrees;
  Vector unit;
  std::vector<StructureConstant> products;
  bool commutative = true;
};

enum class AlgebraLaw { Shape, Unit, Associativity, Grading, Commutativity };

std::string law_name(AlgebraLaw law);

struct AxiomFailure {
  AlgebraLaw law;
  /// Offending basis indices (unused trailing slots are zero).
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::string detail;
};

class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(std::vector<AxiomFailure> failures);
  const std::vector<AxiomFailure>& failures() const { return failures_; }

 private:
  std::vector<AxiomFailure> failures_;
};

class AlgebraElement;

/// Graded algebra, finite free over its base ring, given by structure
/// constants on a degree-tagged basis. Cheap to copy: the validated data is
/// shared and immutable.
class GradedAlgebra {
 public:
  /// Checks unit, associativity, grading and (if flagged) commutativity on all
  /// basis triples. Throws AxiomViolation listing every failure found.
  static GradedAlgebra validate(const AlgebraDescription& description);

  /// All failures, without throwing. Empty means valid.
  static std::vector<AxiomFailure> check_axioms(const AlgebraDescription& description);

  const BaseRing& base() const;
  std::size_t rank() const;
  const std::vector<int>& degrees() const;
  int degree(std::size_t i) const { return degrees()[i]; }
  const std::vector<std::string>& names() const;
  bool commutative() const;

  /// Coefficient of e_k in e_i * e_j.
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// Nonzero (k, c) with e_i * e_j = sum c e_k.
  const std::vector<std::pair<std::size_t, Scalar>>& product_terms(std::size_t i,
                                                                   std::size_t j) const;

  const Vector& unit_coords() const;
  AlgebraElement unit() const;
  AlgebraElement basis(std::size_t i) const;
  AlgebraElement element(Vector coords) const;

  /// Bilinear product on coordinate vectors.
  Vector multiply(const Vector& u, const Vector& v) const;
  AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) const;

  /// Matrix of x -> b * x (column j holds b * e_j).
  ExactMatrix left_multiplication(const Vector& b) const;
  /// Matrix of x -> x * b.
  ExactMatrix right_multiplication(const Vector& b) const;

  /// Distinct basis degrees, ascending.
  std::vector<int> distinct_degrees() const;
  /// Basis indices with the given degree.
  std::vector<std::size_t> indices_of_degree(int d) const;
  bool is_concentrated_in_degree_zero() const;
  /// All basis degrees >= 0.
  bool is_connective() const;

  AlgebraDescription description() const;

  /// Identity of the shared data; elements must share their parent.
  bool same_as(const GradedAlgebra& other) const { return data_ == other.data_; }

 private:
  struct Data;
  explicit GradedAlgebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Coordinate vector tied to its parent algebra.
class AlgebraElement {
 public:
  AlgebraElement(GradedAlgebra parent, Vector coords);

  const GradedAlgebra& parent() const { return parent_; }
  const Vector& coords() const { return coords_; }
  bool is_zero() const { return gext::is_zero(coords_); }
  /// True iff every nonzero coordinate sits on a basis element of degree d.
  bool is_homogeneous_of_degree(int d) const;

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  GradedAlgebra parent_;
  Vector coords_;
};

/// Parent-checked product. Throws ParentMismatch.
AlgebraElement multiply(const GradedAlgebra& algebra, const AlgebraElement& u,
                        const AlgebraElement& v);

/// Alias for GradedAlgebra::validate.
inline GradedAlgebra validate_algebra(const AlgebraDescription& d) {
  return GradedAlgebra::validate(d);
}

}  // namespace gext
