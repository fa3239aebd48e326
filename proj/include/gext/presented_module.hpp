#pragma once

#include <string>
#include <vector>

#include "gext/matrix.hpp"

namespace gext {

/// Finitely presented graded module: the cokernel of `relations`, whose
/// columns are relations among generators carrying integer degrees.
class PresentedModule {
 public:
  PresentedModule() = default;
  /// Throws DimensionMismatch when the relation matrix height differs from the
  /// generator count, InvalidArgument when a relation column mixes degrees.
  PresentedModule(BaseRing base, std::vector<int> generator_degrees, ExactMatrix relations);

  static PresentedModule zero(const BaseRing& base);
  static PresentedModule free(const BaseRing& base, std::vector<int> degrees);
  /// A / (order) on one generator of the given degree.
  static PresentedModule cyclic(const BaseRing& base, const Scalar& order, int degree = 0);

  const BaseRing& base() const { return base_; }
  std::size_t generator_count() const { return degrees_.size(); }
  const std::vector<int>& generator_degrees() const { return degrees_; }
  const ExactMatrix& relations() const { return relations_; }

  /// True iff x is zero in the module (x lies in the span of the relations).
  bool is_zero_class(const Vector& x) const;

 private:
  BaseRing base_;
  std::vector<int> degrees_;
  ExactMatrix relations_;
};

/// Isomorphism type of a finitely presented module: cyclic torsion summands
/// A/(t) with t a non-unit, non-zero ideal generator, plus a free part.
/// Over Z/n each t is a proper divisor of n and free summands are copies of Z/n.
struct ModuleStructure {
  std::vector<Scalar> torsion;
  std::size_t free_rank = 0;

  bool is_zero() const { return torsion.empty() && free_rank == 0; }
  std::string to_string(const BaseRing& base) const;
  friend bool operator==(const ModuleStructure&, const ModuleStructure&) = default;
};

/// Invariant factors of the cokernel, read off the Smith form.
ModuleStructure module_structure(const PresentedModule& m);

/// True iff the cokernel is the zero module (every SNF diagonal entry of the
/// presentation is a unit and there are no free generators).
bool module_is_zero(const PresentedModule& m);

bool is_isomorphic(const PresentedModule& a, const PresentedModule& b);

/// M (x) N over the base: generators g_i (x) h_j with summed degrees,
/// relations (rel(M) (x) id) and (id (x) rel(N)). Throws BaseMismatch.
PresentedModule tensor_modules(const PresentedModule& m, const PresentedModule& n);

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);

/// Presentation of Z / W for submodules W <= Z of a free module, both given by
/// generating columns in the same ambient coordinates. Generators of the
/// result are the columns of `z`, all assigned `degree`. Throws
/// InvalidArgument if some column of `w` is outside the span of `z`.
PresentedModule subquotient(const ExactMatrix& z, const ExactMatrix& w, int degree);

/// Coordinates c with z * c == x for x in span(z), or nullopt.
std::optional<Vector> coordinates_in(const ExactMatrix& z, const Vector& x);

}  // namespace gext
