#pragma once

#include <optional>
#include <vector>

#include "gext/finite_group.hpp"
#include "gext/tensor_square.hpp"

namespace gext {

/// Evidence for (or against) B being G-Galois over the base ring.
struct GaloisCertificate {
  /// Columns generate the fixed submodule B^G.
  ExactMatrix fixed_generators;
  /// B^G equals the span of the unit.
  bool fixed_ring_ok = false;
  /// h : B (x) B -> prod_g B, block g in group-table order.
  ExactMatrix h;
  /// Smith diagonal of h (all units iff h is invertible).
  Vector h_invariants;
  /// h^-1 when h is invertible; h * h_inverse == I is rechecked on construction.
  std::optional<ExactMatrix> h_inverse;
  bool h_iso_ok = false;
  bool action_valid = true;
  bool faithful_required = true;
  bool verdict = false;
};

/// Pairs (x_i, y_i) from the preimage sum x_i (x) y_i of (1, 0, ..., 0) under h,
/// with phi_i(z) = tr(z y_i) read as a base-ring scalar.
struct DualBasisCertificate {
  std::vector<Vector> x;
  std::vector<Vector> y;
  /// Preimage of (1, 0, ..., 0) in tensor-square coordinates.
  Vector preimage;
  /// phi[i][z] = phi_i(e_z).
  std::vector<Vector> phi;
  /// residual[z] = e_z - sum_i phi_i(e_z) x_i; all zero on success.
  std::vector<Vector> residuals;
  bool residuals_zero = false;
};

class NotGalois : public Error {
 public:
  using Error::Error;
};

class NoPreimage : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

/// Generators of the intersection of ker(matrix(g) - id) over g.
ExactMatrix fixed_subring(const GroupAction& action);

/// The block matrix of x (x) y -> (x * g(y))_g. Throws NotCommutative.
ExactMatrix h_map(const GroupAction& action);

/// Decides G-Galois: B^G = A (unit span) and h invertible. Throws NotCommutative.
GaloisCertificate is_galois(const GroupAction& action);

/// sum_g g(y).
Vector trace(const GroupAction& action, const Vector& y);

/// Scalar a with a * 1 == v, when v lies in the unit span.
std::optional<Scalar> unit_coefficient(const GradedAlgebra& algebra, const Vector& v);

/// Throws NotGalois when the action is not Galois; NoPreimage if h fails to hit
/// (1, 0, ..., 0) despite a positive verdict.
DualBasisCertificate dual_basis(const GroupAction& action);

/// Block index carrying the identity element's coordinate.
inline std::size_t identity_block(const GroupAction& action) { return action.group().identity(); }

}  // namespace gext
