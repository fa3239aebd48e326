#pragma once

#include <optional>
#include <vector>

#include "gext/presented_module.hpp"
#include "gext/tensor_square.hpp"

namespace gext {

/// Omega^1 = I / I^2 with I = ker(mu) in B (x) B, split by total degree.
struct KaehlerModule {
  TensorSquare square;
  /// Total degrees that carry a nonzero piece of I, ascending.
  std::vector<int> degrees;
  /// Per degree: generators of I_q (full tensor coordinates) and of I^2_q.
  std::vector<ExactMatrix> ideal;
  std::vector<ExactMatrix> ideal_squared;
  /// First Omega generator of each degree block.
  std::vector<std::size_t> offsets;
  PresentedModule omega;
};

struct NontrivialityWitness {
  /// Class coordinates in the Omega presentation.
  Vector element;
  /// Representative in B (x) B.
  Vector tensor;
  int degree = 0;
  /// Basis index i when the witness is d(e_i).
  std::optional<std::size_t> differential_of;
};

/// Homogeneous generators of ker(mu), as columns in tensor coordinates.
ExactMatrix augmentation_ideal(const GradedAlgebra& b);

KaehlerModule kaehler_module(const GradedAlgebra& b);

/// Omega coordinates of t in I. Throws InvalidArgument if t is not in I.
Vector kaehler_class(const KaehlerModule& k, const Vector& t);

bool is_zero_class(const KaehlerModule& k, const Vector& cls);

/// b (x) 1 - 1 (x) b.
Vector derivation_tensor(const GradedAlgebra& b, const Vector& x);

/// Class of d(x) in Omega.
Vector universal_derivation(const KaehlerModule& k, const Vector& x);

/// The tensor d(uv) - u.dv - v.du; it lies in I^2.
Vector leibniz_defect(const GradedAlgebra& b, const Vector& u, const Vector& v);

std::optional<NontrivialityWitness> hh1_nontrivial(const KaehlerModule& k);
std::optional<NontrivialityWitness> hh1_nontrivial(const GradedAlgebra& b);

/// b -> b . w is an isomorphism B -> Omega (w a class representative in I).
bool is_free_rank_one_on(const KaehlerModule& k, const Vector& w);

}  // namespace gext
