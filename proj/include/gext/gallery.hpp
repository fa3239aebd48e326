#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gext/finite_group.hpp"

namespace gext {

struct AlgebraWithAction {
  GradedAlgebra algebra;
  GroupAction action;
};

class NoIrreducibleFound : public Error {
 public:
  using Error::Error;
};

/// A as a rank-1 algebra over itself.
GradedAlgebra make_base_algebra(const BaseRing& base);

/// prod_{g in G} A with G acting by left translation of coordinates.
AlgebraWithAction make_trivial_galois(const BaseRing& base, const FiniteGroup& group);

/// F_{p^n} on the basis 1, x, ..., x^(n-1) for the first monic irreducible f of
/// degree n (coefficients read as a base-p number), with C_n acting by powers of
/// Frobenius.
AlgebraWithAction make_finite_field_ext(unsigned p, unsigned n);

/// Coefficients c_0..c_n of the modulus picked by make_finite_field_ext.
std::vector<unsigned> first_irreducible(unsigned p, unsigned n);

/// Graded 2x2 matrix units: E11, E22 in degree 0, E12 in degree 2, E21 in degree -2.
GradedAlgebra make_matrix_example(const BaseRing& base);

/// A[x]/(x^m) with deg x = k.
GradedAlgebra make_truncated_poly(const BaseRing& base, std::size_t m, int k);

/// The isomorphism to ordinary 2x2 matrices, by basis image (row-major entry index).
std::vector<std::size_t> matrix_example_entry_map();

/// Names accepted by gallery_instance.
std::vector<std::string> gallery_names();

/// Named fixture: f4, f8, f9, axa, matrix-4.6, truncated, trivial-z4-c2, trivial-f3-c3.
/// Fixtures without a natural group get the trivial action.
AlgebraWithAction gallery_instance(const std::string& name);

}  // namespace gext
