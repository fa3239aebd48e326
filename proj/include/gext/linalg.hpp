#pragma once

#include <cstddef>
#include <optional>

#include "gext/matrix.hpp"

namespace gext {

/// u * m * v == d with u, v invertible over the base ring and d diagonal.
///
/// Over Z the diagonal is non-negative with d1 | d2 | ... ; over Z/n every
/// diagonal entry is a divisor of n (stored as its residue, so n itself reads
/// as 0) and the chain d1 | d2 | ... holds with zeros last. Over a field this
/// is the rank normal form.
struct SmithForm {
  ExactMatrix u;
  ExactMatrix d;
  ExactMatrix v;
  /// Number of nonzero diagonal entries.
  std::size_t rank = 0;

  Vector diagonal() const;
};

SmithForm smith_normal_form(const ExactMatrix& m);

/// The same reduction without materialising u: `extra` (same height as m) is
/// carried through the row operations and comes back as u * extra.
struct SmithReduction {
  ExactMatrix d;
  ExactMatrix transformed;
  ExactMatrix v;
  std::size_t rank = 0;
};
SmithReduction smith_reduce(const ExactMatrix& m, const ExactMatrix& extra);

/// Some x with m * x == b, or nullopt when the system is inconsistent.
/// Throws DimensionMismatch when b does not match m's row count.
std::optional<Vector> solve(const ExactMatrix& m, const Vector& b);

/// Column-by-column solve of m * x == b sharing one reduction; nullopt when
/// any column is inconsistent.
std::optional<ExactMatrix> solve_columns(const ExactMatrix& m, const ExactMatrix& b);

/// Columns generating {x : m * x == 0}. Over Z/n this includes the torsion
/// generators (n / d_i) * v_i. The generator set is empty when m is injective.
ExactMatrix kernel_basis(const ExactMatrix& m);

/// Inverse of a square matrix, or nullopt when it is not invertible.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// True iff every SNF diagonal entry of a square matrix is a unit.
bool is_invertible(const ExactMatrix& m);

/// True iff x lies in the base-ring span of the columns of gens.
bool in_column_span(const ExactMatrix& gens, const Vector& x);

/// True iff every column of a lies in the column span of b.
bool column_span_contained(const ExactMatrix& a, const ExactMatrix& b);

/// Routes that reduce Z/n problems to Z by adjoining n * identity columns.
/// They share no code with the modular elimination path and serve as an
/// independent cross-check of it. Over Z and F_p inputs they defer to the
/// primary routines only for the integer Smith form itself.
namespace lifted {
std::optional<Vector> solve(const ExactMatrix& m, const Vector& b);
ExactMatrix kernel_basis(const ExactMatrix& m);
}  // namespace lifted

}  // namespace gext
