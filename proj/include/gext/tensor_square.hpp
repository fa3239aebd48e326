#pragma once

#include <cstddef>
#include <utility>

#include "gext/graded_algebra.hpp"

namespace gext {

/// B (x)_A B, or B (x)_A B^op when `op_twisted`, on the basis e_i (x) e_j
/// (coordinate index i * n + j) with bidegree (d_i, d_j).
///
/// Products: (x (x) y)(x' (x) y') = xx' (x) yy', or xx' (x) y'y when twisted.
class TensorSquare {
 public:
  TensorSquare(GradedAlgebra algebra, bool op_twisted);

  const GradedAlgebra& algebra() const { return algebra_; }
  bool op_twisted() const { return op_twisted_; }
  const BaseRing& base() const { return algebra_.base(); }
  std::size_t factor_rank() const { return algebra_.rank(); }
  std::size_t rank() const { return algebra_.rank() * algebra_.rank(); }

  std::size_t index(std::size_t i, std::size_t j) const { return i * factor_rank() + j; }
  std::pair<std::size_t, std::size_t> pair(std::size_t index) const {
    return {index / factor_rank(), index % factor_rank()};
  }
  std::pair<int, int> bidegree(std::size_t index) const;
  int total_degree(std::size_t index) const;

  /// Coordinates of x (x) y.
  Vector pure(const Vector& x, const Vector& y) const;
  Vector one() const { return pure(algebra_.unit_coords(), algebra_.unit_coords()); }

  Vector multiply(const Vector& s, const Vector& t) const;

  /// b . t : left action of b on the first factor, x (x) y -> bx (x) y.
  Vector left_action(const Vector& b, const Vector& t) const;
  /// t . b : bimodule right action on the second factor, x (x) y -> x (x) yb.
  Vector right_action(const Vector& t, const Vector& b) const;

  /// Multiplication map to B as an n x n^2 matrix: column (i,j) is e_i e_j.
  const ExactMatrix& mu() const { return mu_; }

  /// Tensor-square indices whose total degree equals d.
  std::vector<std::size_t> indices_of_total_degree(int d) const;
  std::vector<int> distinct_total_degrees() const;

 private:
  GradedAlgebra algebra_;
  bool op_twisted_;
  ExactMatrix mu_;
};

/// Free-function form of the constructor.
inline TensorSquare tensor_square(const GradedAlgebra& b, bool op_twisted) {
  return TensorSquare(b, op_twisted);
}

}  // namespace gext
