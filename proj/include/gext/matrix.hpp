#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gext/base_ring.hpp"

namespace gext {

/// Dense row-major matrix of canonical scalars over one base ring.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(BaseRing base, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(const BaseRing& base, std::size_t n);
  /// Entries are reduced into canonical form. Throws DimensionMismatch on ragged input.
  static ExactMatrix from_rows(const BaseRing& base, const std::vector<std::vector<long>>& rows);
  static ExactMatrix from_row_vectors(const BaseRing& base, const std::vector<Vector>& rows);
  /// Columns given as vectors of equal length `rows`.
  static ExactMatrix from_columns(const BaseRing& base, std::size_t rows,
                                  const std::vector<Vector>& columns);
  static ExactMatrix diagonal(const BaseRing& base, const Vector& entries);

  const BaseRing& base() const { return base_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores base().reduce(value).
  void set(std::size_t r, std::size_t c, const Scalar& value);
  /// Adds into an entry, keeping canonical form.
  void add_to(std::size_t r, std::size_t c, const Scalar& value);

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> columns() const;
  ExactMatrix transpose() const;
  ExactMatrix select_columns(const std::vector<std::size_t>& indices) const;
  ExactMatrix select_rows(const std::vector<std::size_t>& indices) const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const;
  bool is_diagonal() const;

  Vector apply(const Vector& x) const;

  const std::vector<Scalar>& data() const { return data_; }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);

  std::string to_string() const;

 private:
  BaseRing base_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// [a | b]; both must have the same row count.
ExactMatrix hcat(const ExactMatrix& a, const ExactMatrix& b);
/// [a ; b]; both must have the same column count.
ExactMatrix vcat(const ExactMatrix& a, const ExactMatrix& b);
/// Block-diagonal sum.
ExactMatrix block_diagonal(const ExactMatrix& a, const ExactMatrix& b);
/// Kronecker product a (x) b.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);
/// Removes zero columns.
ExactMatrix drop_zero_columns(const ExactMatrix& m);

}  // namespace gext
