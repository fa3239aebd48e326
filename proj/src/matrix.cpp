#include "gext/matrix.hpp"

#include <sstream>

#include "gext/errors.hpp"
#include "gext/kernels/modrow.hpp"

namespace gext {

namespace {

void require_same_base(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
  if (!(a.base() == b.base())) {
    throw BaseMismatch(std::string(what) + ": " + a.base().name() + " vs " + b.base().name());
  }
}

// Modular product through the row kernels: row i of C accumulates a(i,k) * row k of B.
ExactMatrix multiply_modular(const ExactMatrix& a, const ExactMatrix& b) {
  const auto m = a.base().modulus();
  std::vector<kernels::Residue> bw(b.rows() * b.cols());
  for (std::size_t i = 0; i < bw.size(); ++i) bw[i] = b.data()[i].get_ui();
  std::vector<kernels::Residue> acc(b.cols());
  ExactMatrix c(a.base(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0u);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto f = static_cast<kernels::Residue>(a(i, k).get_ui());
      if (f == 0) continue;
      kernels::axpy_mod(acc, std::span<const kernels::Residue>(bw.data() + k * b.cols(), b.cols()),
                        f, m);
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c.set(i, j, Scalar(static_cast<unsigned long>(acc[j])));
  }
  return c;
}

}  // namespace

ExactMatrix::ExactMatrix(BaseRing base, std::size_t rows, std::size_t cols)
    : base_(base), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

ExactMatrix ExactMatrix::identity(const BaseRing& base, std::size_t n) {
  ExactMatrix m(base, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

ExactMatrix ExactMatrix::from_rows(const BaseRing& base,
                                   const std::vector<std::vector<long>>& rows) {
  std::vector<Vector> converted;
  converted.reserve(rows.size());
  for (const auto& r : rows) {
    Vector v;
    v.reserve(r.size());
    for (long x : r) v.emplace_back(x);
    converted.push_back(std::move(v));
  }
  return from_row_vectors(base, converted);
}

ExactMatrix ExactMatrix::from_row_vectors(const BaseRing& base, const std::vector<Vector>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(base, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw DimensionMismatch("ragged rows in matrix literal");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

ExactMatrix ExactMatrix::from_columns(const BaseRing& base, std::size_t rows,
                                      const std::vector<Vector>& columns) {
  ExactMatrix m(base, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
  }
  return m;
}

ExactMatrix ExactMatrix::diagonal(const BaseRing& base, const Vector& entries) {
  ExactMatrix m(base, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
  return m;
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  data_[r * cols_ + c] = base_.reduce(value);
}

void ExactMatrix::add_to(std::size_t r, std::size_t c, const Scalar& value) {
  auto& slot = data_[r * cols_ + c];
  slot = base_.reduce(slot + value);
}

Vector ExactMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector ExactMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<Vector> ExactMatrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(base_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::select_columns(const std::vector<std::size_t>& indices) const {
  ExactMatrix out(base_, rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < indices.size(); ++k)
      out.data_[i * indices.size() + k] = (*this)(i, indices[k]);
  return out;
}

ExactMatrix ExactMatrix::select_rows(const std::vector<std::size_t>& indices) const {
  ExactMatrix out(base_, indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) out.data_[k * cols_ + j] = (*this)(indices[k], j);
  return out;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  ExactMatrix out(base_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.data_[i * nc + j] = (*this)(r0 + i, c0 + j);
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool ExactMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

Vector ExactMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) {
    throw DimensionMismatch("apply: vector of length " + std::to_string(x.size()) +
                            " against " + std::to_string(cols_) + " columns");
  }
  Vector y(rows_, Scalar(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc(0);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (x[j] != 0) acc += (*this)(i, j) * x[j];
    }
    y[i] = base_.reduce(acc);
  }
  return y;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.base_ == b.base_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_base(a, b, "matrix product");
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matrix product " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  if (a.base().is_finite()) return multiply_modular(a, b);
  ExactMatrix c(a.base(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& f = a(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.data_[i * b.cols() + j] += f * b(k, j);
    }
  }
  return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_base(a, b, "matrix sum");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.base().reduce(a.data_[i] + b.data_[i]);
  return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_base(a, b, "matrix difference");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.base().reduce(a.data_[i] - b.data_[i]);
  return c;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

ExactMatrix hcat(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_base(a, b, "hcat");
  if (a.rows() != b.rows()) throw DimensionMismatch("hcat: row counts differ");
  ExactMatrix out(a.base(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b(i, j));
  }
  return out;
}

ExactMatrix vcat(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_base(a, b, "vcat");
  if (a.cols() != b.cols()) throw DimensionMismatch("vcat: column counts differ");
  ExactMatrix out(a.base(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b(i, j));
  return out;
}

ExactMatrix block_diagonal(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_base(a, b, "block_diagonal");
  ExactMatrix out(a.base(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b(i, j));
  return out;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_base(a, b, "kronecker");
  ExactMatrix out(a.base(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.set(i * b.rows() + k, j * b.cols() + l, a(i, j) * b(k, l));
    }
  return out;
}

ExactMatrix drop_zero_columns(const ExactMatrix& m) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) != 0) {
        keep.push_back(j);
        break;
      }
    }
  }
  return m.select_columns(keep);
}

}  // namespace gext
