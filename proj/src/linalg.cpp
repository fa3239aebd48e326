#include "gext/linalg.hpp"

#include "gext/errors.hpp"

namespace gext {

std::optional<ExactMatrix> solve_columns(const ExactMatrix& m, const ExactMatrix& b) {
  if (b.rows() != m.rows()) {
    throw DimensionMismatch("solve: right-hand side has length " + std::to_string(b.rows()) +
                            ", matrix has " + std::to_string(m.rows()) + " rows");
  }
  const BaseRing& ring = m.base();
  const SmithReduction snf = smith_reduce(m, b);
  ExactMatrix y(ring, m.cols(), b.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const bool has_pivot = i < m.cols() && snf.d(i, i) != 0;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Scalar& c = snf.transformed(i, j);
      if (!has_pivot) {
        if (c != 0) return std::nullopt;
        continue;
      }
      auto q = ring.divide(c, snf.d(i, i));
      if (!q) return std::nullopt;
      y.set(i, j, *q);
    }
  }
  return snf.v * y;
}

std::optional<Vector> solve(const ExactMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) {
    throw DimensionMismatch("solve: right-hand side has length " + std::to_string(b.size()) +
                            ", matrix has " + std::to_string(m.rows()) + " rows");
  }
  auto x = solve_columns(m, ExactMatrix::from_columns(m.base(), m.rows(), {reduce(m.base(), b)}));
  if (!x) return std::nullopt;
  return x->column(0);
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
  const BaseRing& ring = m.base();
  const SmithReduction snf = smith_reduce(m, ExactMatrix(ring, m.rows(), 0));
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const bool has_diag = j < m.rows();
    const Scalar dj = has_diag ? snf.d(j, j) : Scalar(0);
    Vector col = snf.v.column(j);
    if (dj == 0) {
      gens.push_back(std::move(col));
      continue;
    }
    if (ring.is_integers() || ring.is_unit(dj)) continue;
    // Over Z/n the diagonal entry is a proper divisor g of n; (n/g) * v_j is killed.
    const Scalar annihilator = Scalar(ring.modulus()) / dj;
    for (auto& x : col) x = ring.mul(x, annihilator);
    gens.push_back(std::move(col));
  }
  return drop_zero_columns(ExactMatrix::from_columns(ring, m.cols(), gens));
}

bool is_invertible(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const SmithReduction snf = smith_reduce(m, ExactMatrix(m.base(), m.rows(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m.base().is_unit(snf.d(i, i))) return false;
  }
  return true;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const BaseRing& ring = m.base();
  const SmithForm snf = smith_normal_form(m);
  Vector dinv(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto inv = ring.inverse(snf.d(i, i));
    if (!inv) return std::nullopt;
    dinv[i] = *inv;
  }
  // m = u^-1 d v^-1, so m^-1 = v d^-1 u.
  return snf.v * ExactMatrix::diagonal(ring, dinv) * snf.u;
}

bool in_column_span(const ExactMatrix& gens, const Vector& x) {
  if (is_zero(x)) return true;
  if (gens.cols() == 0) return false;
  return solve(gens, x).has_value();
}

bool column_span_contained(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("column_span_contained: row counts differ");
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!in_column_span(b, a.column(j))) return false;
  }
  return true;
}

namespace lifted {

namespace {

ExactMatrix lift_with_modulus_columns(const ExactMatrix& m) {
  const BaseRing z = BaseRing::integers();
  const std::size_t n = m.base().modulus();
  ExactMatrix out(z, m.rows(), m.cols() + m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m(i, j));
    out.set(i, m.cols() + i, Scalar(static_cast<unsigned long>(n)));
  }
  return out;
}

}  // namespace

std::optional<Vector> solve(const ExactMatrix& m, const Vector& b) {
  if (!m.base().is_finite()) return gext::solve(m, b);
  if (b.size() != m.rows()) throw DimensionMismatch("lifted::solve: right-hand side length");
  const ExactMatrix lifted = lift_with_modulus_columns(m);
  auto x = gext::solve(lifted, reduce(m.base(), b));
  if (!x) return std::nullopt;
  Vector out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out[j] = m.base().reduce((*x)[j]);
  return out;
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
  if (!m.base().is_finite()) return gext::kernel_basis(m);
  const ExactMatrix k = gext::kernel_basis(lift_with_modulus_columns(m));
  ExactMatrix projected(m.base(), m.cols(), k.cols());
  for (std::size_t j = 0; j < k.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) projected.set(i, j, k(i, j));
  return drop_zero_columns(projected);
}

}  // namespace lifted

}  // namespace gext
