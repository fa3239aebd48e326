#include "gext/tensor_square.hpp"

#include <set>

namespace gext {

TensorSquare::TensorSquare(GradedAlgebra algebra, bool op_twisted)
    : algebra_(std::move(algebra)),
      op_twisted_(op_twisted),
      mu_(algebra_.base(), algebra_.rank(), algebra_.rank() * algebra_.rank()) {
  const std::size_t n = algebra_.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : algebra_.product_terms(i, j)) mu_.set(k, index(i, j), c);
}

std::pair<int, int> TensorSquare::bidegree(std::size_t idx) const {
  const auto [i, j] = pair(idx);
  return {algebra_.degree(i), algebra_.degree(j)};
}

int TensorSquare::total_degree(std::size_t idx) const {
  const auto [a, b] = bidegree(idx);
  return a + b;
}

Vector TensorSquare::pure(const Vector& x, const Vector& y) const {
  const std::size_t n = factor_rank();
  Vector out(n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out[index(i, j)] = x[i] * y[j];
  }
  return reduce(base(), std::move(out));
}

Vector TensorSquare::multiply(const Vector& s, const Vector& t) const {
  const std::size_t n = factor_rank();
  Vector out(n * n, Scalar(0));
  // Gather the supports once; elements in practice are sparse.
  std::vector<std::pair<std::size_t, std::size_t>> s_support, t_support;
  for (std::size_t a = 0; a < n * n; ++a) {
    if (s[a] != 0) s_support.push_back(pair(a));
    if (t[a] != 0) t_support.push_back(pair(a));
  }
  for (const auto& [i, j] : s_support) {
    const Scalar& sc = s[index(i, j)];
    for (const auto& [k, l] : t_support) {
      const Scalar coeff = sc * t[index(k, l)];
      const auto& first = algebra_.product_terms(i, k);
      if (first.empty()) continue;
      const auto& second = op_twisted_ ? algebra_.product_terms(l, j) : algebra_.product_terms(j, l);
      for (const auto& [a, ca] : first)
        for (const auto& [b, cb] : second) out[index(a, b)] += coeff * ca * cb;
    }
  }
  return reduce(base(), std::move(out));
}

Vector TensorSquare::left_action(const Vector& b, const Vector& t) const {
  const std::size_t n = factor_rank();
  Vector out(n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& c = t[index(i, j)];
      if (c == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (b[k] == 0) continue;
        for (const auto& [a, ca] : algebra_.product_terms(k, i)) out[index(a, j)] += c * b[k] * ca;
      }
    }
  return reduce(base(), std::move(out));
}

Vector TensorSquare::right_action(const Vector& t, const Vector& b) const {
  const std::size_t n = factor_rank();
  Vector out(n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& c = t[index(i, j)];
      if (c == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (b[k] == 0) continue;
        for (const auto& [a, ca] : algebra_.product_terms(j, k)) out[index(i, a)] += c * b[k] * ca;
      }
    }
  return reduce(base(), std::move(out));
}

std::vector<std::size_t> TensorSquare::indices_of_total_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < rank(); ++a)
    if (total_degree(a) == d) out.push_back(a);
  return out;
}

std::vector<int> TensorSquare::distinct_total_degrees() const {
  std::set<int> s;
  for (std::size_t a = 0; a < rank(); ++a) s.insert(total_degree(a));
  return {s.begin(), s.end()};
}

}  // namespace gext
