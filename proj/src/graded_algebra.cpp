#include "gext/graded_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gext {

std::string law_name(AlgebraLaw law) {
  switch (law) {
    case AlgebraLaw::Shape:
      return "shape";
    case AlgebraLaw::Unit:
      return "unit";
    case AlgebraLaw::Associativity:
      return "associativity";
    case AlgebraLaw::Grading:
      return "grading";
    case AlgebraLaw::Commutativity:
      return "commutativity";
  }
  return "?";
}

namespace {

std::string summarize(const std::vector<AxiomFailure>& failures) {
  std::ostringstream os;
  os << "algebra axioms violated:";
  std::size_t shown = 0;
  for (const auto& f : failures) {
    if (shown++ == 5) {
      os << " ... (" << failures.size() << " total)";
      break;
    }
    os << " [" << law_name(f.law) << " (" << f.i << "," << f.j << "," << f.k << ") " << f.detail
       << "]";
  }
  return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(std::vector<AxiomFailure> failures)
    : Error(summarize(failures)), failures_(std::move(failures)) {}

struct GradedAlgebra::Data {
  BaseRing base;
  std::vector<std::string> names;
  std::vector<int> degrees;
  Vector unit;
  bool commutative = true;
  std::size_t n = 0;
  std::vector<Scalar> table;  // n^3, index (i*n + j)*n + k
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> terms;  // n^2

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return table[(i * n + j) * n + k];
  }
};

namespace {

struct Dense {
  std::size_t n;
  std::vector<Scalar> table;
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return table[(i * n + j) * n + k];
  }
};

}  // namespace

std::vector<AxiomFailure> GradedAlgebra::check_axioms(const AlgebraDescription& d) {
  std::vector<AxiomFailure> failures;
  const std::size_t n = d.degrees.size();
  const BaseRing& ring = d.base;
  auto fail = [&](AlgebraLaw law, std::size_t i, std::size_t j, std::size_t k, std::string msg) {
    failures.push_back({law, i, j, k, std::move(msg)});
  };
  if (n == 0) fail(AlgebraLaw::Shape, 0, 0, 0, "empty basis");
  if (d.names.size() != n) fail(AlgebraLaw::Shape, 0, 0, 0, "names and degrees differ in length");
  if (d.unit.size() != n) fail(AlgebraLaw::Shape, 0, 0, 0, "unit vector has wrong length");
  for (const auto& c : d.products) {
    if (c.i >= n || c.j >= n || c.k >= n) {
      fail(AlgebraLaw::Shape, c.i, c.j, c.k, "structure constant index out of range");
    }
  }
  if (!failures.empty()) return failures;

  Dense t{n, std::vector<Scalar>(n * n * n, Scalar(0))};
  for (const auto& c : d.products) {
    auto& slot = t.table[(c.i * n + c.j) * n + c.k];
    slot = ring.reduce(slot + c.value);
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (t.at(i, j, k) != 0 && d.degrees[k] != d.degrees[i] + d.degrees[j]) {
          fail(AlgebraLaw::Grading, i, j, k,
               "e_i*e_j has a component outside degree " +
                   std::to_string(d.degrees[i] + d.degrees[j]));
        }
        if (d.commutative && t.at(i, j, k) != t.at(j, i, k)) {
          fail(AlgebraLaw::Commutativity, i, j, k, "c_ij^k != c_ji^k");
        }
      }

  const Vector unit = reduce(ring, d.unit);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Scalar left(0), right(0);
      for (std::size_t i = 0; i < n; ++i) {
        if (unit[i] == 0) continue;
        left += unit[i] * t.at(i, j, k);
        right += unit[i] * t.at(j, i, k);
      }
      const Scalar expected = j == k ? Scalar(1) : Scalar(0);
      if (ring.reduce(left) != ring.reduce(expected)) {
        fail(AlgebraLaw::Unit, j, k, 0, "1*e_j has wrong coefficient on e_k");
      }
      if (ring.reduce(right) != ring.reduce(expected)) {
        fail(AlgebraLaw::Unit, j, k, 0, "e_j*1 has wrong coefficient on e_k");
      }
    }
  }

  // (e_i e_j) e_k == e_i (e_j e_k), coefficient by coefficient.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> terms(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t.at(i, j, k) != 0) terms[i * n + j].emplace_back(k, t.at(i, j, k));
  Vector lhs(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(lhs.begin(), lhs.end(), Scalar(0));
        std::fill(rhs.begin(), rhs.end(), Scalar(0));
        for (const auto& [a, c] : terms[i * n + j])
          for (const auto& [b, c2] : terms[a * n + k]) lhs[b] += c * c2;
        for (const auto& [a, c] : terms[j * n + k])
          for (const auto& [b, c2] : terms[i * n + a]) rhs[b] += c * c2;
        for (std::size_t b = 0; b < n; ++b) {
          if (ring.reduce(lhs[b]) != ring.reduce(rhs[b])) {
            fail(AlgebraLaw::Associativity, i, j, k,
                 "(e_i e_j) e_k != e_i (e_j e_k) on e_" + std::to_string(b));
            break;
          }
        }
      }
  return failures;
}

GradedAlgebra GradedAlgebra::validate(const AlgebraDescription& d) {
  auto failures = check_axioms(d);
  if (!failures.empty()) throw AxiomViolation(std::move(failures));
  auto data = std::make_shared<Data>();
  data->base = d.base;
  data->names = d.names;
  data->degrees = d.degrees;
  data->unit = reduce(d.base, d.unit);
  data->commutative = d.commutative;
  data->n = d.degrees.size();
  const std::size_t n = data->n;
  data->table.assign(n * n * n, Scalar(0));
  for (const auto& c : d.products) {
    auto& slot = data->table[(c.i * n + c.j) * n + c.k];
    slot = d.base.reduce(slot + c.value);
  }
  data->terms.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (data->at(i, j, k) != 0) data->terms[i * n + j].emplace_back(k, data->at(i, j, k));
  return GradedAlgebra(std::move(data));
}

const BaseRing& GradedAlgebra::base() const { return data_->base; }
std::size_t GradedAlgebra::rank() const { return data_->n; }
const std::vector<int>& GradedAlgebra::degrees() const { return data_->degrees; }
const std::vector<std::string>& GradedAlgebra::names() const { return data_->names; }
bool GradedAlgebra::commutative() const { return data_->commutative; }
const Vector& GradedAlgebra::unit_coords() const { return data_->unit; }

const Scalar& GradedAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  return data_->at(i, j, k);
}

const std::vector<std::pair<std::size_t, Scalar>>& GradedAlgebra::product_terms(
    std::size_t i, std::size_t j) const {
  return data_->terms[i * data_->n + j];
}

AlgebraElement GradedAlgebra::unit() const { return AlgebraElement(*this, data_->unit); }

AlgebraElement GradedAlgebra::basis(std::size_t i) const {
  return AlgebraElement(*this, unit_vector(base(), rank(), i));
}

AlgebraElement GradedAlgebra::element(Vector coords) const {
  return AlgebraElement(*this, std::move(coords));
}

Vector GradedAlgebra::multiply(const Vector& u, const Vector& v) const {
  const std::size_t n = rank();
  if (u.size() != n || v.size() != n) throw DimensionMismatch("multiply: coordinate length");
  Vector out(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      const Scalar uv = u[i] * v[j];
      for (const auto& [k, c] : data_->terms[i * n + j]) out[k] += uv * c;
    }
  }
  return reduce(base(), std::move(out));
}

AlgebraElement GradedAlgebra::multiply(const AlgebraElement& u, const AlgebraElement& v) const {
  return gext::multiply(*this, u, v);
}

ExactMatrix GradedAlgebra::left_multiplication(const Vector& b) const {
  const std::size_t n = rank();
  ExactMatrix m(base(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = multiply(b, unit_vector(base(), n, j));
    for (std::size_t i = 0; i < n; ++i) m.set(i, j, col[i]);
  }
  return m;
}

ExactMatrix GradedAlgebra::right_multiplication(const Vector& b) const {
  const std::size_t n = rank();
  ExactMatrix m(base(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = multiply(unit_vector(base(), n, j), b);
    for (std::size_t i = 0; i < n; ++i) m.set(i, j, col[i]);
  }
  return m;
}

std::vector<int> GradedAlgebra::distinct_degrees() const {
  std::set<int> s(degrees().begin(), degrees().end());
  return {s.begin(), s.end()};
}

std::vector<std::size_t> GradedAlgebra::indices_of_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rank(); ++i)
    if (degrees()[i] == d) out.push_back(i);
  return out;
}

bool GradedAlgebra::is_concentrated_in_degree_zero() const {
  return std::all_of(degrees().begin(), degrees().end(), [](int d) { return d == 0; });
}

bool GradedAlgebra::is_connective() const {
  return std::all_of(degrees().begin(), degrees().end(), [](int d) { return d >= 0; });
}

AlgebraDescription GradedAlgebra::description() const {
  AlgebraDescription d;
  d.base = base();
  d.names = names();
  d.degrees = degrees();
  d.unit = unit_coords();
  d.commutative = commutative();
  const std::size_t n = rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : data_->terms[i * n + j]) d.products.push_back({i, j, k, c});
  return d;
}

AlgebraElement::AlgebraElement(GradedAlgebra parent, Vector coords)
    : parent_(std::move(parent)), coords_(reduce(parent_.base(), std::move(coords))) {
  if (coords_.size() != parent_.rank()) {
    throw DimensionMismatch("element has " + std::to_string(coords_.size()) +
                            " coordinates, algebra has rank " + std::to_string(parent_.rank()));
  }
}

bool AlgebraElement::is_homogeneous_of_degree(int d) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0 && parent_.degree(i) != d) return false;
  return true;
}

namespace {
void require_same_parent(const AlgebraElement& a, const AlgebraElement& b) {
  if (!a.parent().same_as(b.parent())) throw ParentMismatch("elements of different algebras");
}
}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_parent(a, b);
  Vector out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coords_[i] + b.coords_[i];
  return AlgebraElement(a.parent_, std::move(out));
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_parent(a, b);
  Vector out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coords_[i] - b.coords_[i];
  return AlgebraElement(a.parent_, std::move(out));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a.parent(), a, b);
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
  Vector out = a.coords_;
  for (auto& x : out) x *= c;
  return AlgebraElement(a.parent_, std::move(out));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.parent_.same_as(b.parent_) && a.coords_ == b.coords_;
}

AlgebraElement multiply(const GradedAlgebra& algebra, const AlgebraElement& u,
                        const AlgebraElement& v) {
  if (!u.parent().same_as(algebra) || !v.parent().same_as(algebra)) {
    throw ParentMismatch("multiply: element does not belong to this algebra");
  }
  return AlgebraElement(algebra, algebra.multiply(u.coords(), v.coords()));
}

}  // namespace gext
