#include "gext/presented_module.hpp"

#include <sstream>

#include "gext/errors.hpp"
#include "gext/linalg.hpp"

namespace gext {

PresentedModule::PresentedModule(BaseRing base, std::vector<int> generator_degrees,
                                 ExactMatrix relations)
    : base_(base), degrees_(std::move(generator_degrees)), relations_(std::move(relations)) {
  if (relations_.rows() != degrees_.size()) {
    if (relations_.cols() == 0) {
      relations_ = ExactMatrix(base_, degrees_.size(), 0);
    } else {
      throw DimensionMismatch("presentation has " + std::to_string(degrees_.size()) +
                              " generators but relations of height " +
                              std::to_string(relations_.rows()));
    }
  }
  if (!(relations_.base() == base_)) throw BaseMismatch("presentation relations over another ring");
  for (std::size_t c = 0; c < relations_.cols(); ++c) {
    std::optional<int> deg;
    for (std::size_t r = 0; r < relations_.rows(); ++r) {
      if (relations_(r, c) == 0) continue;
      if (deg && *deg != degrees_[r]) {
        throw InvalidArgument("relation column " + std::to_string(c) + " mixes degrees " +
                              std::to_string(*deg) + " and " + std::to_string(degrees_[r]));
      }
      deg = degrees_[r];
    }
  }
}

PresentedModule PresentedModule::zero(const BaseRing& base) {
  return PresentedModule(base, {}, ExactMatrix(base, 0, 0));
}

PresentedModule PresentedModule::free(const BaseRing& base, std::vector<int> degrees) {
  const std::size_t n = degrees.size();
  return PresentedModule(base, std::move(degrees), ExactMatrix(base, n, 0));
}

PresentedModule PresentedModule::cyclic(const BaseRing& base, const Scalar& order, int degree) {
  ExactMatrix rel(base, 1, 1);
  rel.set(0, 0, order);
  return PresentedModule(base, {degree}, rel);
}

bool PresentedModule::is_zero_class(const Vector& x) const {
  if (x.size() != degrees_.size()) throw DimensionMismatch("class vector length");
  return in_column_span(relations_, reduce(base_, x));
}

std::string ModuleStructure::to_string(const BaseRing& base) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  if (free_rank > 0) {
    os << (first ? "" : " + ") << "(" << base.name() << ")^" << free_rank;
  }
  return os.str();
}

ModuleStructure module_structure(const PresentedModule& m) {
  ModuleStructure out;
  const BaseRing& ring = m.base();
  const std::size_t g = m.generator_count();
  if (g == 0) return out;
  const SmithForm snf = smith_normal_form(m.relations());
  for (std::size_t i = 0; i < g; ++i) {
    const Scalar d = i < m.relations().cols() ? snf.d(i, i) : Scalar(0);
    if (d == 0) {
      ++out.free_rank;
    } else if (!ring.is_unit(d)) {
      out.torsion.push_back(ring.ideal_generator(d));
    }
  }
  return out;
}

bool module_is_zero(const PresentedModule& m) { return module_structure(m).is_zero(); }

bool is_isomorphic(const PresentedModule& a, const PresentedModule& b) {
  return a.base() == b.base() && module_structure(a) == module_structure(b);
}

PresentedModule tensor_modules(const PresentedModule& m, const PresentedModule& n) {
  if (!(m.base() == n.base())) {
    throw BaseMismatch("tensor_modules over " + m.base().name() + " and " + n.base().name());
  }
  const BaseRing& ring = m.base();
  std::vector<int> degrees;
  for (int dm : m.generator_degrees())
    for (int dn : n.generator_degrees()) degrees.push_back(dm + dn);
  const ExactMatrix left = kronecker(m.relations(), ExactMatrix::identity(ring, n.generator_count()));
  const ExactMatrix right = kronecker(ExactMatrix::identity(ring, m.generator_count()), n.relations());
  ExactMatrix rel = degrees.empty() ? ExactMatrix(ring, 0, 0) : hcat(left, right);
  return PresentedModule(ring, std::move(degrees), std::move(rel));
}

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b) {
  if (!(a.base() == b.base())) throw BaseMismatch("direct_sum over different rings");
  std::vector<int> degrees = a.generator_degrees();
  degrees.insert(degrees.end(), b.generator_degrees().begin(), b.generator_degrees().end());
  return PresentedModule(a.base(), std::move(degrees), block_diagonal(a.relations(), b.relations()));
}

std::optional<Vector> coordinates_in(const ExactMatrix& z, const Vector& x) {
  if (z.cols() == 0) {
    if (is_zero(x)) return Vector{};
    return std::nullopt;
  }
  return solve(z, x);
}

PresentedModule subquotient(const ExactMatrix& z, const ExactMatrix& w, int degree) {
  const BaseRing& ring = z.base();
  const std::size_t s = z.cols();
  std::vector<Vector> rels;
  if (s > 0) {
    const ExactMatrix syz = kernel_basis(z);
    for (std::size_t j = 0; j < syz.cols(); ++j) rels.push_back(syz.column(j));
  }
  const ExactMatrix wn = drop_zero_columns(w);
  if (wn.cols() > 0) {
    auto c = solve_columns(z, wn);
    if (!c) throw InvalidArgument("subquotient: W is not contained in Z");
    for (std::size_t j = 0; j < c->cols(); ++j) rels.push_back(c->column(j));
  }
  return PresentedModule(ring, std::vector<int>(s, degree), ExactMatrix::from_columns(ring, s, rels));
}

}  // namespace gext
