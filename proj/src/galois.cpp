#include "gext/galois.hpp"

#include "gext/linalg.hpp"

namespace gext {

namespace {

void require_commutative(const GradedAlgebra& b, const char* what) {
  if (!b.commutative()) {
    throw NotCommutative(std::string(what) + " is defined for commutative algebras only");
  }
}

}  // namespace

ExactMatrix fixed_subring(const GroupAction& action) {
  const GradedAlgebra& b = action.algebra();
  const std::size_t n = b.rank();
  const BaseRing& ring = b.base();
  const ExactMatrix id = ExactMatrix::identity(ring, n);
  ExactMatrix stacked(ring, 0, n);
  for (std::size_t g = 0; g < action.group().order(); ++g) {
    if (g == action.group().identity()) continue;
    stacked = vcat(stacked, action.matrix(g) - id);
  }
  if (stacked.rows() == 0) return id;
  return kernel_basis(stacked);
}

std::optional<Scalar> unit_coefficient(const GradedAlgebra& algebra, const Vector& v) {
  const ExactMatrix unit_col = ExactMatrix::from_columns(algebra.base(), algebra.rank(),
                                                         {algebra.unit_coords()});
  auto sol = solve(unit_col, v);
  if (!sol) return std::nullopt;
  return (*sol)[0];
}

ExactMatrix h_map(const GroupAction& action) {
  const GradedAlgebra& b = action.algebra();
  require_commutative(b, "h_map");
  const std::size_t n = b.rank();
  const std::size_t order = action.group().order();
  const BaseRing& ring = b.base();
  ExactMatrix h(ring, order * n, n * n);
  for (std::size_t g = 0; g < order; ++g) {
    const ExactMatrix& mg = action.matrix(g);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Vector value = b.multiply(unit_vector(ring, n, i), mg.column(j));
        for (std::size_t k = 0; k < n; ++k) h.set(g * n + k, i * n + j, value[k]);
      }
    }
  }
  return h;
}

GaloisCertificate is_galois(const GroupAction& action) {
  const GradedAlgebra& b = action.algebra();
  require_commutative(b, "is_galois");
  GaloisCertificate cert;
  cert.faithful_required = action.faithful_required();
  cert.action_valid = action.faithful() || !action.faithful_required();

  cert.fixed_generators = fixed_subring(action);
  cert.fixed_ring_ok = true;
  for (std::size_t c = 0; c < cert.fixed_generators.cols(); ++c) {
    if (!unit_coefficient(b, cert.fixed_generators.column(c))) {
      cert.fixed_ring_ok = false;
      break;
    }
  }

  cert.h = h_map(action);
  if (cert.h.rows() == cert.h.cols()) {
    const SmithForm snf = smith_normal_form(cert.h);
    cert.h_invariants = snf.diagonal();
    cert.h_iso_ok = true;
    for (const auto& d : cert.h_invariants) {
      if (!b.base().is_unit(d)) cert.h_iso_ok = false;
    }
    if (cert.h_iso_ok) {
      cert.h_inverse = inverse(cert.h);
      if (!cert.h_inverse || cert.h * *cert.h_inverse != ExactMatrix::identity(b.base(), cert.h.rows())) {
        throw InternalInconsistency("h has unit Smith invariants but no verified inverse");
      }
    }
  } else {
    cert.h_invariants = smith_normal_form(cert.h).diagonal();
  }
  cert.verdict = cert.fixed_ring_ok && cert.h_iso_ok && cert.action_valid;
  return cert;
}

Vector trace(const GroupAction& action, const Vector& y) {
  const GradedAlgebra& b = action.algebra();
  Vector acc(b.rank(), Scalar(0));
  for (std::size_t g = 0; g < action.group().order(); ++g) {
    const Vector gy = action.apply(g, y);
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += gy[k];
  }
  return reduce(b.base(), std::move(acc));
}

DualBasisCertificate dual_basis(const GroupAction& action) {
  const GaloisCertificate cert = is_galois(action);
  if (!cert.verdict) throw NotGalois("dual_basis requires a Galois extension");
  const GradedAlgebra& b = action.algebra();
  const BaseRing& ring = b.base();
  const std::size_t n = b.rank();

  Vector target(cert.h.rows(), Scalar(0));
  const std::size_t block = identity_block(action);
  for (std::size_t k = 0; k < n; ++k) target[block * n + k] = b.unit_coords()[k];
  auto pre = solve(cert.h, target);
  if (!pre) throw NoPreimage("h does not hit (1, 0, ..., 0) although the verdict is Galois");

  DualBasisCertificate out;
  out.preimage = *pre;
  for (std::size_t i = 0; i < n; ++i) {
    Vector yi(n, Scalar(0));
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      yi[j] = (*pre)[i * n + j];
      any = any || yi[j] != 0;
    }
    if (!any) continue;
    out.x.push_back(unit_vector(ring, n, i));
    out.y.push_back(std::move(yi));
  }

  out.residuals_zero = true;
  out.phi.assign(out.x.size(), Vector(n, Scalar(0)));
  for (std::size_t z = 0; z < n; ++z) {
    const Vector ez = unit_vector(ring, n, z);
    Vector residual = ez;
    for (std::size_t i = 0; i < out.x.size(); ++i) {
      const Vector tr = trace(action, b.multiply(ez, out.y[i]));
      auto phi = unit_coefficient(b, tr);
      if (!phi) throw InternalInconsistency("trace left the fixed ring");
      out.phi[i][z] = *phi;
      for (std::size_t k = 0; k < n; ++k) residual[k] -= *phi * out.x[i][k];
    }
    residual = reduce(ring, std::move(residual));
    if (!is_zero(residual)) out.residuals_zero = false;
    out.residuals.push_back(std::move(residual));
  }
  return out;
}

}  // namespace gext
