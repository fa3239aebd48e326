#include "gext/separable.hpp"

#include <algorithm>
#include <random>

#include "gext/linalg.hpp"

namespace gext {

std::string outcome_name(ConcentrationOutcome o) {
  switch (o) {
    case ConcentrationOutcome::Concentrated:
      return "concentrated";
    case ConcentrationOutcome::Stuck:
      return "stuck";
    case ConcentrationOutcome::Unchanged:
      return "unchanged";
  }
  return "?";
}

std::pair<ExactMatrix, Vector> separability_system(const TensorSquare& t) {
  const GradedAlgebra& b = t.algebra();
  const BaseRing& ring = b.base();
  const std::size_t n = b.rank();
  const std::size_t m = t.rank();
  ExactMatrix sys(ring, n + n * m, m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) sys.set(r, c, t.mu()(r, c));
  for (std::size_t k = 0; k < n; ++k) {
    const Vector ek = unit_vector(ring, n, k);
    for (std::size_t c = 0; c < m; ++c) {
      const Vector ec = unit_vector(ring, m, c);
      const Vector lhs = t.left_action(ek, ec);
      const Vector rhs = t.right_action(ec, ek);
      for (std::size_t r = 0; r < m; ++r) sys.set(n + k * m + r, c, lhs[r] - rhs[r]);
    }
  }
  Vector rhs(n + n * m, Scalar(0));
  for (std::size_t r = 0; r < n; ++r) rhs[r] = b.unit_coords()[r];
  return {std::move(sys), std::move(rhs)};
}

SeparabilityCertificate check_separability(const GradedAlgebra& b, const Vector& e) {
  TensorSquare t(b, true);
  if (e.size() != t.rank()) throw DimensionMismatch("separability element has wrong length");
  SeparabilityCertificate c;
  c.idempotent = reduce(b.base(), e);
  c.mu_check = t.mu().apply(c.idempotent) == b.unit_coords();
  c.centrality_check = true;
  for (std::size_t k = 0; k < b.rank() && c.centrality_check; ++k) {
    const Vector ek = unit_vector(b.base(), b.rank(), k);
    c.centrality_check = t.left_action(ek, c.idempotent) == t.right_action(c.idempotent, ek);
  }
  return c;
}

std::optional<SeparabilityCertificate> separability_idempotent(const GradedAlgebra& b) {
  TensorSquare t(b, true);
  auto [sys, rhs] = separability_system(t);
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  SeparabilityCertificate c = check_separability(b, *sol);
  if (!c.mu_check || !c.centrality_check)
    throw InternalInconsistency("solved separability element fails its recheck");
  return c;
}

Vector project_total_degree_zero(const GradedAlgebra& b, const Vector& e) {
  TensorSquare t(b, true);
  Vector out(e.size(), Scalar(0));
  for (std::size_t idx = 0; idx < e.size(); ++idx)
    if (t.total_degree(idx) == 0) out[idx] = e[idx];
  out = reduce(b.base(), std::move(out));
  const SeparabilityCertificate c = check_separability(b, out);
  if (!c.mu_check || !c.centrality_check)
    throw ProjectionBroken("total-degree-zero projection lost the separability property");
  return out;
}

ConcentrationResult concentrate_idempotent(const GradedAlgebra& b, const Vector& e) {
  TensorSquare t(b, true);
  ConcentrationResult res;
  res.idempotent = reduce(b.base(), e);

  auto first_degrees = [&](const Vector& x) {
    std::vector<int> ds;
    for (std::size_t idx = 0; idx < x.size(); ++idx)
      if (x[idx] != 0) ds.push_back(t.bidegree(idx).first);
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
  };
  auto without_degree = [&](const Vector& x, int d) {
    Vector y = x;
    for (std::size_t idx = 0; idx < y.size(); ++idx)
      if (t.bidegree(idx).first == d) y[idx] = 0;
    return y;
  };
  auto passes = [&](const Vector& x) {
    const SeparabilityCertificate c = check_separability(b, x);
    return c.mu_check && c.centrality_check;
  };
  auto concentrated = [&](const Vector& x) {
    for (std::size_t idx = 0; idx < x.size(); ++idx)
      if (x[idx] != 0 && t.bidegree(idx) != std::pair<int, int>{0, 0}) return false;
    return true;
  };

  const std::size_t cap = b.distinct_degrees().size();
  while (!concentrated(res.idempotent) && res.steps < cap) {
    const std::vector<int> ds = first_degrees(res.idempotent);
    bool moved = false;
    if (ds.back() > 0) {
      Vector y = without_degree(res.idempotent, ds.back());
      if (passes(y)) {
        res.idempotent = std::move(y);
        moved = true;
      }
    }
    if (!moved && ds.front() < 0) {
      Vector y = without_degree(res.idempotent, ds.front());
      if (passes(y)) {
        res.idempotent = std::move(y);
        moved = true;
      }
    }
    if (!moved) break;
    ++res.steps;
  }

  if (concentrated(res.idempotent)) {
    res.outcome = ConcentrationOutcome::Concentrated;
    return res;
  }
  const RegularityReport reg = degree_zero_regularity(b);
  if (reg.witness) {
    res.outcome = ConcentrationOutcome::Stuck;
    res.witness = reg.witness;
  } else {
    res.outcome = ConcentrationOutcome::Unchanged;
  }
  return res;
}

namespace {

// Nonzero v with m v = 0, if any.
std::optional<Vector> kernel_vector(const ExactMatrix& m) {
  const ExactMatrix k = kernel_basis(m);
  for (std::size_t c = 0; c < k.cols(); ++c) {
    Vector col = k.column(c);
    if (!is_zero(col)) return col;
  }
  return std::nullopt;
}

}  // namespace

RegularityReport degree_zero_regularity(const GradedAlgebra& b, std::uint64_t seed) {
  const BaseRing& ring = b.base();
  const std::size_t n = b.rank();
  const std::vector<std::size_t> zero_idx = b.indices_of_degree(0);
  RegularityReport rep;

  auto embed = [&](const std::vector<Scalar>& c) {
    Vector x(n, Scalar(0));
    for (std::size_t i = 0; i < zero_idx.size(); ++i) x[zero_idx[i]] = c[i];
    return x;
  };

  auto examine = [&](const Vector& x) {
    if (is_zero(x)) return;
    ++rep.checked;
    const ExactMatrix left = b.left_multiplication(x);
    const ExactMatrix right = b.right_multiplication(x);
    auto kl = kernel_vector(left);
    auto kr = kernel_vector(right);
    if (kl || kr) {
      if (rep.regular_in_b && !rep.witness) {
        rep.witness = kl ? ZeroDivisorWitness{x, *kl, true} : ZeroDivisorWitness{*kr, x, false};
      }
      rep.regular_in_b = false;
    }
    if (rep.b0_domain) {
      auto k0 = kernel_vector(left.select_columns(zero_idx).select_rows(zero_idx));
      if (k0) {
        rep.b0_domain = false;
        rep.witness = ZeroDivisorWitness{x, embed(*k0), true};
      }
    }
  };

  const std::size_t r = zero_idx.size();
  std::uint64_t total = 0;
  bool enumerable = ring.is_finite();
  if (enumerable) {
    const std::uint64_t q = ring.modulus();
    total = 1;
    for (std::size_t i = 0; i < r && enumerable; ++i) {
      if (total > kRegularityEnumerationLimit / q) enumerable = false;
      total *= q;
    }
  }

  if (enumerable) {
    rep.exhaustive = true;
    const std::uint64_t q = ring.modulus();
    std::vector<Scalar> c(r, Scalar(0));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t k = idx;
      for (std::size_t i = 0; i < r; ++i) {
        c[i] = Scalar(static_cast<unsigned long>(k % q));
        k /= q;
      }
      examine(embed(c));
    }
    return rep;
  }

  for (std::size_t i = 0; i < r; ++i) examine(unit_vector(ring, n, zero_idx[i]));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-6, 6);
  for (int s = 0; s < 256; ++s) {
    std::vector<Scalar> c(r);
    for (auto& x : c) x = ring.reduce(Scalar(dist(rng)));
    examine(embed(c));
  }
  return rep;
}

bool degree_zero_regular(const GradedAlgebra& b) { return degree_zero_regularity(b).regular_in_b; }

}  // namespace gext
