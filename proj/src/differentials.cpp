#include "gext/differentials.hpp"

#include <algorithm>

#include "gext/linalg.hpp"

namespace gext {

namespace {

void require_commutative(const GradedAlgebra& b) {
  if (!b.commutative()) throw NotCommutative("Kaehler differentials need a commutative algebra");
}

ExactMatrix embed_columns(const BaseRing& ring, std::size_t rows, const std::vector<std::size_t>& idx,
                          const ExactMatrix& local) {
  ExactMatrix out(ring, rows, local.cols());
  for (std::size_t c = 0; c < local.cols(); ++c)
    for (std::size_t r = 0; r < idx.size(); ++r) out.set(idx[r], c, local(r, c));
  return out;
}

ExactMatrix ideal_in_degree(const TensorSquare& t, int q) {
  const std::vector<std::size_t> idx = t.indices_of_total_degree(q);
  const ExactMatrix local = kernel_basis(t.mu().select_columns(idx));
  return drop_zero_columns(embed_columns(t.base(), t.rank(), idx, local));
}

}  // namespace

ExactMatrix augmentation_ideal(const GradedAlgebra& b) {
  require_commutative(b);
  TensorSquare t(b, false);
  ExactMatrix out(b.base(), t.rank(), 0);
  for (int q : t.distinct_total_degrees()) out = hcat(out, ideal_in_degree(t, q));
  return out;
}

KaehlerModule kaehler_module(const GradedAlgebra& b) {
  require_commutative(b);
  KaehlerModule k{TensorSquare(b, false), {}, {}, {}, {}, PresentedModule::zero(b.base())};
  const TensorSquare& t = k.square;
  const BaseRing& ring = b.base();

  std::vector<ExactMatrix> pieces;
  std::vector<int> qs;
  for (int q : t.distinct_total_degrees()) {
    ExactMatrix iq = ideal_in_degree(t, q);
    if (iq.cols() == 0) continue;
    qs.push_back(q);
    pieces.push_back(std::move(iq));
  }

  // I is spanned over B (acting on the first factor) by the d(e_i), so I^2 is
  // spanned by (e_k (x) 1) d(e_i) d(e_j).
  const std::size_t n = b.rank();
  std::vector<Vector> ds;
  for (std::size_t i = 0; i < n; ++i) ds.push_back(derivation_tensor(b, unit_vector(ring, n, i)));
  std::vector<std::vector<Vector>> squares(qs.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Vector dij = t.multiply(ds[i], ds[j]);
      if (is_zero(dij)) continue;
      for (std::size_t e = 0; e < n; ++e) {
        Vector prod = t.left_action(unit_vector(ring, n, e), dij);
        if (is_zero(prod)) continue;
        int q = 0;
        for (std::size_t idx = 0; idx < prod.size(); ++idx)
          if (prod[idx] != 0) q = t.total_degree(idx);
        auto it = std::find(qs.begin(), qs.end(), q);
        if (it == qs.end()) throw InternalInconsistency("I^2 element outside the degrees of I");
        squares[it - qs.begin()].push_back(std::move(prod));
      }
    }
  }

  std::vector<int> gen_degrees;
  ExactMatrix rel(ring, 0, 0);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    ExactMatrix sq = squares[i].empty() ? ExactMatrix(ring, t.rank(), 0)
                                        : ExactMatrix::from_columns(ring, t.rank(), squares[i]);
    PresentedModule piece = subquotient(pieces[i], sq, qs[i]);
    k.offsets.push_back(gen_degrees.size());
    gen_degrees.insert(gen_degrees.end(), piece.generator_degrees().begin(),
                       piece.generator_degrees().end());
    rel = block_diagonal(rel, piece.relations());
    k.ideal_squared.push_back(std::move(sq));
  }
  k.degrees = qs;
  k.ideal = std::move(pieces);
  k.omega = PresentedModule(ring, gen_degrees, rel);
  return k;
}

Vector kaehler_class(const KaehlerModule& k, const Vector& t) {
  const TensorSquare& sq = k.square;
  if (t.size() != sq.rank()) throw DimensionMismatch("tensor element has wrong length");
  Vector cls(k.omega.generator_count(), Scalar(0));
  std::vector<bool> used(t.size(), false);
  for (std::size_t i = 0; i < k.degrees.size(); ++i) {
    Vector part(t.size(), Scalar(0));
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
      if (sq.total_degree(idx) == k.degrees[i]) {
        part[idx] = t[idx];
        used[idx] = true;
      }
    }
    if (is_zero(part)) continue;
    auto c = coordinates_in(k.ideal[i], part);
    if (!c) throw InvalidArgument("element does not lie in the augmentation ideal");
    for (std::size_t j = 0; j < c->size(); ++j) cls[k.offsets[i] + j] = (*c)[j];
  }
  for (std::size_t idx = 0; idx < t.size(); ++idx)
    if (!used[idx] && t[idx] != 0) throw InvalidArgument("element does not lie in the augmentation ideal");
  return cls;
}

bool is_zero_class(const KaehlerModule& k, const Vector& cls) { return k.omega.is_zero_class(cls); }

Vector derivation_tensor(const GradedAlgebra& b, const Vector& x) {
  require_commutative(b);
  TensorSquare t(b, false);
  Vector a = t.pure(x, b.unit_coords());
  Vector c = t.pure(b.unit_coords(), x);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= c[i];
  return reduce(b.base(), std::move(a));
}

Vector universal_derivation(const KaehlerModule& k, const Vector& x) {
  return kaehler_class(k, derivation_tensor(k.square.algebra(), x));
}

Vector leibniz_defect(const GradedAlgebra& b, const Vector& u, const Vector& v) {
  TensorSquare t(b, false);
  Vector out = derivation_tensor(b, b.multiply(u, v));
  const Vector udv = t.left_action(u, derivation_tensor(b, v));
  const Vector vdu = t.left_action(v, derivation_tensor(b, u));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= udv[i] + vdu[i];
  return reduce(b.base(), std::move(out));
}

std::optional<NontrivialityWitness> hh1_nontrivial(const KaehlerModule& k) {
  const GradedAlgebra& b = k.square.algebra();
  const BaseRing& ring = b.base();

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < k.degrees.size(); ++i)
    if (k.degrees[i] > 0) order.push_back(i);
  for (std::size_t i = k.degrees.size(); i-- > 0;)
    if (k.degrees[i] < 0) order.push_back(i);
  for (std::size_t i = 0; i < k.degrees.size(); ++i)
    if (k.degrees[i] == 0) order.push_back(i);

  for (std::size_t i : order) {
    const int q = k.degrees[i];
    for (std::size_t e : b.indices_of_degree(q)) {
      const Vector x = unit_vector(ring, b.rank(), e);
      const Vector tensor = derivation_tensor(b, x);
      const Vector cls = kaehler_class(k, tensor);
      if (!is_zero_class(k, cls)) return NontrivialityWitness{cls, tensor, q, e};
    }
    for (std::size_t c = 0; c < k.ideal[i].cols(); ++c) {
      Vector cls(k.omega.generator_count(), Scalar(0));
      cls[k.offsets[i] + c] = 1;
      if (!is_zero_class(k, cls)) return NontrivialityWitness{cls, k.ideal[i].column(c), q, std::nullopt};
    }
  }
  return std::nullopt;
}

std::optional<NontrivialityWitness> hh1_nontrivial(const GradedAlgebra& b) {
  return hh1_nontrivial(kaehler_module(b));
}

bool is_free_rank_one_on(const KaehlerModule& k, const Vector& w) {
  const GradedAlgebra& b = k.square.algebra();
  const BaseRing& ring = b.base();
  const std::size_t g = k.omega.generator_count();
  std::vector<Vector> images;
  for (std::size_t j = 0; j < b.rank(); ++j)
    images.push_back(kaehler_class(k, k.square.left_action(unit_vector(ring, b.rank(), j), w)));
  const ExactMatrix phi = ExactMatrix::from_columns(ring, g, images);
  const ExactMatrix& rel = k.omega.relations();

  const PresentedModule coker(ring, std::vector<int>(g, 0), hcat(rel, phi));
  if (!module_is_zero(coker)) return false;
  const ExactMatrix ker = kernel_basis(hcat(phi, rel));
  for (std::size_t c = 0; c < ker.cols(); ++c)
    for (std::size_t r = 0; r < b.rank(); ++r)
      if (ker(r, c) != 0) return false;
  return true;
}

}  // namespace gext
