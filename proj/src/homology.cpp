#include "gext/homology.hpp"

#include <cstdlib>
#include <string>

#include "gext/linalg.hpp"

namespace gext {

std::size_t default_resolution_cap() {
  if (const char* env = std::getenv("GEXT_RESOLUTION_CAP")) {
    try {
      const long v = std::stol(env);
      if (v >= 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 6;
}

GradedFamily split_by_degree(const PresentedModule& m) {
  std::map<int, std::vector<std::size_t>> rows;
  for (std::size_t i = 0; i < m.generator_count(); ++i) rows[m.generator_degrees()[i]].push_back(i);
  const ExactMatrix& rel = m.relations();
  GradedFamily out;
  for (const auto& [d, idx] : rows) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < rel.cols(); ++c) {
      for (std::size_t r : idx) {
        if (rel(r, c) != 0) {
          cols.push_back(c);
          break;
        }
      }
    }
    out.emplace(d, PresentedModule(m.base(), std::vector<int>(idx.size(), d),
                                   rel.select_rows(idx).select_columns(cols)));
  }
  return out;
}

namespace {

struct Summand {
  Scalar torsion;  // 0 for a free summand
  Vector generator;
};

std::vector<Summand> decompose(const PresentedModule& m) {
  const BaseRing& ring = m.base();
  const std::size_t g = m.generator_count();
  std::vector<Summand> out;
  if (g == 0) return out;
  const SmithForm snf = smith_normal_form(m.relations());
  auto uinv = inverse(snf.u);
  if (!uinv) throw InternalInconsistency("Smith transform is not invertible");
  const Vector diag = snf.diagonal();
  for (std::size_t j = 0; j < g; ++j) {
    const Scalar d = j < diag.size() ? diag[j] : Scalar(0);
    if (d != 0 && ring.is_unit(d)) continue;
    out.push_back({d, uinv->column(j)});
  }
  return out;
}

// Resolution of a module whose generators all sit in one degree.
Resolution resolve_block(const PresentedModule& m, std::size_t length, int degree) {
  const BaseRing& ring = m.base();
  Resolution r;
  r.base = ring;
  const std::vector<Summand> parts = decompose(m);

  std::vector<Vector> eps;
  for (const auto& s : parts) eps.push_back(s.generator);
  r.augmentation = eps.empty() ? ExactMatrix(ring, m.generator_count(), 0)
                               : ExactMatrix::from_columns(ring, m.generator_count(), eps);
  r.ranks.push_back(parts.size());

  // current multiplier on each summand still alive at this level
  std::vector<Scalar> current;
  std::vector<std::size_t> alive;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].torsion != 0) {
      current.push_back(parts[j].torsion);
      alive.push_back(j);
    }
  }
  std::vector<std::size_t> prev_index(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) prev_index[j] = j;

  std::size_t level = 0;
  while (level < length && !alive.empty()) {
    ExactMatrix d(ring, r.ranks.back(), alive.size());
    for (std::size_t c = 0; c < alive.size(); ++c) d.set(prev_index[alive[c]], c, current[c]);
    r.differentials.push_back(std::move(d));
    r.ranks.push_back(alive.size());
    for (std::size_t c = 0; c < alive.size(); ++c) prev_index[alive[c]] = c;
    ++level;
    if (!ring.is_finite()) {
      alive.clear();
      break;
    }
    // over Z/n the kernel of multiplication by t is generated by n / t
    const Scalar n(ring.modulus());
    for (auto& t : current) t = n / t;
  }
  r.truncated = !alive.empty();
  for (std::size_t i = 0; i < r.ranks.size(); ++i) r.degrees.emplace_back(r.ranks[i], degree);
  return r;
}

Resolution concat(const Resolution& a, const Resolution& b) {
  Resolution r;
  r.base = a.base;
  const std::size_t len = std::max(a.ranks.size(), b.ranks.size());
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t ra = i < a.ranks.size() ? a.ranks[i] : 0;
    const std::size_t rb = i < b.ranks.size() ? b.ranks[i] : 0;
    r.ranks.push_back(ra + rb);
    std::vector<int> ds = i < a.degrees.size() ? a.degrees[i] : std::vector<int>{};
    if (i < b.degrees.size()) ds.insert(ds.end(), b.degrees[i].begin(), b.degrees[i].end());
    r.degrees.push_back(std::move(ds));
  }
  for (std::size_t i = 0; i + 1 < len; ++i) {
    auto pick = [&](const Resolution& x) {
      if (i < x.differentials.size()) return x.differentials[i];
      const std::size_t rows = i < x.ranks.size() ? x.ranks[i] : 0;
      const std::size_t cols = i + 1 < x.ranks.size() ? x.ranks[i + 1] : 0;
      return ExactMatrix(a.base, rows, cols);
    };
    r.differentials.push_back(block_diagonal(pick(a), pick(b)));
  }
  r.augmentation = block_diagonal(a.augmentation, b.augmentation);
  r.truncated = a.truncated || b.truncated;
  while (r.ranks.size() > 1 && r.ranks.back() == 0) {
    r.ranks.pop_back();
    r.degrees.pop_back();
    r.differentials.pop_back();
  }
  return r;
}

PresentedModule retag(const PresentedModule& m, int degree) {
  return PresentedModule(m.base(), std::vector<int>(m.generator_count(), degree), m.relations());
}

// Tor_p of modules with single-degree generators; output generators get `degree`.
PresentedModule tor_block(const PresentedModule& m, const PresentedModule& n, std::size_t p, int degree) {
  const BaseRing& ring = m.base();
  const Resolution f = resolve_block(m, p + 1, 0);
  const std::size_t h = n.generator_count();
  if (p >= f.ranks.size() || f.ranks[p] == 0 || h == 0) return PresentedModule::zero(ring);
  const std::size_t fp = f.ranks[p];
  const ExactMatrix rn = kronecker(ExactMatrix::identity(ring, fp), n.relations());

  ExactMatrix z;
  if (p == 0) {
    z = ExactMatrix::identity(ring, fp * h);
  } else {
    const std::size_t fq = f.ranks[p - 1];
    const ExactMatrix phi = kronecker(f.differentials[p - 1], ExactMatrix::identity(ring, h));
    ExactMatrix neg_rel = kronecker(ExactMatrix::identity(ring, fq), n.relations());
    for (std::size_t r = 0; r < neg_rel.rows(); ++r)
      for (std::size_t c = 0; c < neg_rel.cols(); ++c) neg_rel.set(r, c, -neg_rel(r, c));
    const ExactMatrix ker = kernel_basis(hcat(phi, neg_rel));
    std::vector<std::size_t> top(fp * h);
    for (std::size_t i = 0; i < top.size(); ++i) top[i] = i;
    z = ker.select_rows(top);
  }
  ExactMatrix w = rn;
  if (p + 1 < f.ranks.size())
    w = hcat(w, kronecker(f.differentials[p], ExactMatrix::identity(ring, h)));
  return retag(subquotient(z, w, 0), degree);
}

void check_cap(std::size_t p, std::size_t cap) {
  if (p > cap)
    throw CapExceeded("requested degree " + std::to_string(p) + " exceeds the resolution cap " +
                      std::to_string(cap));
}

}  // namespace

Resolution free_resolution(const PresentedModule& m, std::size_t length) {
  const GradedFamily parts = split_by_degree(m);
  Resolution r;
  r.base = m.base();
  r.ranks = {0};
  r.degrees = {{}};
  r.augmentation = ExactMatrix(m.base(), 0, 0);
  std::vector<std::size_t> order;
  for (const auto& [d, piece] : parts) r = concat(r, resolve_block(piece, length, d));
  // block columns follow degree order; map rows back to M's generator order
  std::vector<std::size_t> rows;
  for (const auto& [d, piece] : parts)
    for (std::size_t i = 0; i < m.generator_count(); ++i)
      if (m.generator_degrees()[i] == d) rows.push_back(i);
  ExactMatrix aug(m.base(), m.generator_count(), r.augmentation.cols());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t c = 0; c < aug.cols(); ++c) aug.set(rows[k], c, r.augmentation(k, c));
  r.augmentation = std::move(aug);
  return r;
}

bool verify_resolution(const Resolution& r, const PresentedModule& m) {
  const BaseRing& ring = m.base();
  const std::size_t g = m.generator_count();
  const ExactMatrix& rel = m.relations();
  // onto M
  if (!module_is_zero(PresentedModule(ring, std::vector<int>(g, 0), hcat(rel, r.augmentation)))) return false;
  // exact at F_0: x with eps(x) in im(rel) are the image of d_1
  const std::size_t f0 = r.ranks[0];
  const ExactMatrix k0 = kernel_basis(hcat(r.augmentation, rel));
  std::vector<std::size_t> top(f0);
  for (std::size_t i = 0; i < f0; ++i) top[i] = i;
  const ExactMatrix z0 = k0.select_rows(top);
  const ExactMatrix d1 = r.differentials.empty() ? ExactMatrix(ring, f0, 0) : r.differentials[0];
  if (!column_span_contained(z0, d1) || !column_span_contained(d1, z0)) return false;
  for (std::size_t i = 0; i + 1 < r.differentials.size(); ++i) {
    if (!(r.differentials[i] * r.differentials[i + 1]).is_zero()) return false;
    const ExactMatrix k = kernel_basis(r.differentials[i]);
    if (!column_span_contained(k, r.differentials[i + 1]) || !column_span_contained(r.differentials[i + 1], k))
      return false;
  }
  // a finished resolution ends with an injective map
  if (!r.truncated && !r.differentials.empty() && kernel_basis(r.differentials.back()).cols() != 0)
    return false;
  return true;
}

PresentedModule tor(const PresentedModule& m, const PresentedModule& n, std::size_t p, std::size_t cap) {
  check_cap(p, cap);
  if (!(m.base() == n.base())) throw BaseMismatch("tor: modules over different base rings");
  PresentedModule out = PresentedModule::zero(m.base());
  for (const auto& [d, mp] : split_by_degree(m))
    for (const auto& [e, np] : split_by_degree(n)) out = direct_sum(out, tor_block(mp, np, p, d + e));
  return out;
}

GradedTor graded_tor(const GradedFamily& b, const GradedFamily& c, std::size_t p, int q, std::size_t cap) {
  check_cap(p, cap);
  if (b.empty() || c.empty()) throw InvalidArgument("graded_tor: empty family");
  GradedTor out{PresentedModule::zero(b.begin()->second.base()), {}};
  for (const auto& [i, bi] : b) {
    auto it = c.find(q - i);
    if (it == c.end()) continue;
    PresentedModule piece = retag(tor(retag(bi, 0), retag(it->second, 0), p, cap), q);
    out.total = direct_sum(out.total, piece);
    out.pieces.push_back({i, q - i, std::move(piece)});
  }
  return out;
}

GModule GModule::validate(FiniteGroup group, BaseRing base, std::vector<ExactMatrix> matrices) {
  if (matrices.size() != group.order())
    throw ActionViolation(ActionLaw::Shape, "need one matrix per group element");
  const std::size_t r = matrices.empty() ? 0 : matrices[0].rows();
  for (auto& m : matrices) {
    if (m.rows() != r || m.cols() != r) throw ActionViolation(ActionLaw::Shape, "matrices must be square of equal size");
    if (!(m.base() == base)) throw BaseMismatch("module matrix over a different base ring");
    if (!is_invertible(m)) throw ActionViolation(ActionLaw::Automorphism, "matrix is not invertible");
  }
  if (matrices[group.identity()] != ExactMatrix::identity(base, r))
    throw ActionViolation(ActionLaw::Identity, "identity element acts nontrivially");
  for (std::size_t g = 0; g < group.order(); ++g)
    for (std::size_t h = 0; h < group.order(); ++h)
      if (matrices[g] * matrices[h] != matrices[group.multiply(g, h)])
        throw ActionViolation(ActionLaw::Composition,
                              "matrix(" + std::to_string(g) + ") * matrix(" + std::to_string(h) + ") != matrix(gh)");
  return GModule(std::move(group), std::move(base), r, std::move(matrices));
}

GModule GModule::trivial(FiniteGroup group, BaseRing base, std::size_t rank) {
  std::vector<ExactMatrix> mats(group.order(), ExactMatrix::identity(base, rank));
  return validate(std::move(group), std::move(base), std::move(mats));
}

GModule GModule::from_action(const GroupAction& action) {
  return validate(action.group(), action.algebra().base(), action.matrices());
}

ExactMatrix bar_differential(const GModule& m, std::size_t s) {
  const BaseRing& ring = m.base();
  const std::size_t k = m.group().order();
  const std::size_t r = m.rank();
  std::size_t src = 1;
  for (std::size_t i = 0; i < s; ++i) src *= k;
  const std::size_t dst = src * k;
  ExactMatrix d(ring, dst * r, src * r);

  std::vector<std::size_t> tuple(s + 1), face(s);
  auto encode = [&](const std::vector<std::size_t>& t) {
    std::size_t idx = 0;
    for (std::size_t x : t) idx = idx * k + x;
    return idx;
  };
  for (std::size_t row = 0; row < dst; ++row) {
    std::size_t x = row;
    for (std::size_t i = s + 1; i-- > 0;) {
      tuple[i] = x % k;
      x /= k;
    }
    // g1 . f(g2, ..., g_{s+1})
    for (std::size_t i = 0; i < s; ++i) face[i] = tuple[i + 1];
    const std::size_t c0 = encode(face);
    const ExactMatrix& g1 = m.matrix(tuple[0]);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        if (g1(a, b) != 0) d.add_to(row * r + a, c0 * r + b, g1(a, b));
    // (-1)^i f(..., g_i g_{i+1}, ...)
    for (std::size_t i = 1; i <= s; ++i) {
      std::size_t w = 0;
      for (std::size_t j = 0; j < s + 1; ++j) {
        if (j == i - 1) {
          face[w++] = m.group().multiply(tuple[j], tuple[j + 1]);
          ++j;
        } else {
          face[w++] = tuple[j];
        }
      }
      const std::size_t c = encode(face);
      const Scalar sign = (i % 2) ? -1 : 1;
      for (std::size_t a = 0; a < r; ++a) d.add_to(row * r + a, c * r + a, sign);
    }
    // (-1)^(s+1) f(g1, ..., g_s)
    for (std::size_t i = 0; i < s; ++i) face[i] = tuple[i];
    const std::size_t c = encode(face);
    const Scalar sign = ((s + 1) % 2) ? -1 : 1;
    for (std::size_t a = 0; a < r; ++a) d.add_to(row * r + a, c * r + a, sign);
  }
  return d;
}

PresentedModule group_cohomology(const GModule& m, std::size_t s, std::size_t cap) {
  check_cap(s, cap);
  const ExactMatrix ds = bar_differential(m, s);
  const ExactMatrix z = kernel_basis(ds);
  const ExactMatrix w = s == 0 ? ExactMatrix(m.base(), ds.cols(), 0) : bar_differential(m, s - 1);
  return subquotient(z, w, 0);
}

TensorSelfResult tensor_self_nonzero(const PresentedModule& m) {
  TensorSelfResult out;
  out.tensor = tensor_modules(m, m);
  out.nonzero = !module_is_zero(out.tensor);
  if (out.nonzero) {
    for (std::size_t i = 0; i < out.tensor.generator_count(); ++i) {
      if (!out.tensor.is_zero_class(unit_vector(m.base(), out.tensor.generator_count(), i))) {
        out.witness = i;
        break;
      }
    }
    if (!out.witness) throw InternalInconsistency("nonzero module with every generator zero");
  }
  return out;
}

}  // namespace gext
