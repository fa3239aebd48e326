#include "gext/random_algebra.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gext/gallery.hpp"
#include "gext/linalg.hpp"

namespace gext {

std::string lane_name(Lane lane) {
  switch (lane) {
    case Lane::Ungraded:
      return "ungraded";
    case Lane::ForcedNonzero:
      return "forced-nonzero";
    case Lane::Connective:
      return "connective";
    case Lane::NegativeBounded:
      return "negative-bounded";
    case Lane::Mixed:
      return "mixed";
    case Lane::Nonnegative:
      return "nonnegative";
  }
  return "?";
}

std::optional<Lane> parse_lane(const std::string& name) {
  for (Lane l : {Lane::Ungraded, Lane::ForcedNonzero, Lane::Connective, Lane::NegativeBounded, Lane::Mixed,
                 Lane::Nonnegative})
    if (lane_name(l) == name) return l;
  return std::nullopt;
}

std::uint64_t trial_seed(std::uint64_t run_seed, std::uint64_t trial) {
  std::uint64_t z = run_seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Algebra description plus one matrix per element of C_m (empty: no action yet).
struct Piece {
  AlgebraDescription d;
  std::vector<ExactMatrix> act;
  std::string recipe;
  std::size_t rank() const { return d.names.size(); }
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  // uniform in [lo, hi], modulo draw keeps results stable across standard libraries
  long range(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool chance(int percent) { return range(0, 99) < percent; }
  template <class T>
  const T& pick(const std::vector<T>& xs) { return xs[static_cast<std::size_t>(range(0, xs.size() - 1))]; }

 private:
  std::mt19937_64 g_;
};

struct Context {
  const GeneratorParams& params;
  BaseRing base;
  std::size_t order = 1;  // group order, 1 when no action
  Rng rng;
};

Scalar one(const BaseRing& a) { return a.reduce(Scalar(1)); }

std::vector<ExactMatrix> identity_action(const BaseRing& a, std::size_t n, std::size_t order) {
  return std::vector<ExactMatrix>(order, ExactMatrix::identity(a, n));
}

Piece base_piece(const BaseRing& a, std::size_t order) {
  Piece p{make_base_algebra(a).description(), identity_action(a, 1, order), "A"};
  return p;
}

std::string monomial(const std::vector<std::size_t>& e) {
  static const char* vars[] = {"x", "y", "z"};
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

// A[x_1..x_r]/(x_i^{e_i}, killed monomials); basis = surviving monomials.
Piece monomial_piece(const BaseRing& a, const std::vector<int>& gen_deg, const std::vector<std::size_t>& bound,
                     const std::vector<std::vector<std::size_t>>& killed, std::size_t order,
                     const std::vector<Scalar>& scaling) {
  std::vector<std::vector<std::size_t>> monos;
  std::vector<std::size_t> e(gen_deg.size(), 0);
  auto divisible = [&](const std::vector<std::size_t>& m) {
    for (const auto& k : killed) {
      bool all = true;
      for (std::size_t i = 0; i < m.size(); ++i) all = all && m[i] >= k[i];
      if (all) return true;
    }
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] >= bound[i]) return true;
    return false;
  };
  while (true) {
    if (!divisible(e)) monos.push_back(e);
    std::size_t i = 0;
    while (i < e.size() && ++e[i] >= bound[i]) e[i++] = 0;
    if (i == e.size()) break;
  }
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;

  Piece p;
  p.d.base = a;
  p.d.commutative = true;
  p.recipe = "monomial";
  for (const auto& m : monos) {
    p.d.names.push_back(monomial(m));
    int deg = 0;
    for (std::size_t i = 0; i < m.size(); ++i) deg += static_cast<int>(m[i]) * gen_deg[i];
    p.d.degrees.push_back(deg);
    p.d.unit.push_back(Scalar(0));
  }
  p.d.unit[0] = one(a);
  for (std::size_t i = 0; i < monos.size(); ++i) {
    for (std::size_t j = 0; j < monos.size(); ++j) {
      std::vector<std::size_t> s(gen_deg.size());
      for (std::size_t t = 0; t < s.size(); ++t) s[t] = monos[i][t] + monos[j][t];
      auto it = index.find(s);
      if (it != index.end() && !divisible(s)) p.d.products.push_back({i, j, it->second, one(a)});
    }
  }
  // generator g of C_m scales x_i by scaling[i]; element k acts by its k-th power
  const std::size_t n = monos.size();
  for (std::size_t k = 0; k < order; ++k) {
    ExactMatrix m(a, n, n);
    for (std::size_t c = 0; c < n; ++c) {
      Scalar f = one(a);
      for (std::size_t i = 0; i < gen_deg.size(); ++i)
        for (std::size_t r = 0; r < monos[c][i] * k; ++r) f = a.mul(f, scaling.empty() ? one(a) : scaling[i]);
      m.set(c, c, f);
    }
    p.act.push_back(std::move(m));
  }
  return p;
}

// A[x]/(f), f monic of degree n, ungraded.
Piece poly_piece(const BaseRing& a, const std::vector<Scalar>& f, std::size_t order) {
  const std::size_t n = f.size() - 1;
  Piece p;
  p.d.base = a;
  p.d.commutative = true;
  p.recipe = "poly";
  std::vector<Vector> powers;  // x^k reduced, k < 2n
  Vector cur(n, Scalar(0));
  cur[0] = one(a);
  for (std::size_t k = 0; k < 2 * n; ++k) {
    powers.push_back(cur);
    // multiply by x
    Vector next(n, Scalar(0));
    const Scalar top = cur[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) next[i] = cur[i - 1];
    for (std::size_t i = 0; i < n; ++i) next[i] = a.sub(next[i], a.mul(top, f[i]));
    cur = std::move(next);
  }
  for (std::size_t i = 0; i < n; ++i) {
    p.d.names.push_back(monomial({i}));
    p.d.degrees.push_back(0);
    p.d.unit.push_back(i == 0 ? one(a) : Scalar(0));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (powers[i + j][k] != 0) p.d.products.push_back({i, j, k, powers[i + j][k]});
  p.act = identity_action(a, n, order);
  return p;
}

Piece matrix_piece(const BaseRing& a, int shift, std::size_t order) {
  Piece p{make_matrix_example(a).description(), identity_action(a, 4, order), "M2"};
  p.d.degrees = {0, 0, shift, -shift};
  return p;
}

Piece product(const Piece& x, const Piece& y) {
  Piece p;
  p.d.base = x.d.base;
  p.d.commutative = x.d.commutative && y.d.commutative;
  p.recipe = "(" + x.recipe + " x " + y.recipe + ")";
  const std::size_t n = x.rank();
  for (std::size_t i = 0; i < n; ++i) p.d.names.push_back(x.d.names[i] + "_1");
  for (std::size_t i = 0; i < y.rank(); ++i) p.d.names.push_back(y.d.names[i] + "_2");
  p.d.degrees = x.d.degrees;
  p.d.degrees.insert(p.d.degrees.end(), y.d.degrees.begin(), y.d.degrees.end());
  p.d.unit = x.d.unit;
  p.d.unit.insert(p.d.unit.end(), y.d.unit.begin(), y.d.unit.end());
  p.d.products = x.d.products;
  for (const auto& c : y.d.products) p.d.products.push_back({c.i + n, c.j + n, c.k + n, c.value});
  for (std::size_t g = 0; g < x.act.size(); ++g) p.act.push_back(block_diagonal(x.act[g], y.act[g]));
  return p;
}

Piece tensor(const Piece& x, const Piece& y) {
  const BaseRing& a = x.d.base;
  Piece p;
  p.d.base = a;
  p.d.commutative = x.d.commutative && y.d.commutative;
  p.recipe = "(" + x.recipe + " (x) " + y.recipe + ")";
  const std::size_t m = y.rank();
  for (std::size_t i = 0; i < x.rank(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      p.d.names.push_back(x.d.names[i] + "." + y.d.names[j]);
      p.d.degrees.push_back(x.d.degrees[i] + y.d.degrees[j]);
      p.d.unit.push_back(a.mul(x.d.unit[i], y.d.unit[j]));
    }
  }
  for (const auto& c : x.d.products)
    for (const auto& e : y.d.products)
      p.d.products.push_back({c.i * m + e.i, c.j * m + e.j, c.k * m + e.k, a.mul(c.value, e.value)});
  for (std::size_t g = 0; g < x.act.size(); ++g) p.act.push_back(kronecker(x.act[g], y.act[g]));
  return p;
}

// B^m with C_m rotating the factors.
Piece rotation(const Piece& b, std::size_t order) {
  Piece p = b;
  for (std::size_t k = 1; k < order; ++k) p = product(p, b);
  p.recipe = "rot(" + b.recipe + ")";
  const std::size_t n = b.rank(), total = n * order;
  p.act.clear();
  for (std::size_t k = 0; k < order; ++k) {
    ExactMatrix m(b.d.base, total, total);
    for (std::size_t copy = 0; copy < order; ++copy)
      for (std::size_t i = 0; i < n; ++i) m.set(((copy + k) % order) * n + i, copy * n + i, Scalar(1));
    p.act.push_back(std::move(m));
  }
  return p;
}

std::vector<Scalar> units_of_order(const BaseRing& a, std::size_t m) {
  std::vector<Scalar> out;
  if (!a.is_finite()) {
    if (m == 2) out.push_back(Scalar(-1));
    return out;
  }
  const std::uint32_t n = a.modulus();
  for (std::uint32_t u = 2; u < n; ++u) {
    const Scalar su(u);
    if (!a.is_unit(su)) continue;
    Scalar pw = one(a);
    bool hit = false;
    for (std::size_t k = 1; k <= m; ++k) {
      pw = a.mul(pw, su);
      if (pw == one(a)) {
        hit = k == m;
        break;
      }
    }
    if (hit) out.push_back(su);
  }
  return out;
}

int draw_degree(Context& c, int sign) {
  const int r = std::max(1, c.params.degree_range);
  switch (sign) {
    case 1:
      return static_cast<int>(c.rng.range(1, r));
    case -1:
      return -static_cast<int>(c.rng.range(1, r));
    case 0:
      return 0;
    default: {
      int d = 0;
      while (d == 0) d = static_cast<int>(c.rng.range(-r, r));
      return d;
    }
  }
}

// sign: 1 positive, -1 negative, 0 zero, 2 any nonzero
Piece random_monomial(Context& c, int sign, std::size_t budget) {
  const std::size_t gens = (budget >= 4 && c.rng.chance(40)) ? 2 : 1;
  std::vector<int> deg;
  std::vector<std::size_t> bound;
  for (std::size_t i = 0; i < gens; ++i) {
    deg.push_back(draw_degree(c, sign));
    bound.push_back(static_cast<std::size_t>(c.rng.range(2, gens == 1 ? std::max<long>(2, std::min<long>(budget, 5)) : 3)));
  }
  std::vector<std::vector<std::size_t>> killed;
  if (gens == 2 && c.rng.chance(50)) killed.push_back({1, 1});
  std::vector<Scalar> scaling;
  if (c.order > 1) {
    const std::vector<Scalar> us = units_of_order(c.base, c.order);
    for (std::size_t i = 0; i < gens; ++i) scaling.push_back(us.empty() || c.rng.chance(25) ? one(c.base) : c.rng.pick(us));
  }
  Piece p = monomial_piece(c.base, deg, bound, killed, c.order, scaling);
  return p;
}

Piece random_poly(Context& c, std::size_t budget) {
  const std::size_t n = static_cast<std::size_t>(c.rng.range(2, std::max<long>(2, std::min<long>(budget, 4))));
  std::vector<Scalar> f;
  for (std::size_t i = 0; i < n; ++i) f.push_back(c.base.reduce(Scalar(c.rng.range(-4, 4))));
  f.push_back(one(c.base));
  return poly_piece(c.base, f, c.order);
}

std::optional<Piece> galois_piece(Context& c) {
  const std::size_t m = c.order > 1 ? c.order : static_cast<std::size_t>(c.rng.range(2, 3));
  if (c.base.kind() == RingKind::PrimeField && c.rng.chance(50)) {
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < m; ++i) q *= c.base.modulus();
    if (q <= 4096) {
      AlgebraWithAction f = make_finite_field_ext(c.base.modulus(), static_cast<unsigned>(m));
      Piece p{f.algebra.description(), f.action.matrices(), "F_q"};
      if (c.order == 1) p.act = identity_action(c.base, p.rank(), 1);
      return p;
    }
  }
  AlgebraWithAction t = make_trivial_galois(c.base, FiniteGroup::cyclic(m));
  Piece p{t.algebra.description(), t.action.matrices(), "A^G"};
  if (c.order == 1) p.act = identity_action(c.base, p.rank(), 1);
  return p;
}

// Degree sign the next factor should carry for the lane.
int lane_sign(const Context& c) {
  switch (c.params.lane) {
    case Lane::Ungraded:
      return 0;
    case Lane::Connective:
      return 1;
    case Lane::NegativeBounded:
      return -1;
    case Lane::ForcedNonzero:
      return 2;
    case Lane::Mixed:
      return 3;
    case Lane::Nonnegative:
      return 4;
  }
  return 3;
}

Piece graded_factor(Context& c, std::size_t budget) {
  int sign = lane_sign(c);
  if (sign == 3) sign = c.rng.chance(30) ? 0 : 2;
  if (sign == 4) sign = c.rng.chance(40) ? 0 : 1;
  if (sign == 0 && c.rng.chance(50)) return random_poly(c, budget);
  if (c.params.lane == Lane::NegativeBounded && c.params.degree_zero != DegreeZeroPart::BaseOnly &&
      c.rng.chance(30))
    sign = 2;
  return random_monomial(c, sign, budget);
}

Piece degree_zero_factor(Context& c, std::size_t budget) {
  const int roll = static_cast<int>(c.rng.range(0, 99));
  if (roll < 35) return random_poly(c, budget);
  if (roll < 60) {
    auto g = galois_piece(c);
    if (g && g->rank() <= budget) return *g;
  }
  if (roll < 80 && budget >= 4) return product(base_piece(c.base, c.order), random_poly(c, budget - 1));
  return random_monomial(c, 0, budget);
}

Piece compose(Context& c) {
  const std::size_t max_rank = std::max<std::size_t>(c.params.max_rank, 2);
  if (c.params.plant_galois) {
    auto g = galois_piece(c);
    return *g;
  }
  const bool faithful_needed = c.order > 1;
  if (c.params.lane == Lane::Ungraded && c.params.degree_zero == DegreeZeroPart::BaseOnly) {
    Piece p = base_piece(c.base, c.order);
    return faithful_needed ? rotation(p, c.order) : p;
  }
  std::vector<Piece> parts;

  if (c.params.degree_zero == DegreeZeroPart::Larger || c.params.lane == Lane::Ungraded ||
      (c.params.lane == Lane::Nonnegative && c.rng.chance(50))) {
    parts.push_back(degree_zero_factor(c, std::max<std::size_t>(2, max_rank / 2)));
  }
  if (c.params.lane != Lane::Ungraded) {
    std::size_t used = 1;
    for (const auto& p : parts) used *= p.rank();
    parts.push_back(graded_factor(c, std::max<std::size_t>(2, max_rank / used)));
  }
  Piece p = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) p = tensor(p, parts[i]);

  if (c.params.degree_zero == DegreeZeroPart::Any && c.rng.chance(25) && p.rank() * 2 <= max_rank) {
    Piece q = graded_factor(c, max_rank - p.rank());
    if (p.rank() + q.rank() <= max_rank) p = product(p, q);
  }
  if (!c.params.commutative_only && c.params.degree_zero != DegreeZeroPart::BaseOnly && c.rng.chance(30) &&
      p.rank() * 4 <= max_rank) {
    const int shift = c.params.lane == Lane::Ungraded ? 0 : draw_degree(c, 2);
    p = tensor(p, matrix_piece(c.base, shift, c.order));
  }

  if (faithful_needed) {
    const int roll = static_cast<int>(c.rng.range(0, 99));
    if (roll < 40 && p.rank() * c.order <= max_rank) {
      p = rotation(p, c.order);
    } else if (roll < 70) {
      auto g = galois_piece(c);
      if (g && p.rank() * g->rank() <= max_rank) p = tensor(p, *g);
    }
  }
  return p;
}

ExactMatrix random_unimodular(Rng& rng, const BaseRing& a, std::size_t n) {
  ExactMatrix m = ExactMatrix::identity(a, n);
  if (n == 0) return m;
  const std::size_t steps = static_cast<std::size_t>(rng.range(0, 2 * static_cast<long>(n)));
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = static_cast<std::size_t>(rng.range(0, n - 1));
    const std::size_t j = static_cast<std::size_t>(rng.range(0, n - 1));
    if (i == j) {
      // scale a row by a unit
      Scalar u = a.is_finite() ? a.reduce(Scalar(rng.range(1, 9))) : Scalar(-1);
      if (!a.is_unit(u)) continue;
      for (std::size_t c = 0; c < n; ++c) m.set(i, c, a.mul(u, m(i, c)));
    } else {
      const Scalar f = a.reduce(Scalar(rng.range(-3, 3)));
      for (std::size_t c = 0; c < n; ++c) m.set(i, c, a.add(m(i, c), a.mul(f, m(j, c))));
    }
  }
  return m;
}

// Re-express everything on the basis given by the columns of p.
void change_basis(Piece& piece, const ExactMatrix& p) {
  const BaseRing& a = piece.d.base;
  const GradedAlgebra old = GradedAlgebra::validate(piece.d);
  const auto pinv = inverse(p);
  if (!pinv) throw InternalInconsistency("basis change is not invertible");
  const std::size_t n = piece.rank();
  std::vector<StructureConstant> prods;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector c = pinv->apply(old.multiply(p.column(i), p.column(j)));
      for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) prods.push_back({i, j, k, c[k]});
    }
  }
  piece.d.products = std::move(prods);
  piece.d.unit = pinv->apply(piece.d.unit);
  for (auto& m : piece.act) m = *pinv * m * p;
  for (std::size_t i = 0; i < n; ++i) piece.d.names[i] = "b" + std::to_string(i);
  (void)a;
}

void random_basis_change(Context& c, Piece& piece) {
  const BaseRing& a = piece.d.base;
  const std::size_t n = piece.rank();
  std::map<int, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks[piece.d.degrees[i]].push_back(i);
  ExactMatrix p = ExactMatrix::identity(a, n);
  for (const auto& [d, idx] : blocks) {
    const ExactMatrix u = random_unimodular(c.rng, a, idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t s = 0; s < idx.size(); ++s) p.set(idx[r], idx[s], u(r, s));
  }
  change_basis(piece, p);
}

bool action_ok(const Piece& p, const GradedAlgebra& b, std::size_t order) {
  if (order <= 1) return true;
  try {
    GroupAction::validate(FiniteGroup::cyclic(order), b, p.act);
    return true;
  } catch (const ActionViolation&) {
    return false;
  }
}

void perturb(Context& c, Piece& piece, GenerationStats& stats) {
  const std::size_t n = piece.rank();
  for (std::size_t t = 0; t < c.params.repair_budget; ++t) {
    const std::size_t i = static_cast<std::size_t>(c.rng.range(0, n - 1));
    const std::size_t j = static_cast<std::size_t>(c.rng.range(0, n - 1));
    std::vector<std::size_t> ks;
    for (std::size_t k = 0; k < n; ++k)
      if (piece.d.degrees[k] == piece.d.degrees[i] + piece.d.degrees[j]) ks.push_back(k);
    if (ks.empty()) continue;
    const std::size_t k = c.rng.pick(ks);
    const Scalar delta = c.base.reduce(Scalar(c.rng.range(1, 3)));
    ++stats.perturbations_tried;
    const AlgebraDescription saved = piece.d;
    auto bump = [&](std::size_t a, std::size_t b) {
      for (auto& s : piece.d.products) {
        if (s.i == a && s.j == b && s.k == k) {
          s.value = c.base.add(s.value, delta);
          return;
        }
      }
      piece.d.products.push_back({a, b, k, delta});
    };
    bump(i, j);
    if (piece.d.commutative && i != j) bump(j, i);
    bool ok = GradedAlgebra::check_axioms(piece.d).empty();
    if (ok && c.order > 1) ok = action_ok(piece, GradedAlgebra::validate(piece.d), c.order);
    if (ok) {
      ++stats.perturbations_kept;
    } else {
      piece.d = saved;
      ++stats.perturbations_reverted;
    }
  }
  std::erase_if(piece.d.products, [](const StructureConstant& s) { return s.value == 0; });
}

bool lane_ok(const GeneratorParams& params, const GradedAlgebra& b) {
  const auto& ds = b.degrees();
  const bool any_pos = std::any_of(ds.begin(), ds.end(), [](int d) { return d > 0; });
  const bool any_neg = std::any_of(ds.begin(), ds.end(), [](int d) { return d < 0; });
  switch (params.lane) {
    case Lane::Ungraded:
      if (any_pos || any_neg) return false;
      break;
    case Lane::ForcedNonzero:
      if (!any_pos && !any_neg) return false;
      break;
    case Lane::Connective:
      if (any_neg || !any_pos) return false;
      break;
    case Lane::NegativeBounded:
      if (!any_neg) return false;
      break;
    case Lane::Nonnegative:
      if (any_neg) return false;
      break;
    case Lane::Mixed:
      break;
  }
  const std::size_t r0 = b.indices_of_degree(0).size();
  if (params.degree_zero == DegreeZeroPart::BaseOnly && r0 != 1) return false;
  if (params.degree_zero == DegreeZeroPart::Larger && r0 < 2) return false;
  if (params.commutative_only && !b.commutative()) return false;
  return true;
}

BaseRing draw_base(Rng& rng) {
  static const std::vector<int> menu = {0, 2, 3, 5, 7, 4, 6, 8, 9, 12};
  const int n = rng.pick(menu);
  if (n == 0) return BaseRing::integers();
  if (is_prime(static_cast<std::uint64_t>(n))) return BaseRing::prime_field(n);
  return BaseRing::integers_mod(n);
}

}  // namespace

GeneratedInstance random_graded_algebra(const GeneratorParams& params) {
  Rng rng(params.seed);
  GenerationStats stats;
  const BaseRing base = params.base ? *params.base : draw_base(rng);
  std::size_t order = 1;
  if (params.with_action || params.plant_galois) {
    order = params.group_order ? params.group_order : static_cast<std::size_t>(rng.range(2, 3));
    if (!params.with_action) order = 1;
  }
  Context ctx{params, base, order, std::move(rng)};

  while (stats.attempts < params.max_attempts) {
    ++stats.attempts;
    Piece p = compose(ctx);
    if (p.rank() > std::max<std::size_t>(params.max_rank, 2) && !params.plant_galois) {
      ++stats.rank_rejections;
      continue;
    }
    if (order > 1 && p.act.size() != order) {
      ++stats.action_rejections;
      continue;
    }
    random_basis_change(ctx, p);
    if (!params.plant_galois) perturb(ctx, p, stats);
    GradedAlgebra b = GradedAlgebra::validate(p.d);
    if (!lane_ok(params, b)) {
      ++stats.lane_rejections;
      continue;
    }
    std::optional<GroupAction> act;
    if (order > 1) {
      try {
        act = GroupAction::validate(FiniteGroup::cyclic(order), b, p.act);
      } catch (const ActionViolation&) {
        ++stats.action_rejections;
        continue;
      }
    }
    return GeneratedInstance{b, act, p.recipe, stats};
  }
  throw GenerationExhausted("no instance for lane " + lane_name(params.lane) + " after " +
                            std::to_string(stats.attempts) + " attempts");
}

}  // namespace gext
