#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "gext/errors.hpp"
#include "gext/kernels/modrow.hpp"
#include "gext/linalg.hpp"

namespace gext {

namespace {

// Arithmetic policies for the elimination template. Each provides row
// operations on augmented rows plus the scalar helpers the pivoting needs.

struct IntegerOps {
  using Elem = Scalar;
  using Row = std::vector<Scalar>;

  static bool zero(const Elem& x) { return x == 0; }
  // Pivot preference: smaller absolute value.
  static bool better_pivot(const Elem& a, const Elem& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  static std::optional<Elem> quotient(const Elem& b, const Elem& a) {
    if (!mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) return std::nullopt;
    Elem q;
    mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    return q;
  }
  static Elem normalizer(const Elem& a) { return a < 0 ? Elem(-1) : Elem(1); }
  // Nearest-integer quotient for Euclidean sweeps.
  static constexpr bool kFullPivot = true;
  static Elem rounded_quotient(const Elem& b, const Elem& a) {
    Elem q;
    Elem twice_b = 2 * b + a;
    Elem twice_a = 2 * a;
    mpz_fdiv_q(q.get_mpz_t(), twice_b.get_mpz_t(), twice_a.get_mpz_t());
    return q;
  }
  static bool is_one(const Elem& a) { return a == 1; }
  static Elem neg(const Elem& a) { return -a; }

  struct Transform {
    Elem g, s, t, c, d;  // rows <- [s t; c d] * rows, new pivot g
  };
  static Transform gcd_transform(const Elem& a, const Elem& b) {
    Bezout bz = extended_gcd(a, b);
    Transform tr;
    tr.g = bz.g;
    tr.s = bz.s;
    tr.t = bz.t;
    tr.c = -(b / bz.g);
    tr.d = a / bz.g;
    return tr;
  }
  // diag(a, b) -> diag(gcd, lcm): row transform and the transposed column transform.
  struct DiagFix {
    Elem g, l;
    Elem us, ut, uc, ud;  // U block
    Elem va, vb, vc, vd;  // V^T block
  };
  static DiagFix diag_fix(const Elem& a, const Elem& b) {
    Bezout bz = extended_gcd(a, b);
    DiagFix f;
    f.g = bz.g;
    f.l = (a / bz.g) * b;
    f.us = bz.s;
    f.ut = bz.t;
    f.uc = -(b / bz.g);
    f.ud = a / bz.g;
    f.va = 1;
    f.vb = 1;
    f.vc = -(bz.t * (b / bz.g));
    f.vd = bz.s * (a / bz.g);
    return f;
  }
  static bool divides(const Elem& a, const Elem& b) {
    if (a == 0) return b == 0;
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
  }

  void axpy(Row& dst, const Row& src, const Elem& f) const {
    if (f == 0) return;
    for (std::size_t i = 0; i < dst.size(); ++i) {
      if (src[i] != 0) dst[i] += f * src[i];
    }
  }
  void scale(Row& row, const Elem& f) const {
    for (auto& x : row) x *= f;
  }
  void combine(Row& x, Row& y, const Elem& a, const Elem& b, const Elem& c, const Elem& d) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
      Elem xi = x[i];
      x[i] = a * xi + b * y[i];
      y[i] = c * xi + d * y[i];
    }
  }

  Elem from_scalar(const Scalar& s) const { return s; }
  Scalar to_scalar(const Elem& e) const { return e; }
};

struct ModularOps {
  using Elem = kernels::Residue;
  using Row = std::vector<kernels::Residue>;
  static constexpr bool kFullPivot = false;

  std::uint32_t m;

  static bool zero(Elem x) { return x == 0; }
  std::uint64_t ideal(Elem a) const { return std::gcd<std::uint64_t>(a, m); }
  // Pivot preference: generates the larger ideal, ties broken by residue.
  bool better_pivot(Elem a, Elem b) const {
    const auto ga = ideal(a);
    const auto gb = ideal(b);
    return ga != gb ? ga < gb : a < b;
  }
  std::optional<Elem> quotient(Elem b, Elem a) const {
    const std::uint64_t g = ideal(a);
    if (b % g != 0) return std::nullopt;
    const std::uint64_t mm = m / g;
    if (mm == 1) return Elem{0};
    const std::uint64_t inv = inverse_mod((a / g) % mm, mm);
    return static_cast<Elem>((b / g) % mm * inv % mm);
  }
  Elem normalizer(Elem a) const {
    if (a == 0) return 1;
    const std::uint64_t g = ideal(a);
    const std::uint64_t mm = m / g;
    std::uint64_t u0 = mm == 1 ? 1 : inverse_mod((a / g) % mm, mm);
    for (std::uint64_t u = u0; u < m; u += mm) {
      if (std::gcd<std::uint64_t>(u, m) == 1) return static_cast<Elem>(u);
    }
    throw InternalInconsistency("modular normalizer not found");
  }
  static bool is_one(Elem a) { return a == 1; }
  Elem neg(Elem a) const { return a == 0 ? 0 : m - a; }
  Elem reduce_signed(std::int64_t x) const {
    const std::int64_t r = x % static_cast<std::int64_t>(m);
    return static_cast<Elem>(r < 0 ? r + m : r);
  }

  static std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod) {
    auto [g, s, t] = xgcd(static_cast<std::int64_t>(a), static_cast<std::int64_t>(mod));
    (void)t;
    if (g != 1) throw InternalInconsistency("inverse of non-unit requested");
    std::int64_t r = s % static_cast<std::int64_t>(mod);
    if (r < 0) r += static_cast<std::int64_t>(mod);
    return static_cast<std::uint64_t>(r);
  }
  static std::tuple<std::int64_t, std::int64_t, std::int64_t> xgcd(std::int64_t a,
                                                                   std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const std::int64_t q = old_r / r;
      std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
      std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
      std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
  }

  struct Transform {
    Elem g, s, t, c, d;
  };
  Transform gcd_transform(Elem a, Elem b) const {
    auto [g, s, t] = xgcd(a, b);
    Transform tr;
    tr.g = static_cast<Elem>(g % m);
    tr.s = reduce_signed(s);
    tr.t = reduce_signed(t);
    tr.c = reduce_signed(-(static_cast<std::int64_t>(b) / g));
    tr.d = reduce_signed(static_cast<std::int64_t>(a) / g);
    return tr;
  }
  struct DiagFix {
    Elem g, l;
    Elem us, ut, uc, ud;
    Elem va, vb, vc, vd;
  };
  // Inputs are divisors of m with 0 standing for m itself.
  DiagFix diag_fix(Elem a_res, Elem b_res) const {
    const std::int64_t a = a_res == 0 ? m : a_res;
    const std::int64_t b = b_res == 0 ? m : b_res;
    auto [g, s, t] = xgcd(a, b);
    DiagFix f;
    f.g = static_cast<Elem>(g % m);
    f.l = static_cast<Elem>(static_cast<std::uint64_t>(a / g) * static_cast<std::uint64_t>(b) % m);
    f.us = reduce_signed(s);
    f.ut = reduce_signed(t);
    f.uc = reduce_signed(-(b / g));
    f.ud = reduce_signed(a / g);
    f.va = 1;
    f.vb = 1;
    f.vc = reduce_signed(-(reduce_signed(t) * static_cast<std::int64_t>(reduce_signed(b / g))));
    f.vd = reduce_signed(static_cast<std::int64_t>(reduce_signed(s)) * reduce_signed(a / g));
    return f;
  }
  bool divides(Elem a, Elem b) const { return b % ideal(a) == 0; }

  void axpy(Row& dst, const Row& src, Elem f) const {
    kernels::axpy_mod(dst, src, f, m);
  }
  void scale(Row& row, Elem f) const { kernels::scale_mod(row, f, m); }
  void combine(Row& x, Row& y, Elem a, Elem b, Elem c, Elem d) const {
    kernels::combine_mod(x, y, a, b, c, d, m);
  }

  Elem from_scalar(const Scalar& s) const { return static_cast<Elem>(s.get_ui()); }
  Scalar to_scalar(Elem e) const { return Scalar(static_cast<unsigned long>(e)); }
};

// Row echelon form by unimodular row operations on augmented rows. Only the
// first `active` columns are eligible as pivots; the rest ride along.
template <class Ops>
void echelon_pass(const Ops& ops, std::vector<typename Ops::Row>& rows, std::size_t active) {
  std::size_t p = 0;
  const std::size_t nrows = rows.size();
  for (std::size_t col = 0; col < active && p < nrows; ++col) {
    std::optional<std::size_t> best;
    for (std::size_t r = p; r < nrows; ++r) {
      if (ops.zero(rows[r][col])) continue;
      if (!best || ops.better_pivot(rows[r][col], rows[*best][col])) best = r;
    }
    if (!best) continue;
    std::swap(rows[p], rows[*best]);
    auto normalize = [&] {
      const auto u = ops.normalizer(rows[p][col]);
      if (!ops.is_one(u)) ops.scale(rows[p], u);
    };
    normalize();
    for (std::size_t r = p + 1; r < nrows; ++r) {
      if (ops.zero(rows[r][col])) continue;
      const auto b = rows[r][col];
      const auto a = rows[p][col];
      if (auto q = ops.quotient(b, a)) {
        ops.axpy(rows[r], rows[p], ops.neg(*q));
      } else {
        const auto tr = ops.gcd_transform(a, b);
        ops.combine(rows[p], rows[r], tr.s, tr.t, tr.c, tr.d);
        normalize();
      }
    }
    ++p;
  }
}

// Diagonalise x in place by smallest-entry pivoting with Euclidean sweeps on
// both sides. Row operations also hit u, column operations hit the rows of vt.
template <class Ops>
void full_pivot_diagonalize(const Ops& ops, std::vector<typename Ops::Row>& x, std::vector<typename Ops::Row>& u,
                            std::vector<typename Ops::Row>& vt, std::size_t nr, std::size_t nc) {
  auto col_axpy = [&](std::size_t dst, std::size_t src, const auto& f) {
    for (std::size_t i = 0; i < nr; ++i)
      if (!ops.zero(x[i][src])) x[i][dst] += f * x[i][src];
    ops.axpy(vt[dst], vt[src], f);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < nr; ++i) std::swap(x[i][a], x[i][b]);
    std::swap(vt[a], vt[b]);
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(x[a], x[b]);
    std::swap(u[a], u[b]);
  };
  const std::size_t k = std::min(nr, nc);
  for (std::size_t t = 0; t < k; ++t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j)
        if (!ops.zero(x[i][j]) && (!best || ops.better_pivot(x[i][j], x[best->first][best->second]))) best = {i, j};
    if (!best) return;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    while (true) {
      for (std::size_t r = t + 1; r < nr; ++r)
        if (!ops.zero(x[r][t])) {
          const auto q = ops.rounded_quotient(x[r][t], x[t][t]);
          ops.axpy(x[r], x[t], ops.neg(q));
          ops.axpy(u[r], u[t], ops.neg(q));
        }
      for (std::size_t c = t + 1; c < nc; ++c)
        if (!ops.zero(x[t][c])) col_axpy(c, t, ops.neg(ops.rounded_quotient(x[t][c], x[t][t])));
      std::optional<std::size_t> row_left, col_left;
      for (std::size_t r = t + 1; r < nr; ++r)
        if (!ops.zero(x[r][t]) && (!row_left || ops.better_pivot(x[r][t], x[*row_left][t]))) row_left = r;
      for (std::size_t c = t + 1; c < nc; ++c)
        if (!ops.zero(x[t][c]) && (!col_left || ops.better_pivot(x[t][c], x[t][*col_left]))) col_left = c;
      if (!row_left && !col_left) break;
      if (row_left && (!col_left || ops.better_pivot(x[*row_left][t], x[t][*col_left])))
        swap_rows(t, *row_left);
      else
        swap_cols(t, *col_left);
    }
  }
}

// `extra` rides along with every row operation, so it ends as U * extra.
template <class Ops>
SmithReduction smith_impl(const Ops& ops, const ExactMatrix& m, const ExactMatrix* extra) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  using Row = typename Ops::Row;

  // Working rows: [X | U] in the row phase, [X^T | V^T] in the column phase.
  std::vector<Row> x(nr, Row(nc));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) x[i][j] = ops.from_scalar(m(i, j));
  const std::size_t uw = extra ? extra->cols() : nr;
  std::vector<Row> u(nr, Row(uw));
  for (std::size_t i = 0; i < nr; ++i) {
    if (extra)
      for (std::size_t j = 0; j < uw; ++j) u[i][j] = ops.from_scalar((*extra)(i, j));
    else
      u[i][i] = ops.from_scalar(Scalar(1));
  }
  std::vector<Row> vt(nc, Row(nc));
  for (std::size_t i = 0; i < nc; ++i) vt[i][i] = ops.from_scalar(Scalar(1));

  auto is_diag = [&](const std::vector<Row>& a, std::size_t cols) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && !ops.zero(a[i][j])) return false;
    return true;
  };

  auto run_phase = [&](std::vector<Row>& core, std::vector<Row>& transform, std::size_t cols) {
    const std::size_t tw = transform.empty() ? 0 : transform[0].size();
    if (tw == 0) {
      echelon_pass(ops, core, cols);
      return;
    }
    std::vector<Row> aug(core.size(), Row(cols + tw));
    for (std::size_t i = 0; i < core.size(); ++i) {
      std::copy(core[i].begin(), core[i].end(), aug[i].begin());
      std::copy(transform[i].begin(), transform[i].end(), aug[i].begin() + static_cast<std::ptrdiff_t>(cols));
    }
    echelon_pass(ops, aug, cols);
    for (std::size_t i = 0; i < core.size(); ++i) {
      std::copy(aug[i].begin(), aug[i].begin() + static_cast<std::ptrdiff_t>(cols), core[i].begin());
      std::copy(aug[i].begin() + static_cast<std::ptrdiff_t>(cols), aug[i].end(), transform[i].begin());
    }
  };

  auto transpose = [](const std::vector<Row>& a, std::size_t r, std::size_t c) {
    std::vector<Row> t(c, Row(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) t[j][i] = a[i][j];
    return t;
  };

  if constexpr (Ops::kFullPivot) {
    if (nr > 0 && nc > 0) full_pivot_diagonalize(ops, x, u, vt, nr, nc);
  } else if (nr > 0 && nc > 0) {
    constexpr int kMaxRounds = 100000;
    int round = 0;
    while (true) {
      run_phase(x, u, nc);
      if (is_diag(x, nc)) break;
      auto xt = transpose(x, nr, nc);
      run_phase(xt, vt, nr);
      x = transpose(xt, nc, nr);
      if (is_diag(x, nc)) break;
      if (++round > kMaxRounds) throw InternalInconsistency("Smith normal form did not converge");
    }
  }

  if (nr > 0 && nc > 0) {
    // Divisibility chain: replace (d_i, d_j) by (gcd, lcm) where needed.
    const std::size_t k = std::min(nr, nc);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (ops.zero(x[j][j]) || ops.divides(x[i][i], x[j][j])) continue;
        const auto f = ops.diag_fix(x[i][i], x[j][j]);
        ops.combine(u[i], u[j], f.us, f.ut, f.uc, f.ud);
        ops.combine(vt[i], vt[j], f.va, f.vb, f.vc, f.vd);
        x[i][i] = f.g;
        x[j][j] = f.l;
      }
      const auto unit = ops.normalizer(x[i][i]);
      if (!ops.is_one(unit)) {
        ops.scale(u[i], unit);
        Row single(1, x[i][i]);
        ops.scale(single, unit);
        x[i][i] = single[0];
      }
    }
  }

  SmithReduction out{ExactMatrix(m.base(), nr, nc), ExactMatrix(m.base(), nr, uw),
                     ExactMatrix(m.base(), nc, nc), 0};
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < uw; ++j) out.transformed.set(i, j, ops.to_scalar(u[i][j]));
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.v.set(j, i, ops.to_scalar(vt[i][j]));
  for (std::size_t i = 0; i < std::min(nr, nc); ++i) {
    out.d.set(i, i, ops.to_scalar(x[i][i]));
    if (!ops.zero(x[i][i])) ++out.rank;
  }
  return out;
}

}  // namespace

Vector SmithForm::diagonal() const {
  Vector diag;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) diag.push_back(d(i, i));
  return diag;
}

SmithReduction smith_reduce(const ExactMatrix& m, const ExactMatrix& extra) {
  if (extra.rows() != m.rows()) throw DimensionMismatch("smith_reduce: carried block has the wrong height");
  if (m.base().is_integers()) return smith_impl(IntegerOps{}, m, &extra);
  return smith_impl(ModularOps{m.base().modulus()}, m, &extra);
}

SmithForm smith_normal_form(const ExactMatrix& m) {
  SmithReduction r = m.base().is_integers() ? smith_impl(IntegerOps{}, m, nullptr)
                                            : smith_impl(ModularOps{m.base().modulus()}, m, nullptr);
  return SmithForm{std::move(r.transformed), std::move(r.d), std::move(r.v), r.rank};
}

}  // namespace gext
