#include "gext/gallery.hpp"

#include <algorithm>

namespace gext {

namespace {

using Poly = std::vector<unsigned>;  // low degree first

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  const std::size_t dm = m.size() - 1;
  const unsigned lead_inv = [&] {
    for (unsigned c = 1; c < p; ++c)
      if ((c * m.back()) % p == 1) return c;
    return 1u;
  }();
  while (a.size() > dm) {
    const unsigned top = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - top) * m[i]) % p;
    a.pop_back();
  }
  return a;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

Poly monic_from_index(std::uint64_t idx, unsigned p, unsigned d) {
  Poly f(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    f[i] = static_cast<unsigned>(idx % p);
    idx /= p;
  }
  f[d] = 1;
  return f;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool irreducible(const Poly& f, unsigned p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_is_zero(poly_mod(f, monic_from_index(idx, p, d), p))) return false;
    }
  }
  return true;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

Poly x_power(std::uint64_t e, const Poly& f, unsigned p) {
  Poly result{1};
  Poly base = poly_mod(Poly{0, 1}, f, p);
  while (e) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  result.resize(f.size() - 1, 0);
  return result;
}

std::string monomial_name(std::size_t j) {
  if (j == 0) return "1";
  if (j == 1) return "x";
  return "x^" + std::to_string(j);
}

}  // namespace

GradedAlgebra make_base_algebra(const BaseRing& base) {
  AlgebraDescription d{base, {"1"}, {0}, {Scalar(1)}, {{0, 0, 0, Scalar(1)}}, true};
  d.unit = reduce(base, d.unit);
  d.products[0].value = base.reduce(Scalar(1));
  return GradedAlgebra::validate(d);
}

AlgebraWithAction make_trivial_galois(const BaseRing& base, const FiniteGroup& group) {
  const std::size_t n = group.order();
  AlgebraDescription d;
  d.base = base;
  d.commutative = true;
  for (std::size_t g = 0; g < n; ++g) {
    d.names.push_back("e" + std::to_string(g));
    d.degrees.push_back(0);
    d.unit.push_back(base.reduce(Scalar(1)));
    d.products.push_back({g, g, g, base.reduce(Scalar(1))});
  }
  GradedAlgebra b = GradedAlgebra::validate(d);
  std::vector<ExactMatrix> mats;
  for (std::size_t g = 0; g < n; ++g) {
    ExactMatrix m(base, n, n);
    for (std::size_t h = 0; h < n; ++h) m.set(group.multiply(g, h), h, Scalar(1));
    mats.push_back(std::move(m));
  }
  GroupAction act = GroupAction::validate(group, b, std::move(mats));
  return {b, act};
}

std::vector<unsigned> first_irreducible(unsigned p, unsigned n) {
  if (!is_prime(p)) throw InvalidArgument("make_finite_field_ext: p must be prime");
  if (n == 0) throw InvalidArgument("make_finite_field_ext: n must be positive");
  if (ipow(p, n) > (1u << 16) || n > 16)
    throw NoIrreducibleFound("field of order p^n above 2^16 is out of range");
  const std::uint64_t count = ipow(p, n);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = monic_from_index(idx, p, n);
    if (irreducible(f, p)) return f;
  }
  throw NoIrreducibleFound("no monic irreducible polynomial found");
}

AlgebraWithAction make_finite_field_ext(unsigned p, unsigned n) {
  const Poly f = first_irreducible(p, n);
  const BaseRing base = BaseRing::prime_field(p);
  AlgebraDescription d;
  d.base = base;
  d.commutative = true;
  for (std::size_t j = 0; j < n; ++j) {
    d.names.push_back(monomial_name(j));
    d.degrees.push_back(0);
    d.unit.push_back(Scalar(j == 0 ? 1 : 0));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Poly prod = x_power(i + j, f, p);
      for (std::size_t k = 0; k < n; ++k)
        if (prod[k]) d.products.push_back({i, j, k, Scalar(prod[k])});
    }
  }
  GradedAlgebra b = GradedAlgebra::validate(d);

  // Frobenius^s sends x^j to x^(j p^s).
  std::vector<ExactMatrix> mats;
  std::uint64_t q = 1;
  for (unsigned s = 0; s < n; ++s) {
    ExactMatrix m(base, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const Poly img = x_power(j * q, f, p);
      for (std::size_t k = 0; k < n; ++k) m.set(k, j, Scalar(img[k]));
    }
    mats.push_back(std::move(m));
    q *= p;
  }
  GroupAction act = GroupAction::validate(FiniteGroup::cyclic(n), b, std::move(mats));
  return {b, act};
}

GradedAlgebra make_matrix_example(const BaseRing& base) {
  // entry (r, c) of each basis matrix
  const std::size_t rc[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
  AlgebraDescription d;
  d.base = base;
  d.names = {"E11", "E22", "E12", "E21"};
  d.degrees = {0, 0, 2, -2};
  d.unit = reduce(base, Vector{1, 1, 0, 0});
  d.commutative = false;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (rc[i][1] != rc[j][0]) continue;
      for (std::size_t k = 0; k < 4; ++k) {
        if (rc[k][0] == rc[i][0] && rc[k][1] == rc[j][1])
          d.products.push_back({i, j, k, base.reduce(Scalar(1))});
      }
    }
  }
  return GradedAlgebra::validate(d);
}

std::vector<std::size_t> matrix_example_entry_map() { return {0, 3, 1, 2}; }

GradedAlgebra make_truncated_poly(const BaseRing& base, std::size_t m, int k) {
  if (m < 2) throw InvalidArgument("make_truncated_poly: m must be at least 2");
  AlgebraDescription d;
  d.base = base;
  d.commutative = true;
  for (std::size_t j = 0; j < m; ++j) {
    d.names.push_back(monomial_name(j));
    d.degrees.push_back(static_cast<int>(j) * k);
    d.unit.push_back(base.reduce(Scalar(j == 0 ? 1 : 0)));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; i + j < m; ++j) d.products.push_back({i, j, i + j, base.reduce(Scalar(1))});
  return GradedAlgebra::validate(d);
}

std::vector<std::string> gallery_names() {
  return {"f4", "f8", "f9", "axa", "matrix-4.6", "truncated", "truncated-neg", "trivial-z4-c2",
          "trivial-f3-c3"};
}

AlgebraWithAction gallery_instance(const std::string& name) {
  const BaseRing f2 = BaseRing::prime_field(2);
  if (name == "f4") return make_finite_field_ext(2, 2);
  if (name == "f8") return make_finite_field_ext(2, 3);
  if (name == "f9") return make_finite_field_ext(3, 2);
  if (name == "axa") return make_trivial_galois(f2, FiniteGroup::cyclic(2));
  if (name == "trivial-z4-c2") return make_trivial_galois(BaseRing::integers_mod(4), FiniteGroup::cyclic(2));
  if (name == "trivial-f3-c3") return make_trivial_galois(BaseRing::prime_field(3), FiniteGroup::cyclic(3));
  if (name == "matrix-4.6") {
    GradedAlgebra b = make_matrix_example(f2);
    return {b, GroupAction::trivial(b)};
  }
  if (name == "truncated" || name == "truncated-neg") {
    GradedAlgebra b = make_truncated_poly(f2, 2, name == "truncated" ? 1 : -2);
    return {b, GroupAction::trivial(b)};
  }
  throw InvalidArgument("unknown gallery instance '" + name + "'");
}

}  // namespace gext
