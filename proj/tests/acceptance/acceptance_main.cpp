// One line per acceptance criterion; exit status is nonzero if any fails.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gext/differentials.hpp"
#include "gext/fuzz.hpp"
#include "gext/gallery.hpp"
#include "gext/galois.hpp"
#include "gext/homology.hpp"
#include "gext/io.hpp"
#include "gext/linalg.hpp"
#include "gext/report.hpp"
#include "gext/separable.hpp"
#include "oracles.hpp"

using namespace gext;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

const BaseRing F2 = BaseRing::prime_field(2);

std::vector<std::pair<std::string, AlgebraWithAction>> galois_fixtures() {
  return {{"A^C2 over F_2", make_trivial_galois(F2, FiniteGroup::cyclic(2))},
          {"A^C2 over Z/4", make_trivial_galois(BaseRing::integers_mod(4), FiniteGroup::cyclic(2))},
          {"A^C3 over F_3", make_trivial_galois(BaseRing::prime_field(3), FiniteGroup::cyclic(3))},
          {"F_4", make_finite_field_ext(2, 2)},
          {"F_8", make_finite_field_ext(2, 3)},
          {"F_9", make_finite_field_ext(3, 2)}};
}

Vector basis(const GradedAlgebra& b, std::size_t i) { return unit_vector(b.base(), b.rank(), i); }

Vector add(const BaseRing& r, Vector a, const Vector& b, const Scalar& c = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = r.add(a[i], r.mul(c, b[i]));
  return a;
}

// Scalar s with s * 1 == v, read off an invertible unit coordinate.
std::optional<Scalar> as_scalar(const GradedAlgebra& b, const Vector& v) {
  const BaseRing& r = b.base();
  const Vector& one = b.unit_coords();
  for (std::size_t i = 0; i < one.size(); ++i) {
    auto inv = r.inverse(one[i]);
    if (!inv) continue;
    const Scalar s = r.mul(v[i], *inv);
    Vector sv(one.size());
    for (std::size_t k = 0; k < one.size(); ++k) sv[k] = r.mul(s, one[k]);
    if (sv != v) return std::nullopt;
    return s;
  }
  return std::nullopt;
}

Vector trace_of(const GroupAction& a, const Vector& y) {
  Vector t(y.size(), Scalar(0));
  for (std::size_t g = 0; g < a.group().order(); ++g) t = add(a.algebra().base(), t, a.matrix(g).apply(y));
  return t;
}

// Every element of B (x) B over F_2, mapped by x (x) y -> (x g(y))_g straight
// from the structure constants; h is bijective iff the images are distinct and
// the two sides have equal size.
bool h_bijective_by_enumeration(const GroupAction& a) {
  const GradedAlgebra& b = a.algebra();
  const std::size_t n = b.rank();
  const std::size_t order = a.group().order();
  if (order * n != n * n || n * n > 16) return false;
  std::vector<std::uint32_t> image_of_pair;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t bits = 0;
      for (std::size_t g = 0; g < order; ++g) {
        const Vector v = b.multiply(basis(b, i), a.apply(g, basis(b, j)));
        for (std::size_t k = 0; k < n; ++k)
          if (v[k] != 0) bits |= 1u << (g * n + k);
      }
      image_of_pair.push_back(bits);
    }
  std::set<std::uint32_t> images;
  oracle::for_each_vector(2, n * n, [&](const std::vector<std::uint32_t>& c) {
    std::uint32_t img = 0;
    for (std::size_t t = 0; t < c.size(); ++t)
      if (c[t]) img ^= image_of_pair[t];
    images.insert(img);
  });
  return images.size() == (std::size_t{1} << (n * n));
}

// mu(e) == 1 and b e == e b for all basis b, on the bimodule B (x) B^op with
// e = sum c_ij e_i (x) e_j, computed from the algebra's multiplication alone.
bool is_separability_element(const GradedAlgebra& b, const Vector& c) {
  const BaseRing& r = b.base();
  const std::size_t n = b.rank();
  Vector mu(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c[i * n + j] != 0) mu = add(r, mu, b.multiply(basis(b, i), basis(b, j)), c[i * n + j]);
  if (mu != b.unit_coords()) return false;
  for (std::size_t k = 0; k < n; ++k) {
    Vector left(n * n, Scalar(0)), right(n * n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (c[i * n + j] == 0) continue;
        const Vector bi = b.multiply(basis(b, k), basis(b, i));
        const Vector jb = b.multiply(basis(b, j), basis(b, k));
        for (std::size_t a = 0; a < n; ++a) {
          left[a * n + j] = r.add(left[a * n + j], r.mul(c[i * n + j], bi[a]));
          right[i * n + a] = r.add(right[i * n + a], r.mul(c[i * n + j], jb[a]));
        }
      }
    if (left != right) return false;
  }
  return true;
}

PresentedModule random_module_over(std::mt19937_64& g, const BaseRing& base) {
  auto range = [&](long lo, long hi) { return lo + static_cast<long>(g() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const std::size_t gens = static_cast<std::size_t>(range(1, 3));
  const std::size_t rels = static_cast<std::size_t>(range(0, 3));
  ExactMatrix m(base, gens, rels);
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t j = 0; j < rels; ++j) m.set(i, j, base.from_int(range(-6, 6)));
  return PresentedModule(base, std::vector<int>(gens, 0), m);
}

FuzzReport fuzz(const std::string& theorem, std::size_t trials, std::uint64_t seed = 2026, std::size_t jobs = 1) {
  FuzzOptions o;
  o.theorem = theorem;
  o.trials = trials;
  o.seed = seed;
  o.jobs = jobs;
  return run_fuzz(o);
}

void require_clean(Outcome& out, const FuzzReport& r, std::size_t min_trials) {
  out.require(r.trials.size() >= min_trials, r.options.theorem + " trial count");
  out.require(r.counterexamples == 0, r.options.theorem + " counterexample found");
  out.require(r.sensitivity_ok, r.options.theorem + " sensitivity check");
  out.detail << r.options.theorem << ": " << r.trials.size() << " trials, premise " << r.premise_count
             << ", counterexamples " << r.counterexamples << "; ";
}

// ---------------------------------------------------------------------------

void galois_fixtures_criterion(Outcome& out) {
  for (const auto& [name, f] : galois_fixtures()) {
    const GaloisCertificate c = is_galois(f.action);
    out.require(c.verdict, name + " certified Galois");
    const DualBasisCertificate d = dual_basis(f.action);
    out.require(d.residuals_zero, name + " dual basis residuals");
    const GradedAlgebra& b = f.algebra;
    for (std::size_t z = 0; z < b.rank(); ++z) {
      Vector sum(b.rank(), Scalar(0));
      for (std::size_t i = 0; i < d.x.size(); ++i) {
        auto phi = as_scalar(b, trace_of(f.action, b.multiply(basis(b, z), d.y[i])));
        out.require(phi.has_value(), name + " trace lands in the base");
        if (phi) sum = add(b.base(), sum, d.x[i], *phi);
      }
      out.require(sum == basis(b, z), name + " z = sum phi_i(z) x_i");
    }
    if (b.base() == F2) out.require(h_bijective_by_enumeration(f.action), name + " enumeration oracle");
  }
  out.detail << galois_fixtures().size() << " fixtures certified, dual bases exact, F_2 cases enumerated";
}

void concentration_criterion(Outcome& out) { require_clean(out, fuzz("thm-3.2", 500), 500); }

void separable_concentration_criterion(Outcome& out) {
  require_clean(out, fuzz("thm-4.2", 500), 500);
  require_clean(out, fuzz("rem-4.3", 500), 500);
  const GradedAlgebra m = make_matrix_example(F2);
  const auto cert = separability_idempotent(m);
  out.require(cert.has_value(), "matrix example separable");
  if (cert) out.require(is_separability_element(m, cert->idempotent), "matrix example idempotent rechecks");
  const auto& ds = m.degrees();
  out.require(std::any_of(ds.begin(), ds.end(), [](int d) { return d != 0; }), "matrix example graded");
  out.require(!degree_zero_regular(m), "matrix example has degree-zero zero divisors");
  out.detail << "matrix exhibit separable, graded, B0 not regular";
}

void separability_criterion(Outcome& out) {
  for (const BaseRing& base : {F2, BaseRing::integers(), BaseRing::integers_mod(6)}) {
    const GradedAlgebra axa = make_trivial_galois(base, FiniteGroup::cyclic(2)).algebra;
    Vector e(4, Scalar(0));
    e[0] = 1;
    e[3] = 1;
    out.require(is_separability_element(axa, e), "e1(x)e1 + e2(x)e2 over " + base.name());
    const auto cert = separability_idempotent(axa);
    out.require(cert && is_separability_element(axa, cert->idempotent), "A x A certificate over " + base.name());
  }
  const GradedAlgebra dual = make_truncated_poly(F2, 2, 0);
  out.require(!separability_idempotent(dual).has_value(), "F_2[x]/(x^2) has no certificate");
  std::size_t found = 0, checked = 0;
  oracle::for_each_vector(2, dual.rank() * dual.rank(), [&](const std::vector<std::uint32_t>& c) {
    ++checked;
    if (is_separability_element(dual, Vector(c.begin(), c.end()))) ++found;
  });
  out.require(found == 0, "enumeration found a separability element");
  out.detail << "A x A certified over 3 bases; F_2[x]/(x^2): " << checked << " tensor elements enumerated, "
             << found << " separable";
}

void differentials_criterion(Outcome& out) {
  std::size_t galois = 0;
  std::vector<AlgebraWithAction> more = {gallery_instance("f4"), gallery_instance("f8"), gallery_instance("f9"),
                                         gallery_instance("trivial-z4-c2")};
  for (const auto& [_, f] : galois_fixtures()) more.push_back(f);
  for (const auto& f : more) {
    if (!is_galois(f.action).verdict) continue;
    ++galois;
    out.require(module_is_zero(kaehler_module(f.algebra).omega), "Omega vanishes on a Galois instance");
  }
  const GradedAlgebra dual = make_truncated_poly(F2, 2, 1);
  const KaehlerModule k = kaehler_module(dual);
  const Vector dx = derivation_tensor(dual, basis(dual, 1));
  out.require(is_free_rank_one_on(k, dx), "Omega free of rank one on dx");
  const ModuleStructure s = module_structure(k.omega);
  out.require(s.torsion.empty() && s.free_rank == dual.rank(), "Omega has the size of B");
  require_clean(out, fuzz("lem-5.3", 200), 200);
  require_clean(out, fuzz("lem-5.8", 200), 200);
  std::size_t pairs = 0;
  for (const std::string name : {"f4", "f8", "f9", "axa", "truncated", "truncated-neg", "trivial-z4-c2"}) {
    const GradedAlgebra b = gallery_instance(name).algebra;
    const KaehlerModule kb = kaehler_module(b);
    TensorSquare t(b, false);
    for (std::size_t i = 0; i < b.rank(); ++i)
      for (std::size_t j = 0; j < b.rank(); ++j) {
        ++pairs;
        const Vector defect = leibniz_defect(b, basis(b, i), basis(b, j));
        const Vector prod = t.multiply(derivation_tensor(b, basis(b, i)), derivation_tensor(b, basis(b, j)));
        Vector neg(prod.size());
        for (std::size_t a = 0; a < prod.size(); ++a) neg[a] = b.base().neg(prod[a]);
        out.require(defect == neg, "Leibniz defect equals -du dv");
        out.require(is_zero_class(kb, kaehler_class(kb, defect)), "Leibniz defect vanishes in Omega");
      }
  }
  out.detail << galois << " Galois instances with Omega = 0; Leibniz on " << pairs << " basis pairs";
}

// H^s(C_2, Z) with trivial action from the inhomogeneous cochains, written out
// without the library's bar complex.
PresentedModule c2_trivial_cohomology(std::size_t s) {
  const BaseRing z = BaseRing::integers();
  auto d = [&](std::size_t k) {  // C^k -> C^{k+1}, C^k = Z^{2^k}
    const std::size_t src = std::size_t{1} << k, dst = std::size_t{1} << (k + 1);
    ExactMatrix m(z, dst, src);
    for (std::size_t tuple = 0; tuple < dst; ++tuple) {
      std::vector<std::size_t> g(k + 1);
      for (std::size_t i = 0; i <= k; ++i) g[i] = (tuple >> (k - i)) & 1;
      auto index = [&](const std::vector<std::size_t>& h) {
        std::size_t x = 0;
        for (std::size_t v : h) x = x * 2 + v;
        return x;
      };
      auto bump = [&](std::size_t col, long sign) { m.set(tuple, col, m(tuple, col) + sign); };
      bump(index(std::vector<std::size_t>(g.begin() + 1, g.end())), 1);
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> h;
        for (std::size_t j = 0; j < i; ++j) h.push_back(g[j]);
        h.push_back(g[i] ^ g[i + 1]);
        for (std::size_t j = i + 2; j <= k; ++j) h.push_back(g[j]);
        bump(index(h), (i + 1) % 2 ? -1 : 1);
      }
      bump(index(std::vector<std::size_t>(g.begin(), g.end() - 1)), (k + 1) % 2 ? -1 : 1);
    }
    return m;
  };
  const ExactMatrix cocycles = kernel_basis(d(s));
  const ExactMatrix boundaries = s == 0 ? ExactMatrix(z, 1, 0) : d(s - 1);
  return subquotient(cocycles, boundaries, 0);
}

void homology_criterion(Outcome& out) {
  const BaseRing z = BaseRing::integers();
  const PresentedModule z2 = PresentedModule::cyclic(z, 2);
  out.require(module_structure(tor(z2, z2, 1)) == ModuleStructure{{Scalar(2)}, 0}, "Tor_1(Z/2, Z/2) = Z/2");

  std::mt19937_64 g(404);
  const std::vector<BaseRing> bases = {z, BaseRing::integers_mod(4), BaseRing::integers_mod(12), F2,
                                       BaseRing::prime_field(5)};
  for (int i = 0; i < 50; ++i) {
    const BaseRing& base = bases[static_cast<std::size_t>(i) % bases.size()];
    const PresentedModule m = random_module_over(g, base), n = random_module_over(g, base);
    out.require(is_isomorphic(tor(m, n, 0), tensor_modules(m, n)), "Tor_0 matches the tensor product");
  }

  for (const auto& [name, f] : galois_fixtures()) {
    const GModule gm = GModule::from_action(f.action);
    out.require(is_isomorphic(group_cohomology(gm, 0), PresentedModule::free(f.algebra.base(), {0})),
                name + " H^0 = A");
    out.require(module_is_zero(group_cohomology(gm, 1)), name + " H^1 = 0");
    out.require(module_is_zero(group_cohomology(gm, 2)), name + " H^2 = 0");
  }

  const GModule trivial = GModule::trivial(FiniteGroup::cyclic(2), z, 1);
  for (std::size_t s = 0; s <= 3; ++s)
    out.require(is_isomorphic(group_cohomology(trivial, s), c2_trivial_cohomology(s)), "bar complex by hand");
  out.require(module_structure(group_cohomology(trivial, 2)) == ModuleStructure{{Scalar(2)}, 0}, "H^2(C2, Z) = Z/2");

  std::size_t nonzero = 0;
  for (std::uint64_t seed = 0; nonzero < 200; ++seed) {
    const PresentedModule m = random_module(trial_seed(99, seed));
    if (module_is_zero(m)) continue;
    ++nonzero;
    out.require(tensor_self_nonzero(m).nonzero, "M (x) M nonzero");
  }
  out.detail << "Tor_1 = Z/2; 50 Tor_0 pairs; H^0,1,2 on " << galois_fixtures().size()
             << " Galois fixtures; H^2(C2,Z) = Z/2; " << nonzero << " tensor squares";
}

void infrastructure_criterion(Outcome& out) {
  std::mt19937_64 g(7);
  const std::vector<BaseRing> rings = {BaseRing::integers(),    BaseRing::integers_mod(4), BaseRing::integers_mod(6),
                                       BaseRing::integers_mod(12), BaseRing::integers_mod(9), F2,
                                       BaseRing::prime_field(3),   BaseRing::prime_field(7)};
  std::size_t matrices = 0;
  for (const auto& ring : rings) {
    for (int t = 0; t < 1000; ++t) {
      const std::size_t r = 1 + g() % 6, c = 1 + g() % 6;
      ExactMatrix m(ring, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, g() % 3 == 0 ? Scalar(0) : ring.from_int(static_cast<long>(g() % 19) - 9));
      const SmithForm s = smith_normal_form(m);
      ++matrices;
      bool ok = s.u * m * s.v == s.d && s.d.is_diagonal();
      for (const ExactMatrix* x : {&s.u, &s.v}) {
        oracle::IntMatrix im(x->rows(), std::vector<mpz_class>(x->cols()));
        for (std::size_t i = 0; i < x->rows(); ++i)
          for (std::size_t j = 0; j < x->cols(); ++j) im[i][j] = (*x)(i, j);
        ok = ok && ring.is_unit(ring.reduce(oracle::determinant(im)));
      }
      const Vector diag = s.diagonal();
      for (std::size_t i = 0; i + 1 < diag.size(); ++i) ok = ok && ring.divide(diag[i + 1], diag[i]).has_value();
      out.require(ok, "Smith form over " + ring.name());
    }
  }
  for (const auto& name : gallery_names()) {
    const AlgebraWithAction f = gallery_instance(name);
    const std::string text = serialize_instance(document_from(f.algebra, f.action));
    const LoadedInstance back = load_instance(parse_instance_text(text));
    out.require(serialize_instance(document_from(back.algebra, back.action)) == text, "round trip " + name);
  }
  for (const auto& theorem : fuzz_theorems()) {
    const std::string a = to_json(fuzz(theorem, 60, 31)).dump();
    out.require(a == to_json(fuzz(theorem, 60, 31)).dump(), "fuzz determinism " + theorem);
    out.require(a == to_json(fuzz(theorem, 60, 31, 4)).dump(), "fuzz determinism across jobs " + theorem);
  }
  out.detail << matrices << " Smith forms; " << gallery_names().size() << " round trips; "
             << fuzz_theorems().size() << " deterministic fuzz reports";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"galois-fixtures", galois_fixtures_criterion},
      {"concentration-fuzz", concentration_criterion},
      {"separable-concentration-fuzz", separable_concentration_criterion},
      {"separability-oracles", separability_criterion},
      {"differentials", differentials_criterion},
      {"homology", homology_criterion},
      {"infrastructure", infrastructure_criterion},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome out;
    try {
      check(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail << "exception: " << e.what();
    }
    std::cout << (out.ok ? "PASS " : "FAIL ") << name << ": " << out.detail.str() << std::endl;
    if (!out.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
