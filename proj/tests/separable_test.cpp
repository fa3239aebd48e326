#include <gtest/gtest.h>

#include "gext/gallery.hpp"
#include "gext/linalg.hpp"
#include "gext/separable.hpp"
#include "oracles.hpp"

using namespace gext;

namespace {

const BaseRing F2 = BaseRing::prime_field(2);

Vector v(std::initializer_list<long> xs) {
  Vector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// E11 (x) E11 + E21 (x) E12 on the basis E11, E22, E12, E21.
Vector matrix_idempotent() {
  Vector e(16, Scalar(0));
  e[0 * 4 + 0] = 1;
  e[3 * 4 + 2] = 1;
  return e;
}

}  // namespace

TEST(Separability, ProductOfTwoCopies) {
  GradedAlgebra axa = make_trivial_galois(F2, FiniteGroup::cyclic(2)).algebra;
  auto cert = separability_idempotent(axa);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(cert->mu_check && cert->centrality_check);
  EXPECT_EQ(cert->idempotent, v({1, 0, 0, 1}));
  SeparabilityCertificate c = check_separability(axa, v({1, 0, 0, 1}));
  EXPECT_TRUE(c.mu_check && c.centrality_check);
}

TEST(Separability, DualNumbersAreNot) {
  EXPECT_FALSE(separability_idempotent(make_truncated_poly(F2, 2, 1)).has_value());
  EXPECT_FALSE(separability_idempotent(make_truncated_poly(BaseRing::integers(), 3, 0)).has_value());
}

TEST(Separability, DualNumbersExhaustive) {
  GradedAlgebra b = make_truncated_poly(F2, 2, 1);
  std::size_t hits = 0;
  oracle::for_each_vector(2, 4, [&](const std::vector<std::uint32_t>& x) {
    Vector e(x.begin(), x.end());
    SeparabilityCertificate c = check_separability(b, e);
    if (c.mu_check && c.centrality_check) ++hits;
  });
  EXPECT_EQ(hits, 0u);
}

TEST(Separability, MatrixExample) {
  for (const BaseRing& ring : {F2, BaseRing::integers(), BaseRing::integers_mod(6)}) {
    GradedAlgebra m = make_matrix_example(ring);
    auto cert = separability_idempotent(m);
    ASSERT_TRUE(cert.has_value());
    SeparabilityCertificate c = check_separability(m, matrix_idempotent());
    EXPECT_TRUE(c.mu_check);
    EXPECT_TRUE(c.centrality_check);
  }
}

TEST(Separability, MatrixExampleIsoToMatrices) {
  GradedAlgebra m = make_matrix_example(BaseRing::integers());
  const auto entry = matrix_example_entry_map();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      // ordinary product of the elementary matrices
      const std::size_t ri = entry[i] / 2, ci = entry[i] % 2, rj = entry[j] / 2, cj = entry[j] % 2;
      Vector expect(4, Scalar(0));
      if (ci == rj) {
        for (std::size_t k = 0; k < 4; ++k)
          if (entry[k] == ri * 2 + cj) expect[k] = 1;
      }
      EXPECT_EQ(m.multiply(m.basis(i), m.basis(j)).coords(), expect);
    }
  }
}

TEST(Separability, FiniteFieldsAndProducts) {
  EXPECT_TRUE(separability_idempotent(make_finite_field_ext(2, 3).algebra).has_value());
  EXPECT_TRUE(separability_idempotent(make_finite_field_ext(3, 2).algebra).has_value());
  EXPECT_TRUE(
      separability_idempotent(make_trivial_galois(BaseRing::integers(), FiniteGroup::cyclic(3)).algebra)
          .has_value());
}

TEST(Projection, Examples) {
  GradedAlgebra axa = make_trivial_galois(F2, FiniteGroup::cyclic(2)).algebra;
  EXPECT_EQ(project_total_degree_zero(axa, v({1, 0, 0, 1})), v({1, 0, 0, 1}));

  GradedAlgebra m = make_matrix_example(F2);
  EXPECT_EQ(project_total_degree_zero(m, matrix_idempotent()), matrix_idempotent());
}

TEST(Projection, RemovesSpuriousComponent) {
  // over a graded base change of M2 with E12 in degree 2: the homogeneous system has
  // solutions of nonzero total degree, e.g. E12 (x) E12
  GradedAlgebra m = make_matrix_example(F2);
  TensorSquare t(m, true);
  auto [sys, rhs] = separability_system(t);
  const ExactMatrix k = kernel_basis(sys);
  Vector spurious;
  for (std::size_t c = 0; c < k.cols() && spurious.empty(); ++c) {
    Vector col = k.column(c);
    Vector homog(col.size(), Scalar(0));
    for (std::size_t idx = 0; idx < col.size(); ++idx)
      if (t.total_degree(idx) == 2) homog[idx] = col[idx];
    if (!is_zero(homog)) spurious = homog;
  }
  ASSERT_FALSE(spurious.empty());
  Vector e = matrix_idempotent();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += spurious[i];
  e = reduce(F2, e);
  SeparabilityCertificate c = check_separability(m, e);
  ASSERT_TRUE(c.mu_check && c.centrality_check);
  EXPECT_EQ(project_total_degree_zero(m, e), matrix_idempotent());
}

TEST(Projection, BrokenInputDetected) {
  GradedAlgebra axa = make_trivial_galois(F2, FiniteGroup::cyclic(2)).algebra;
  EXPECT_THROW(project_total_degree_zero(axa, v({1, 0, 0, 0})), ProjectionBroken);
}

TEST(Concentration, Examples) {
  GradedAlgebra axa = make_trivial_galois(F2, FiniteGroup::cyclic(2)).algebra;
  ConcentrationResult r = concentrate_idempotent(axa, v({1, 0, 0, 1}));
  EXPECT_EQ(r.outcome, ConcentrationOutcome::Concentrated);
  EXPECT_EQ(r.steps, 0u);

  GradedAlgebra f8 = make_finite_field_ext(2, 3).algebra;
  auto cert = separability_idempotent(f8);
  ASSERT_TRUE(cert);
  EXPECT_EQ(concentrate_idempotent(f8, cert->idempotent).outcome, ConcentrationOutcome::Concentrated);
}

TEST(Concentration, MatrixExampleGetsStuck) {
  GradedAlgebra m = make_matrix_example(F2);
  ConcentrationResult r = concentrate_idempotent(m, matrix_idempotent());
  ASSERT_EQ(r.outcome, ConcentrationOutcome::Stuck);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_FALSE(is_zero(r.witness->left));
  EXPECT_FALSE(is_zero(r.witness->right));
  EXPECT_TRUE(is_zero(m.multiply(r.witness->left, r.witness->right)));
  const Vector& x = r.witness->left_in_degree_zero ? r.witness->left : r.witness->right;
  EXPECT_TRUE(m.element(x).is_homogeneous_of_degree(0));
}

TEST(Regularity, Examples) {
  RegularityReport f4 = degree_zero_regularity(make_finite_field_ext(2, 2).algebra);
  EXPECT_TRUE(f4.regular_in_b);
  EXPECT_TRUE(f4.b0_domain);
  EXPECT_TRUE(f4.exhaustive);
  EXPECT_EQ(f4.checked, 3u);

  RegularityReport axa = degree_zero_regularity(make_trivial_galois(F2, FiniteGroup::cyclic(2)).algebra);
  EXPECT_FALSE(axa.regular_in_b);
  EXPECT_FALSE(axa.b0_domain);
  ASSERT_TRUE(axa.witness);

  EXPECT_TRUE(degree_zero_regular(make_truncated_poly(F2, 2, 1)));
  EXPECT_FALSE(degree_zero_regular(make_matrix_example(F2)));
}

TEST(Regularity, ReadingsDiffer) {
  // F2[x]/(x^2) with deg x = 0 has B0 = B, not a domain; with deg x = 1, B0 = F2
  // is a domain and its elements act injectively.
  RegularityReport flat = degree_zero_regularity(make_truncated_poly(F2, 2, 0));
  EXPECT_FALSE(flat.b0_domain);
  EXPECT_FALSE(flat.regular_in_b);
  RegularityReport z = degree_zero_regularity(make_truncated_poly(BaseRing::integers(), 3, 2));
  EXPECT_TRUE(z.regular_in_b);
  EXPECT_FALSE(z.exhaustive);
  EXPECT_FALSE(degree_zero_regular(make_truncated_poly(BaseRing::integers_mod(4), 2, 1)));
}

TEST(SeparabilityProperty, CertificatesRecheckAndProject) {
  std::vector<GradedAlgebra> corpus = {
      make_finite_field_ext(2, 2).algebra, make_finite_field_ext(5, 2).algebra,
      make_trivial_galois(BaseRing::integers_mod(4), FiniteGroup::cyclic(3)).algebra,
      make_matrix_example(BaseRing::integers()), make_matrix_example(BaseRing::prime_field(3)),
      make_base_algebra(BaseRing::integers_mod(9))};
  for (const auto& b : corpus) {
    auto cert = separability_idempotent(b);
    ASSERT_TRUE(cert);
    const Vector e0 = project_total_degree_zero(b, cert->idempotent);
    SeparabilityCertificate c = check_separability(b, e0);
    EXPECT_TRUE(c.mu_check && c.centrality_check);
    // sigma(b) = (b (x) 1) e is a bimodule section: mu(sigma(b)) = b
    TensorSquare t(b, true);
    for (std::size_t k = 0; k < b.rank(); ++k) {
      const Vector ek = unit_vector(b.base(), b.rank(), k);
      EXPECT_EQ(t.mu().apply(t.left_action(ek, e0)), ek);
    }
  }
}
