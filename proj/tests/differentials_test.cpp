#include <gtest/gtest.h>

#include "gext/differentials.hpp"
#include "gext/gallery.hpp"
#include "gext/linalg.hpp"

using namespace gext;

namespace {

const BaseRing F2 = BaseRing::prime_field(2);

std::vector<GradedAlgebra> commutative_corpus() {
  return {make_finite_field_ext(2, 2).algebra,
          make_finite_field_ext(3, 2).algebra,
          make_trivial_galois(BaseRing::integers_mod(4), FiniteGroup::cyclic(2)).algebra,
          make_truncated_poly(F2, 2, 1),
          make_truncated_poly(F2, 4, 1),
          make_truncated_poly(BaseRing::integers(), 3, -1),
          make_truncated_poly(BaseRing::integers_mod(6), 3, 2),
          make_truncated_poly(BaseRing::integers_mod(4), 3, 0),
          make_base_algebra(BaseRing::integers())};
}

}  // namespace

TEST(AugmentationIdeal, Examples) {
  EXPECT_EQ(augmentation_ideal(make_base_algebra(F2)).cols(), 0u);

  const ExactMatrix dual = augmentation_ideal(make_truncated_poly(F2, 2, 1));
  EXPECT_EQ(smith_normal_form(dual).rank, 2u);
  TensorSquare t(make_truncated_poly(F2, 2, 1), false);
  Vector xx = t.pure(Vector{0, 1}, Vector{0, 1});
  Vector dx = derivation_tensor(t.algebra(), Vector{0, 1});
  EXPECT_TRUE(in_column_span(dual, xx));
  EXPECT_TRUE(in_column_span(dual, dx));

  EXPECT_EQ(smith_normal_form(augmentation_ideal(make_finite_field_ext(2, 2).algebra)).rank, 2u);
  EXPECT_THROW(augmentation_ideal(make_matrix_example(F2)), NotCommutative);
}

TEST(Kaehler, Examples) {
  EXPECT_TRUE(module_is_zero(kaehler_module(make_finite_field_ext(2, 2).algebra).omega));
  EXPECT_TRUE(module_is_zero(kaehler_module(make_base_algebra(BaseRing::integers())).omega));

  GradedAlgebra dual = make_truncated_poly(F2, 2, 1);
  KaehlerModule k = kaehler_module(dual);
  ModuleStructure s = module_structure(k.omega);
  EXPECT_EQ(s.free_rank, 2u);
  EXPECT_TRUE(s.torsion.empty());
  EXPECT_TRUE(is_free_rank_one_on(k, derivation_tensor(dual, Vector{0, 1})));
  EXPECT_FALSE(is_free_rank_one_on(k, derivation_tensor(dual, Vector{1, 0})));
}

TEST(Kaehler, IntegerDualNumbers) {
  // Z[x]/(x^2): Omega = B dx / (2x dx), so not free
  GradedAlgebra z = make_truncated_poly(BaseRing::integers(), 2, 1);
  KaehlerModule k = kaehler_module(z);
  ModuleStructure s = module_structure(k.omega);
  EXPECT_EQ(s.free_rank, 1u);
  EXPECT_EQ(s.torsion, (std::vector<Scalar>{2}));
  EXPECT_FALSE(is_free_rank_one_on(k, derivation_tensor(z, Vector{0, 1})));
}

TEST(UniversalDerivation, Examples) {
  GradedAlgebra dual = make_truncated_poly(F2, 2, 1);
  KaehlerModule k = kaehler_module(dual);
  EXPECT_TRUE(is_zero_class(k, universal_derivation(k, dual.unit_coords())));
  EXPECT_FALSE(is_zero_class(k, universal_derivation(k, Vector{0, 1})));

  GradedAlgebra f4 = make_finite_field_ext(2, 2).algebra;
  KaehlerModule kf = kaehler_module(f4);
  EXPECT_TRUE(is_zero_class(kf, universal_derivation(kf, Vector{0, 1})));
  EXPECT_THROW(kaehler_class(k, TensorSquare(dual, false).one()), InvalidArgument);
}

TEST(HH1, Examples) {
  auto w = hh1_nontrivial(make_truncated_poly(F2, 4, 1));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->degree, 1);
  EXPECT_EQ(w->differential_of, std::optional<std::size_t>(1));

  EXPECT_FALSE(hh1_nontrivial(make_finite_field_ext(2, 2).algebra));

  auto neg = hh1_nontrivial(make_truncated_poly(F2, 2, -2));
  ASSERT_TRUE(neg);
  EXPECT_EQ(neg->degree, -2);
}

TEST(HH1, PrefersLowestPositiveDegree) {
  // Z/6[x]/(x^3), deg x = 2: d(x) in degree 2 comes before anything in degree 4
  auto w = hh1_nontrivial(make_truncated_poly(BaseRing::integers_mod(6), 3, 2));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->degree, 2);
}

TEST(DifferentialsProperty, LeibnizOnBasisPairs) {
  for (const auto& b : commutative_corpus()) {
    KaehlerModule k = kaehler_module(b);
    for (std::size_t i = 0; i < b.rank(); ++i) {
      for (std::size_t j = 0; j < b.rank(); ++j) {
        const Vector u = unit_vector(b.base(), b.rank(), i), v = unit_vector(b.base(), b.rank(), j);
        const Vector defect = leibniz_defect(b, u, v);
        EXPECT_TRUE(is_zero_class(k, kaehler_class(k, defect)));
      }
    }
  }
}

TEST(DifferentialsProperty, DerivationsLieInIdeal) {
  for (const auto& b : commutative_corpus()) {
    const ExactMatrix ideal = augmentation_ideal(b);
    TensorSquare t(b, false);
    for (std::size_t c = 0; c < ideal.cols(); ++c) EXPECT_TRUE(is_zero(t.mu().apply(ideal.column(c))));
    for (std::size_t i = 0; i < b.rank(); ++i)
      EXPECT_TRUE(in_column_span(ideal, derivation_tensor(b, unit_vector(b.base(), b.rank(), i))));
  }
}

TEST(DifferentialsProperty, GaloisFixturesHaveNoDifferentials) {
  std::vector<AlgebraWithAction> fixtures = {make_finite_field_ext(2, 3), make_finite_field_ext(3, 2),
                                             make_trivial_galois(BaseRing::integers(), FiniteGroup::cyclic(3))};
  for (const auto& f : fixtures) EXPECT_TRUE(module_is_zero(kaehler_module(f.algebra).omega));
}
