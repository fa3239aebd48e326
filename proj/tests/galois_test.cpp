#include <cstdint>
#include <set>

#include <gtest/gtest.h>

#include "gext/galois.hpp"
#include "gext/gallery.hpp"
#include "gext/linalg.hpp"
#include "oracles.hpp"

using namespace gext;

namespace {

const BaseRing F2 = BaseRing::prime_field(2);

Vector v(std::initializer_list<long> xs) {
  Vector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<AlgebraWithAction> galois_fixtures() {
  return {make_trivial_galois(F2, FiniteGroup::cyclic(2)),
          make_trivial_galois(BaseRing::integers_mod(4), FiniteGroup::cyclic(2)),
          make_trivial_galois(BaseRing::integers_mod(4), FiniteGroup::cyclic(3)),
          make_trivial_galois(BaseRing::prime_field(3), FiniteGroup::cyclic(3)),
          make_trivial_galois(BaseRing::integers(), FiniteGroup::product_of_cyclic(2, 2)),
          make_finite_field_ext(2, 2),
          make_finite_field_ext(2, 3),
          make_finite_field_ext(3, 2),
          make_finite_field_ext(5, 2),
          make_finite_field_ext(3, 1)};
}

// F3[x]/(x^2), deg x = 1, with C2 acting by x -> -x.
AlgebraWithAction dual_numbers_with_sign() {
  const BaseRing f3 = BaseRing::prime_field(3);
  GradedAlgebra b = make_truncated_poly(f3, 2, 1);
  ExactMatrix neg = ExactMatrix::from_rows(f3, {{1, 0}, {0, 2}});
  return {b, validate_action(FiniteGroup::cyclic(2), b, {ExactMatrix::identity(f3, 2), neg})};
}

}  // namespace

TEST(FixedSubring, Examples) {
  auto f4 = make_finite_field_ext(2, 2);
  ExactMatrix fx = fixed_subring(f4.action);
  ASSERT_EQ(fx.cols(), 1u);
  EXPECT_EQ(fx.column(0), v({1, 0}));

  GradedAlgebra t = make_truncated_poly(F2, 3, 1);
  EXPECT_EQ(fixed_subring(GroupAction::trivial(t)).cols(), 3u);

  auto axa = make_trivial_galois(F2, FiniteGroup::cyclic(2));
  ExactMatrix d = fixed_subring(axa.action);
  ASSERT_EQ(d.cols(), 1u);
  EXPECT_EQ(d.column(0), v({1, 1}));
}

TEST(HMap, Examples) {
  auto f4 = make_finite_field_ext(2, 2);
  ExactMatrix h = h_map(f4.action);
  ASSERT_EQ(h.rows(), 4u);
  EXPECT_EQ(h.column(1), v({0, 1, 1, 1}));  // 1 (x) w -> (w, w + 1)

  GradedAlgebra t = make_truncated_poly(F2, 3, 1);
  EXPECT_EQ(h_map(GroupAction::trivial(t)), TensorSquare(t, false).mu());

  auto axa = make_trivial_galois(F2, FiniteGroup::cyclic(2));
  EXPECT_EQ(h_map(axa.action).column(1), v({0, 0, 1, 0}));
}

TEST(HMap, RefusesNoncommutative) {
  GradedAlgebra m = make_matrix_example(F2);
  EXPECT_THROW(h_map(GroupAction::trivial(m)), NotCommutative);
  EXPECT_THROW(is_galois(GroupAction::trivial(m)), NotCommutative);
}

TEST(IsGalois, Fixtures) {
  for (const auto& [b, act] : galois_fixtures()) {
    GaloisCertificate c = is_galois(act);
    EXPECT_TRUE(c.verdict) << b.base().name() << " rank " << b.rank();
    EXPECT_TRUE(c.fixed_ring_ok);
    EXPECT_TRUE(c.h_iso_ok);
    ASSERT_TRUE(c.h_inverse.has_value());
    EXPECT_EQ(*c.h_inverse * c.h, ExactMatrix::identity(b.base(), c.h.cols()));
  }
  EXPECT_TRUE(is_galois(GroupAction::trivial(make_base_algebra(BaseRing::integers()))).verdict);
}

TEST(IsGalois, GradedDualNumbersAreNot) {
  auto [b, act] = dual_numbers_with_sign();
  GaloisCertificate c = is_galois(act);
  EXPECT_TRUE(c.fixed_ring_ok);
  EXPECT_FALSE(c.h_iso_ok);
  EXPECT_FALSE(c.verdict);
  EXPECT_THROW(dual_basis(act), NotGalois);

  GradedAlgebra f2x = make_truncated_poly(F2, 2, 1);
  GroupAction relaxed = validate_action(FiniteGroup::cyclic(2), f2x,
                                        {ExactMatrix::identity(F2, 2), ExactMatrix::identity(F2, 2)},
                                        {.require_faithful = false});
  EXPECT_FALSE(is_galois(relaxed).verdict);
}

TEST(IsGalois, FixedRingTooLarge) {
  // trivial C2 action on F4 (unfaithful): fixed ring is all of F4
  GradedAlgebra f4 = make_finite_field_ext(2, 2).algebra;
  GroupAction relaxed = validate_action(FiniteGroup::cyclic(2), f4,
                                        {ExactMatrix::identity(F2, 2), ExactMatrix::identity(F2, 2)},
                                        {.require_faithful = false});
  GaloisCertificate c = is_galois(relaxed);
  EXPECT_FALSE(c.fixed_ring_ok);
  EXPECT_FALSE(c.faithful_required);
  EXPECT_FALSE(c.verdict);
}

TEST(Trace, Examples) {
  auto f4 = make_finite_field_ext(2, 2);
  EXPECT_EQ(trace(f4.action, v({0, 1})), v({1, 0}));
  EXPECT_EQ(trace(f4.action, v({1, 0})), v({0, 0}));
  GradedAlgebra t = make_truncated_poly(F2, 3, 1);
  EXPECT_EQ(trace(GroupAction::trivial(t), v({1, 0, 1})), v({1, 0, 1}));
}

TEST(DualBasis, F4) {
  auto f4 = make_finite_field_ext(2, 2);
  DualBasisCertificate d = dual_basis(f4.action);
  EXPECT_EQ(d.preimage, v({1, 1, 1, 0}));  // 1 (x) (1 + w) + w (x) 1
  EXPECT_TRUE(d.residuals_zero);
  ASSERT_EQ(d.x.size(), 2u);
  EXPECT_EQ(d.phi[0][1], 0);
  EXPECT_EQ(d.phi[1][1], 1);
}

TEST(DualBasis, TrivialGroupAndSwap) {
  DualBasisCertificate d = dual_basis(GroupAction::trivial(make_base_algebra(BaseRing::integers())));
  ASSERT_EQ(d.x.size(), 1u);
  EXPECT_EQ(d.y[0], v({1}));

  auto axa = make_trivial_galois(F2, FiniteGroup::cyclic(2));
  DualBasisCertificate s = dual_basis(axa.action);
  EXPECT_EQ(s.preimage, v({1, 0, 0, 1}));
  EXPECT_TRUE(s.residuals_zero);
}

TEST(GaloisProperty, DualBasisResidualsVanish) {
  for (const auto& [b, act] : galois_fixtures()) {
    DualBasisCertificate d = dual_basis(act);
    EXPECT_TRUE(d.residuals_zero);
    for (const auto& r : d.residuals) EXPECT_TRUE(is_zero(r));
  }
}

TEST(GaloisProperty, HIsMultiplicative) {
  for (const auto& [b, act] : galois_fixtures()) {
    const ExactMatrix h = h_map(act);
    TensorSquare t(b, false);
    const std::size_t n = b.rank();
    for (std::size_t s = 0; s < t.rank(); ++s) {
      for (std::size_t u = 0; u < t.rank(); ++u) {
        const Vector es = unit_vector(b.base(), t.rank(), s), eu = unit_vector(b.base(), t.rank(), u);
        const Vector lhs = h.apply(t.multiply(es, eu));
        const Vector hs = h.column(s), hu = h.column(u);
        for (std::size_t g = 0; g < act.group().order(); ++g) {
          Vector a(hs.begin() + g * n, hs.begin() + (g + 1) * n);
          Vector c(hu.begin() + g * n, hu.begin() + (g + 1) * n);
          EXPECT_EQ(Vector(lhs.begin() + g * n, lhs.begin() + (g + 1) * n), b.multiply(a, c));
        }
      }
    }
  }
}

TEST(GaloisProperty, TraceIsInvariantAndFixed) {
  for (const auto& [b, act] : galois_fixtures()) {
    for (std::size_t i = 0; i < b.rank(); ++i) {
      const Vector y = unit_vector(b.base(), b.rank(), i);
      const Vector tr = trace(act, y);
      EXPECT_TRUE(unit_coefficient(b, tr).has_value());
      for (std::size_t g = 0; g < act.group().order(); ++g) EXPECT_EQ(trace(act, act.apply(g, y)), tr);
    }
  }
}

TEST(GaloisOracle, HBijectiveByEnumerationOverF2) {
  std::vector<AlgebraWithAction> f2 = {make_trivial_galois(F2, FiniteGroup::cyclic(2)),
                                       make_finite_field_ext(2, 2), make_finite_field_ext(2, 3),
                                       make_finite_field_ext(2, 4)};
  for (const auto& [b, act] : f2) {
    const ExactMatrix h = h_map(act);
    std::vector<std::uint32_t> col_bits(h.cols(), 0);
    for (std::size_t c = 0; c < h.cols(); ++c)
      for (std::size_t r = 0; r < h.rows(); ++r)
        if (h(r, c) != 0) col_bits[c] |= std::uint32_t{1} << r;
    std::set<std::uint32_t> images;
    oracle::for_each_vector(2, h.cols(), [&](const std::vector<std::uint32_t>& x) {
      std::uint32_t img = 0;
      for (std::size_t c = 0; c < x.size(); ++c)
        if (x[c]) img ^= col_bits[c];
      images.insert(img);
    });
    EXPECT_EQ(images.size(), std::size_t{1} << h.cols());
    EXPECT_EQ(h.rows(), h.cols());
    EXPECT_TRUE(is_galois(act).h_iso_ok);
  }
}
