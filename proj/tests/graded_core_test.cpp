#include <random>

#include <gtest/gtest.h>

#include "gext/gallery.hpp"
#include "gext/tensor_square.hpp"

using namespace gext;

namespace {

const BaseRing F2 = BaseRing::prime_field(2);

Vector v(std::initializer_list<long> xs) {
  Vector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

AlgebraDescription f4_description() {
  AlgebraDescription d;
  d.base = F2;
  d.names = {"1", "w"};
  d.degrees = {0, 0};
  d.unit = v({1, 0});
  d.products = {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}};
  return d;
}

Vector random_vector(std::mt19937_64& rng, const BaseRing& ring, std::size_t n) {
  std::uniform_int_distribution<long> dist(-20, 20);
  Vector out(n);
  for (auto& x : out) x = ring.reduce(Scalar(dist(rng)));
  return out;
}

std::vector<GradedAlgebra> corpus() {
  return {make_finite_field_ext(2, 2).algebra,
          make_finite_field_ext(3, 2).algebra,
          make_trivial_galois(BaseRing::integers_mod(4), FiniteGroup::cyclic(3)).algebra,
          make_matrix_example(BaseRing::integers()),
          make_matrix_example(BaseRing::integers_mod(6)),
          make_truncated_poly(BaseRing::integers(), 4, 1),
          make_truncated_poly(F2, 3, -2),
          make_base_algebra(BaseRing::integers())};
}

}  // namespace

TEST(GradedAlgebra, F4Validates) {
  GradedAlgebra b = GradedAlgebra::validate(f4_description());
  EXPECT_EQ(b.rank(), 2u);
  EXPECT_TRUE(b.commutative());
  EXPECT_EQ(b.basis(1) * b.basis(1), b.element(v({1, 1})));
}

TEST(GradedAlgebra, GradingViolationIsReported) {
  AlgebraDescription d = f4_description();
  d.degrees = {0, 1};
  try {
    GradedAlgebra::validate(d);
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& e) {
    bool saw = false;
    for (const auto& f : e.failures()) saw = saw || f.law == AlgebraLaw::Grading;
    EXPECT_TRUE(saw);
  }
}

TEST(GradedAlgebra, AssociativityViolationIsReported) {
  AlgebraDescription d = f4_description();
  d.products.pop_back();  // w*w = 1 gives F2[C2], still associative
  d.products.push_back({1, 0, 0, 1});
  auto failures = GradedAlgebra::check_axioms(d);
  EXPECT_FALSE(failures.empty());
}

TEST(GradedAlgebra, CommutativityFlagChecked) {
  AlgebraDescription d = make_matrix_example(F2).description();
  d.commutative = true;
  bool saw = false;
  for (const auto& f : GradedAlgebra::check_axioms(d)) saw = saw || f.law == AlgebraLaw::Commutativity;
  EXPECT_TRUE(saw);
}

TEST(GradedAlgebra, IntegersRankOne) {
  GradedAlgebra z = make_base_algebra(BaseRing::integers());
  EXPECT_EQ(z.rank(), 1u);
  EXPECT_EQ(z.unit() * z.unit(), z.unit());
  EXPECT_EQ(z.element(v({-7})) * z.element(v({3})), z.element(v({-21})));
}

TEST(GradedAlgebra, MatrixUnits) {
  GradedAlgebra m = make_matrix_example(F2);
  EXPECT_EQ(m.basis(0) * m.basis(2), m.basis(2));  // E11 E12 = E12
  EXPECT_TRUE((m.basis(2) * m.basis(0)).is_zero());
  EXPECT_EQ(m.basis(2) * m.basis(3), m.basis(0));
  std::vector<int> degs = m.degrees();
  std::sort(degs.begin(), degs.end());
  EXPECT_EQ(degs, (std::vector<int>{-2, 0, 0, 2}));
  EXPECT_FALSE(m.commutative());
}

TEST(GradedAlgebra, ParentMismatch) {
  GradedAlgebra a = make_finite_field_ext(2, 2).algebra;
  GradedAlgebra b = make_finite_field_ext(2, 2).algebra;
  EXPECT_THROW(multiply(a, a.unit(), b.unit()), ParentMismatch);
  EXPECT_THROW(AlgebraElement(a, v({1})), DimensionMismatch);
}

TEST(GradedAlgebra, DescriptionRoundTrip) {
  for (const auto& b : corpus()) {
    GradedAlgebra again = GradedAlgebra::validate(b.description());
    EXPECT_EQ(again.description().products.size(), b.description().products.size());
    for (std::size_t i = 0; i < b.rank(); ++i)
      for (std::size_t j = 0; j < b.rank(); ++j)
        for (std::size_t k = 0; k < b.rank(); ++k) EXPECT_EQ(again.constant(i, j, k), b.constant(i, j, k));
  }
}

TEST(GradedAlgebraProperty, UnitAndGradedProducts) {
  std::mt19937_64 rng(11);
  for (const auto& b : corpus()) {
    const std::size_t n = b.rank();
    for (int t = 0; t < 20; ++t) {
      AlgebraElement u = b.element(random_vector(rng, b.base(), n));
      EXPECT_EQ(u * b.unit(), u);
      EXPECT_EQ(b.unit() * u, u);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_TRUE((b.basis(i) * b.basis(j)).is_homogeneous_of_degree(b.degree(i) + b.degree(j)));
  }
}

TEST(GradedAlgebraProperty, AssociativeOnRandomElements) {
  std::mt19937_64 rng(12);
  for (const auto& b : corpus()) {
    for (int t = 0; t < 20; ++t) {
      AlgebraElement x = b.element(random_vector(rng, b.base(), b.rank()));
      AlgebraElement y = b.element(random_vector(rng, b.base(), b.rank()));
      AlgebraElement z = b.element(random_vector(rng, b.base(), b.rank()));
      EXPECT_EQ((x * y) * z, x * (y * z));
    }
  }
}

TEST(TensorSquare, RankAndMu) {
  GradedAlgebra f4 = GradedAlgebra::validate(f4_description());
  TensorSquare t = tensor_square(f4, false);
  EXPECT_EQ(t.rank(), 4u);
  EXPECT_EQ(t.mu().apply(t.pure(v({0, 1}), v({0, 1}))), v({1, 1}));
}

TEST(TensorSquare, OpTwistedMatrixUnits) {
  GradedAlgebra m = make_matrix_example(F2);
  TensorSquare t(m, true);
  const std::size_t n = m.rank();
  const Vector e11 = unit_vector(F2, n, 0), e12 = unit_vector(F2, n, 2), e21 = unit_vector(F2, n, 3);
  EXPECT_EQ(t.multiply(t.pure(e11, e11), t.pure(e12, e21)), t.pure(e12, e21));
  TensorSquare plain(m, false);
  EXPECT_TRUE(is_zero(plain.multiply(plain.pure(e11, e11), plain.pure(e12, e21))));
}

TEST(TensorSquareProperty, MuAfterUnitIsIdentity) {
  for (const auto& b : corpus()) {
    TensorSquare t(b, !b.commutative());
    const std::size_t n = b.rank();
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(t.pure(b.unit_coords(), unit_vector(b.base(), n, j)));
    ExactMatrix unit_tensor = ExactMatrix::from_columns(b.base(), n * n, cols);
    EXPECT_EQ(t.mu() * unit_tensor, ExactMatrix::identity(b.base(), n));
  }
}

TEST(TensorSquareProperty, MuIsHomogeneousAndMultiplicative) {
  std::mt19937_64 rng(13);
  for (const auto& b : corpus()) {
    TensorSquare t(b, false);
    const std::size_t n = b.rank();
    for (std::size_t idx = 0; idx < t.rank(); ++idx) {
      auto [i, j] = t.pair(idx);
      EXPECT_EQ(t.mu().column(idx), b.multiply(unit_vector(b.base(), n, i), unit_vector(b.base(), n, j)));
      EXPECT_TRUE(b.element(t.mu().column(idx)).is_homogeneous_of_degree(t.total_degree(idx)));
    }
    if (!b.commutative()) continue;
    for (int k = 0; k < 10; ++k) {
      Vector s = random_vector(rng, b.base(), t.rank());
      Vector u = random_vector(rng, b.base(), t.rank());
      EXPECT_EQ(t.mu().apply(t.multiply(s, u)), b.multiply(t.mu().apply(s), t.mu().apply(u)));
    }
  }
}

TEST(FiniteGroup, SmallCyclicGroupsValidate) {
  FiniteGroup c2 = validate_group({{0, 1}, {1, 0}});
  EXPECT_EQ(c2.order(), 2u);
  EXPECT_EQ(c2.inverse(1), 1u);
  FiniteGroup c3 = validate_group({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_EQ(c3.inverse(1), 2u);
  EXPECT_EQ(FiniteGroup::product_of_cyclic(2, 2).order(), 4u);
}

TEST(FiniteGroup, NonAssociativeRejected) {
  try {
    validate_group({{0, 1, 2}, {1, 0, 1}, {2, 2, 0}});
    FAIL();
  } catch (const GroupAxiomViolation& e) {
    EXPECT_EQ(e.law(), GroupLaw::Associativity);
  }
  EXPECT_THROW(validate_group({{0, 1}, {1, 2}}), GroupAxiomViolation);
  EXPECT_THROW(validate_group({{0, 1}}), GroupAxiomViolation);
}

TEST(GroupAction, FrobeniusOnF4) {
  auto [b, act] = make_finite_field_ext(2, 2);
  EXPECT_EQ(act.apply(1, v({0, 1})), v({1, 1}));
  EXPECT_TRUE(act.faithful());
}

TEST(GroupAction, SwapOnProduct) {
  auto [b, act] = make_trivial_galois(F2, FiniteGroup::cyclic(2));
  EXPECT_EQ(act.apply(1, v({1, 0})), v({0, 1}));
}

TEST(GroupAction, NonInjectiveRejected) {
  GradedAlgebra f4 = make_finite_field_ext(2, 2).algebra;
  std::vector<ExactMatrix> mats(2, ExactMatrix::identity(F2, 2));
  try {
    validate_action(FiniteGroup::cyclic(2), f4, mats);
    FAIL();
  } catch (const ActionViolation& e) {
    EXPECT_EQ(e.law(), ActionLaw::Injectivity);
  }
  GroupAction relaxed = validate_action(FiniteGroup::cyclic(2), f4, mats, {.require_faithful = false});
  EXPECT_FALSE(relaxed.faithful());
  EXPECT_FALSE(relaxed.faithful_required());
}

TEST(GroupAction, NonAutomorphismRejected) {
  GradedAlgebra f4 = make_finite_field_ext(2, 2).algebra;
  ExactMatrix bad = ExactMatrix::from_rows(F2, {{1, 0}, {0, 0}});
  EXPECT_THROW(validate_action(FiniteGroup::cyclic(2), f4, {ExactMatrix::identity(F2, 2), bad}),
               ActionViolation);
  GradedAlgebra t = make_truncated_poly(F2, 3, 1);
  // x -> x + 1 does not preserve degrees
  ExactMatrix shift = ExactMatrix::from_rows(F2, {{1, 1, 1}, {0, 1, 0}, {0, 0, 1}});
  try {
    validate_action(FiniteGroup::cyclic(2), t, {ExactMatrix::identity(F2, 3), shift});
    FAIL();
  } catch (const ActionViolation& e) {
    EXPECT_EQ(e.law(), ActionLaw::Degree);
  }
}

TEST(GroupActionProperty, MatricesComposeAndFixUnit) {
  std::vector<AlgebraWithAction> fixtures = {make_finite_field_ext(2, 3), make_finite_field_ext(3, 2),
                                             make_finite_field_ext(2, 4),
                                             make_trivial_galois(BaseRing::integers(),
                                                                 FiniteGroup::product_of_cyclic(2, 2))};
  for (const auto& [b, act] : fixtures) {
    const FiniteGroup& g = act.group();
    for (std::size_t x = 0; x < g.order(); ++x) {
      EXPECT_EQ(act.apply(x, b.unit_coords()), b.unit_coords());
      for (std::size_t y = 0; y < g.order(); ++y)
        EXPECT_EQ(act.matrix(x) * act.matrix(y), act.matrix(g.multiply(x, y)));
    }
  }
}

TEST(Gallery, FiniteFieldModuli) {
  EXPECT_EQ(first_irreducible(2, 2), (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(first_irreducible(2, 3), (std::vector<unsigned>{1, 1, 0, 1}));
  EXPECT_EQ(make_finite_field_ext(3, 1).algebra.rank(), 1u);
  EXPECT_THROW(make_finite_field_ext(2, 17), NoIrreducibleFound);
  EXPECT_THROW(make_finite_field_ext(4, 2), InvalidArgument);
}

TEST(Gallery, TruncatedPoly) {
  GradedAlgebra t = make_truncated_poly(BaseRing::integers_mod(4), 3, 0);
  EXPECT_TRUE(t.is_concentrated_in_degree_zero());
  GradedAlgebra neg = make_truncated_poly(F2, 2, -2);
  EXPECT_EQ(neg.degree(1), -2);
  EXPECT_FALSE(neg.is_connective());
  EXPECT_TRUE((neg.basis(1) * neg.basis(1)).is_zero());
  EXPECT_THROW(make_truncated_poly(F2, 1, 1), InvalidArgument);
}
