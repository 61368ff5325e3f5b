#include <gtest/gtest.h>

#include <cmath>

#include "drury/fixtures.hpp"
#include "drury/ideals.hpp"
#include "drury/tuples.hpp"
#include "drury/vectors.hpp"
#include "helpers.hpp"

using namespace drury;
using testing_helpers::max_abs;
using testing_helpers::real_matrix;

TEST(Fixtures, MaxcountMatrices) {
  const double s = 1.0 / std::sqrt(3.0);
  const RowTuple t = maxcount();
  ASSERT_EQ(t.size(), 2);
  EXPECT_EQ(t[0], real_matrix({{0, 0, 0}, {s, 0, -s}, {0, 0, 0}}));
  EXPECT_EQ(t[1], real_matrix({{0, 0, 0}, {0, 0, s}, {0, 0, 0}}));
}

TEST(Fixtures, FromGriffProjections) {
  for (int n = 1; n <= 6; ++n) {
    const RowTuple t = fromgriff(n);
    EXPECT_EQ(t.dim(), 2 * n + 1);
    for (int k = 0; k < 2; ++k) {
      const Matrix p = 2.0 * t[k] * t[k].adjoint();
      EXPECT_LT(max_abs(p * p - p), 1e-15);
      EXPECT_LT(max_abs(p - p.adjoint()), 1e-15);
    }
    const TupleReport r = validate(t);
    EXPECT_TRUE(r.commuting);
    EXPECT_TRUE(r.row_contraction);
  }
  // T_1 xi_1 = eta_2 / sqrt(2), T_2 xi_1 = eta_1 / sqrt(2).
  const RowTuple t = fromgriff(3);
  EXPECT_EQ(t[0](4, 0), Complex(1.0 / std::sqrt(2.0)));
  EXPECT_EQ(t[1](3, 0), Complex(1.0 / std::sqrt(2.0)));
}

TEST(Fixtures, JordanAndRectangle) {
  EXPECT_EQ(jordan(1).dim(), 1);
  EXPECT_EQ(jordan(1)[0], Matrix::Zero(1, 1));
  const RowTuple j = jordan(4);
  Matrix shift = Matrix::Zero(4, 4);
  for (int i = 0; i < 3; ++i) {
    shift(i + 1, i) = 1;
  }
  EXPECT_LT(max_abs(j[0] - shift), 1e-14);

  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const RowTuple r = rectangle({a, b});
      EXPECT_EQ(r.dim(), a * b);
      EXPECT_EQ(nilpotency_index(r), a + b - 1);
      EXPECT_TRUE(validate(r).row_contraction);
      EXPECT_EQ(separating_greedy(r, 0).vectors.size(), 1u);
    }
  }
  EXPECT_THROW(rectangle({0, 2}), std::invalid_argument);
  EXPECT_THROW(jordan(0), std::invalid_argument);
  EXPECT_THROW(fromgriff(0), std::invalid_argument);
}

TEST(Fixtures, ModelFromGenerators) {
  const RowTuple m = model_fixture({Polynomial::parse("x1^2", 2), Polynomial::parse("x2", 2)});
  EXPECT_EQ(m.dim(), 2);
  const AnnihilatorBasis ideal = ideal_from_generators({Polynomial::parse("x1^2", 2), Polynomial::parse("x2", 2)});
  EXPECT_TRUE(same_ideal(annihilator(m), ideal));
  EXPECT_THROW(ideal_from_generators({Polynomial::parse("x1", 2)}), std::invalid_argument);
  EXPECT_THROW(ideal_from_generators({Polynomial::parse("1 + x1", 1)}), std::invalid_argument);
}

TEST(Fixtures, BuildByName) {
  EXPECT_EQ(build_fixture("maxcount").dim(), 3);
  EXPECT_EQ(build_fixture("fromgriff(3)").dim(), 7);
  EXPECT_EQ(build_fixture("fromgriff:2").dim(), 5);
  EXPECT_EQ(build_fixture("rectangle(2,3)").dim(), 6);
  EXPECT_EQ(build_fixture("jordan(3)").dim(), 3);
  EXPECT_EQ(build_fixture("model(x1^2, x1*x2, x2^2)").dim(), 3);
  EXPECT_THROW(build_fixture("nosuch"), std::invalid_argument);
  EXPECT_THROW(build_fixture("fromgriff(x)"), std::invalid_argument);
  EXPECT_FALSE(list_fixtures().empty());
}

TEST(Fixtures, PaperFactsOnMaxcount) {
  const RowTuple t = maxcount();
  EXPECT_EQ(quotient_algebra(annihilator(t)).dimension(), 3);
  EXPECT_EQ(omega_e(t).size(), 2u);
  Vector v = Vector::Zero(3);
  v(1) = 1;
  EXPECT_TRUE(is_cyclic(t.adjoint(), v));
}
