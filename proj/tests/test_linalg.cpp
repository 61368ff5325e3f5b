#include <gtest/gtest.h>

#include <cmath>

#include "drury/linalg.hpp"
#include "drury/random.hpp"
#include "helpers.hpp"

using namespace drury;
using testing_helpers::real_matrix;

TEST(OperatorNorm, ZeroIdentityAndShift) {
  EXPECT_EQ(operator_norm(Matrix::Zero(3, 3)), 0.0);
  EXPECT_NEAR(operator_norm(identity(4)), 1.0, 1e-12);
  EXPECT_NEAR(operator_norm(real_matrix({{0, 0}, {1, 0}})), 1.0, 1e-12);
}

TEST(OperatorNorm, AgreesWithAdjointAndPowerIteration) {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(5, 3, rng);
    const double n = operator_norm(a);
    EXPECT_NEAR(n, operator_norm(a.adjoint()), 1e-12 * n);
    // Power iteration on A^* A as an independent estimate.
    Vector v = Vector::Ones(3);
    for (int i = 0; i < 500; ++i) {
      v = a.adjoint() * (a * v);
      v /= v.norm();
    }
    EXPECT_NEAR(n, (a * v).norm(), 1e-9 * n);
  }
}

TEST(RankKernel, Examples) {
  const RankKernel id = rank_and_kernel(identity(3));
  EXPECT_EQ(id.rank, 3);
  EXPECT_EQ(id.kernel.cols(), 0);

  const RankKernel z = rank_and_kernel(Matrix::Zero(2, 2));
  EXPECT_EQ(z.rank, 0);
  ASSERT_EQ(z.kernel.cols(), 2);
  EXPECT_LT(testing_helpers::max_abs(z.kernel.adjoint() * z.kernel - identity(2)), 1e-12);

  const RankKernel d = rank_and_kernel(real_matrix({{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(d.rank, 2);
  ASSERT_EQ(d.kernel.cols(), 1);
  EXPECT_NEAR(std::abs(d.kernel(1, 0)), 1.0, 1e-12);
}

TEST(RankKernel, KernelIsAnnihilatedForRandomLowRank) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(6, 2, rng) * random_matrix(2, 5, rng);
    const RankKernel rk = rank_and_kernel(a);
    EXPECT_EQ(rk.rank, 2);
    EXPECT_EQ(rk.kernel.cols(), 3);
    EXPECT_LE(operator_norm(a * rk.kernel), 10 * 1e-9 * operator_norm(a));
  }
}

TEST(PsdBelowIdentity, Examples) {
  EXPECT_TRUE(psd_below_identity(real_matrix({{0, 0, 0}, {0, 1, 0}, {0, 0, 0}})));
  EXPECT_TRUE(psd_below_identity(identity(3)));
  EXPECT_FALSE(psd_below_identity(real_matrix({{1.5, 0}, {0, 0}})));
}

TEST(PsdBelowIdentity, RejectsBadShapes) {
  EXPECT_THROW(psd_below_identity(Matrix::Zero(2, 3)), std::invalid_argument);
  EXPECT_THROW(psd_below_identity(real_matrix({{0, 1}, {0, 0}})), std::invalid_argument);
}

TEST(Orthonormalize, Examples) {
  const Matrix one = orthonormalize(real_matrix({{2}, {0}, {0}}));
  ASSERT_EQ(one.cols(), 1);
  EXPECT_NEAR(std::abs(one(0, 0)), 1.0, 1e-15);

  const Matrix dup = orthonormalize(real_matrix({{1, 1}, {2, 2}, {3, 3}}));
  EXPECT_EQ(dup.cols(), 1);

  const Matrix plane = orthonormalize(real_matrix({{1, 1}, {1, -1}, {0, 0}}));
  ASSERT_EQ(plane.cols(), 2);
  EXPECT_LT(testing_helpers::max_abs(plane.row(2)), 1e-15);
  EXPECT_LT(testing_helpers::max_abs(plane.adjoint() * plane - identity(2)), 1e-9);
}

TEST(Orthonormalize, RandomFramesAreOrthonormal) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix q = orthonormalize(random_matrix(7, 4, rng));
    ASSERT_EQ(q.cols(), 4);
    EXPECT_LT(testing_helpers::max_abs(q.adjoint() * q - identity(4)), 1e-9);
  }
}

TEST(Rref, ReducesToEchelonForm) {
  const Matrix r = rref(real_matrix({{2, 4, 2}, {1, 2, 3}, {3, 6, 5}}));
  ASSERT_EQ(r.rows(), 2);
  EXPECT_LT(testing_helpers::max_abs(r - real_matrix({{1, 2, 0}, {0, 0, 1}})), 1e-12);
}

TEST(SubspaceDistance, DetectsEqualAndDifferentSpans) {
  const Matrix a = real_matrix({{1, 0}, {0, 1}, {0, 0}});
  const Matrix b = orthonormalize(real_matrix({{1, 1}, {1, -1}, {0, 0}}));
  EXPECT_LT(subspace_distance(a, b), 1e-12);
  const Matrix c = real_matrix({{1, 0}, {0, 0}, {0, 1}});
  EXPECT_NEAR(subspace_distance(a, c), 1.0, 1e-12);
  EXPECT_EQ(subspace_distance(a, real_matrix({{1}, {0}, {0}})), 1.0);
}

TEST(ToleranceConfig, RejectsNonPositiveValues) {
  Tolerance t;
  EXPECT_NO_THROW(t.check());
  t.rank_rel_tol = 0;
  EXPECT_THROW(t.check(), std::invalid_argument);
  t = Tolerance{};
  t.max_iter = 0;
  EXPECT_THROW(t.check(), std::invalid_argument);
}
