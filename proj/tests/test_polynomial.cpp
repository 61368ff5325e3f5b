#include <gtest/gtest.h>

#include <cmath>

#include "drury/polynomial.hpp"
#include "drury/random.hpp"

using namespace drury;

namespace {

Polynomial random_poly(int d, int max_degree, Rng& rng) {
  Polynomial p(d);
  std::uniform_int_distribution<int> count(1, 6);
  std::normal_distribution<double> g;
  const auto monos = monomials_up_to(d, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    p.add_term(monos[pick(rng)], Complex(g(rng), g(rng)));
  }
  return p;
}

}  // namespace

TEST(MultiIndex, FactorialsAndDegree) {
  const MultiIndex a({2, 1, 0});
  EXPECT_EQ(a.degree(), 3);
  EXPECT_DOUBLE_EQ(a.factorial(), 2.0);
  EXPECT_DOUBLE_EQ(a.multinomial(), 3.0);
  EXPECT_EQ(a.to_string(), "x1^2*x2");
  EXPECT_EQ(MultiIndex::zero(2).to_string(), "1");
}

TEST(GradedOrder, TwoVariableOrder) {
  const auto m = monomials_up_to(2, 2);
  ASSERT_EQ(m.size(), 6u);
  EXPECT_EQ(m[1], MultiIndex({1, 0}));
  EXPECT_EQ(m[2], MultiIndex({0, 1}));
  EXPECT_EQ(m[3], MultiIndex({2, 0}));
  EXPECT_EQ(m[4], MultiIndex({1, 1}));
  EXPECT_EQ(m[5], MultiIndex({0, 2}));
  EXPECT_EQ(count_monomials_up_to(3, 4), 35);
}

TEST(Polynomial, ParseAndPrint) {
  const Polynomial p = Polynomial::parse("3*x1 + 2*x2");
  EXPECT_EQ(p.variables(), 2);
  EXPECT_EQ(p.to_string(), "3*x1 + 2*x2");
  const Polynomial q = Polynomial::parse("(1+2i)*x1^2*x2 - 2i + x3");
  EXPECT_EQ(q.variables(), 3);
  EXPECT_EQ(q.coefficient(MultiIndex({2, 1, 0})), Complex(1, 2));
  EXPECT_EQ(q.coefficient(MultiIndex::zero(3)), Complex(0, -2));
  EXPECT_EQ(Polynomial::parse(q.to_string()).to_string(), q.to_string());
}

TEST(Polynomial, ParseErrorsNameTheOffset) {
  EXPECT_THROW(Polynomial::parse("x1 +"), std::invalid_argument);
  EXPECT_THROW(Polynomial::parse("x0"), std::invalid_argument);
  EXPECT_THROW(Polynomial::parse("2*y1"), std::invalid_argument);
}

TEST(Polynomial, RoundTripsRandomPolynomials) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = random_poly(3, 4, rng);
    const Polynomial q = Polynomial::parse(p.to_string(), 3);
    EXPECT_EQ(coefficient_distance(p, q), 0.0) << p.to_string();
  }
}

TEST(Polynomial, ProductMatchesPointwiseEvaluation) {
  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial p = random_poly(2, 3, rng);
    const Polynomial q = random_poly(2, 3, rng);
    const std::vector<Complex> z = {Complex(0.3, -0.2), Complex(-0.7, 0.4)};
    EXPECT_LT(std::abs((p * q).evaluate(z) - p.evaluate(z) * q.evaluate(z)), 1e-12);
    EXPECT_LT(std::abs((p - q).evaluate(z) - (p.evaluate(z) - q.evaluate(z))), 1e-12);
  }
}

TEST(Polynomial, ShiftMatchesEvaluationAtShiftedPoint) {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial p = random_poly(3, 4, rng);
    const std::vector<Complex> w = {Complex(0.5, 0.1), Complex(-0.2, 0), Complex(0, 0.3)};
    const std::vector<Complex> x = {Complex(0.1, 0.2), Complex(0.4, -0.1), Complex(-0.3, 0)};
    std::vector<Complex> xw(3);
    for (int i = 0; i < 3; ++i) {
      xw[i] = x[i] + w[i];
    }
    EXPECT_LT(std::abs(p.shifted(w).evaluate(x) - p.evaluate(xw)), 1e-12);
  }
}

TEST(Polynomial, ZeroCoefficientsAreNotStored) {
  Polynomial p = Polynomial::parse("x1 - x1 + x2", 2);
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(Polynomial(2).degree(), -1);
}

TEST(Word, Abelianize) {
  const Word w{{1, 2, 1}};
  EXPECT_EQ(w.abelianize(2), MultiIndex({2, 1}));
}
