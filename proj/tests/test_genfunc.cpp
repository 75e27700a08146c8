#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pertinent/genfunc.hpp"

using namespace pertinent;

namespace {

WeightedSeries random_series(std::size_t order, std::mt19937_64& rng, bool unit_constant) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, 3);
  std::vector<IntPolynomial> t(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coeff(rng);
    t[n] = IntPolynomial(std::move(c));
  }
  if (unit_constant) t[0] = IntPolynomial(BigInt(1));
  return WeightedSeries(std::move(t));
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  const IntPolynomial p = IntPolynomial::binomial_power(1, 1, 3);
  EXPECT_EQ(p.to_string(), "1 + 3*t + 3*t^2 + t^3");
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.derivative().to_string(), "3 + 6*t + 3*t^2");
  EXPECT_EQ((p - p).is_zero(), true);
  EXPECT_EQ(p.evaluate(BigInt(1)), 8);
  EXPECT_EQ(IntPolynomial::binomial_power(1, 1, 2).pow(2), IntPolynomial::binomial_power(1, 1, 4));
  EXPECT_EQ(IntPolynomial::binomial_power(1, -1, 2).to_string("r"), "1 - 2*r + r^2");
}

TEST(WeightedSeries, RingLaws) {
  std::mt19937_64 rng(5);
  const std::size_t order = 8;
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = random_series(order, rng, false);
    const auto b = random_series(order, rng, false);
    const auto c = random_series(order, rng, false);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * WeightedSeries::unit(order), a);
  }
}

TEST(WeightedSeries, ReciprocalIsInverse) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = random_series(8, rng, true);
    EXPECT_EQ(s * reciprocal(s), WeightedSeries::unit(8));
  }
  std::vector<IntPolynomial> bad(3, IntPolynomial(BigInt(2)));
  EXPECT_THROW(reciprocal(WeightedSeries(bad)), DomainError);
}

TEST(WeightedSeries, TruncationStable) {
  const auto low = reciprocal(z_series_neg(8));
  const auto high = reciprocal(z_series_neg(14));
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(low.term(n), high.term(n)) << n;
}

TEST(WeightedSeries, AtTZeroIsExponentialSeries) {
  // At t = 0 the product is the ordinary exponential-series product: e^z e^(-z) = 1.
  const auto at0 = (z_series(6) * z_series_neg(6)).at_t_zero();
  EXPECT_EQ(at0[0], 1);
  for (std::size_t n = 1; n < at0.size(); ++n) EXPECT_EQ(at0[n], 0);
}

TEST(DagSeries, WorkedExampleFour) {
  EXPECT_EQ(dag_edge_polynomial(4).to_string(), "1 + 12*t + 60*t^2 + 152*t^3 + 186*t^4 + 108*t^5 + 24*t^6");
}

TEST(DagSeries, DerivativePathAgrees) {
  const auto y = dag_edge_polynomial(5);
  for (unsigned e = 0; e <= 10; ++e) EXPECT_EQ(coefficient_by_derivative(y, e), y.coefficient(e));
}

TEST(DagSeries, SixMatchesRecurrence) {
  const auto y = dag_edge_polynomial(6);
  EXPECT_EQ(y.evaluate(BigInt(1)), oracle::robinson(6));
  EXPECT_EQ(y.evaluate(BigInt(1)), 3781503);
  EXPECT_EQ(y.degree(), 15);
  EXPECT_EQ(y.leading(), 720);
}

TEST(DagSeries, ExtendedRange) {
  for (int n = 1; n <= 12; ++n) {
    const auto y = dag_edge_polynomial(n);
    EXPECT_EQ(y.evaluate(BigInt(1)), oracle::robinson(n)) << n;
    EXPECT_EQ(y.degree(), n * (n - 1) / 2);
    EXPECT_EQ(y.leading(), factorial(static_cast<unsigned>(n)));
    EXPECT_EQ(y.coefficient(1), n * (n - 1));
  }
  EXPECT_THROW(dag_edge_polynomial(kMaxSeriesDim + 1), DimensionError);
}

TEST(DagSeries, TableRoute) {
  const auto t = count_dags_by_series(4);
  EXPECT_EQ(t.route(), Route::generating_function);
  EXPECT_EQ(t.total(), 543);
  EXPECT_EQ(count_dags_by_series(6).total(), 3781503);
}
