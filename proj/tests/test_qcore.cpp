#include <gtest/gtest.h>

#include "qlid/qcore.hpp"

using namespace qlid;

namespace {

Scalar naive_product(const Scalar& a, const Scalar& base, int n) {
  Scalar out = 1;
  for (int k = 0; k < n; ++k) out *= 1 - a * pow(base, k);
  return out;
}

}  // namespace

TEST(QNumber, SumOfPowers) {
  const Scalar q(1, 3);
  EXPECT_EQ(q_number(0, q), 0);
  EXPECT_EQ(q_number(1, q), 1);
  EXPECT_EQ(q_number(3, q), 1 + q + q * q);
  EXPECT_EQ(q_number(5, Scalar(1)), 5);
}

TEST(QFactorial, ProductOfQNumbers) {
  const Scalar q(2, 5);
  EXPECT_EQ(q_factorial(0, q), 1);
  EXPECT_EQ(q_factorial(4, q), q_number(1, q) * q_number(2, q) * q_number(3, q) * q_number(4, q));
}

TEST(QPochhammer, MatchesNaiveProduct) {
  const Scalar a(-3, 7), q(1, 4);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(q_pochhammer(a, q, n), naive_product(a, q, n));
}

TEST(QBinomial, PascalRecurrence) {
  const Scalar q(3, 5);
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      EXPECT_EQ(q_binomial(n, k, q), q_binomial(n - 1, k - 1, q) + pow(q, k) * q_binomial(n - 1, k, q));
    }
    EXPECT_EQ(q_binomial(n, 0, q), 1);
    EXPECT_EQ(q_binomial(n, n, q), 1);
  }
  EXPECT_THROW(q_binomial(3, 4, q), DomainError);
}

TEST(QPochhammerInf, ConvergesToLongProduct) {
  const double a = 0.7, q = 0.5;
  double reference = 1;
  for (int k = 0; k < 200; ++k) reference *= 1 - a * std::pow(q, k);
  const auto r = q_pochhammer_inf<double>(a, q, 1e-15);
  EXPECT_NEAR(r.value, reference, 1e-14);
  EXPECT_GT(r.terms, 0);
  EXPECT_THROW(q_pochhammer_inf<double>(a, 1.0, 1e-12), DomainError);
}

TEST(QContext, DerivedConstants) {
  const QContext ctx(Scalar(1, 2));
  EXPECT_EQ(ctx.q(), Scalar(1, 16));
  EXPECT_EQ(ctx.sqrt_q(), Scalar(1, 4));
  EXPECT_EQ(ctx.eta(), Scalar(5, 4));
  EXPECT_EQ(ctx.gamma(), Scalar(16, 15));
  EXPECT_EQ(ctx.s_pow(-3), 8);
}

TEST(QContext, FromFourthPower) {
  EXPECT_EQ(QContext::from_q(Scalar(16, 81)).s(), Scalar(2, 3));
  EXPECT_THROW(QContext::from_q(Scalar(1, 4)), DomainError);
  EXPECT_THROW(QContext(Scalar(3, 2)), DomainError);
}

TEST(ParseRational, AcceptedForms) {
  EXPECT_EQ(parse_rational("3/6"), Scalar(1, 2));
  EXPECT_EQ(parse_rational("-7"), -7);
  EXPECT_EQ(parse_rational("0.25"), Scalar(1, 4));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  Scalar half(-2, 4);
  half.canonicalize();
  EXPECT_EQ(to_string(half), "-1/2");
}
