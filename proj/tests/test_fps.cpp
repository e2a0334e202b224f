#include <gtest/gtest.h>

#include "qlid/fps.hpp"

using namespace qlid;

namespace {

ScalarSeries series(std::vector<Scalar> c) { return ScalarSeries(std::move(c)); }

}  // namespace

TEST(Series, ProductAndQuotientInvert) {
  const auto a = series({1, 2, -3, Scalar(1, 2), 0, 7});
  const auto b = series({2, Scalar(-1, 3), 5, 0, 1, 1});
  EXPECT_EQ(series_div(a * b, b), a);
}

TEST(Series, DivisionByZeroConstantThrows) {
  EXPECT_THROW(series_div(series({1, 1}), series({0, 1})), DomainError);
}

TEST(Series, ParityAndScale) {
  const auto a = series({1, 2, 3, 4});
  EXPECT_EQ(parity_part(a, Parity::even), series({1, 0, 3, 0}));
  EXPECT_EQ(parity_part(a, Parity::odd), series({0, 2, 0, 4}));
  EXPECT_EQ(scale_arg(a, -1), series({1, -2, 3, -4}));
  EXPECT_EQ(shift_down(series({0, 5, 6}), 1), series({5, 6}));
  EXPECT_THROW(shift_down(series({1, 5}), 1), DomainError);
}

// (w; p)_inf satisfies F(w) = (1 - w) F(p w); check it coefficientwise.
TEST(EulerFactor, FunctionalEquation) {
  const Scalar p(2, 7);
  for (int sign : {1, -1}) {
    const auto f = euler_factor_series(sign, p, 12);
    const auto lhs = f;
    ScalarSeries factor(12);
    factor[0] = 1;
    factor[1] = -sign;
    const auto rhs = factor * scale_arg(f, p);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(InfiniteProduct, EvenPowersFunctionalEquation) {
  // G(w) = (a w^2; b)_inf = (1 - a w^2) G(sqrt(b) w) with b a square.
  const Scalar a(1, 16), r(1, 16);
  const auto g = infinite_product_series(a, 2, r * r, 14);
  ScalarSeries factor(14);
  factor[0] = 1;
  factor[2] = -a;
  EXPECT_EQ(g, factor * scale_arg(g, r));
  for (int k = 1; k < 14; k += 2) EXPECT_EQ(g[k], 0);
}

TEST(EqExponential, CoefficientsAtEtaHaveClosedForm) {
  const QContext ctx(Scalar(1, 2));
  const auto e = eq_exponential_series(ctx, 10);
  const auto at_eta = evaluate_series(e, SpecialPoint::eta(), ctx);
  const auto eta = eq_eta_series(ctx, 10);
  for (int n = 0; n < 10; ++n) {
    const Scalar closed = q_pochhammer(1 / -ctx.sqrt_q(), ctx.q(), n) * pow(ctx.sqrt_q(), n) /
                          q_pochhammer(ctx.q(), ctx.q(), n);
    EXPECT_EQ(at_eta[n], closed) << n;
    EXPECT_EQ(eta[n], closed) << n;
  }
}

TEST(EqExponential, EqualsOneAtZero) {
  const QContext ctx(Scalar(3, 5));
  const auto at_zero = evaluate_series(eq_exponential_series(ctx, 8), SpecialPoint::zero(), ctx);
  EXPECT_EQ(at_zero[0], 1);
  for (int n = 1; n < 8; ++n) EXPECT_EQ(at_zero[n], 0);
}

TEST(EqExponential, AskeyWilsonEigenfunction) {
  const QContext ctx(Scalar(2, 3));
  const auto e = eq_exponential_series(ctx, 8);
  for (int n = 1; n < 8; ++n) EXPECT_EQ(aw_derivative(e[n], ctx), e[n - 1] * ctx.gamma());
}

TEST(EtaSeries, OddAndEvenParts) {
  const QContext ctx(Scalar(1, 2));
  const auto e = eq_eta_series(ctx, 9);
  const auto odd = eta_odd_over_w(ctx, 8);
  const auto even = eta_even(ctx, 8);
  EXPECT_EQ(odd[0], 2 / (1 - ctx.sqrt_q()));
  for (int n = 0; n < 8; ++n) {
    EXPECT_EQ(odd[n], n % 2 == 0 ? 2 * e[n + 1] : Scalar(0));
    EXPECT_EQ(even[n], n % 2 == 0 ? 2 * e[n] : Scalar(0));
  }
}
