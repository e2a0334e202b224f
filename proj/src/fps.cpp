#include "qlid/fps.hpp"

namespace qlid {

ScalarSeries infinite_product_series(const Scalar& a, int power, const Scalar& base, int order) {
  if (power < 1) throw DomainError("infinite_product_series: power must be positive");
  if (!(abs(base) < 1)) throw DomainError("infinite_product_series: need |base| < 1");
  ScalarSeries out(order);
  Scalar coeff = 1;  // (-a)^n base^{n(n-1)/2} / (base; base)_n
  Scalar base_n = 1;  // base^n
  for (int n = 0; n * power < order; ++n) {
    out[n * power] = coeff;
    // n -> n + 1: multiply by -a base^n / (1 - base^{n+1})
    const Scalar next_base = base_n * base;
    coeff *= -a * base_n / (1 - next_base);
    base_n = next_base;
  }
  return out;
}

ScalarSeries euler_factor_series(int sign, const Scalar& base, int order) {
  if (sign != 1 && sign != -1) throw DomainError("euler_factor_series: sign must be +-1");
  return infinite_product_series(Scalar(sign), 1, base, order);
}

PolySeries eq_exponential_series(const QContext& ctx, int order) {
  PolySeries out(order);
  Scalar qq = 1;  // (q; q)_n
  for (int n = 0; n < order; ++n) {
    if (n > 0) qq *= 1 - pow(ctx.q(), n);
    out[n] = special_poly(ctx, Family::rho, n) * (ctx.s_pow(n * n) / qq);
  }
  return out;
}

ScalarSeries eq_eta_series(const QContext& ctx, int order) {
  const auto numerator = euler_factor_series(-1, ctx.sqrt_q(), order);
  const auto denominator = infinite_product_series(ctx.q(), 2, ctx.q() * ctx.q(), order);
  return series_div(numerator, denominator);
}

ScalarSeries eta_odd_over_w(const QContext& ctx, int order) {
  const auto e = eq_eta_series(ctx, order + 1);
  return shift_down(e - scale_arg(e, -1), 1);
}

ScalarSeries eta_even(const QContext& ctx, int order) {
  const auto e = eq_eta_series(ctx, order);
  return e + scale_arg(e, -1);
}

ScalarSeries evaluate_series(const PolySeries& a, const SpecialPoint& pt, const QContext& ctx) {
  ScalarSeries out(a.order());
  for (int k = 0; k < a.order(); ++k) out[k] = eval_at(a[k], pt, ctx);
  return out;
}

}  // namespace qlid
