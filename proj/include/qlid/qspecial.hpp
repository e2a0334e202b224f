#pragma once

// Floating evaluation of E_q(x; w), the basic sine/cosine S_q, C_q, the
// Jackson q-Bessel function J^{(2)}_nu, and the zero finders built on them.
// Everything is templated on the floating type so the same code runs in
// double and in cpp_bin_float_50.

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qlid/qcore.hpp"

namespace qlid {

template <class Real>
Real pow_int(Real base, int n) {
  if (n < 0) return Real(1) / pow_int(base, -n);
  Real result = 1;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

/// s = q^{1/4}, q and q^{1/2} as floating values.
template <class Real>
struct RealQ {
  Real s;
  Real q;
  Real sqrt_q;

  static RealQ from_context(const QContext& ctx) {
    return {to_real<Real>(ctx.s()), to_real<Real>(ctx.q()), to_real<Real>(ctx.sqrt_q())};
  }
  static RealQ from_q(const Real& q) {
    using std::sqrt;
    if (!(q > 0 && q < 1)) throw DomainError("RealQ: q must lie in (0, 1)");
    const Real r = sqrt(q);
    return {sqrt(r), q, r};
  }

  Real eta() const { return (s + 1 / s) / 2; }
  Real gamma() const { return 2 * s / (1 - q); }
};

/// Psi_n(x) = q^{n^2/4} / (q;q)_n * rho_n(x) for real x. Uses the pairing
///   rho_n(x) = (2x)^{1 or 2} prod_e (4x^2 - 2 + q^e + q^{-e}),
/// so every factor stays O(1) after absorbing q^{n^2/4}.
template <class Real>
Real normalized_rho(const RealQ<Real>& rq, const Real& x, int n) {
  if (n < 0) throw DomainError("normalized_rho: negative index");
  if (n == 0) return Real(1);
  const bool even = n % 2 == 0;
  const Real e2 = 4 * x * x - 2;
  Real value = even ? Real(4 * x * x) : Real(2 * x);
  value *= pow_int(rq.s, even ? 2 * n : 2 * n - 1);
  for (int e = even ? 2 : 1; e <= n - 2; e += 2) {
    const Real qe = pow_int(rq.q, e);
    value *= 1 + qe * qe + qe * e2;
  }
  Real qk = 1;
  for (int k = 1; k <= n; ++k) {
    qk *= rq.q;
    value /= 1 - qk;
  }
  return value;
}

template <class Real>
std::vector<Real> normalized_rho_table(const RealQ<Real>& rq, const Real& x, int count) {
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int n = 0; n < count; ++n) out.push_back(normalized_rho(rq, x, n));
  return out;
}

/// Psi_n(eta) = (-q^{-1/2}; q)_n q^{n/2} / (q; q)_n, the Taylor coefficients
/// of E_q(eta; w) = (-w; q)_inf / (q^{1/2} w; q)_inf.
template <class Real>
std::vector<Real> eta_coefficients(const RealQ<Real>& rq, int count) {
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  Real c = 1;
  Real qm = 1;  // q^m
  for (int m = 0; m < count; ++m) {
    out.push_back(c);
    c *= (1 + qm / rq.sqrt_q) * rq.sqrt_q;
    qm *= rq.q;
    c /= 1 - qm;
  }
  return out;
}

namespace detail {

constexpr int kMaxSeriesTerms = 20000;

template <class Real>
Real tail_tolerance(double tol) {
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real t = Real(tol);
  return t < eps ? eps : t;
}

}  // namespace detail

/// E_q(x; w) for x in [-1, 1] by the rho-series, summed until two
/// consecutive terms fall below tol * |partial sum|.
template <class Real>
Real eq_eval(const RealQ<Real>& rq, const Real& x, const Real& w, double tol) {
  using std::abs;
  if (!(abs(w) < 1)) throw DomainError("eq_eval: the rho-series needs |w| < 1");
  if (abs(x) > 1) throw DomainError("eq_eval: x must lie in [-1, 1]");
  const Real t = detail::tail_tolerance<Real>(tol);
  Real sum = 1;
  Real wn = 1;
  int small = 0;
  for (int n = 1; n < detail::kMaxSeriesTerms; ++n) {
    wn *= w;
    const Real term = wn * normalized_rho(rq, x, n);
    sum += term;
    small = abs(term) <= t * abs(sum) ? small + 1 : 0;
    if (small >= 2) return sum;
  }
  return sum;
}

enum class TrigKind { sine, cosine };

/// S_q(x; w) or C_q(x; w) for x in [-1, 1]:
///   C = sum (-1)^k w^{2k} Psi_{2k}(x),  S = sum (-1)^k w^{2k+1} Psi_{2k+1}(x).
template <class Real>
Real basic_trig(const RealQ<Real>& rq, const Real& x, const Real& w, TrigKind kind, double tol) {
  using std::abs;
  if (abs(x) > 1) throw DomainError("basic_trig: x must lie in [-1, 1]");
  if (!(abs(w) * rq.sqrt_q < 1)) {
    throw DomainError("basic_trig: the rho-series needs |w| < q^{-1/2}");
  }
  const Real t = detail::tail_tolerance<Real>(tol);
  const int first = kind == TrigKind::sine ? 1 : 0;
  Real sum = 0;
  Real wn = pow_int(w, first);
  const Real w2 = w * w;
  int small = 0;
  for (int k = 0; 2 * k + first < detail::kMaxSeriesTerms; ++k) {
    Real term = wn * normalized_rho(rq, x, 2 * k + first);
    if (k % 2 == 1) term = -term;
    sum += term;
    small = abs(term) <= t * abs(sum) || term == 0 ? small + 1 : 0;
    if (small >= 2 && k > 2) return sum;
    wn *= w2;
  }
  return sum;
}

template <class Real>
struct SeriesValue {
  Real value;
  Real scale;  // largest |term|
};

/// (-q w^2; q^2)_inf S_q(eta; w) = sum (-1)^k q^{k^2 + k/2} w^{2k+1} / (q^{1/2}; q^{1/2})_{2k+1}
/// (sine) or sum (-1)^k q^{k^2 - k/2} w^{2k} / (q^{1/2}; q^{1/2})_{2k} (cosine).
/// Both are entire in w.
template <class Real>
SeriesValue<Real> eta_trig_numerator(const RealQ<Real>& rq, const Real& w, TrigKind kind) {
  using std::abs;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real w2 = w * w;
  Real term = kind == TrigKind::sine ? Real(w / (1 - rq.sqrt_q)) : Real(1);
  Real sum = term;
  Real scale = abs(term);
  const Real& q = rq.q;
  const Real& r = rq.sqrt_q;
  Real qk = 1;  // q^k
  for (int k = 0; k < detail::kMaxSeriesTerms; ++k) {
    Real ratio;
    if (kind == TrigKind::sine) {
      // q^{2k+3/2} w^2 / ((1 - q^{k+1})(1 - q^{k+3/2}))
      ratio = qk * qk * q * r * w2 / ((1 - qk * q) * (1 - qk * q * r));
    } else {
      // q^{2k+1/2} w^2 / ((1 - q^{k+1/2})(1 - q^{k+1}))
      ratio = qk * qk * r * w2 / ((1 - qk * r) * (1 - qk * q));
    }
    term *= -ratio;
    sum += term;
    if (abs(term) > scale) scale = abs(term);
    if (ratio < 1 && abs(term) <= eps * scale * Real(1e-3)) break;
    qk *= q;
  }
  return {sum, scale};
}

/// S_q(eta; w) or C_q(eta; w) = numerator / (-q w^2; q^2)_inf, valid for all real w.
template <class Real>
SeriesValue<Real> basic_trig_eta(const RealQ<Real>& rq, const Real& w, TrigKind kind) {
  const auto num = eta_trig_numerator(rq, w, kind);
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real denom = q_pochhammer_inf<Real>(-rq.q * w * w, rq.q * rq.q, eps).value;
  return {num.value / denom, num.scale / denom};
}

/// Sin_q x = Im E_q(ix), E_q(y) = (-y(1-q); q)_inf. Equals the eta sine
/// numerator at base q^2 evaluated at w = (1-q) x.
template <class Real>
SeriesValue<Real> sin_q(const Real& q, const Real& x) {
  return eta_trig_numerator(RealQ<Real>::from_q(q * q), (1 - q) * x, TrigKind::sine);
}

/// z^{-nu} J^{(2)}_nu(z; q), which has the same positive zeros as J^{(2)}_nu.
template <class Real>
Real reduced_jackson_j2(const Real& nu, const Real& z, const Real& q) {
  using std::abs;
  using std::pow;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real q_nu1 = pow(q, nu + 1);
  const Real prefactor =
      q_pochhammer_inf<Real>(q_nu1, q, eps).value / q_pochhammer_inf<Real>(q, q, eps).value;
  const Real h2 = (z / 2) * (z / 2);
  Real term = 1;
  Real sum = 1;
  Real scale = 1;
  Real qn = 1;  // q^n
  for (int n = 0; n < detail::kMaxSeriesTerms; ++n) {
    // term_{n+1}/term_n = -q^{2n+1+nu} (z/2)^2 / ((1 - q^{n+1})(1 - q^{n+1+nu}))
    const Real ratio = qn * qn * q * pow(q, nu) * h2 / ((1 - qn * q) * (1 - qn * q_nu1));
    term *= -ratio;
    sum += term;
    if (abs(term) > scale) scale = abs(term);
    if (ratio < 1 && abs(term) <= eps * scale * Real(1e-3)) break;
    qn *= q;
  }
  return prefactor * pow(Real(2), -nu) * sum;
}

/// J^{(2)}_nu(z; q) = (q^{nu+1};q)_inf/(q;q)_inf sum (-1)^n q^{n(n+nu)} (z/2)^{2n+nu} / ((q;q)_n (q^{nu+1};q)_n).
template <class Real>
Real jackson_bessel_j2(const Real& nu, const Real& z, const Real& q) {
  using std::pow;
  if (z < 0) throw DomainError("jackson_bessel_j2: z must be non-negative");
  if (z == 0) {
    if (nu > 0) return Real(0);
    if (nu == 0) return reduced_jackson_j2(nu, z, q);
    throw DomainError("jackson_bessel_j2: z = 0 is singular for nu < 0");
  }
  return pow(z, nu) * reduced_jackson_j2(nu, z, q);
}

/// Leading Hayman term 2 q^{-m} q^{(1-nu)/2} for the m-th positive zero of J^{(2)}_nu(.; q).
template <class Real>
Real hayman_zero_estimate(int m, const Real& nu, const Real& q) {
  using std::pow;
  if (m < 1) throw DomainError("hayman_zero_estimate: m must be >= 1");
  return 2 * pow_int(q, -m) * pow(q, (1 - nu) / 2);
}

// ---------------------------------------------------------------------------
// Zero search
// ---------------------------------------------------------------------------

enum class ZeroKind { Sq_eta, Cq_eta, Sinq };

std::string to_string(ZeroKind kind);
ZeroKind parse_zero_kind(const std::string& text);

template <class Real>
struct ZeroReport {
  ZeroKind kind;
  Real q;
  Real value;
  Real lo;
  Real hi;
  Real residual;     // |function(value)|
  Real scale;        // largest series term at value
  Real lower_bound;  // a priori lower bound for Sq_eta, 0 otherwise
  bool bound_check;  // value >= lower_bound
  int scan_points;
};

namespace detail {

/// First sign change of f on the geometric grid lo, lo*ratio, ... <= limit.
template <class Real, class F>
bool first_sign_change(const F& f, Real lo, const Real& limit, const Real& ratio, Real& a, Real& b,
                       int& points) {
  Real x = lo;
  Real fx = f(x);
  ++points;
  while (x < limit) {
    Real next = x * ratio;
    if (next > limit) next = limit;
    const Real fn = f(next);
    ++points;
    if ((fx < 0) != (fn < 0) || fn == 0) {
      a = x;
      b = next;
      return true;
    }
    x = next;
    fx = fn;
  }
  return false;
}

template <class Real, class F>
void bisect(const F& f, Real& lo, Real& hi, const Real& rel_tol) {
  Real flo = f(lo);
  for (int iter = 0; iter < 2000 && hi - lo > rel_tol * lo; ++iter) {
    const Real mid = (lo + hi) / 2;
    const Real fm = f(mid);
    if (fm == 0) {
      lo = hi = mid;
      return;
    }
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
}

/// Coarse scan at ratio 1.05, finer rescan of that bracket at 1.01, then bisection.
template <class Real, class F>
std::pair<Real, Real> locate_zero(const F& f, const Real& start, const Real& limit, const Real& rel_tol,
                                  int& points, const std::string& what) {
  Real a, b;
  if (!first_sign_change(f, start, limit, Real(1.05), a, b, points)) {
    throw SearchError(what + ": no sign change between " + std::to_string(static_cast<double>(start)) +
                      " and the Hayman limit " + std::to_string(static_cast<double>(limit)) + " after " +
                      std::to_string(points) + " evaluations");
  }
  Real fa, fb;
  if (first_sign_change(f, a, b, Real(1.01), fa, fb, points)) {
    a = fa;
    b = fb;
  }
  bisect(f, a, b, rel_tol);
  return {a, b};
}

}  // namespace detail

/// Smallest positive zero of S_q(eta; w), C_q(eta; w) or Sin_q x. The scan
/// starts at the lower bound sqrt(q^{-3/2}(1-q)(1-q^{3/2})) for Sq_eta and at
/// a small epsilon otherwise; it gives up at 1.5 times the Hayman m = 3 estimate.
template <class Real>
ZeroReport<Real> smallest_positive_zero(ZeroKind kind, const Real& q, const Real& rel_tol = Real(1e-13)) {
  using std::abs;
  using std::sqrt;
  const auto rq = RealQ<Real>::from_q(q);
  const Real nu = kind == ZeroKind::Cq_eta ? Real(-0.5) : Real(0.5);

  auto function = [&](const Real& w) -> Real {
    switch (kind) {
      case ZeroKind::Sq_eta: return eta_trig_numerator(rq, w, TrigKind::sine).value;
      case ZeroKind::Cq_eta: return eta_trig_numerator(rq, w, TrigKind::cosine).value;
      case ZeroKind::Sinq: return sin_q(q, w).value;
    }
    return Real(0);
  };

  // Hayman in the search variable: w = z/2 at base q for S/C; for Sin_q the
  // base is q^2 and x = w / (1 - q).
  Real limit;
  if (kind == ZeroKind::Sinq) {
    limit = hayman_zero_estimate(3, nu, q * q) / 2 / (1 - q);
  } else {
    limit = hayman_zero_estimate(3, nu, q) / 2;
  }
  limit *= Real(1.5);

  Real lower_bound = 0;
  Real start;
  if (kind == ZeroKind::Sq_eta) {
    lower_bound = sqrt((1 - q) * (1 - q * rq.sqrt_q) / (q * rq.sqrt_q));
    start = lower_bound;
  } else {
    const Real first = kind == ZeroKind::Sinq ? hayman_zero_estimate(1, nu, q * q) / 2 / (1 - q)
                                              : hayman_zero_estimate(1, nu, q) / 2;
    start = (1 - q) * first * Real(1e-3);
  }

  int points = 0;
  const auto [lo, hi] = detail::locate_zero(function, start, limit, rel_tol, points,
                                            "smallest_positive_zero(" + to_string(kind) + ")");
  ZeroReport<Real> report{kind, q, (lo + hi) / 2, lo, hi, 0, 0, lower_bound, true, points};
  SeriesValue<Real> at;
  switch (kind) {
    case ZeroKind::Sq_eta: at = basic_trig_eta(rq, report.value, TrigKind::sine); break;
    case ZeroKind::Cq_eta: at = basic_trig_eta(rq, report.value, TrigKind::cosine); break;
    case ZeroKind::Sinq: at = sin_q(q, report.value); break;
  }
  report.residual = abs(at.value);
  report.scale = at.scale;
  report.bound_check = report.value >= lower_bound;
  return report;
}

/// First `count` positive zeros of J^{(2)}_nu(.; q), bracketed on a geometric
/// grid and bisected to rel_tol.
template <class Real>
std::vector<Real> jackson_j2_zeros(const Real& nu, const Real& q, int count, const Real& rel_tol = Real(1e-13)) {
  auto function = [&](const Real& z) { return reduced_jackson_j2(nu, z, q); };
  const Real limit = hayman_zero_estimate(count + 2, nu, q) * Real(1.5);
  Real start = hayman_zero_estimate(1, nu, q) * Real(1e-3);
  std::vector<Real> zeros;
  int points = 0;
  while (static_cast<int>(zeros.size()) < count) {
    const auto [lo, hi] = detail::locate_zero(function, start, limit, rel_tol, points, "jackson_j2_zeros");
    zeros.push_back((lo + hi) / 2);
    start = hi * (1 + rel_tol);
  }
  return zeros;
}

}  // namespace qlid
