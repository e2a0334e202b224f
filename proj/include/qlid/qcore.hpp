#pragma once

// Exact scalar arithmetic parameterized by s = q^{1/4}, plus the
// q-combinatorial primitives shared by every other module.

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace qlid {

using Scalar = mpq_class;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two independent constructions of the same object disagree.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// A root search did not find a sign change in its allowed window.
class SearchError : public Error {
 public:
  using Error::Error;
};

/// Input longer than the configured buffer (delta sequence, series order).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Unknown names or malformed requests at the API surface.
class UsageError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Scalar helpers
// ---------------------------------------------------------------------------

/// base^n for any integer n (base must be nonzero when n < 0).
Scalar pow(const Scalar& base, int n);

/// Parses "a/b", "a" or a terminating decimal such as "0.25".
Scalar parse_rational(std::string_view text);

/// Canonical "num/den" (or "num" when den == 1).
std::string to_string(const Scalar& value);

double to_double(const Scalar& value);

Scalar abs(const Scalar& value);

/// Converts an exact rational to a floating type. Specialised for double;
/// for multiprecision types the numerator and denominator go through their
/// decimal strings so no precision is lost on the way.
template <class Real>
Real to_real(const Scalar& value) {
  if constexpr (std::is_same_v<Real, double>) {
    return value.get_d();
  } else {
    return Real(value.get_num().get_str()) / Real(value.get_den().get_str());
  }
}

// ---------------------------------------------------------------------------
// QContext
// ---------------------------------------------------------------------------

/// All constants derived from s = q^{1/4} in (0,1). Every value is an exact
/// rational, so q^{1/2}, eta and the Askey-Wilson eigenvalue scale never
/// require an algebraic extension.
class QContext {
 public:
  static constexpr int kDefaultSeriesOrder = 64;
  static constexpr double kDefaultFloatTol = 1e-12;

  explicit QContext(Scalar s, int series_order = kDefaultSeriesOrder,
                    double float_tol = kDefaultFloatTol);

  /// Builds a context from q directly; q must be the fourth power of a rational.
  static QContext from_q(const Scalar& q, int series_order = kDefaultSeriesOrder,
                         double float_tol = kDefaultFloatTol);

  const Scalar& s() const { return s_; }
  const Scalar& q() const { return q_; }
  const Scalar& sqrt_q() const { return sqrt_q_; }
  /// (q^{1/4} + q^{-1/4}) / 2
  const Scalar& eta() const { return eta_; }
  /// 2 q^{1/4} / (1 - q): the eigenvalue scale of D_q on E_q(x; w),
  /// D_q E_q(x; w) = gamma * w * E_q(x; w).
  const Scalar& gamma() const { return gamma_; }
  int series_order() const { return series_order_; }
  double float_tol() const { return float_tol_; }

  /// s^k for any integer k. Exponents of q that are multiples of 1/4 map to
  /// integer powers of s: q^{a/4} = s_pow(a).
  Scalar s_pow(int k) const { return pow(s_, k); }

  /// Stable identifier used as a cache key.
  std::string key() const { return to_string(s_); }

 private:
  Scalar s_;
  Scalar q_;
  Scalar sqrt_q_;
  Scalar eta_;
  Scalar gamma_;
  int series_order_;
  double float_tol_;
};

// ---------------------------------------------------------------------------
// q-combinatorics (exact)
// ---------------------------------------------------------------------------

/// [n]_base = (1 - base^n)/(1 - base); equals n when base == 1.
Scalar q_number(int n, const Scalar& base);

/// [n]_base! = [1][2]...[n]; the empty product is 1.
Scalar q_factorial(int n, const Scalar& base);

/// (a; base)_n = prod_{k<n} (1 - a base^k).
Scalar q_pochhammer(const Scalar& a, const Scalar& base, int n);

/// Gaussian binomial [n choose k]_base; throws DomainError unless 0 <= k <= n.
Scalar q_binomial(int n, int k, const Scalar& base);

// ---------------------------------------------------------------------------
// Infinite products (floating)
// ---------------------------------------------------------------------------

template <class Real>
struct InfiniteProduct {
  Real value;
  int terms;
};

/// (a; base)_infinity truncated at the first N for which the log-tail bound
/// sum_{k>=N} |a| base^k / (1 - |a| base^k) drops below tol.
template <class Real>
InfiniteProduct<Real> q_pochhammer_inf(const Real& a, const Real& base, const Real& tol) {
  using std::abs;
  if (!(abs(base) < Real(1))) {
    throw DomainError("q_pochhammer_inf: |base| must be < 1");
  }
  const Real b = abs(base);
  Real value = 1;
  Real power = 1;  // base^k
  int k = 0;
  constexpr int kMaxTerms = 100000;
  while (k < kMaxTerms) {
    const Real t = abs(a) * abs(power);
    // Geometric majorant of the remaining log-tail.
    if (t < Real(0.5) && t / ((Real(1) - b) * (Real(1) - t)) < tol) {
      break;
    }
    const Real factor = Real(1) - a * power;
    if (factor == Real(0)) {
      throw DomainError("q_pochhammer_inf: factor vanishes (a * base^k == 1)");
    }
    value *= factor;
    power *= base;
    ++k;
  }
  return {value, k};
}

}  // namespace qlid
