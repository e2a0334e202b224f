#pragma once

// Truncated formal power series in w with Scalar or SymPoly coefficients.
// Every generating function of the q-Bernoulli / q-Euler families is turned
// into coefficient tables through this module.

#include <algorithm>
#include <vector>

#include "qlid/qcore.hpp"
#include "qlid/symlaurent.hpp"

namespace qlid {

template <class C>
class Series {
 public:
  explicit Series(int order = 0) : c_(static_cast<std::size_t>(std::max(order, 0))) {}
  explicit Series(std::vector<C> coeffs) : c_(std::move(coeffs)) {}

  /// Number of stored coefficients N; the series is known modulo w^N.
  int order() const { return static_cast<int>(c_.size()); }

  C& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
  const C& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<C>& coeffs() const { return c_; }

  /// Drops coefficients at and beyond `order`.
  Series truncated(int order) const {
    std::vector<C> c(c_.begin(), c_.begin() + std::min(order, this->order()));
    return Series(std::move(c));
  }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  std::vector<C> c_;
};

using ScalarSeries = Series<Scalar>;
using PolySeries = Series<SymPoly>;

namespace detail {

inline Scalar constant_inverse(const Scalar& c) {
  if (c == 0) throw DomainError("series_div: divisor has zero constant term");
  return 1 / c;
}

inline Scalar constant_inverse(const SymPoly& c) {
  if (!c.is_constant() || c.is_zero()) {
    throw DomainError("series_div: divisor constant term is not a nonzero constant");
  }
  return 1 / c[0];
}

}  // namespace detail

template <class C>
Series<C> operator+(const Series<C>& a, const Series<C>& b) {
  const int n = std::min(a.order(), b.order());
  Series<C> out(n);
  for (int k = 0; k < n; ++k) out[k] = a[k] + b[k];
  return out;
}

template <class C>
Series<C> operator-(const Series<C>& a, const Series<C>& b) {
  const int n = std::min(a.order(), b.order());
  Series<C> out(n);
  for (int k = 0; k < n; ++k) out[k] = a[k] - b[k];
  return out;
}

/// Cauchy product. C * D must yield C (Scalar*Scalar, SymPoly*Scalar,
/// SymPoly*SymPoly).
template <class C, class D>
Series<C> operator*(const Series<C>& a, const Series<D>& b) {
  const int n = std::min(a.order(), b.order());
  Series<C> out(n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == C{}) continue;
    for (int j = 0; i + j < n; ++j) {
      if (b[j] == D{}) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

template <class C>
Series<C> operator*(Series<C> a, const Scalar& factor) {
  for (int k = 0; k < a.order(); ++k) a[k] *= factor;
  return a;
}

/// Q with Q * B == A modulo w^N, by forward substitution. The divisor's
/// constant term must be invertible.
template <class C, class D>
Series<C> series_div(const Series<C>& a, const Series<D>& b) {
  const int n = std::min(a.order(), b.order());
  Series<C> out(n);
  if (n == 0) return out;
  const Scalar inv = detail::constant_inverse(b[0]);
  for (int k = 0; k < n; ++k) {
    C acc = a[k];
    for (int j = 0; j < k; ++j) {
      if (b[k - j] == D{}) continue;
      acc -= out[j] * b[k - j];
    }
    out[k] = acc * inv;
  }
  return out;
}

enum class Parity { even, odd };

template <class C>
Series<C> parity_part(Series<C> a, Parity which) {
  const int skip = which == Parity::even ? 1 : 0;
  for (int k = skip; k < a.order(); k += 2) a[k] = C{};
  return a;
}

/// a_k -> c^k a_k.
template <class C>
Series<C> scale_arg(Series<C> a, const Scalar& c) {
  Scalar power = 1;
  for (int k = 0; k < a.order(); ++k) {
    a[k] *= power;
    power *= c;
  }
  return a;
}

/// Divides by w^k; the first k coefficients must vanish. The result has
/// order N - k.
template <class C>
Series<C> shift_down(const Series<C>& a, int k) {
  for (int j = 0; j < std::min(k, a.order()); ++j) {
    if (!(a[j] == C{})) {
      throw DomainError("shift_down: series is not divisible by w^k");
    }
  }
  std::vector<C> c;
  for (int j = k; j < a.order(); ++j) c.push_back(a[j]);
  return Series<C>(std::move(c));
}

/// (a w^power; base)_infinity expanded exactly by Euler's identity
///   (z; p)_inf = sum_n (-1)^n p^{n(n-1)/2} z^n / (p; p)_n.
ScalarSeries infinite_product_series(const Scalar& a, int power, const Scalar& base, int order);

/// (sign * w; base)_infinity.
ScalarSeries euler_factor_series(int sign, const Scalar& base, int order);

/// E_q(x; t) = sum_n q^{n^2/4} / (q;q)_n t^n rho_n(x), coefficientwise exact.
PolySeries eq_exponential_series(const QContext& ctx, int order);

/// E_q(eta; w) = (-w; q^{1/2})_inf / (q w^2; q^2)_inf.
ScalarSeries eq_eta_series(const QContext& ctx, int order);

/// (E_q(eta; w) - E_q(eta; -w)) / w, with constant term 2 / (1 - q^{1/2}).
ScalarSeries eta_odd_over_w(const QContext& ctx, int order);

/// E_q(eta; w) + E_q(eta; -w).
ScalarSeries eta_even(const QContext& ctx, int order);

/// Substitutes a special point into every coefficient.
ScalarSeries evaluate_series(const PolySeries& a, const SpecialPoint& pt, const QContext& ctx);

}  // namespace qlid
