#pragma once

// Polynomials in x = cos(theta) stored by their symmetric Laurent
// coefficients in z = e^{i theta}:
//
//   f(z) = c_0 + sum_{k=1}^{d} c_k (z^k + z^{-k}).
//
// On this representation the Askey-Wilson operator, evaluation at the
// special points 0 and +-eta, and the q-translation E_q^y are all exact.

#include <optional>
#include <span>
#include <vector>

#include "qlid/qcore.hpp"

namespace qlid {

class SymPoly {
 public:
  SymPoly() = default;
  explicit SymPoly(std::vector<Scalar> coeffs);

  static SymPoly constant(const Scalar& c);
  /// z^k + z^{-k}; for k == 0 this is the constant 2.
  static SymPoly e(int k);
  /// x itself, i.e. (z + 1/z)/2.
  static SymPoly x();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// c_k; zero beyond the degree.
  Scalar operator[](int k) const;
  std::span<const Scalar> coeffs() const { return c_; }

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly& operator*=(const Scalar& factor);
  SymPoly& operator*=(const SymPoly& other);

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator-(SymPoly a) { return a *= Scalar(-1); }
  friend SymPoly operator*(SymPoly a, const Scalar& b) { return a *= b; }
  friend SymPoly operator*(const Scalar& b, SymPoly a) { return a *= b; }
  friend SymPoly operator*(SymPoly a, const SymPoly& b) { return a *= b; }
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.c_ == b.c_; }

  /// f(-x), i.e. z -> -z.
  SymPoly reflected() const;

  /// Largest |c_k|; zero for the zero polynomial.
  Scalar max_abs_coeff() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

// ---------------------------------------------------------------------------
// Special points
// ---------------------------------------------------------------------------

struct SpecialPoint {
  enum class Tag { zero, eta, minus_eta, rational_x };
  Tag tag = Tag::zero;
  Scalar x;  // used only for rational_x

  static SpecialPoint zero() { return {Tag::zero, 0}; }
  static SpecialPoint eta() { return {Tag::eta, 0}; }
  static SpecialPoint minus_eta() { return {Tag::minus_eta, 0}; }
  static SpecialPoint at(const Scalar& v) { return {Tag::rational_x, v}; }
};

/// Exact value of p at the point: z = i for 0, z = +-1/s for +-eta, and the
/// Chebyshev recurrence e_{k+1} = 2x e_k - e_{k-1} for a rational x.
Scalar eval_at(const SymPoly& p, const SpecialPoint& pt, const QContext& ctx);

/// The symmetric-Laurent basis values e_0..e_d at a point (e_0 = 2).
std::vector<Scalar> e_values(int degree, const SpecialPoint& pt, const QContext& ctx);

// ---------------------------------------------------------------------------
// Families and operators
// ---------------------------------------------------------------------------

enum class Family { monomial, rho, hermite, phi, g };

/// x^n, rho_n, H_n(x|q), phi_n(x; a) = (a e^{i theta}, a e^{-i theta}; q)_n or
/// g_n = q^{n^2/4} rho_n. Only phi uses `param`.
SymPoly special_poly(const QContext& ctx, Family family, int n,
                     const std::optional<Scalar>& param = std::nullopt);

/// (a z, a/z; base)_n for an arbitrary base; phi is the base = q case.
SymPoly phi_poly(const Scalar& a, const Scalar& base, int n);

/// D_q applied k times, computed on the e_m basis:
///   D_q e_m = 2 (q^{m/2} - q^{-m/2}) / (q^{1/2} - q^{-1/2}) * sum_{j<m} z^{m-1-2j}.
SymPoly aw_derivative(const SymPoly& p, const QContext& ctx, int k = 1);

enum class Basis { monomial, rho, hermite };

/// Coefficients a_0..a_d with p = sum a_n basis_n (exact back-substitution).
std::vector<Scalar> change_basis(const SymPoly& p, Basis target, const QContext& ctx);

/// Inverse of change_basis.
SymPoly from_basis(std::span<const Scalar> coeffs, Basis basis, const QContext& ctx);

/// Ismail's q-translation E_q^y, defined on H_n(x|q) and extended linearly.
SymPoly q_translate(const SymPoly& p, const SpecialPoint& y, const QContext& ctx);

/// Floating evaluation at x in [-1, 1] from Chebyshev-form coefficients
/// (c_0, c_1, ...): c_0 + sum c_k * 2 T_k(x).
template <class Real>
Real eval_chebyshev(std::span<const Real> coeffs, const Real& x) {
  if (coeffs.empty()) return Real(0);
  Real result = coeffs[0];
  Real e_prev = 2;      // e_0
  Real e_cur = 2 * x;   // e_1
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    result += coeffs[k] * e_cur;
    Real e_next = 2 * x * e_cur - e_prev;
    e_prev = e_cur;
    e_cur = e_next;
  }
  return result;
}

template <class Real>
std::vector<Real> to_real_coeffs(const SymPoly& p) {
  std::vector<Real> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_real<Real>(c));
  return out;
}

}  // namespace qlid
