#pragma once

// The generalized translation z -> z (+) 1 of a delta-sequence, the
// polynomials B_{p,n}(z) solving B_{p,n}(z (+) 1) - B_{p,n}(z) = [n]_p z^{n-1},
// and the solver for g(z (+) 1) - g(z) = f(z).
//
//   T_p^1 z^n = sum_k [n choose k]_p delta_k z^{n-k}
//   sum B_{p,n}(z) t^n / [n]_p! = t E(tz; p) / (sum delta_k t^k / [k]_p! - 1)

#include <optional>
#include <string>
#include <vector>

#include "qlid/qcore.hpp"

namespace qlid {

/// Polynomial (or truncated series) in z, monomial coefficients.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Scalar> coeffs);
  static ZPoly monomial(int n, const Scalar& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar operator[](int k) const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar at(const Scalar& z) const;

  ZPoly& operator+=(const ZPoly& other);
  ZPoly& operator-=(const ZPoly& other);
  ZPoly& operator*=(const Scalar& factor);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(ZPoly a, const Scalar& b) { return a *= b; }
  friend ZPoly operator*(const Scalar& b, ZPoly a) { return a *= b; }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Scalar> c_;
};

enum class DeltaPreset { ones, alsalam_half, custom };

std::string to_string(DeltaPreset preset);
DeltaPreset parse_delta_preset(const std::string& text);

/// delta_0..delta_N for base p > 0. delta_0 must be 1.
class DeltaSeq {
 public:
  static DeltaSeq ones(const Scalar& p, int N);
  /// delta_k = (-1; p)_k / 2^k.
  static DeltaSeq alsalam_half(const Scalar& p, int N);
  static DeltaSeq custom(const Scalar& p, std::vector<Scalar> delta);
  static DeltaSeq preset(DeltaPreset preset, const Scalar& p, int N);

  const Scalar& p() const { return p_; }
  DeltaPreset kind() const { return preset_; }
  /// Largest index stored.
  int capacity() const { return static_cast<int>(delta_.size()) - 1; }
  const Scalar& operator[](int k) const;
  const std::vector<Scalar>& values() const { return delta_; }

 private:
  DeltaSeq(Scalar p, std::vector<Scalar> delta, DeltaPreset preset);
  Scalar p_;
  std::vector<Scalar> delta_;
  DeltaPreset preset_;
};

/// h(z (+) 1). Throws CapacityError when deg h exceeds the delta capacity.
ZPoly dotplus_translate(const ZPoly& h, const DeltaSeq& d);

/// D_p^k with z^n -> [n]_p z^{n-1}.
ZPoly p_derivative(const ZPoly& h, const Scalar& p, int k = 1);

/// B_{p,0}(0)..B_{p,N}(0) from b_0 d_1 = 1 and sum_{j<k} b_j d_{k-j} = 0
/// (k >= 2), where d_k = delta_k/[k]_p! and b_k = B_k/[k]_p!. Needs
/// delta_0..delta_{N+1}; delta_1 == 0 throws DomainError.
std::vector<Scalar> bp_numbers(const DeltaSeq& d, int N);

/// B_{p,n}(z) = sum_k [n choose k]_p B_{n-k} z^k for n = 0..N, verified
/// against the ladder D_p B_{p,n} = [n]_p B_{p,n-1} and the jump
/// D_p^k [B_{p,n}(z (+) 1) - B_{p,n}(z)]_{z=0} = [n]_p! [k == n-1};
/// a failure throws IntegrityError.
std::vector<ZPoly> bp_polynomials(const DeltaSeq& d, int N);

/// g = sum_{n<=N} a_n B_{p,n+1}(z) / [n+1]_p for f = sum a_n z^n.
ZPoly solve_difference(const ZPoly& f, const DeltaSeq& d, int N);

struct SolutionCheck {
  int order = 0;                  // coefficients compared: 0..order
  std::optional<int> first_bad;  // first index of g(z (+) 1) - g(z) - f(z) that is nonzero
  bool exact() const { return !first_bad.has_value(); }
};

SolutionCheck verify_solution(const ZPoly& f, const ZPoly& g, const DeltaSeq& d, int order);

/// f(0) + sum_{k=1}^{n} (D^{k-1} f(0 (+) 1) - D^{k-1} f(0)) / [k]_p! phi_k(z)
/// with phi_k = B_{p,k} - B_{p,k}(0).
ZPoly finite_reconstruction(const ZPoly& f, const DeltaSeq& d);

/// B_n(z; q) = q^{n(n-1)/2} B_{p,n}(z) with p = 1/q and the alsalam_half preset.
std::vector<ZPoly> ismail_mansour_polynomials(const Scalar& q, int N);

struct GrowthReport {
  double q = 0;
  double xi1 = 0;  // smallest positive zero of Sin_q
  int N = 0;
  std::vector<double> r;  // |B_n(q)/[n]_q!| (2 xi1)^n, n = 0..N
  double sup = 0;
  int argmax = 0;
  double sup_doubled = 0;  // the same with 2N terms
  int argmax_doubled = 0;
  double relative_change = 0;
  bool passed = false;  // sup attained at n <= 6 and stable within 1%
};

GrowthReport growth_bound_check(const Scalar& q, int N);

}  // namespace qlid
