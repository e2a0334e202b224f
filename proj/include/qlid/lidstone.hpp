#pragma once

// The two q-Lidstone expansions with nodes {0, eta}:
//
//   bernoulli  f = sum_k A_k(x) D^{2k} f(eta) - sum_k B_k(x) D^{2k} f(0)
//   euler      f = sum_k M_k(x) D^{2k+1} f(0) + sum_k Mt_k(x) D^{2k} f(eta)
//
// Polynomials are handled exactly. Entire functions are given as streams of
// normalized rho-coefficients u_k, f = sum u_k Psi_k with
// Psi_k = q^{k^2/4} rho_k / (q;q)_k, and handled in 50-digit floats. On that
// basis D Psi_k = gamma Psi_{k-1}, Psi_k(0) = [k == 0] and Psi_k(eta) is the
// k-th Taylor coefficient of E_q(eta; w), so
//
//   D^j f(0)   = gamma^j u_j,
//   D^j f(eta) = gamma^j sum_m u_{m+j} Psi_m(eta).

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <optional>
#include <string>
#include <vector>

#include "qlid/qcore.hpp"
#include "qlid/symlaurent.hpp"

namespace qlid {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

/// Declared q-exponential growth |f| <= K |x|^a exp(k ln^2|x| / (2 ln^2 q)).
struct Growth {
  double order = 0;
  double type = 0;
};

class EntireFn {
 public:
  static EntireFn polynomial(SymPoly p, std::string label = {});
  /// Normalized coefficients u_k (f = sum u_k Psi_k), floating.
  static EntireFn stream(std::vector<HighFloat> u, std::string label = {});
  /// Raw coefficients f_k (f = sum f_k rho_k), converted with u_k = f_k (q;q)_k / q^{k^2/4}.
  static EntireFn raw_stream(const QContext& ctx, const std::vector<HighFloat>& f, std::string label = {});

  bool is_polynomial() const { return poly_.has_value(); }
  const SymPoly& poly() const { return *poly_; }
  const std::vector<HighFloat>& coefficients() const { return u_; }
  const std::string& label() const { return label_; }

  std::optional<Growth> growth;

 private:
  std::optional<SymPoly> poly_;
  std::vector<HighFloat> u_;
  std::string label_;
};

/// Truncated streams for the basic cosine/sine and the even part of E_q:
///   C_q(x; w) = sum (-1)^k w^{2k} Psi_{2k},  S_q(x; w) = sum (-1)^k w^{2k+1} Psi_{2k+1},
///   (E_q(x; w) + E_q(x; -w)) / 2 = sum w^{2k} Psi_{2k}.
/// `count` is the stream length.
EntireFn cosine_stream(const HighFloat& w, int count);
EntireFn sine_stream(const HighFloat& w, int count);
EntireFn exponential_even_stream(const HighFloat& w, int count);

/// Evaluates f at a real x in [-1, 1].
HighFloat evaluate(const EntireFn& f, const QContext& ctx, const HighFloat& x);

struct RhoExpansion {
  std::optional<std::vector<Scalar>> exact;  // u_k for polynomials
  std::vector<HighFloat> u;
  /// Max of |u_n|^{1/n} over the last 10 stream indices; 0 for polynomials
  /// (the stream terminates).
  double tau = 0;
  /// limsup (|D^n f(0)| q^{-n/4})^{1/n} estimate, equal to 2 tau / (1 - q).
  double cond = 0;
};

RhoExpansion rho_expand(const EntireFn& f, const QContext& ctx);

enum class ExpansionKind { bernoulli, euler };

std::string to_string(ExpansionKind kind);
ExpansionKind parse_expansion_kind(const std::string& text);

/// Boundary data for k = 0..K. Bernoulli: at_zero = D^{2k} f(0), at_eta =
/// D^{2k} f(eta). Euler: at_zero = D^{2k+1} f(0), at_eta = D^{2k} f(eta).
struct BoundaryData {
  std::optional<std::vector<Scalar>> exact_at_zero;
  std::optional<std::vector<Scalar>> exact_at_eta;
  std::vector<HighFloat> at_zero;
  std::vector<HighFloat> at_eta;
};

BoundaryData aw_boundary_data(const EntireFn& f, const QContext& ctx, int K, ExpansionKind scheme);

enum class StopReason { exact, tolerance, k_limit };

std::string to_string(StopReason reason);

struct ExpansionReport {
  ExpansionKind kind;
  int K = 0;       // requested truncation
  int K_used = 0;  // last term included
  BoundaryData data;
  std::vector<HighFloat> term_norm;  // max grid |term_k| (float mode)
  double tau = 0;
  double cond = 0;
  double cap = 1;  // min(1, w_1) or min(1, w~_1)
  std::optional<double> first_zero;
  bool warning = false;
  std::string status;  // "ok" or the warning text
  StopReason stop = StopReason::k_limit;
  std::optional<SymPoly> reconstruction;  // exact mode
  std::vector<Scalar> grid;
  std::vector<HighFloat> reconstruction_on_grid;  // float mode
  std::vector<HighFloat> function_on_grid;
  bool exact_zero = false;
  double residual = 0;
};

/// x = -1, -0.9, ..., 1.
std::vector<Scalar> default_grid();

/// Assembles the expansion. Polynomial input is expanded exactly and
/// compared coefficientwise; stream input is summed on `grid` and compared
/// pointwise, stopping after two consecutive terms below ctx.float_tol().
ExpansionReport bernoulli_expansion(const EntireFn& f, const QContext& ctx, int K,
                                    const std::vector<Scalar>& grid = default_grid());
ExpansionReport euler_expansion(const EntireFn& f, const QContext& ctx, int K,
                                const std::vector<Scalar>& grid = default_grid());

/// Max |f - reconstruction| over the report's grid, or the max abs
/// coefficient of the exact difference. An empty float grid gives 0 and sets
/// the warning.
double residual(ExpansionReport& report, const EntireFn& f, const QContext& ctx);

}  // namespace qlid
