#pragma once

// The four q-Bernoulli / q-Euler polynomial families, their number
// sequences, the two Lidstone basis pairs and the identity registry.
//
//   suslov_B  sum B_n(x) w^n      = w (q w^2; q^2) E_q(x; w) / ((-w; q^{1/2}) - (w; q^{1/2}))
//   new_beta  sum beta_n(x) w^n   = w (w; q^{1/2})  E_q(x; w) / ((-w; q^{1/2}) - (w; q^{1/2}))
//   suslov_E  sum E_n(x) w^n      =   (q w^2; q^2) E_q(x; w) / ((-w; q^{1/2}) + (w; q^{1/2}))
//   new_E     sum Et_n(x) w^n     = 2 (w; q^{1/2})  E_q(x; w) / ((-w; q^{1/2}) + (w; q^{1/2}))

#include <optional>
#include <string>
#include <vector>

#include "qlid/fps.hpp"
#include "qlid/qcore.hpp"
#include "qlid/symlaurent.hpp"

namespace qlid {

enum class FamilyKind { suslov_B, new_beta, suslov_E, new_E };

std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& text);

struct PolyFamilyTable {
  FamilyKind kind;
  Scalar s;
  std::vector<SymPoly> entries;  // index 0..N
};

/// Scalar factor m(w) with generating function m(w) * E_q(x; w). The shared
/// power of w in the Bernoulli kinds is cancelled before dividing.
ScalarSeries family_multiplier(const QContext& ctx, FamilyKind kind, int order);

/// E_q(x; w) coefficients Psi_n rho_n, cached per s.
PolySeries eq_exponential_cached(const QContext& ctx, int order);

/// Entries 0..N. Tables are cached per (kind, s) and shared across calls.
PolyFamilyTable build_family(const QContext& ctx, FamilyKind kind, int N);

enum class NumberKind { beta_q, suslov_Bq, im_Bq, suslov_Eq };

std::string to_string(NumberKind kind);
NumberKind parse_number_kind(const std::string& text);

struct NumberTable {
  NumberKind kind;
  Scalar base;  // q for beta_q / suslov_*; the Ismail-Mansour base for im_Bq
  std::vector<Scalar> values;  // index 0..N
};

/// beta_q is read off the new_beta family at x = 0 and must agree with the
/// quotient w E(eta;-w) / (E(eta;w) - E(eta;-w)); a mismatch throws
/// IntegrityError. suslov_Bq and suslov_Eq use the product forms, im_Bq is
/// im_bernoulli_numbers(q, N).
NumberTable build_numbers(const QContext& ctx, NumberKind kind, int N);

/// B_n(q) from y / (e_q(y/2) E_q(y/2) - 1) = sum B_n(q) y^n / [n]_q!, with
/// e_q(y) = sum y^n/[n]! and E_q(y) = sum q^{n(n-1)/2} y^n/[n]!.
std::vector<Scalar> im_bernoulli_numbers(const Scalar& base, int N);

enum class LidstoneKind { A, B, M, Mtilde };

std::string to_string(LidstoneKind kind);
LidstoneKind parse_lidstone_kind(const std::string& text);

/// Basis polynomials k = 0..K scaled from the family tables
///   A_k = 2 g^{-2k} B_{2k+1},  B_k = 2 g^{-2k} beta_{2k+1},
///   M_k = g^{-2k-1} Et_{2k+1}, Mt_k = 2 g^{-2k} E_{2k},   g = ctx.gamma(),
/// cross-checked against lidstone_basis_direct; a mismatch throws IntegrityError.
std::vector<SymPoly> lidstone_basis(const QContext& ctx, LidstoneKind kind, int K);

/// The same bases read off their own generating quotients:
///   sum g^{2k} A_k y^{2k}       = (E(x;y) - E(x;-y)) / (E(eta;y) - E(eta;-y))
///   sum g^{2k} B_k y^{2k}       = (E(eta;-y)E(x;y) - E(eta;y)E(x;-y)) / (E(eta;y) - E(eta;-y))
///   sum g^{2k+1} M_k y^{2k+1}   = (E(eta;-y)E(x;y) - E(eta;y)E(x;-y)) / (E(eta;y) + E(eta;-y))
///   sum g^{2k} Mt_k y^{2k}      = (E(x;y) + E(x;-y)) / (E(eta;y) + E(eta;-y))
std::vector<SymPoly> lidstone_basis_direct(const QContext& ctx, LidstoneKind kind, int K);

/// 2 q^{-n^2/4} (q;q)_n sum_k q^{k^2+k/2} / (q^{1/2};q^{1/2})_{2k+1} B_{n-2k}(x).
SymPoly hermite_from_bernoulli(const QContext& ctx, int n);

// ---------------------------------------------------------------------------
// Identity registry
// ---------------------------------------------------------------------------

struct IdentityCase {
  int n;
  bool passed;
};

struct IdentityReport {
  std::string name;
  std::string statement;
  int N = 0;
  bool passed = true;
  std::vector<IdentityCase> cases;
  std::optional<int> first_failure;
  SymPoly lhs;  // both sides at the first failure
  SymPoly rhs;
};

const std::vector<std::string>& identity_names();

/// Evaluates both sides exactly for every index up to N. Unknown names throw
/// UsageError.
IdentityReport check_identity(const QContext& ctx, const std::string& name, int N);

}  // namespace qlid
