#include "qlid/lidstone.hpp"

#include <algorithm>
#include <cmath>

#include "qlid/qpolys.hpp"
#include "qlid/qspecial.hpp"

namespace qlid {

namespace {

using std::abs;

Scalar psi(const QContext& ctx, int k) { return ctx.s_pow(k * k) / q_pochhammer(ctx.q(), ctx.q(), k); }

HighFloat max_abs(const std::vector<HighFloat>& v) {
  HighFloat m = 0;
  for (const auto& x : v) m = std::max(m, HighFloat(abs(x)));
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// EntireFn
// ---------------------------------------------------------------------------

EntireFn EntireFn::polynomial(SymPoly p, std::string label) {
  EntireFn f;
  f.poly_ = std::move(p);
  f.label_ = std::move(label);
  return f;
}

EntireFn EntireFn::stream(std::vector<HighFloat> u, std::string label) {
  EntireFn f;
  f.u_ = std::move(u);
  f.label_ = std::move(label);
  return f;
}

EntireFn EntireFn::raw_stream(const QContext& ctx, const std::vector<HighFloat>& raw, std::string label) {
  std::vector<HighFloat> u;
  u.reserve(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    u.push_back(raw[k] / to_real<HighFloat>(psi(ctx, static_cast<int>(k))));
  }
  return stream(std::move(u), std::move(label));
}

EntireFn cosine_stream(const HighFloat& w, int count) {
  std::vector<HighFloat> u(static_cast<std::size_t>(std::max(count, 0)));
  HighFloat term = 1;
  for (int k = 0; 2 * k < count; ++k) {
    u[2 * k] = term;
    term *= -w * w;
  }
  return EntireFn::stream(std::move(u), "C_q");
}

EntireFn sine_stream(const HighFloat& w, int count) {
  std::vector<HighFloat> u(static_cast<std::size_t>(std::max(count, 0)));
  HighFloat term = w;
  for (int k = 0; 2 * k + 1 < count; ++k) {
    u[2 * k + 1] = term;
    term *= -w * w;
  }
  return EntireFn::stream(std::move(u), "S_q");
}

EntireFn exponential_even_stream(const HighFloat& w, int count) {
  std::vector<HighFloat> u(static_cast<std::size_t>(std::max(count, 0)));
  HighFloat term = 1;
  for (int k = 0; 2 * k < count; ++k) {
    u[2 * k] = term;
    term *= w * w;
  }
  return EntireFn::stream(std::move(u), "E_q even part");
}

HighFloat evaluate(const EntireFn& f, const QContext& ctx, const HighFloat& x) {
  if (f.is_polynomial()) {
    const auto c = to_real_coeffs<HighFloat>(f.poly());
    return eval_chebyshev<HighFloat>(c, x);
  }
  const auto rq = RealQ<HighFloat>::from_context(ctx);
  HighFloat sum = 0;
  const auto& u = f.coefficients();
  for (int k = 0; k < static_cast<int>(u.size()); ++k) {
    if (u[k] != 0) sum += u[k] * normalized_rho(rq, x, k);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// rho expansion
// ---------------------------------------------------------------------------

RhoExpansion rho_expand(const EntireFn& f, const QContext& ctx) {
  RhoExpansion out;
  if (f.is_polynomial()) {
    auto raw = change_basis(f.poly(), Basis::rho, ctx);
    for (std::size_t k = 0; k < raw.size(); ++k) raw[k] /= psi(ctx, static_cast<int>(k));
    for (const auto& v : raw) out.u.push_back(to_real<HighFloat>(v));
    out.exact = std::move(raw);
    return out;
  }
  out.u = f.coefficients();
  const int n = static_cast<int>(out.u.size());
  HighFloat tau = 0;
  for (int k = std::max(1, n - 10); k < n; ++k) {
    if (out.u[k] == 0) continue;
    tau = std::max(tau, HighFloat(boost::multiprecision::pow(HighFloat(abs(out.u[k])), HighFloat(1) / k)));
  }
  out.tau = static_cast<double>(tau);
  out.cond = 2 * out.tau / (1 - to_double(ctx.q()));
  return out;
}

// ---------------------------------------------------------------------------
// Boundary data
// ---------------------------------------------------------------------------

std::string to_string(ExpansionKind kind) { return kind == ExpansionKind::bernoulli ? "bernoulli" : "euler"; }

ExpansionKind parse_expansion_kind(const std::string& text) {
  if (text == "bernoulli") return ExpansionKind::bernoulli;
  if (text == "euler") return ExpansionKind::euler;
  throw UsageError("unknown expansion kind '" + text + "' (expected bernoulli or euler)");
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::exact: return "exact";
    case StopReason::tolerance: return "tolerance";
    case StopReason::k_limit: return "k_limit";
  }
  return "unknown";
}

BoundaryData aw_boundary_data(const EntireFn& f, const QContext& ctx, int K, ExpansionKind scheme) {
  if (K < 0) throw DomainError("aw_boundary_data: K must be non-negative");
  const int zero_offset = scheme == ExpansionKind::euler ? 1 : 0;
  BoundaryData out;
  if (f.is_polynomial()) {
    std::vector<Scalar> at_zero, at_eta;
    SymPoly d = f.poly();
    for (int j = 0; j <= 2 * K + 1; ++j) {
      if (j % 2 == zero_offset) at_zero.push_back(eval_at(d, SpecialPoint::zero(), ctx));
      if (j % 2 == 0) at_eta.push_back(eval_at(d, SpecialPoint::eta(), ctx));
      d = aw_derivative(d, ctx);
    }
    at_zero.resize(static_cast<std::size_t>(K) + 1);
    at_eta.resize(static_cast<std::size_t>(K) + 1);
    for (const auto& v : at_zero) out.at_zero.push_back(to_real<HighFloat>(v));
    for (const auto& v : at_eta) out.at_eta.push_back(to_real<HighFloat>(v));
    out.exact_at_zero = std::move(at_zero);
    out.exact_at_eta = std::move(at_eta);
    return out;
  }
  const auto rq = RealQ<HighFloat>::from_context(ctx);
  const HighFloat g = rq.gamma();
  const auto& u = f.coefficients();
  const int n = static_cast<int>(u.size());
  const auto e = eta_coefficients(rq, n);
  auto u_at = [&](int j) { return j < n ? u[j] : HighFloat(0); };
  for (int k = 0; k <= K; ++k) {
    const int j0 = 2 * k + zero_offset;
    out.at_zero.push_back(pow_int(g, j0) * u_at(j0));
    const int j = 2 * k;
    HighFloat sum = 0;
    for (int m = 0; m + j < n; ++m) sum += u[m + j] * e[m];
    out.at_eta.push_back(pow_int(g, j) * sum);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expansions
// ---------------------------------------------------------------------------

std::vector<Scalar> default_grid() {
  std::vector<Scalar> grid;
  for (int k = -10; k <= 10; ++k) grid.emplace_back(k, 10);
  for (auto& x : grid) x.canonicalize();
  return grid;
}

namespace {

struct BasisPair {
  LidstoneKind at_zero;
  LidstoneKind at_eta;
  Scalar zero_sign;
};

BasisPair basis_pair(ExpansionKind kind) {
  if (kind == ExpansionKind::bernoulli) return {LidstoneKind::B, LidstoneKind::A, Scalar(-1)};
  return {LidstoneKind::M, LidstoneKind::Mtilde, Scalar(1)};
}

void attach_cap(ExpansionReport& report, const QContext& ctx) {
  const ZeroKind zk = report.kind == ExpansionKind::bernoulli ? ZeroKind::Sq_eta : ZeroKind::Cq_eta;
  try {
    const auto z = smallest_positive_zero<double>(zk, to_double(ctx.q()));
    report.first_zero = z.value;
    report.cap = std::min(1.0, z.value);
  } catch (const SearchError&) {
    report.first_zero.reset();
    report.cap = 1;
  }
}

void add_warning(ExpansionReport& report, const std::string& text) {
  report.warning = true;
  report.status = report.status == "ok" || report.status.empty() ? text : report.status + "; " + text;
}

ExpansionReport expand(const EntireFn& f, const QContext& ctx, int K, const std::vector<Scalar>& grid,
                       ExpansionKind kind) {
  if (K < 0) throw DomainError("expansion: K must be non-negative");
  ExpansionReport report;
  report.kind = kind;
  report.K = K;
  report.status = "ok";
  report.grid = grid;
  report.data = aw_boundary_data(f, ctx, K, kind);
  const auto rho = rho_expand(f, ctx);
  report.tau = rho.tau;
  report.cond = rho.cond;
  attach_cap(report, ctx);
  if (report.tau >= report.cap) {
    add_warning(report, "tau estimate >= cap; the expansion may diverge");
  }

  const auto pair = basis_pair(kind);
  const auto basis_zero = lidstone_basis(ctx, pair.at_zero, K);
  const auto basis_eta = lidstone_basis(ctx, pair.at_eta, K);

  if (f.is_polynomial()) {
    const auto& d0 = *report.data.exact_at_zero;
    const auto& de = *report.data.exact_at_eta;
    SymPoly sum;
    for (int k = 0; k <= K; ++k) {
      sum += basis_eta[k] * de[k];
      sum += basis_zero[k] * (pair.zero_sign * d0[k]);
    }
    report.reconstruction = std::move(sum);
    report.K_used = K;
    const int degree = f.poly().degree();
    report.stop = 2 * K + 1 >= degree ? StopReason::exact : StopReason::k_limit;
    residual(report, f, ctx);
    return report;
  }

  // Float mode: basis values are exact at the rational grid points.
  const int points = static_cast<int>(grid.size());
  report.reconstruction_on_grid.assign(static_cast<std::size_t>(points), HighFloat(0));
  const double tol = ctx.float_tol();
  int small_run = 0;
  report.stop = StopReason::k_limit;
  report.K_used = K;
  for (int k = 0; k <= K; ++k) {
    HighFloat norm = 0;
    for (int i = 0; i < points; ++i) {
      const auto pt = SpecialPoint::at(grid[i]);
      const HighFloat term = to_real<HighFloat>(eval_at(basis_eta[k], pt, ctx)) * report.data.at_eta[k] +
                             to_real<HighFloat>(pair.zero_sign * eval_at(basis_zero[k], pt, ctx)) *
                                 report.data.at_zero[k];
      report.reconstruction_on_grid[i] += term;
      norm = std::max(norm, HighFloat(abs(term)));
    }
    report.term_norm.push_back(norm);
    small_run = norm < tol ? small_run + 1 : 0;
    if (small_run >= 2 && k < K) {
      report.K_used = k;
      report.stop = StopReason::tolerance;
      break;
    }
  }
  residual(report, f, ctx);

  const HighFloat data_norm = std::max(max_abs(report.data.at_zero), max_abs(report.data.at_eta));
  if (data_norm < tol && max_abs(report.function_on_grid) > 1e3 * tol) {
    add_warning(report, "boundary data vanish while f does not; f is not expandable");
  }
  return report;
}

}  // namespace

ExpansionReport bernoulli_expansion(const EntireFn& f, const QContext& ctx, int K, const std::vector<Scalar>& grid) {
  return expand(f, ctx, K, grid, ExpansionKind::bernoulli);
}

ExpansionReport euler_expansion(const EntireFn& f, const QContext& ctx, int K, const std::vector<Scalar>& grid) {
  return expand(f, ctx, K, grid, ExpansionKind::euler);
}

double residual(ExpansionReport& report, const EntireFn& f, const QContext& ctx) {
  if (report.reconstruction) {
    const Scalar diff = (f.poly() - *report.reconstruction).max_abs_coeff();
    report.exact_zero = diff == 0;
    report.residual = to_double(diff);
    return report.residual;
  }
  report.exact_zero = false;
  if (report.grid.empty()) {
    add_warning(report, "empty grid; residual is vacuous");
    report.residual = 0;
    return 0;
  }
  report.function_on_grid.clear();
  HighFloat worst = 0;
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    const HighFloat fx = evaluate(f, ctx, to_real<HighFloat>(report.grid[i]));
    report.function_on_grid.push_back(fx);
    worst = std::max(worst, HighFloat(abs(fx - report.reconstruction_on_grid[i])));
  }
  report.residual = static_cast<double>(worst);
  return report.residual;
}

}  // namespace qlid
