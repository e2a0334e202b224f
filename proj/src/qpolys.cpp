#include "qlid/qpolys.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "qlid/parallel.hpp"

namespace qlid {

namespace {

struct TableCache {
  std::mutex mutex;
  std::map<std::string, PolySeries> exponential;
  std::map<std::pair<int, std::string>, std::vector<SymPoly>> families;
};

TableCache& cache() {
  static TableCache c;
  return c;
}

std::vector<SymPoly> prefix(const std::vector<SymPoly>& v, int count) {
  return {v.begin(), v.begin() + count};
}

Scalar sign_power(int n) { return n % 2 == 0 ? Scalar(1) : Scalar(-1); }

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::suslov_B: return "suslov_B";
    case FamilyKind::new_beta: return "new_beta";
    case FamilyKind::suslov_E: return "suslov_E";
    case FamilyKind::new_E: return "new_E";
  }
  return "unknown";
}

FamilyKind parse_family_kind(const std::string& text) {
  if (text == "suslov_B" || text == "B") return FamilyKind::suslov_B;
  if (text == "new_beta" || text == "beta") return FamilyKind::new_beta;
  if (text == "suslov_E" || text == "E") return FamilyKind::suslov_E;
  if (text == "new_E" || text == "Etilde") return FamilyKind::new_E;
  throw UsageError("unknown family '" + text + "' (expected suslov_B, new_beta, suslov_E or new_E)");
}

std::string to_string(NumberKind kind) {
  switch (kind) {
    case NumberKind::beta_q: return "beta_q";
    case NumberKind::suslov_Bq: return "suslov_Bq";
    case NumberKind::im_Bq: return "im_Bq";
    case NumberKind::suslov_Eq: return "suslov_Eq";
  }
  return "unknown";
}

NumberKind parse_number_kind(const std::string& text) {
  if (text == "beta_q" || text == "beta") return NumberKind::beta_q;
  if (text == "suslov_Bq" || text == "suslov_B") return NumberKind::suslov_Bq;
  if (text == "im_Bq" || text == "im") return NumberKind::im_Bq;
  if (text == "suslov_Eq" || text == "suslov_E") return NumberKind::suslov_Eq;
  throw UsageError("unknown number kind '" + text + "' (expected beta_q, suslov_Bq, im_Bq or suslov_Eq)");
}

std::string to_string(LidstoneKind kind) {
  switch (kind) {
    case LidstoneKind::A: return "A";
    case LidstoneKind::B: return "B";
    case LidstoneKind::M: return "M";
    case LidstoneKind::Mtilde: return "Mtilde";
  }
  return "unknown";
}

LidstoneKind parse_lidstone_kind(const std::string& text) {
  if (text == "A") return LidstoneKind::A;
  if (text == "B") return LidstoneKind::B;
  if (text == "M") return LidstoneKind::M;
  if (text == "Mtilde" || text == "Mt") return LidstoneKind::Mtilde;
  throw UsageError("unknown Lidstone basis '" + text + "' (expected A, B, M or Mtilde)");
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

ScalarSeries family_multiplier(const QContext& ctx, FamilyKind kind, int order) {
  const Scalar& r = ctx.sqrt_q();
  const auto minus = euler_factor_series(-1, r, order + 1);  // (-w; q^{1/2})
  const auto plus = euler_factor_series(1, r, order + 1);    // (w; q^{1/2})
  const auto even_product = infinite_product_series(ctx.q(), 2, ctx.q() * ctx.q(), order);
  switch (kind) {
    case FamilyKind::suslov_B: return series_div(even_product, shift_down(minus - plus, 1));
    case FamilyKind::new_beta: return series_div(plus.truncated(order), shift_down(minus - plus, 1));
    case FamilyKind::suslov_E: return series_div(even_product, (minus + plus).truncated(order));
    case FamilyKind::new_E: return series_div((plus * Scalar(2)).truncated(order), (minus + plus).truncated(order));
  }
  throw UsageError("family_multiplier: unknown family");
}

PolySeries eq_exponential_cached(const QContext& ctx, int order) {
  auto& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mutex);
    const auto it = c.exponential.find(ctx.key());
    if (it != c.exponential.end() && it->second.order() >= order) return it->second.truncated(order);
  }
  auto series = eq_exponential_series(ctx, order);
  std::lock_guard<std::mutex> lock(c.mutex);
  auto& slot = c.exponential[ctx.key()];
  if (slot.order() < order) slot = series;
  return series;
}

PolyFamilyTable build_family(const QContext& ctx, FamilyKind kind, int N) {
  if (N < 0) throw DomainError("build_family: N must be non-negative");
  auto& c = cache();
  const auto key = std::make_pair(static_cast<int>(kind), ctx.key());
  {
    std::lock_guard<std::mutex> lock(c.mutex);
    const auto it = c.families.find(key);
    if (it != c.families.end() && static_cast<int>(it->second.size()) > N) {
      return {kind, ctx.s(), prefix(it->second, N + 1)};
    }
  }
  const auto product = eq_exponential_cached(ctx, N + 1) * family_multiplier(ctx, kind, N + 1);
  std::vector<SymPoly> entries = product.coeffs();
  std::lock_guard<std::mutex> lock(c.mutex);
  auto& slot = c.families[key];
  if (slot.size() < entries.size()) slot = entries;
  return {kind, ctx.s(), std::move(entries)};
}

// ---------------------------------------------------------------------------
// Numbers
// ---------------------------------------------------------------------------

std::vector<Scalar> im_bernoulli_numbers(const Scalar& base, int N) {
  if (N < 0) throw DomainError("im_bernoulli_numbers: N must be non-negative");
  const int order = N + 2;
  ScalarSeries small_e(order), big_e(order);
  Scalar factorial = 1;
  for (int n = 0; n < order; ++n) {
    if (n > 0) factorial *= q_number(n, base);
    small_e[n] = 1 / factorial;
    big_e[n] = pow(base, n * (n - 1) / 2) / factorial;
  }
  auto product = scale_arg(small_e, Scalar(1, 2)) * scale_arg(big_e, Scalar(1, 2));
  product[0] -= 1;
  const auto denominator = shift_down(product, 1);
  ScalarSeries one(N + 1);
  one[0] = 1;
  const auto quotient = series_div(one, denominator);
  std::vector<Scalar> out(static_cast<std::size_t>(N) + 1);
  factorial = 1;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) factorial *= q_number(n, base);
    out[n] = quotient[n] * factorial;
  }
  return out;
}

NumberTable build_numbers(const QContext& ctx, NumberKind kind, int N) {
  if (N < 0) throw DomainError("build_numbers: N must be non-negative");
  const int order = N + 1;
  const Scalar& r = ctx.sqrt_q();
  NumberTable table{kind, ctx.q(), {}};
  switch (kind) {
    case NumberKind::beta_q: {
      const auto family = build_family(ctx, FamilyKind::new_beta, N);
      for (const auto& p : family.entries) table.values.push_back(eval_at(p, SpecialPoint::zero(), ctx));
      const auto eta = eq_eta_series(ctx, order);
      const auto quotient = series_div(scale_arg(eta, -1), eta_odd_over_w(ctx, order));
      for (int n = 0; n <= N; ++n) {
        if (quotient[n] != table.values[n]) {
          throw IntegrityError("build_numbers(beta_q): family value at 0 and generating quotient differ at n = " +
                               std::to_string(n) + ": " + to_string(table.values[n]) + " vs " +
                               to_string(quotient[n]));
        }
      }
      break;
    }
    case NumberKind::suslov_Bq: {
      const auto minus = euler_factor_series(-1, r, order + 1);
      const auto plus = euler_factor_series(1, r, order + 1);
      table.values = series_div(plus.truncated(order), shift_down(minus - plus, 1)).coeffs();
      break;
    }
    case NumberKind::suslov_Eq: {
      const auto minus = euler_factor_series(-1, r, order);
      const auto plus = euler_factor_series(1, r, order);
      table.values = series_div(plus, minus + plus).coeffs();
      break;
    }
    case NumberKind::im_Bq:
      table.values = im_bernoulli_numbers(ctx.q(), N);
      break;
  }
  return table;
}

// ---------------------------------------------------------------------------
// Lidstone bases
// ---------------------------------------------------------------------------

std::vector<SymPoly> lidstone_basis_direct(const QContext& ctx, LidstoneKind kind, int K) {
  if (K < 0) throw DomainError("lidstone_basis: K must be non-negative");
  const int order = 2 * K + 2;
  const auto e = eq_exponential_cached(ctx, order + 1);
  const auto e_reflected = scale_arg(e, -1);
  const auto eta = eq_eta_series(ctx, order + 1);
  const auto eta_reflected = scale_arg(eta, -1);
  const Scalar& g = ctx.gamma();

  PolySeries quotient;
  switch (kind) {
    case LidstoneKind::A:
      quotient = series_div(shift_down(e - e_reflected, 1), eta_odd_over_w(ctx, order));
      break;
    case LidstoneKind::B:
      quotient = series_div(shift_down(e * eta_reflected - e_reflected * eta, 1), eta_odd_over_w(ctx, order));
      break;
    case LidstoneKind::M:
      quotient = series_div(e * eta_reflected - e_reflected * eta, eta_even(ctx, order + 1));
      break;
    case LidstoneKind::Mtilde:
      quotient = series_div(e + e_reflected, eta_even(ctx, order + 1));
      break;
  }
  std::vector<SymPoly> out;
  for (int k = 0; k <= K; ++k) {
    const int power = kind == LidstoneKind::M ? 2 * k + 1 : 2 * k;
    out.push_back(quotient[power] * pow(g, -power));
  }
  return out;
}

std::vector<SymPoly> lidstone_basis(const QContext& ctx, LidstoneKind kind, int K) {
  if (K < 0) throw DomainError("lidstone_basis: K must be non-negative");
  const Scalar& g = ctx.gamma();
  std::vector<SymPoly> out;
  switch (kind) {
    case LidstoneKind::A: {
      const auto f = build_family(ctx, FamilyKind::suslov_B, 2 * K + 1);
      for (int k = 0; k <= K; ++k) out.push_back(f.entries[2 * k + 1] * (2 * pow(g, -2 * k)));
      break;
    }
    case LidstoneKind::B: {
      const auto f = build_family(ctx, FamilyKind::new_beta, 2 * K + 1);
      for (int k = 0; k <= K; ++k) out.push_back(f.entries[2 * k + 1] * (2 * pow(g, -2 * k)));
      break;
    }
    case LidstoneKind::M: {
      const auto f = build_family(ctx, FamilyKind::new_E, 2 * K + 1);
      for (int k = 0; k <= K; ++k) out.push_back(f.entries[2 * k + 1] * pow(g, -2 * k - 1));
      break;
    }
    case LidstoneKind::Mtilde: {
      const auto f = build_family(ctx, FamilyKind::suslov_E, 2 * K);
      for (int k = 0; k <= K; ++k) out.push_back(f.entries[2 * k] * (2 * pow(g, -2 * k)));
      break;
    }
  }
  const auto direct = lidstone_basis_direct(ctx, kind, K);
  for (int k = 0; k <= K; ++k) {
    if (!(out[k] == direct[k])) {
      throw IntegrityError("lidstone_basis(" + to_string(kind) +
                           "): family scaling and generating quotient differ at k = " + std::to_string(k));
    }
  }
  return out;
}

SymPoly hermite_from_bernoulli(const QContext& ctx, int n) {
  if (n < 0) throw DomainError("hermite_from_bernoulli: n must be non-negative");
  const auto family = build_family(ctx, FamilyKind::suslov_B, n);
  const Scalar& r = ctx.sqrt_q();
  SymPoly sum;
  for (int k = 0; 2 * k <= n; ++k) {
    const Scalar c = ctx.s_pow(4 * k * k + 2 * k) / q_pochhammer(r, r, 2 * k + 1);
    sum += family.entries[n - 2 * k] * c;
  }
  return sum * (2 * ctx.s_pow(-n * n) * q_pochhammer(ctx.q(), ctx.q(), n));
}

// ---------------------------------------------------------------------------
// Identity registry
// ---------------------------------------------------------------------------

namespace {

struct Row {
  SymPoly lhs;
  SymPoly rhs;
};

struct IdentitySpec {
  std::string name;
  std::string statement;
  int first;  // smallest index checked
  std::function<Row(const QContext&, int n, int N)> row;
};

SymPoly constant(const Scalar& c) { return SymPoly::constant(c); }

std::vector<SymPoly> family(const QContext& ctx, FamilyKind kind, int N) {
  return build_family(ctx, kind, N).entries;
}

IdentitySpec ladder(FamilyKind kind, const std::string& symbol) {
  return {"ladder_" + to_string(kind), "D_q " + symbol + "_n = 2 q^{1/4}/(1-q) " + symbol + "_{n-1}", 1,
          [kind](const QContext& ctx, int n, int) {
            const auto f = family(ctx, kind, n);
            return Row{aw_derivative(f[n], ctx), f[n - 1] * ctx.gamma()};
          }};
}

IdentitySpec lidstone_ladder(LidstoneKind kind) {
  return {"lidstone_ladder_" + to_string(kind), "D_q^2 " + to_string(kind) + "_k = " + to_string(kind) + "_{k-1}",
          1, [kind](const QContext& ctx, int k, int) {
            const auto basis = lidstone_basis(ctx, kind, k);
            return Row{aw_derivative(basis[k], ctx, 2), basis[k - 1]};
          }};
}

const std::vector<IdentitySpec>& registry() {
  static const std::vector<IdentitySpec> specs = [] {
    std::vector<IdentitySpec> v;
    v.push_back(ladder(FamilyKind::suslov_B, "B"));
    v.push_back(ladder(FamilyKind::new_beta, "beta"));
    v.push_back(ladder(FamilyKind::suslov_E, "E"));
    v.push_back(ladder(FamilyKind::new_E, "Et"));

    v.push_back({"connection_F1", "beta_n(x) = sum_k (-q^{-1/2};q)_k/(q;q)_k (-q^{1/2})^k B_{n-k}(x)", 0,
                 [](const QContext& ctx, int n, int) {
                   const auto b = family(ctx, FamilyKind::suslov_B, n);
                   const auto beta = family(ctx, FamilyKind::new_beta, n);
                   const Scalar& r = ctx.sqrt_q();
                   SymPoly rhs;
                   for (int k = 0; k <= n; ++k) {
                     const Scalar c = q_pochhammer(-1 / r, ctx.q(), k) / q_pochhammer(ctx.q(), ctx.q(), k) *
                                      pow(Scalar(-r), k);
                     rhs += b[n - k] * c;
                   }
                   return Row{beta[n], rhs};
                 }});
    v.push_back({"connection_F2", "B_n(x) = sum_k (-q^{1/2};q)_k/(q;q)_k beta_{n-k}(x)", 0,
                 [](const QContext& ctx, int n, int) {
                   const auto b = family(ctx, FamilyKind::suslov_B, n);
                   const auto beta = family(ctx, FamilyKind::new_beta, n);
                   SymPoly rhs;
                   for (int k = 0; k <= n; ++k) {
                     const Scalar c =
                         q_pochhammer(-ctx.sqrt_q(), ctx.q(), k) / q_pochhammer(ctx.q(), ctx.q(), k);
                     rhs += beta[n - k] * c;
                   }
                   return Row{b[n], rhs};
                 }});
    v.push_back({"reflection_B", "B_n(-x) = (-1)^n B_n(x)", 0, [](const QContext& ctx, int n, int) {
                   const auto b = family(ctx, FamilyKind::suslov_B, n);
                   return Row{b[n].reflected(), b[n] * sign_power(n)};
                 }});
    v.push_back({"reflection_beta",
                 "beta_n(-x) = (-1)^n sum_k (-1;q^{1/2})_k/(q^{1/2};q^{1/2})_k beta_{n-k}(x)", 0,
                 [](const QContext& ctx, int n, int) {
                   const auto beta = family(ctx, FamilyKind::new_beta, n);
                   const Scalar& r = ctx.sqrt_q();
                   SymPoly rhs;
                   for (int k = 0; k <= n; ++k) {
                     rhs += beta[n - k] * (q_pochhammer(Scalar(-1), r, k) / q_pochhammer(r, r, k));
                   }
                   return Row{beta[n].reflected(), rhs * sign_power(n)};
                 }});
    v.push_back({"eq16",
                 "B_n(x) = (-1)^n sum_k beta_{n-k}(q) (q^{1/4}z, q^{1/4}/z; q^{1/2})_k/(q;q)_k", 0,
                 [](const QContext& ctx, int n, int) {
                   const auto b = family(ctx, FamilyKind::suslov_B, n);
                   const auto numbers = build_numbers(ctx, NumberKind::beta_q, n).values;
                   SymPoly rhs;
                   for (int k = 0; k <= n; ++k) {
                     rhs += phi_poly(ctx.s(), ctx.sqrt_q(), k) * (numbers[n - k] / q_pochhammer(ctx.q(), ctx.q(), k));
                   }
                   return Row{b[n], rhs * sign_power(n)};
                 }});
    v.push_back({"eq17", "beta_n(x) = sum_k beta_{n-k}(q) q^{k^2/4}/(q;q)_k rho_k(x)", 0,
                 [](const QContext& ctx, int n, int) {
                   const auto beta = family(ctx, FamilyKind::new_beta, n);
                   const auto numbers = build_numbers(ctx, NumberKind::beta_q, n).values;
                   const auto e = eq_exponential_cached(ctx, n + 1);
                   SymPoly rhs;
                   for (int k = 0; k <= n; ++k) rhs += e[k] * numbers[n - k];
                   return Row{beta[n], rhs};
                 }});
    v.push_back({"eq18",
                 "H_n(x|q) = 2 q^{-n^2/4} (q;q)_n sum_k q^{k^2+k/2}/(q^{1/2};q^{1/2})_{2k+1} B_{n-2k}(x)", 0,
                 [](const QContext& ctx, int n, int) {
                   return Row{special_poly(ctx, Family::hermite, n), hermite_from_bernoulli(ctx, n)};
                 }});
    v.push_back({"q_square_relation",
                 "beta_n(q) = B_n(q^{1/2}) 2^{n-1} (1-q^{1/2}) / (q^{1/2};q^{1/2})_n  (Ismail-Mansour numbers at base q^{1/2})",
                 0, [](const QContext& ctx, int n, int) {
                   const auto beta = build_numbers(ctx, NumberKind::beta_q, n).values;
                   const Scalar& r = ctx.sqrt_q();
                   const auto im = im_bernoulli_numbers(r, n);
                   const Scalar rhs = im[n] * pow(Scalar(2), n - 1) * (1 - r) / q_pochhammer(r, r, n);
                   return Row{constant(beta[n]), constant(rhs)};
                 }});
    v.push_back({"translation_B", "E_q^{-eta} B_n(x) = beta_n(x)", 0, [](const QContext& ctx, int n, int) {
                   const auto b = family(ctx, FamilyKind::suslov_B, n);
                   const auto beta = family(ctx, FamilyKind::new_beta, n);
                   return Row{q_translate(b[n], SpecialPoint::minus_eta(), ctx), beta[n]};
                 }});
    v.push_back({"translation_E", "E_q^{-eta} E_n(x) = Et_n(x) / 2", 0, [](const QContext& ctx, int n, int) {
                   const auto e = family(ctx, FamilyKind::suslov_E, n);
                   const auto et = family(ctx, FamilyKind::new_E, n);
                   return Row{q_translate(e[n], SpecialPoint::minus_eta(), ctx), et[n] * Scalar(1, 2)};
                 }});
    v.push_back({"numbers_agree_Eq10", "B_n(q) from the product quotient = beta_n(q) = B_n(-eta) = beta_n(0)", 0,
                 [](const QContext& ctx, int n, int) {
                   const auto suslov = build_numbers(ctx, NumberKind::suslov_Bq, n).values;
                   const auto beta = build_numbers(ctx, NumberKind::beta_q, n).values;
                   const auto b = family(ctx, FamilyKind::suslov_B, n);
                   const Scalar at_minus_eta = eval_at(b[n], SpecialPoint::minus_eta(), ctx);
                   return Row{SymPoly(std::vector<Scalar>{suslov[n], at_minus_eta}),
                              SymPoly(std::vector<Scalar>{beta[n], beta[n]})};
                 }});
    v.push_back({"bernoulli_at_minus_eta", "B_n(-eta) = beta_n(0)", 0, [](const QContext& ctx, int n, int) {
                   const auto b = family(ctx, FamilyKind::suslov_B, n);
                   const auto beta = family(ctx, FamilyKind::new_beta, n);
                   return Row{constant(eval_at(b[n], SpecialPoint::minus_eta(), ctx)),
                              constant(eval_at(beta[n], SpecialPoint::zero(), ctx))};
                 }});
    v.push_back({"euler_at_minus_eta", "E_n(-eta) = Et_n(0) / 2", 0, [](const QContext& ctx, int n, int) {
                   const auto e = family(ctx, FamilyKind::suslov_E, n);
                   const auto et = family(ctx, FamilyKind::new_E, n);
                   return Row{constant(eval_at(e[n], SpecialPoint::minus_eta(), ctx)),
                              constant(eval_at(et[n], SpecialPoint::zero(), ctx) / 2)};
                 }});
    v.push_back({"hermite_generating", "[t^n] (q t^2; q^2)_inf E_q(x; t) = q^{n^2/4}/(q;q)_n H_n(x|q)", 0,
                 [](const QContext& ctx, int n, int) {
                   const auto e = eq_exponential_cached(ctx, n + 1);
                   const auto product = e * infinite_product_series(ctx.q(), 2, ctx.q() * ctx.q(), n + 1);
                   const Scalar psi = ctx.s_pow(n * n) / q_pochhammer(ctx.q(), ctx.q(), n);
                   return Row{product[n], special_poly(ctx, Family::hermite, n) * psi};
                 }});
    v.push_back({"bernoulli_lidstone_decomposition",
                 "E_q(x;y) = -sum g^{2k} B_k(x) y^{2k} + E_q(eta;y) sum g^{2k} A_k(x) y^{2k}", 0,
                 [](const QContext& ctx, int n, int) {
                   const int K = n / 2;
                   const auto a = lidstone_basis(ctx, LidstoneKind::A, K);
                   const auto b = lidstone_basis(ctx, LidstoneKind::B, K);
                   const auto eta = eq_eta_series(ctx, n + 1);
                   const Scalar& g = ctx.gamma();
                   SymPoly rhs;
                   if (n % 2 == 0) rhs -= b[K] * pow(g, n);
                   for (int k = 0; 2 * k <= n; ++k) rhs += a[k] * (pow(g, 2 * k) * eta[n - 2 * k]);
                   return Row{eq_exponential_cached(ctx, n + 1)[n], rhs};
                 }});
    v.push_back({"euler_lidstone_decomposition",
                 "E_q(x;y) = sum g^{2k+1} M_k(x) y^{2k+1} + E_q(eta;y) sum g^{2k} Mt_k(x) y^{2k}", 0,
                 [](const QContext& ctx, int n, int) {
                   const int K = n / 2;
                   const auto m = lidstone_basis(ctx, LidstoneKind::M, K);
                   const auto mt = lidstone_basis(ctx, LidstoneKind::Mtilde, K);
                   const auto eta = eq_eta_series(ctx, n + 1);
                   const Scalar& g = ctx.gamma();
                   SymPoly rhs;
                   if (n % 2 == 1) rhs += m[K] * pow(g, n);
                   for (int k = 0; 2 * k <= n; ++k) rhs += mt[k] * (pow(g, 2 * k) * eta[n - 2 * k]);
                   return Row{eq_exponential_cached(ctx, n + 1)[n], rhs};
                 }});
    v.push_back(lidstone_ladder(LidstoneKind::A));
    v.push_back(lidstone_ladder(LidstoneKind::B));
    v.push_back(lidstone_ladder(LidstoneKind::M));
    v.push_back(lidstone_ladder(LidstoneKind::Mtilde));
    v.push_back({"lidstone_translation", "E_q^{-eta} A_k(x) = B_k(x)", 0, [](const QContext& ctx, int k, int) {
                   const auto a = lidstone_basis(ctx, LidstoneKind::A, k);
                   const auto b = lidstone_basis(ctx, LidstoneKind::B, k);
                   return Row{q_translate(a[k], SpecialPoint::minus_eta(), ctx), b[k]};
                 }});
    return v;
  }();
  return specs;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : registry()) v.push_back(s.name);
    return v;
  }();
  return names;
}

IdentityReport check_identity(const QContext& ctx, const std::string& name, int N) {
  const IdentitySpec* spec = nullptr;
  for (const auto& s : registry()) {
    if (s.name == name) spec = &s;
  }
  if (spec == nullptr) throw UsageError("unknown identity '" + name + "'");
  if (N < 0) throw DomainError("check_identity: N must be non-negative");

  // Warm the shared tables once so the per-index work only reads them.
  for (auto kind : {FamilyKind::suslov_B, FamilyKind::new_beta, FamilyKind::suslov_E, FamilyKind::new_E}) {
    build_family(ctx, kind, 2 * N + 1);
  }

  IdentityReport report;
  report.name = spec->name;
  report.statement = spec->statement;
  report.N = N;
  const int count = std::max(0, N - spec->first + 1);
  std::vector<Row> rows(static_cast<std::size_t>(count));
  parallel_for(count, [&](int i) { rows[i] = spec->row(ctx, spec->first + i, N); });
  for (int i = 0; i < count; ++i) {
    const int n = spec->first + i;
    const bool ok = rows[i].lhs == rows[i].rhs;
    report.cases.push_back({n, ok});
    if (!ok && !report.first_failure) {
      report.passed = false;
      report.first_failure = n;
      report.lhs = rows[i].lhs;
      report.rhs = rows[i].rhs;
    }
  }
  return report;
}

}  // namespace qlid
