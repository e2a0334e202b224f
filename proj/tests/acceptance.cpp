// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qlid/guichard.hpp"
#include "qlid/lidstone.hpp"
#include "qlid/qpolys.hpp"
#include "qlid/qspecial.hpp"

using namespace qlid;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Scalar sign(int n) { return n % 2 ? Scalar(-1) : Scalar(1); }

const std::vector<Scalar> kParams = {Scalar(1, 2), Scalar(3, 5)};

// 1. Exact identity suite.
void exact_identities(Outcome& out) {
  const auto start = Clock::now();
  const std::vector<std::string> deep = {"bernoulli_lidstone_decomposition", "euler_lidstone_decomposition",
                                         "hermite_generating"};
  int checked = 0;
  for (const auto& s : kParams) {
    const QContext ctx(s);
    for (const auto& name : identity_names()) {
      const bool is_deep = std::find(deep.begin(), deep.end(), name) != deep.end();
      const auto report = check_identity(ctx, name, is_deep ? 10 : 8);
      ++checked;
      out.require(report.passed, name + " at s = " + to_string(s) + ", n = " +
                                     std::to_string(report.first_failure.value_or(-1)));
    }
  }
  const double t = seconds_since(start);
  out.require(t < 60, "runtime");
  out.detail << checked << " identity runs, " << t << " s";
}

// 2. Number facts, with the sign rule exactly as stated.
void number_facts(Outcome& out) {
  for (const auto& s : kParams) {
    const QContext ctx(s);
    const auto b = build_numbers(ctx, NumberKind::beta_q, 11).values;
    const Scalar& r = ctx.sqrt_q();
    const std::string at = " at s = " + to_string(s);
    out.require(b[0] == (1 - r) / 2, "beta_0" + at);
    out.require(b[1] == Scalar(-1, 2), "beta_1" + at);
    out.require(b[2] == r / (2 * (1 - ctx.q() * r)), "beta_2" + at);
    for (int n = 1; n <= 5; ++n) out.require(b[2 * n + 1] == 0, "beta_" + std::to_string(2 * n + 1) + at);
    std::string wrong;
    int opposite = 0;
    for (int n = 1; n <= 5; ++n) {
      if (!(sign(n) * b[2 * n] > 0)) wrong += (wrong.empty() ? "" : ",") + std::to_string(n);
      if (sign(n - 1) * b[2 * n] > 0) ++opposite;
    }
    out.require(wrong.empty(), "(-1)^n beta_2n > 0" + at + " for n = " + wrong + "; (-1)^(n-1) beta_2n > 0 holds for " +
                                   std::to_string(opposite) + " of 5");
    const Scalar& q = ctx.q();
    const auto im = im_bernoulli_numbers(q, 2);
    out.require(im[2] == q * q_number(2, q) / (4 * q_number(3, q)), "B_2(q)" + at);
  }
  out.detail << " s in {1/2, 3/5}";
}

// 3. Polynomial exactness of both expansions and the closed-form boundary data.
void polynomial_exactness(Outcome& out) {
  int cases = 0;
  for (const auto& s : kParams) {
    const QContext ctx(s);
    const Scalar& q = ctx.q();
    for (int n = 0; n <= 6; ++n) {
      const int K = (n + 1) / 2;
      std::vector<SymPoly> fs = {special_poly(ctx, Family::rho, n), special_poly(ctx, Family::monomial, n)};
      for (const Scalar a : {Scalar(1, 2), Scalar(1, 3)}) fs.push_back(special_poly(ctx, Family::phi, n, a));
      for (const auto& p : fs) {
        const auto f = EntireFn::polynomial(p);
        auto b = bernoulli_expansion(f, ctx, K);
        auto e = euler_expansion(f, ctx, K);
        out.require(b.reconstruction && *b.reconstruction == p, "bernoulli n = " + std::to_string(n));
        out.require(e.reconstruction && *e.reconstruction == p, "euler n = " + std::to_string(n));
        cases += 2;
      }
    }
    for (const Scalar a : {Scalar(1, 2), Scalar(1, 3)}) {
      for (int n = 1; n <= 3; ++n) {
        const auto f = EntireFn::polynomial(special_poly(ctx, Family::phi, 2 * n, a));
        const auto bd = aw_boundary_data(f, ctx, n, ExpansionKind::bernoulli);
        const auto ed = aw_boundary_data(f, ctx, n, ExpansionKind::euler);
        for (int k = 0; k <= n; ++k) {
          const Scalar pre = pow(2 * a, 2 * k) * ctx.s_pow(4 * k * k - 2 * k) * q_factorial(2 * n, q) /
                             q_factorial(2 * n - 2 * k, q);
          const Scalar b = a * pow(q, k);
          const Scalar at0 = pre * q_pochhammer(-a * a * pow(q, 2 * k), q * q, 2 * n - 2 * k);
          const Scalar atEta =
              pre * q_pochhammer(b * ctx.s(), q, 2 * n - 2 * k) * q_pochhammer(b / ctx.s(), q, 2 * n - 2 * k);
          const std::string tag = "closed form n = " + std::to_string(n) + ", k = " + std::to_string(k);
          out.require((*bd.exact_at_zero)[k] == at0, "even at 0, " + tag);
          out.require((*bd.exact_at_eta)[k] == atEta, "even at eta, " + tag);
          out.require((*ed.exact_at_eta)[k] == atEta, "euler even at eta, " + tag);
          if (k < n) {
            const Scalar odd = -pow(2 * a, 2 * k + 1) * ctx.s_pow(4 * k * k + 2 * k) * q_factorial(2 * n, q) /
                               q_factorial(2 * n - 2 * k - 1, q) *
                               q_pochhammer(-a * a * pow(q, 2 * k + 1), q * q, 2 * n - 2 * k - 1);
            out.require((*ed.exact_at_zero)[k] == odd, "odd at 0, " + tag);
          } else {
            out.require((*ed.exact_at_zero)[k] == 0, "odd at 0 vanishes, " + tag);
          }
          ++cases;
        }
      }
    }
  }
  out.detail << cases << " exact comparisons";
}

// 4. Numeric convergence at q = 1/16.
void numeric_convergence(Outcome& out) {
  const auto start = Clock::now();
  const QContext ctx(Scalar(1, 2));
  const HighFloat w("0.3");
  const auto c = cosine_stream(w, 40);
  auto b = bernoulli_expansion(c, ctx, 20);
  const double rb = residual(b, c, ctx);
  const auto e = exponential_even_stream(w, 40);
  auto r = euler_expansion(e, ctx, 20);
  const double re = residual(r, e, ctx);
  const double t = seconds_since(start);
  out.require(rb < 1e-10, "bernoulli residual");
  out.require(re < 1e-10, "euler residual");
  out.require(t < 30, "runtime");
  out.detail << "bernoulli " << rb << " (K_used " << b.K_used << "), euler " << re << " (K_used " << r.K_used
             << "), " << t << " s";
}

// 5. Counterexamples at the first zeros. Run at s = 9/10, where both zeros lie
// inside the radius of the eta series.
void counterexamples(Outcome& out) {
  const QContext ctx(Scalar(9, 10));
  const HighFloat q = to_real<HighFloat>(ctx.q());
  const HighFloat tol("1e-46");
  const HighFloat w1 = smallest_positive_zero<HighFloat>(ZeroKind::Sq_eta, q, tol).value;
  const HighFloat w1t = smallest_positive_zero<HighFloat>(ZeroKind::Cq_eta, q, tol).value;
  const auto grid = default_grid();
  auto measure = [&](const EntireFn& f, ExpansionKind kind, double& data, double& fmax) {
    const auto bd = aw_boundary_data(f, ctx, 10, kind);
    HighFloat worst = 0;
    for (const auto& v : bd.at_zero) worst = std::max(worst, HighFloat(abs(v)));
    for (const auto& v : bd.at_eta) worst = std::max(worst, HighFloat(abs(v)));
    HighFloat top = 0;
    for (const auto& x : grid) top = std::max(top, HighFloat(abs(evaluate(f, ctx, to_real<HighFloat>(x)))));
    data = static_cast<double>(worst);
    fmax = static_cast<double>(top);
  };
  double sd, sf, cd, cf;
  measure(sine_stream(w1, 200), ExpansionKind::bernoulli, sd, sf);
  measure(cosine_stream(w1t, 200), ExpansionKind::euler, cd, cf);
  out.require(sd < 1e-9 && sf > 1e-2, "sine counterexample");
  out.require(cd < 1e-9 && cf > 1e-2, "cosine counterexample");
  out.detail << "q = " << static_cast<double>(q) << ", w1 = " << static_cast<double>(w1) << ": data " << sd
             << ", max f " << sf << "; w1~ = " << static_cast<double>(w1t) << ": data " << cd << ", max f " << cf;
}

// 6. Zeros at q = 1/16.
void zeros(Outcome& out) {
  const double q = 1.0 / 16;
  const auto w1 = smallest_positive_zero<double>(ZeroKind::Sq_eta, q);
  out.require(w1.bound_check && w1.value * w1.value >= w1.lower_bound * w1.lower_bound, "lower bound");
  out.require(w1.residual < 1e-12, "residual");
  const auto jp = jackson_j2_zeros<double>(0.5, q, 3);
  const auto jm = jackson_j2_zeros<double>(-0.5, q, 3);
  bool interlace = true;
  for (int m = 0; m < 3; ++m) {
    interlace = interlace && jm[m] < jp[m];
    if (m + 1 < 3) interlace = interlace && jp[m] < jm[m + 1];
  }
  out.require(interlace, "interlacing");
  const double rp = jp[2] / jp[1] * q;
  const double rm = jm[2] / jm[1] * q;
  out.require(std::abs(rp - 1) < 0.05, "ratio nu = 1/2");
  out.require(std::abs(rm - 1) < 0.05, "ratio nu = -1/2");
  out.detail << "w1 = " << w1.value << " (bound " << w1.lower_bound << ", residual " << w1.residual
             << "), q * z3/z2 = " << rp << " and " << rm;
}

// 7. Guichard solver.
void guichard(Outcome& out) {
  const Scalar p(4);
  const Scalar q = 1 / p;
  std::vector<Scalar> c;
  for (int n = 0; n <= 30; ++n) c.push_back(pow(q, n * n));
  const ZPoly f(c);
  const auto d = DeltaSeq::alsalam_half(p, 32);
  const ZPoly g = solve_difference(f, d, 30);
  const auto check = verify_solution(f, g, d, 30);
  out.require(check.exact(), "solver at order " + std::to_string(check.first_bad.value_or(-1)));
  for (const Scalar base : {Scalar(1, 4), Scalar(4)}) {
    for (auto preset : {DeltaPreset::ones, DeltaPreset::alsalam_half}) {
      const auto ds = DeltaSeq::preset(preset, base, 11);
      std::vector<ZPoly> B;
      try {
        B = bp_polynomials(ds, 10);
      } catch (const IntegrityError& e) {
        out.require(false, e.what());
        continue;
      }
      for (int n = 1; n <= 10; ++n) {
        const std::string tag = to_string(preset) + ", p = " + to_string(base) + ", n = " + std::to_string(n);
        out.require(p_derivative(B[n], base) == B[n - 1] * q_number(n, base), "ladder " + tag);
        out.require(dotplus_translate(B[n], ds) - B[n] == ZPoly::monomial(n - 1, q_number(n, base)), "jump " + tag);
      }
    }
  }
  int reconstructions = 0;
  for (unsigned seed = 1; seed <= 10; ++seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<Scalar> coeffs;
    for (int k = 0; k <= 4; ++k) {
      Scalar v(num(rng), den(rng));
      v.canonicalize();
      coeffs.push_back(v);
    }
    if (coeffs.back() == 0) coeffs.back() = 1;
    const ZPoly quartic(coeffs);
    for (auto preset : {DeltaPreset::ones, DeltaPreset::alsalam_half}) {
      out.require(finite_reconstruction(quartic, DeltaSeq::preset(preset, p, 5)) == quartic,
                  "reconstruction seed " + std::to_string(seed));
      ++reconstructions;
    }
  }
  out.detail << "deg g = " << g.degree() << ", " << reconstructions << " reconstructions";
}

// 8. Growth bound at q = 1/4.
void growth(Outcome& out) {
  const auto report = growth_bound_check(Scalar(1, 4), 20);
  out.require(report.argmax <= 6, "argmax");
  out.require(std::abs(report.relative_change) <= 0.01, "stability");
  out.require(report.passed, "report");
  out.detail << "xi1 = " << report.xi1 << ", sup r = " << report.sup << " at n = " << report.argmax
             << ", doubled " << report.sup_doubled << " at n = " << report.argmax_doubled;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"exact identity suite", exact_identities},
      {"number facts", number_facts},
      {"Lidstone polynomial exactness", polynomial_exactness},
      {"numeric expansion convergence", numeric_convergence},
      {"counterexamples at the first zeros", counterexamples},
      {"zeros", zeros},
      {"Guichard solver", guichard},
      {"growth bound", growth},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.passed = false;
      out.detail << " [exception: " << e.what() << "]";
    }
    if (!out.passed) ++failures;
    std::printf("criterion %zu %s: %s  %s\n", i + 1, out.passed ? "PASS" : "FAIL", criteria[i].first.c_str(),
                out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
