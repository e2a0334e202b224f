// qlidstone: tables, identity suites, zeros, Lidstone expansions and the
// difference-equation solver from the command line.
//
// Exit status: 0 success, 1 identity failure, 2 usage error, 3 computation
// failure (integrity check or root search).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qlid/guichard.hpp"
#include "qlid/lidstone.hpp"
#include "qlid/qpolys.hpp"
#include "qlid/qspecial.hpp"
#include "qlid/render.hpp"

namespace {

using namespace qlid;

struct RunConfig {
  std::string s = "1/2";
  std::string q;
  std::string mode = "exact";
  int order = 8;
  std::string format = "json";
  std::string output;
};

QContext make_context(const RunConfig& cfg) {
  if (!cfg.q.empty()) return QContext::from_q(parse_rational(cfg.q));
  return QContext(parse_rational(cfg.s));
}

void emit(const Document& doc, const RunConfig& cfg) {
  const Format format = parse_format(cfg.format);
  if (cfg.output.empty()) {
    render(doc, format, std::cout);
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw UsageError("cannot open output file '" + cfg.output + "'");
  render(doc, format, file);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("malformed " + what + " '" + text + "' (expected a non-negative integer)");
}

HighFloat parse_w(const std::string& text, const QContext& ctx) {
  const HighFloat q = to_real<HighFloat>(ctx.q());
  if (text == "w1") return smallest_positive_zero<HighFloat>(ZeroKind::Sq_eta, q, HighFloat("1e-46")).value;
  if (text == "w1t") return smallest_positive_zero<HighFloat>(ZeroKind::Cq_eta, q, HighFloat("1e-46")).value;
  try {
    return HighFloat(text);
  } catch (const std::exception&) {
    throw UsageError("malformed real '" + text + "'");
  }
}

/// rho:n | mono:n | phi:n:a | stream:@file | cosq:w:len | sinq:w:len | eeven:w:len
EntireFn parse_function(const std::string& spec, const QContext& ctx) {
  const auto parts = split(spec, ':');
  const std::string head = parts.empty() ? "" : parts[0];
  if (head == "rho" && parts.size() == 2) {
    return EntireFn::polynomial(special_poly(ctx, Family::rho, parse_int(parts[1], "degree")), spec);
  }
  if (head == "mono" && parts.size() == 2) {
    return EntireFn::polynomial(special_poly(ctx, Family::monomial, parse_int(parts[1], "degree")), spec);
  }
  if (head == "phi" && parts.size() == 3) {
    return EntireFn::polynomial(
        special_poly(ctx, Family::phi, parse_int(parts[1], "degree"), parse_rational(parts[2])), spec);
  }
  if (head == "stream" && parts.size() == 2 && !parts[1].empty() && parts[1][0] == '@') {
    const std::string path = parts[1].substr(1);
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open stream file '" + path + "'");
    Json data;
    try {
      data = Json::parse(file);
    } catch (const std::exception& e) {
      throw UsageError("stream file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!data.is_array()) throw UsageError("stream file '" + path + "' must hold a JSON array");
    std::vector<HighFloat> raw;
    for (const auto& v : data) {
      if (v.is_number()) {
        raw.emplace_back(v.get<double>());
      } else if (v.is_string()) {
        raw.push_back(to_real<HighFloat>(parse_rational(v.get<std::string>())));
      } else {
        throw UsageError("stream entries must be numbers or rational strings");
      }
    }
    return EntireFn::raw_stream(ctx, raw, spec);
  }
  if ((head == "cosq" || head == "sinq" || head == "eeven") && parts.size() == 3) {
    const HighFloat w = parse_w(parts[1], ctx);
    const int len = parse_int(parts[2], "stream length");
    EntireFn f = head == "cosq"   ? cosine_stream(w, len)
                 : head == "sinq" ? sine_stream(w, len)
                                  : exponential_even_stream(w, len);
    return EntireFn::stream(f.coefficients(), spec);
  }
  throw UsageError("malformed function '" + spec +
                   "' (expected rho:n, mono:n, phi:n:a, stream:@file, cosq:w:len, sinq:w:len or eeven:w:len)");
}

EntireFn to_float(const EntireFn& f, const QContext& ctx) {
  if (!f.is_polynomial()) return f;
  return EntireFn::stream(rho_expand(f, ctx).u, f.label());
}

ZPoly parse_zpoly(const std::string& text, const Scalar& q, int N) {
  if (text == "theta") {
    std::vector<Scalar> a;
    for (int n = 0; n <= N; ++n) a.push_back(pow(q, n * n));
    return ZPoly(std::move(a));
  }
  std::vector<Scalar> a;
  for (const auto& part : split(text, ',')) a.push_back(parse_rational(part));
  return ZPoly(std::move(a));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-Bernoulli / q-Euler tables, q-Lidstone expansions and the q-Guichard solver"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--s", cfg.s, "s = q^{1/4} as a rational, e.g. 1/2");
  app.add_option("--q", cfg.q, "q as a rational; must be a fourth power");
  app.add_option("--mode", cfg.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--order", cfg.order, "table length / identity range / truncation")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", cfg.output, "write to this file instead of stdout");

  std::string kind, basis = "laurent", fn, preset = "alsalam_half", p_text = "4", delta_text, f_text = "theta",
                    action = "polys";
  std::vector<std::string> names;
  bool all = false;
  int K = 2, count = 3;
  double nu = 0.5;

  auto* numbers = app.add_subcommand("numbers", "q-Bernoulli / q-Euler number tables");
  numbers->add_option("--kind", kind, "beta_q, suslov_Bq, im_Bq or suslov_Eq")->required();

  auto* polys = app.add_subcommand("polys", "polynomial family tables");
  polys->add_option("--kind,--family", kind, "suslov_B, new_beta, suslov_E or new_E")->required();
  polys->add_option("--basis", basis, "laurent, monomial, rho or hermite");

  auto* lbasis = app.add_subcommand("lidstone-basis", "Lidstone basis polynomials A, B, M, Mtilde");
  lbasis->add_option("--kind", kind, "A, B, M or Mtilde")->required();
  lbasis->add_option("--basis", basis, "laurent, monomial, rho or hermite");

  auto* identities = app.add_subcommand("identities", "exact identity suite");
  identities->add_flag("--all", all, "run every registered identity");
  identities->add_option("--name", names, "identity name (repeatable)");
  identities->add_flag("--list", [&](std::int64_t) {
    for (const auto& n : identity_names()) std::cout << n << '\n';
    std::exit(0);
  }, "list identity names");

  auto* zeros = app.add_subcommand("zeros", "smallest zeros of S_q(eta;.), C_q(eta;.), Sin_q and J^{(2)}");
  zeros->add_option("--kind", kind, "Sq_eta, Cq_eta, Sinq or J")->required();
  zeros->add_option("--nu", nu, "order of J^{(2)}_nu");
  zeros->add_option("--count", count, "number of J zeros")->check(CLI::PositiveNumber);

  auto* expand = app.add_subcommand("expand", "q-Lidstone expansion of a function");
  expand->add_option("--kind", kind, "bernoulli or euler")->required();
  expand->add_option("--fn", fn, "rho:n, mono:n, phi:n:a, stream:@file, cosq:w:len, sinq:w:len, eeven:w:len")
      ->required();
  expand->add_option("--K", K, "truncation index")->check(CLI::NonNegativeNumber);

  auto* guichard = app.add_subcommand("guichard", "B_{p,n} tables and the g(z(+)1) - g(z) = f(z) solver");
  guichard->add_option("--action", action, "numbers, polys, solve or growth")
      ->check(CLI::IsMember({"numbers", "polys", "solve", "growth"}));
  guichard->add_option("--p", p_text, "base p > 0 (rational)");
  guichard->add_option("--preset", preset, "ones, alsalam_half or custom");
  guichard->add_option("--delta", delta_text, "comma-separated delta_0, delta_1, ... for the custom preset");
  guichard->add_option("--f", f_text, "comma-separated coefficients a_0, a_1, ... or 'theta' for sum q^{n^2} z^n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const int N = cfg.order;
    if (*guichard) {
      const Scalar p = parse_rational(p_text);
      const DeltaPreset dp = parse_delta_preset(preset);
      auto make_delta = [&](int capacity) {
        if (dp != DeltaPreset::custom) return DeltaSeq::preset(dp, p, capacity);
        if (delta_text.empty()) throw UsageError("--preset custom needs --delta");
        std::vector<Scalar> delta;
        for (const auto& part : split(delta_text, ',')) delta.push_back(parse_rational(part));
        return DeltaSeq::custom(p, std::move(delta));
      };
      if (action == "growth") {
        const Scalar q = p < 1 ? p : 1 / p;
        emit(growth_document(growth_bound_check(q, N)), cfg);
      } else if (action == "numbers") {
        const auto b = bp_numbers(make_delta(N + 1), N);
        Document doc;
        doc.kind = "bp_numbers";
        doc.meta["p"] = to_string(p);
        doc.meta["preset"] = preset;
        doc.columns = {"n", "numerator", "denominator"};
        for (int n = 0; n <= N; ++n) doc.rows.push_back({n, b[n].get_num().get_str(), b[n].get_den().get_str()});
        emit(doc, cfg);
      } else if (action == "polys") {
        const auto d = make_delta(N + 1);
        emit(zpoly_document("bp_polynomials", bp_polynomials(d, N), d), cfg);
      } else {
        const Scalar q = p < 1 ? p : 1 / p;
        const ZPoly f = parse_zpoly(f_text, q, N);
        const auto d = make_delta(N + 2);
        const ZPoly g = solve_difference(f, d, N);
        const auto check = verify_solution(f, g, d, N);
        Document doc = zpoly_document("guichard_solution", {g}, d);
        doc.meta["order"] = N;
        doc.meta["verified"] = check.exact() ? Json("exact") : Json(*check.first_bad);
        emit(doc, cfg);
        return check.exact() ? 0 : 3;
      }
      return 0;
    }

    const QContext ctx = make_context(cfg);
    const PolyBasis pb = parse_poly_basis(basis);

    if (*numbers) {
      const std::string k = kind == "beta" ? "beta_q" : kind;
      emit(number_document(build_numbers(ctx, parse_number_kind(k), N), ctx), cfg);
    } else if (*polys) {
      const auto fk = parse_family_kind(kind);
      emit(poly_document(to_string(fk), build_family(ctx, fk, N).entries, pb, ctx), cfg);
    } else if (*lbasis) {
      const auto lk = parse_lidstone_kind(kind);
      emit(poly_document(to_string(lk), lidstone_basis(ctx, lk, N), pb, ctx, "k"), cfg);
    } else if (*identities) {
      if (all) names = identity_names();
      if (names.empty()) throw UsageError("identities: pass --all or at least one --name");
      std::vector<IdentityReport> reports;
      for (const auto& name : names) reports.push_back(check_identity(ctx, name, N));
      emit(identity_document(reports, ctx), cfg);
      for (const auto& r : reports) {
        if (!r.passed) return 1;
      }
    } else if (*zeros) {
      const double q = to_double(ctx.q());
      if (kind == "J") {
        emit(jackson_zero_document(nu, q, jackson_j2_zeros<double>(nu, q, count)), cfg);
      } else {
        emit(zero_document(smallest_positive_zero<double>(parse_zero_kind(kind), q)), cfg);
      }
    } else if (*expand) {
      EntireFn f = parse_function(fn, ctx);
      if (cfg.mode == "float") f = to_float(f, ctx);
      const auto ek = parse_expansion_kind(kind);
      const auto report = ek == ExpansionKind::bernoulli ? bernoulli_expansion(f, ctx, K) : euler_expansion(f, ctx, K);
      emit(expansion_document(report, f, ctx), cfg);
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
