#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "qlid/render.hpp"

using namespace qlid;

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(QLIDSTONE_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string rendered(const Document& doc, Format format) {
  std::ostringstream os;
  render(doc, format, os);
  return os.str();
}

}  // namespace

TEST(Format, ParseAndFloat) {
  for (auto f : {Format::json, Format::csv, Format::text}) EXPECT_EQ(parse_format(to_string(f)), f);
  EXPECT_THROW(parse_format("xml"), UsageError);
  EXPECT_EQ(format_float(0.1), "0.10000000000000001");
  EXPECT_EQ(format_float(HighFloat(1) / 4), "0.25");
}

TEST(NumberDocument, JsonAndCsv) {
  const QContext ctx(Scalar(1, 2));
  const auto doc = number_document(build_numbers(ctx, NumberKind::beta_q, 3), ctx);
  const auto j = Json::parse(rendered(doc, Format::json));
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["kind"], doc.kind);
  ASSERT_EQ(j["rows"].size(), 4u);
  EXPECT_EQ(j["rows"][1]["numerator"], "-1");
  EXPECT_EQ(j["rows"][1]["denominator"], "2");
  const std::string csv = rendered(doc, Format::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,numerator,denominator");
  EXPECT_NE(csv.find("\n1,-1,2\n"), std::string::npos);
}

TEST(PolyDocument, BasesAgree) {
  const QContext ctx(Scalar(1, 2));
  const SymPoly p = special_poly(ctx, Family::rho, 2);
  EXPECT_EQ(poly_coefficients(p, PolyBasis::laurent, ctx), (std::vector<Scalar>{2, 0, 1}));
  EXPECT_EQ(poly_coefficients(p, PolyBasis::monomial, ctx), (std::vector<Scalar>{0, 0, 4}));
  EXPECT_EQ(poly_coefficients(p, PolyBasis::rho, ctx), (std::vector<Scalar>{0, 0, 1}));
  EXPECT_THROW(parse_poly_basis("chebyshev"), UsageError);
}

TEST(ZeroDocument, CarriesBoundCheck) {
  const auto report = smallest_positive_zero<double>(ZeroKind::Sq_eta, 1.0 / 16);
  const auto j = Json::parse(rendered(zero_document(report), Format::json));
  EXPECT_EQ(j["bound_check"], true);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
}

TEST(ExpansionDocument, CsvHeaderAndResidual) {
  const QContext ctx(Scalar(1, 2));
  const auto f = EntireFn::polynomial(special_poly(ctx, Family::phi, 4, Scalar(1, 2)));
  auto report = bernoulli_expansion(f, ctx, 2);
  residual(report, f, ctx);
  const auto doc = expansion_document(report, f, ctx);
  const std::string csv = rendered(doc, Format::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,data_at_0,data_at_eta,coefficient,term_norm");
  const auto j = Json::parse(rendered(doc, Format::json));
  EXPECT_EQ(j["residual"], "exact-zero");
}

TEST(Render, Deterministic) {
  const QContext ctx(Scalar(3, 5));
  const auto doc = identity_document({check_identity(ctx, "eq17", 4)}, ctx);
  for (auto f : {Format::json, Format::csv, Format::text}) EXPECT_EQ(rendered(doc, f), rendered(doc, f));
}

TEST(Cli, IdentitiesAllPass) {
  const auto r = run("--order 6 identities --all");
  EXPECT_EQ(r.status, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["rows"].size(), identity_names().size());
  for (const auto& row : j["rows"]) EXPECT_EQ(row["passed"], true) << row.dump();
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("identities --name no_such_identity").status, 2);
  EXPECT_EQ(run("--s 2 numbers --kind beta_q").status, 2);
  EXPECT_EQ(run("--s abc numbers --kind beta_q").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("guichard --action numbers --p 2 --preset custom --delta 1,0,1").status, 2);
}

TEST(Cli, NumbersCsv) {
  const auto r = run("--format csv --order 3 numbers --kind beta_q");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\n1,-1,2\n"), std::string::npos);
}

TEST(Cli, ExpandExactZero) {
  const auto r = run("expand --kind bernoulli --fn phi:4:1/2 --K 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["residual"], "exact-zero");
}

TEST(Cli, SameOutputTwice) {
  const std::string args = "--format text --order 5 polys --kind suslov_B --basis rho";
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}
