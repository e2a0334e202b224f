#include "qlid/render.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace qlid {

std::string to_string(Format format) {
  switch (format) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "unknown";
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw UsageError("unknown format '" + text + "' (expected json, csv or text)");
}

std::string format_float(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_float(const HighFloat& value) {
  std::ostringstream os;
  os << std::setprecision(17) << value;
  return os.str();
}

// ---------------------------------------------------------------------------
// Writers
// ---------------------------------------------------------------------------

namespace {

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void render(const Document& doc, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["kind"] = doc.kind;
      for (const auto& [key, value] : doc.meta.items()) j[key] = value;
      Json rows = Json::array();
      for (const auto& row : doc.rows) {
        Json r = Json::object();
        for (std::size_t c = 0; c < doc.columns.size(); ++c) r[doc.columns[c]] = row[c];
        rows.push_back(std::move(r));
      }
      j["rows"] = std::move(rows);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      for (std::size_t c = 0; c < doc.columns.size(); ++c) out << (c ? "," : "") << csv_escape(doc.columns[c]);
      out << '\n';
      for (const auto& row : doc.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(cell_text(row[c]));
        out << '\n';
      }
      break;
    }
    case Format::text: {
      out << "# " << doc.kind << '\n';
      for (const auto& [key, value] : doc.meta.items()) {
        out << key << ": " << (value.is_primitive() ? cell_text(value) : value.dump()) << '\n';
      }
      if (doc.columns.empty()) break;
      std::vector<std::size_t> width(doc.columns.size());
      for (std::size_t c = 0; c < doc.columns.size(); ++c) width[c] = doc.columns[c].size();
      for (const auto& row : doc.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], cell_text(row[c]).size());
      }
      auto line = [&](auto get) {
        for (std::size_t c = 0; c < doc.columns.size(); ++c) {
          out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << get(c);
        }
        out << '\n';
      };
      line([&](std::size_t c) { return doc.columns[c]; });
      for (const auto& row : doc.rows) line([&](std::size_t c) { return cell_text(row[c]); });
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

std::string to_string(PolyBasis basis) {
  switch (basis) {
    case PolyBasis::laurent: return "laurent";
    case PolyBasis::monomial: return "monomial";
    case PolyBasis::rho: return "rho";
    case PolyBasis::hermite: return "hermite";
  }
  return "unknown";
}

PolyBasis parse_poly_basis(const std::string& text) {
  if (text == "laurent") return PolyBasis::laurent;
  if (text == "monomial") return PolyBasis::monomial;
  if (text == "rho") return PolyBasis::rho;
  if (text == "hermite") return PolyBasis::hermite;
  throw UsageError("unknown basis '" + text + "' (expected laurent, monomial, rho or hermite)");
}

std::vector<Scalar> poly_coefficients(const SymPoly& p, PolyBasis basis, const QContext& ctx) {
  switch (basis) {
    case PolyBasis::laurent: return {p.coeffs().begin(), p.coeffs().end()};
    case PolyBasis::monomial: return change_basis(p, Basis::monomial, ctx);
    case PolyBasis::rho: return change_basis(p, Basis::rho, ctx);
    case PolyBasis::hermite: return change_basis(p, Basis::hermite, ctx);
  }
  return {};
}

namespace {

Json scalar_list(const std::vector<Scalar>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}

Json context_meta(const QContext& ctx) {
  Json m = Json::object();
  m["s"] = to_string(ctx.s());
  m["q"] = to_string(ctx.q());
  return m;
}

void merge(Json& into, const Json& from) {
  for (const auto& [key, value] : from.items()) into[key] = value;
}

}  // namespace

Json poly_json(const SymPoly& p, PolyBasis basis, const QContext& ctx) {
  Json j = Json::object();
  j["basis"] = to_string(basis);
  j["coefficients"] = scalar_list(poly_coefficients(p, basis, ctx));
  return j;
}

Document number_document(const NumberTable& table, const QContext& ctx) {
  Document doc;
  doc.kind = "numbers";
  merge(doc.meta, context_meta(ctx));
  doc.meta["number_kind"] = to_string(table.kind);
  doc.meta["base"] = to_string(table.base);
  doc.columns = {"n", "numerator", "denominator"};
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    const auto& v = table.values[n];
    doc.rows.push_back({static_cast<int>(n), v.get_num().get_str(), v.get_den().get_str()});
  }
  return doc;
}

Document poly_document(const std::string& kind, const std::vector<SymPoly>& polys, PolyBasis basis,
                       const QContext& ctx, const std::string& index_name) {
  Document doc;
  doc.kind = "polynomials";
  merge(doc.meta, context_meta(ctx));
  doc.meta["family"] = kind;
  doc.meta["basis"] = to_string(basis);
  doc.columns = {index_name, "k", "coefficient"};
  for (std::size_t n = 0; n < polys.size(); ++n) {
    const auto c = poly_coefficients(polys[n], basis, ctx);
    for (std::size_t k = 0; k < c.size(); ++k) {
      doc.rows.push_back({static_cast<int>(n), static_cast<int>(k), to_string(c[k])});
    }
  }
  return doc;
}

Document identity_document(const std::vector<IdentityReport>& reports, const QContext& ctx) {
  Document doc;
  doc.kind = "identities";
  merge(doc.meta, context_meta(ctx));
  bool all = true;
  Json failures = Json::array();
  for (const auto& r : reports) {
    all = all && r.passed;
    if (!r.passed) {
      Json f = Json::object();
      f["name"] = r.name;
      f["statement"] = r.statement;
      f["first_failure"] = *r.first_failure;
      f["lhs"] = poly_json(r.lhs, PolyBasis::laurent, ctx);
      f["rhs"] = poly_json(r.rhs, PolyBasis::laurent, ctx);
      failures.push_back(std::move(f));
    }
  }
  doc.meta["passed"] = all;
  doc.meta["failures"] = std::move(failures);
  doc.columns = {"name", "N", "passed", "first_failure", "statement"};
  for (const auto& r : reports) {
    doc.rows.push_back({r.name, r.N, r.passed, r.first_failure ? Json(*r.first_failure) : Json(nullptr), r.statement});
  }
  return doc;
}

Document zero_document(const ZeroReport<double>& r) {
  Document doc;
  doc.kind = "zero";
  doc.meta["zero_kind"] = to_string(r.kind);
  doc.meta["q"] = format_float(r.q);
  doc.meta["value"] = format_float(r.value);
  doc.meta["bracket"] = Json::array({format_float(r.lo), format_float(r.hi)});
  doc.meta["residual"] = format_float(r.residual);
  doc.meta["scale"] = format_float(r.scale);
  doc.meta["lower_bound"] = format_float(r.lower_bound);
  doc.meta["bound_check"] = r.bound_check;
  doc.meta["scan_points"] = r.scan_points;
  return doc;
}

Document jackson_zero_document(double nu, double q, const std::vector<double>& zeros) {
  Document doc;
  doc.kind = "jackson_zeros";
  doc.meta["nu"] = format_float(nu);
  doc.meta["q"] = format_float(q);
  doc.columns = {"m", "zero", "ratio_to_previous", "hayman_estimate"};
  for (std::size_t m = 0; m < zeros.size(); ++m) {
    doc.rows.push_back({static_cast<int>(m + 1), format_float(zeros[m]),
                        m ? Json(format_float(zeros[m] / zeros[m - 1])) : Json(nullptr),
                        format_float(hayman_zero_estimate<double>(static_cast<int>(m + 1), nu, q))});
  }
  return doc;
}

Document expansion_document(const ExpansionReport& r, const EntireFn& f, const QContext& ctx) {
  Document doc;
  doc.kind = "expansion";
  merge(doc.meta, context_meta(ctx));
  doc.meta["expansion_kind"] = to_string(r.kind);
  doc.meta["function"] = f.label();
  doc.meta["mode"] = r.reconstruction ? "exact" : "float";
  doc.meta["K"] = r.K;
  doc.meta["K_used"] = r.K_used;
  doc.meta["stop_reason"] = to_string(r.stop);
  doc.meta["tau_estimate"] = format_float(r.tau);
  doc.meta["cond"] = format_float(r.cond);
  doc.meta["cap"] = format_float(r.cap);
  doc.meta["first_zero"] = r.first_zero ? Json(format_float(*r.first_zero)) : Json(nullptr);
  doc.meta["warning"] = r.warning;
  doc.meta["status"] = r.status;
  doc.meta["residual"] = r.exact_zero ? std::string("exact-zero") : format_float(r.residual);
  if (r.reconstruction) doc.meta["reconstruction"] = poly_json(*r.reconstruction, PolyBasis::monomial, ctx);
  doc.columns = {"k", "data_at_0", "data_at_eta", "coefficient", "term_norm"};
  const Scalar g2 = ctx.gamma() * ctx.gamma();
  for (int k = 0; k <= r.K; ++k) {
    Json d0, de;
    if (r.data.exact_at_zero) {
      d0 = to_string((*r.data.exact_at_zero)[k]);
      de = to_string((*r.data.exact_at_eta)[k]);
    } else {
      d0 = format_float(r.data.at_zero[k]);
      de = format_float(r.data.at_eta[k]);
    }
    const Json norm = k < static_cast<int>(r.term_norm.size()) ? Json(format_float(r.term_norm[k])) : Json(nullptr);
    doc.rows.push_back({k, d0, de, to_string(2 * pow(g2, -k)), norm});
  }
  return doc;
}

Document zpoly_document(const std::string& kind, const std::vector<ZPoly>& polys, const DeltaSeq& d) {
  Document doc;
  doc.kind = kind;
  doc.meta["p"] = to_string(d.p());
  doc.meta["preset"] = to_string(d.kind());
  doc.columns = {"n", "k", "coefficient"};
  for (std::size_t n = 0; n < polys.size(); ++n) {
    for (int k = 0; k <= polys[n].degree(); ++k) {
      doc.rows.push_back({static_cast<int>(n), k, to_string(polys[n][k])});
    }
  }
  return doc;
}

Document growth_document(const GrowthReport& r) {
  Document doc;
  doc.kind = "growth_bound";
  doc.meta["q"] = format_float(r.q);
  doc.meta["xi1"] = format_float(r.xi1);
  doc.meta["N"] = r.N;
  doc.meta["sup"] = format_float(r.sup);
  doc.meta["argmax"] = r.argmax;
  doc.meta["sup_doubled"] = format_float(r.sup_doubled);
  doc.meta["argmax_doubled"] = r.argmax_doubled;
  doc.meta["relative_change"] = format_float(r.relative_change);
  doc.meta["passed"] = r.passed;
  doc.columns = {"n", "r_n"};
  for (std::size_t n = 0; n < r.r.size(); ++n) doc.rows.push_back({static_cast<int>(n), format_float(r.r[n])});
  return doc;
}

}  // namespace qlid
