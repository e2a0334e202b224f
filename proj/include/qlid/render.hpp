#pragma once

// Report rendering. Every report is first turned into a Document (ordered
// metadata plus one table) and then written as JSON, CSV or text.
// Rationals are written "num/den"; floats with 17 significant digits.

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "qlid/guichard.hpp"
#include "qlid/lidstone.hpp"
#include "qlid/qpolys.hpp"
#include "qlid/qspecial.hpp"

namespace qlid {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Format { json, csv, text };

std::string to_string(Format format);
Format parse_format(const std::string& text);

std::string format_float(double value);
std::string format_float(const HighFloat& value);

struct Document {
  std::string kind;
  Json meta = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;  // strings, numbers, booleans or null
};

void render(const Document& doc, Format format, std::ostream& out);

enum class PolyBasis { laurent, monomial, rho, hermite };

std::string to_string(PolyBasis basis);
PolyBasis parse_poly_basis(const std::string& text);

/// Coefficients of p in the requested basis; `laurent` gives the symmetric
/// coefficients c_0, c_1, ... of c_0 + sum c_k (z^k + z^{-k}).
std::vector<Scalar> poly_coefficients(const SymPoly& p, PolyBasis basis, const QContext& ctx);

Json poly_json(const SymPoly& p, PolyBasis basis, const QContext& ctx);

Document number_document(const NumberTable& table, const QContext& ctx);
/// One row per (n, k) coefficient.
Document poly_document(const std::string& kind, const std::vector<SymPoly>& polys, PolyBasis basis,
                       const QContext& ctx, const std::string& index_name = "n");
Document identity_document(const std::vector<IdentityReport>& reports, const QContext& ctx);
Document zero_document(const ZeroReport<double>& report);
Document jackson_zero_document(double nu, double q, const std::vector<double>& zeros);
Document expansion_document(const ExpansionReport& report, const EntireFn& f, const QContext& ctx);
Document zpoly_document(const std::string& kind, const std::vector<ZPoly>& polys, const DeltaSeq& d);
Document growth_document(const GrowthReport& report);

}  // namespace qlid
