#pragma once

#include "jordan/cg_engine.hpp"
#include "jordan/check_report.hpp"
#include "jordan/su11_rep.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace jordan::io {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, latex };

/// Throws std::invalid_argument for anything but json|csv|latex.
Format parse_format(std::string_view text);

std::string engine_version();

Json check_report_json(const CheckReport& report);
CheckReport check_report_from_json(const Json& array);

/// Every document has the shape
///   {"command", "engine_version", "params": {...}, "entries": [...], "checks": [...]}
/// plus command-specific extras. Key order is fixed.
Json decomposition_document(const DecompositionReport& report, const CheckReport& checks = {});
DecompositionReport decomposition_from_document(const Json& doc);

/// `params` must carry "family" ("sl2"|"su11") and the base weights under
/// m1/m2 or mu1/mu2; entries are ordered by (k + l, k).
Json alpha_document(const AlphaTable& table, Json params, const CheckReport& checks);
AlphaTable alpha_from_document(const Json& doc);

/// States ordered by (j desc, m desc); each carries its eigen-basis and
/// product-basis coefficients.
Json cg_document(const CGTable& table);
CGTable cg_from_document(const Json& doc);

Json sl2_verification_document(HalfInt j, const CheckReport& checks);
Json su11_verification_document(const RepSU11& rep, const SU11Verification& result);
SU11Verification su11_verification_from_document(const Json& doc);

/// 2-space indented JSON with a trailing newline.
std::string dump(const Json& doc);

/// CSV and LaTeX are computed from the document alone.
std::string render(const Json& doc, Format format);

std::string latex_poly(const HPoly& p);

}  // namespace jordan::io
