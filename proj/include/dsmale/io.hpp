#pragma once

// Polynomial input and JSON / text / CSV reports.

#include <optional>
#include <string>

#include "json.hpp"

#include "dsmale/certificate.hpp"
#include "dsmale/optimizer.hpp"
#include "dsmale/polynomial.hpp"
#include "dsmale/smale_metrics.hpp"

namespace dsmale {

struct ParsedPolynomial {
    ComplexPolynomial numeric;
    /// Present when every coefficient was written as an integer or p/q.
    std::optional<ExactPolynomial> exact;
};

/// One coefficient per line, constant term first: "re im" or just "re".
/// Tokens are integers, p/q rationals or decimals.  Blank lines and text after
/// '#' are ignored.  A text starting with '[' is read as a JSON array whose
/// entries are numbers, strings, or [re, im] pairs.  Throws InputParseError.
ParsedPolynomial parse_polynomial_text(const std::string& text);
/// Reads `path`; throws InputParseError (line 0) when it cannot be opened.
ParsedPolynomial load_polynomial(const std::string& path);

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

Json to_json(const MetricsReport& m);
Json to_json(const ExactMetrics& m);
Json to_json(const IdentityReport& r);
Json to_json(const LemmaReport& r);
Json to_json(const EqualityReport& r);
Json to_json(const OracleReport& r);
Json to_json(const ScanResult& r);
Json to_json(const ConjectureReport& r);
Json to_json(const DubininReport& r);
Json to_json(const DiscBoundReport& r);
Json to_json(const ComplexPolynomial& p);

/// {"schema": 1, "command": command, ...body}
Json make_report(const std::string& command, Json body);

/// Indented "key: value" rendering of a report.
std::string to_text(const Json& report);

/// angles..., value per grid-local minimum.
std::string local_minima_csv(const ScanResult& r);

}  // namespace dsmale
