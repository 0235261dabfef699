#pragma once

#include <string>

#include "amds/mdsbuild.hpp"
#include "amds/series.hpp"
#include "json.hpp"

namespace amds {

using Json = nlohmann::ordered_json;

// Malformed input. The message starts with the JSON pointer of the offending node.
struct SchemaError : UsageError {
  using UsageError::UsageError;
};

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
Json int_to_json(Int v);
Int int_from_json(const Json& j, const std::string& pointer);

// {"<half-exponent>": coefficient, ...} in increasing exponent order.
Json qpoly_to_json(const QLaurent& c);
QLaurent qpoly_from_json(const Json& j, const std::string& pointer);

// [{"index": [...], "q_poly": {...}}, ...] in graded order, zero terms omitted.
Json coefficients_to_json(const std::map<Exp, QLaurent, GradedLess>& terms);

Json table_to_json(const CoeffTable& t);
CoeffTable table_from_json(const Json& j);

Json series_to_json(const TruncSeries& s);
// [{"q_half": mu2, "nu": [...], "lambda": l}, ...] for prod (1 - q^{mu2/2} x^nu)^{-lambda}.
Json zeta_to_json(const ZetaProduct& z);

// Canonical text: two-space indent and a trailing newline.
std::string dump_canonical(const Json& j);
Json parse_json_text(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace amds
