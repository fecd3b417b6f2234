#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "equik/rokhlin.hpp"

namespace equik {

// Report objects:
//   {"construction", "parameters", "lower", "upper", "certificates", "citations"}
// where "upper" is a number or the string "inf" and each certificate carries a
// "role" ("lower" or "upper") and a "kind". Integers that may exceed machine
// range are decimal strings.

nlohmann::json bound_to_json(const DimBound& bound);
DimBound bound_from_json(const nlohmann::json& j);

nlohmann::json bound_report(std::string_view construction, nlohmann::json parameters, const DimBound& bound,
                            const std::vector<std::string>& citations);

nlohmann::json z6_report_to_json(const Z6CollapseReport& report);
Z6CollapseReport z6_report_from_json(const nlohmann::json& j);
nlohmann::json commutative_report(std::string_view group_tag, std::size_t copies, const CommutativeDimension& result);
nlohmann::json finite_report(std::string_view group_tag, std::size_t n, const FiniteAfOutcome& outcome);

// Citation identifiers used by the reports, with a one-line statement each.
const std::vector<std::pair<std::string, std::string>>& citation_catalog();

// Parses any report emitted above and recomputes its certificates. Malformed
// input yields false.
bool validate_report(const nlohmann::json& report);

}  // namespace equik
