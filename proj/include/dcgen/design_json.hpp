#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dcgen/scenario.hpp"

namespace dcgen {

// Rounds to 6 significant digits; every float written to JSON or CSV goes
// through this so identical inputs give identical bytes.
double round_sig6(double value);
// Shortest text for round_sig6(value).
std::string format_number(double value);

nlohmann::ordered_json to_json(const ScenarioRequest& request);
// Same keys the CLI flags use; throws UsageError/DataError on bad fields.
ScenarioRequest parse_scenario_request(const nlohmann::json& j);

nlohmann::ordered_json to_json(const ITDesign& it);
nlohmann::ordered_json to_json(const FacilityPlan& plan);
nlohmann::ordered_json to_json(const DesignDocument& doc);
// Pretty-printed document followed by a newline.
std::string dump_document(const DesignDocument& doc);

// Rebuilds a document from its JSON form; DataError on missing fields.
DesignDocument parse_design_document(const nlohmann::json& j);

// Structural invariants of a document: per-class sums, power, white space,
// capacity coverage, gray-space partition, summary agreement. Returns one
// message per violation. `rel_tol` absorbs 6-significant-digit rounding.
std::vector<std::string> check_document(const DesignDocument& doc, double rel_tol = 1e-5);

}  // namespace dcgen
