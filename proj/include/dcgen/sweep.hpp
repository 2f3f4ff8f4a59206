#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dcgen/scenario.hpp"

namespace dcgen {

// A sweep row before evaluation. A nonempty `error` marks a scenario that
// could not be parsed; it is reported, not evaluated.
struct SweepEntry {
  ScenarioRequest request;
  std::string error;
};

struct ScenarioOutcome {
  ScenarioRequest request;
  std::optional<DesignDocument> document;
  std::string error;
};

enum class Execution { Serial, Parallel };

// Scenarios are independent; the parallel path distributes them over OpenMP
// threads and writes each outcome into its own slot, so the result order and
// content match the serial path exactly.
std::vector<ScenarioOutcome> evaluate_sweep(const std::vector<SweepEntry>& entries,
                                            const Catalog& catalog,
                                            const ReferenceLibrary& library,
                                            Execution mode = Execution::Parallel);

std::vector<ScenarioOutcome> sweep(const std::vector<ScenarioRequest>& requests,
                                   const Catalog& catalog, const ReferenceLibrary& library,
                                   Execution mode = Execution::Parallel);

inline constexpr std::string_view kSweepCsvHeader =
    "scenario,dc_type,year,target_kind,target_value,total_racks,it_power_mw,facility_power_mw,"
    "density_kw_m2,white_space_m2,gray_indoor_m2,gray_outdoor_m2,heat_sink,error";

// One row per scenario and heat-sink variant; failed scenarios get one row
// with empty metrics and the message in `error`.
void write_sweep_csv(const std::vector<ScenarioOutcome>& outcomes, std::ostream& out);
std::string sweep_csv(const std::vector<ScenarioOutcome>& outcomes);

inline constexpr std::string_view kPaperCaseStudiesPreset = "paper-case-studies";

// Four datacenter types × three years × {10,000 racks, 1 GW}.
std::vector<ScenarioRequest> case_study_scenarios();

// Named preset, or nullopt when the name is not a preset.
std::optional<std::vector<SweepEntry>> sweep_preset(std::string_view name);

// {schema_version, scenarios: [...]} with the same keys as a request echo.
std::vector<SweepEntry> parse_sweep_file(const nlohmann::json& doc);
std::vector<SweepEntry> load_sweep_file(const std::filesystem::path& path);

}  // namespace dcgen
