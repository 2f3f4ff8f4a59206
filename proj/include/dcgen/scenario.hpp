#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcgen/catalog.hpp"
#include "dcgen/facility_sizing.hpp"
#include "dcgen/it_sizing.hpp"
#include "dcgen/storage_model.hpp"

namespace dcgen {

enum class HeatSinkChoice { Evaporative, Dry, Both };

std::string_view to_string(HeatSinkChoice c);
// Lowercase CLI spelling: evaporative, dry, both.
HeatSinkChoice parse_heat_sink_choice(std::string_view s);
std::vector<HeatSinkKind> heat_sink_variants(HeatSinkChoice c);

struct ScenarioRequest {
  std::string name;
  // Required unless a reference is named, in which case they come from it.
  std::optional<DatacenterType> dc_type;
  std::optional<int> year;
  SizingTarget target = RackCountTarget{0};
  std::optional<std::string> reference_name;
  RedundancyPolicy policy;
  Objective objective = Objective::Space;
  HeatSinkChoice heat_sink = HeatSinkChoice::Both;
  int normalized_ru = kDefaultRackUnits;
  PodLayout pod_layout;

  bool operator==(const ScenarioRequest&) const = default;
};

void validate(const ScenarioRequest& request);

struct SummaryMetrics {
  HeatSinkKind heat_sink = HeatSinkKind::Dry;
  double power_density_kw_m2 = 0.0;
  double it_power_mw = 0.0;
  double facility_power_mw = 0.0;
  double white_space_m2 = 0.0;
  double gray_space_indoor_m2 = 0.0;
  double gray_space_outdoor_m2 = 0.0;

  bool operator==(const SummaryMetrics&) const = default;
};

struct DesignDocument {
  ScenarioRequest request;
  std::string reference_name;
  DatacenterType dc_type{};
  int year = 2024;
  ITDesign it;
  std::vector<FacilityPlan> plans;  // one per heat-sink variant
  std::vector<SummaryMetrics> summary;
};

// Library entry the request resolves to (named reference or canonical model).
const ReferenceITConfig& resolve_reference(const ScenarioRequest& request,
                                           const ReferenceLibrary& library);

DesignDocument run(const ScenarioRequest& request, const Catalog& catalog,
                   const ReferenceLibrary& library, const StorageNodeModel& storage_node = {});

SummaryMetrics summarize(const ITDesign& it, const FacilityPlan& plan);

}  // namespace dcgen
