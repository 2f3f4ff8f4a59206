#include "dcgen/scenario.hpp"

#include "dcgen/errors.hpp"

namespace dcgen {

std::string_view to_string(HeatSinkChoice c) {
  switch (c) {
    case HeatSinkChoice::Evaporative: return "evaporative";
    case HeatSinkChoice::Dry: return "dry";
    case HeatSinkChoice::Both: return "both";
  }
  return "?";
}

HeatSinkChoice parse_heat_sink_choice(std::string_view s) {
  for (auto c : {HeatSinkChoice::Evaporative, HeatSinkChoice::Dry, HeatSinkChoice::Both}) {
    if (to_string(c) == s) return c;
  }
  throw UsageError("unknown heat sink '" + std::string(s) + "' (expected evaporative, dry or both)");
}

std::vector<HeatSinkKind> heat_sink_variants(HeatSinkChoice c) {
  switch (c) {
    case HeatSinkChoice::Evaporative: return {HeatSinkKind::Evaporative};
    case HeatSinkChoice::Dry: return {HeatSinkKind::Dry};
    case HeatSinkChoice::Both: return {HeatSinkKind::Evaporative, HeatSinkKind::Dry};
  }
  return {};
}

void validate(const ScenarioRequest& request) {
  if (!request.reference_name && (!request.dc_type || !request.year)) {
    throw UsageError("a datacenter type and year are required unless a reference is named");
  }
  if (request.year && !is_design_year(*request.year)) {
    throw UsageError("year must be 2024, 2027 or 2029");
  }
  if (const auto* r = std::get_if<RackCountTarget>(&request.target)) {
    if (r->racks <= 0) throw UsageError("rack target must be positive");
  } else if (!(std::get<PowerTarget>(request.target).megawatts > 0)) {
    throw UsageError("power target must be positive");
  }
  if (request.normalized_ru < 1 || request.normalized_ru > 60) {
    throw UsageError("rack size must be within [1, 60] RU");
  }
  validate(request.policy);
  validate(request.pod_layout);
}

const ReferenceITConfig& resolve_reference(const ScenarioRequest& request,
                                           const ReferenceLibrary& library) {
  if (request.reference_name) return library.at(*request.reference_name);
  return library.at(canonical_name(*request.dc_type, *request.year));
}

SummaryMetrics summarize(const ITDesign& it, const FacilityPlan& plan) {
  SummaryMetrics s;
  s.heat_sink = plan.heat_sink;
  s.power_density_kw_m2 = it.power_density_kw_m2;
  s.it_power_mw = it.it_peak_power_mw;
  s.facility_power_mw = plan.facility_peak_power_mw;
  s.white_space_m2 = it.white_space_m2;
  s.gray_space_indoor_m2 = plan.gray_space_indoor_m2;
  s.gray_space_outdoor_m2 = plan.gray_space_outdoor_m2;
  return s;
}

DesignDocument run(const ScenarioRequest& request, const Catalog& catalog,
                   const ReferenceLibrary& library, const StorageNodeModel& storage_node) {
  validate(request);
  const ReferenceITConfig& ref = resolve_reference(request, library);
  const ReferenceITConfig sized_ref =
      normalize_config(complete_storage(ref, storage_node), request.normalized_ru);

  DesignDocument doc;
  doc.request = request;
  doc.reference_name = ref.name;
  doc.dc_type = ref.dc_type;
  doc.year = ref.year;
  doc.it = size(sized_ref, request.target);
  for (HeatSinkKind kind : heat_sink_variants(request.heat_sink)) {
    doc.plans.push_back(plan_facility(doc.it, catalog, request.pod_layout, request.policy, kind,
                                      request.objective));
    doc.summary.push_back(summarize(doc.it, doc.plans.back()));
  }
  return doc;
}

}  // namespace dcgen
