#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dcgen/catalog.hpp"
#include "dcgen/it_sizing.hpp"

namespace dcgen {

// N+r: r spare units on top of what the load needs.
struct Additive {
  int r = 1;
  bool operator==(const Additive&) const = default;
};

// xN/y: every unit carries at most y/x of its rating (2N is x=2, y=1).
struct Fractional {
  int x = 2;
  int y = 1;
  bool operator==(const Fractional&) const = default;
};

struct RedundancyPolicy {
  std::variant<Additive, Fractional> scheme = Additive{1};
  double safety_margin = 0.1;

  static RedundancyPolicy n_plus(int r, double safety_margin = 0.1);
  static RedundancyPolicy fractional(int x, int y, double safety_margin = 0.1);

  // Spare units added per count: r for N+r, 0 for xN/y.
  int spares() const;
  // "N+1", "2N", "4N/3".
  std::string label() const;

  bool operator==(const RedundancyPolicy&) const = default;
};

void validate(const RedundancyPolicy& policy);

// Accepts "n+R" and "XnY" / "Xn" (case-insensitive), e.g. "n+2", "2n", "4n3".
RedundancyPolicy parse_redundancy(std::string_view text, double safety_margin = 0.1);

// Capacity a single unit contributes under the policy.
double effective_unit_capacity(const EquipmentModel& model, const RedundancyPolicy& policy);

// ceil((1+sm)·demand / effective capacity) + spares. Zero demand needs no units.
std::int64_t units_for_demand(double demand_kw, const EquipmentModel& model,
                              const RedundancyPolicy& policy);

// Rack-level (CDU, PDU) units for one full pod of identical racks.
std::int64_t pod_units(double rack_peak_kw, const PodLayout& layout, const EquipmentModel& model,
                       const RedundancyPolicy& policy);

// Site-level units (chiller, heat sink, UPS, MSB, generator) for a load.
std::int64_t datacenter_units(double demand_kw, const EquipmentModel& model,
                              const RedundancyPolicy& policy);

enum class Serving { IT, Facility, Both };
std::string_view to_string(Serving s);
Serving parse_serving(std::string_view s);

// Homogeneous pods of one rack class.
struct PodGroup {
  NodeType node_type{};
  double rack_peak_kw = 0.0;
  std::int64_t racks = 0;
  std::int64_t pods = 0;
  std::int64_t units_per_pod = 0;
};

struct ClassAllocation {
  EquipmentClass equipment_class{};
  EquipmentModel model;
  std::int64_t it_units = 0;
  std::int64_t facility_units = 0;
  Serving serving = Serving::IT;
  double it_demand_kw = 0.0;
  double facility_demand_kw = 0.0;
  std::vector<PodGroup> pod_groups;  // rack-level classes only

  std::int64_t unit_count() const { return it_units + facility_units; }
  double gray_space_m2() const {
    return static_cast<double>(unit_count()) * model.gross_area_m2();
  }
};

struct FacilityPlan {
  std::vector<ClassAllocation> classes;
  double facility_peak_power_mw = 0.0;
  double gray_space_indoor_m2 = 0.0;
  double gray_space_outdoor_m2 = 0.0;
  HeatSinkKind heat_sink = HeatSinkKind::Dry;
  RedundancyPolicy policy;
  PodLayout pod_layout;
  Objective objective = Objective::Space;

  const ClassAllocation* find(EquipmentClass cls) const;
  double gray_space_total_m2() const { return gray_space_indoor_m2 + gray_space_outdoor_m2; }
};

// Sizes the cooling chain (CDU, chiller, one heat-sink class) and the power
// chain (PDU, UPS, MSB, generator) for an IT design. UPS/MSB/generator are
// counted separately for the IT load and for the cooling equipment's draw.
FacilityPlan plan_facility(const ITDesign& it, const Catalog& catalog, const PodLayout& layout,
                           const RedundancyPolicy& policy, HeatSinkKind heat_sink,
                           Objective objective);

}  // namespace dcgen
