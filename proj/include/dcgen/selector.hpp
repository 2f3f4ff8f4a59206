#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dcgen/facility_sizing.hpp"

namespace dcgen {

struct Selection {
  EquipmentModel model;
  std::int64_t unit_count = 0;
  double score = 0.0;
};

double space_score(const EquipmentModel& model, std::int64_t units);
double power_score(const EquipmentModel& model, std::int64_t units);

using UnitCounter = std::function<std::int64_t(const EquipmentModel&)>;

// Picks the candidate with the lowest objective score given how many units of
// it would be installed. Space scores gross area; Power scores installed draw,
// falling back to area when no candidate draws power. Ties go to fewer units,
// then to the smallest id.
Selection select_model_by(const std::vector<const EquipmentModel*>& candidates,
                          Objective objective, const UnitCounter& units);

// Single-demand form: counts with units_for_demand.
Selection select_model(EquipmentClass cls, double demand_kw,
                       std::span<const EquipmentModel> candidates,
                       const RedundancyPolicy& policy, Objective objective);

}  // namespace dcgen
