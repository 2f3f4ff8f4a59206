#include "dcgen/selector.hpp"

#include <algorithm>
#include <tuple>

#include "dcgen/errors.hpp"

namespace dcgen {

double space_score(const EquipmentModel& model, std::int64_t units) {
  return static_cast<double>(units) * model.gross_area_m2();
}

double power_score(const EquipmentModel& model, std::int64_t units) {
  return static_cast<double>(units) * model.max_draw_kw;
}

Selection select_model_by(const std::vector<const EquipmentModel*>& candidates,
                          Objective objective, const UnitCounter& units) {
  if (candidates.empty()) throw DataError("no candidate models to select from");
  const bool any_draw = std::any_of(candidates.begin(), candidates.end(),
                                    [](const EquipmentModel* m) { return m->max_draw_kw > 0; });
  const bool by_power = objective == Objective::Power && any_draw;

  const EquipmentModel* best = nullptr;
  std::int64_t best_units = 0;
  double best_score = 0.0;
  for (const EquipmentModel* m : candidates) {
    const std::int64_t n = units(*m);
    const double score = by_power ? power_score(*m, n) : space_score(*m, n);
    if (best == nullptr ||
        std::tie(score, n, m->id) < std::tie(best_score, best_units, best->id)) {
      best = m;
      best_units = n;
      best_score = score;
    }
  }
  return Selection{*best, best_units, best_score};
}

Selection select_model(EquipmentClass cls, double demand_kw,
                       std::span<const EquipmentModel> candidates,
                       const RedundancyPolicy& policy, Objective objective) {
  std::vector<const EquipmentModel*> pool;
  for (const auto& m : candidates) {
    if (m.equipment_class != cls) {
      throw UsageError("candidate '" + m.id + "' is not of class " + std::string(to_string(cls)));
    }
    pool.push_back(&m);
  }
  return select_model_by(pool, objective, [&](const EquipmentModel& m) {
    return units_for_demand(demand_kw, m, policy);
  });
}

}  // namespace dcgen
