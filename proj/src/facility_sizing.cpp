#include "dcgen/facility_sizing.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "dcgen/errors.hpp"
#include "dcgen/exact.hpp"
#include "dcgen/selector.hpp"

namespace dcgen {

using exact::from_decimal;
using exact::Rational;

RedundancyPolicy RedundancyPolicy::n_plus(int r, double safety_margin) {
  return RedundancyPolicy{Additive{r}, safety_margin};
}

RedundancyPolicy RedundancyPolicy::fractional(int x, int y, double safety_margin) {
  return RedundancyPolicy{Fractional{x, y}, safety_margin};
}

int RedundancyPolicy::spares() const {
  if (const auto* a = std::get_if<Additive>(&scheme)) return a->r;
  return 0;
}

std::string RedundancyPolicy::label() const {
  if (const auto* a = std::get_if<Additive>(&scheme)) return "N+" + std::to_string(a->r);
  const auto& f = std::get<Fractional>(scheme);
  std::string out = std::to_string(f.x) + "N";
  if (f.y != 1) out += "/" + std::to_string(f.y);
  return out;
}

void validate(const RedundancyPolicy& policy) {
  if (!(policy.safety_margin >= 0.0 && policy.safety_margin <= 1.0)) {
    throw UsageError("safety margin must be within [0, 1]");
  }
  if (const auto* a = std::get_if<Additive>(&policy.scheme)) {
    if (a->r < 0) throw UsageError("N+r redundancy needs r >= 0");
  } else {
    const auto& f = std::get<Fractional>(policy.scheme);
    if (f.y < 1 || f.x < f.y) throw UsageError("xN/y redundancy needs x >= y >= 1");
  }
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("malformed redundancy '" + std::string(whole) + "'");
  }
  return v;
}

Rational effective_capacity(const EquipmentModel& model, const RedundancyPolicy& policy) {
  const Rational rated = from_decimal(model.rated_capacity_kw);
  if (const auto* f = std::get_if<Fractional>(&policy.scheme)) return rated * Rational(f->y, f->x);
  return rated;
}

std::int64_t units_for(const Rational& demand_kw, const EquipmentModel& model,
                       const RedundancyPolicy& policy) {
  if (demand_kw < 0) throw UsageError("demand must be nonnegative");
  if (demand_kw == 0) return 0;
  const Rational capacity = effective_capacity(model, policy);
  if (capacity <= 0) throw DataError("model '" + model.id + "' has no usable capacity");
  const Rational load = (1 + from_decimal(policy.safety_margin)) * demand_kw;
  return exact::ceil(load / capacity) + policy.spares();
}

std::int64_t pod_units_exact(const Rational& rack_peak_kw, const PodLayout& layout,
                             const EquipmentModel& model, const RedundancyPolicy& policy) {
  return units_for(rack_peak_kw * layout.racks_per_pod(), model, policy);
}

std::vector<const EquipmentModel*> candidates_for(const Catalog& catalog, EquipmentClass cls) {
  auto models = models_of(catalog, cls);
  if (models.empty()) throw DataError("no models for class " + std::string(to_string(cls)));
  return models;
}

}  // namespace

RedundancyPolicy parse_redundancy(std::string_view text, double safety_margin) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  RedundancyPolicy policy;
  policy.safety_margin = safety_margin;
  if (s.rfind("n+", 0) == 0) {
    policy.scheme = Additive{parse_int(std::string_view(s).substr(2), text)};
  } else if (auto n = s.find('n'); n != std::string::npos && n > 0) {
    const int x = parse_int(std::string_view(s).substr(0, n), text);
    std::string_view rest = std::string_view(s).substr(n + 1);
    if (!rest.empty() && rest.front() == '/') rest.remove_prefix(1);
    const int y = rest.empty() ? 1 : parse_int(rest, text);
    policy.scheme = Fractional{x, y};
  } else {
    throw UsageError("malformed redundancy '" + std::string(text) + "' (expected n+R or XnY)");
  }
  validate(policy);
  return policy;
}

double effective_unit_capacity(const EquipmentModel& model, const RedundancyPolicy& policy) {
  return exact::to_double(effective_capacity(model, policy));
}

std::int64_t units_for_demand(double demand_kw, const EquipmentModel& model,
                              const RedundancyPolicy& policy) {
  validate(policy);
  return units_for(from_decimal(demand_kw), model, policy);
}

std::int64_t pod_units(double rack_peak_kw, const PodLayout& layout, const EquipmentModel& model,
                       const RedundancyPolicy& policy) {
  if (!is_rack_level(model.equipment_class)) {
    throw UsageError("pod sizing applies to CDUs and PDUs, not " +
                     std::string(to_string(model.equipment_class)));
  }
  if (!(rack_peak_kw > 0)) throw UsageError("rack peak power must be positive");
  validate(layout);
  validate(policy);
  return pod_units_exact(from_decimal(rack_peak_kw), layout, model, policy);
}

std::int64_t datacenter_units(double demand_kw, const EquipmentModel& model,
                              const RedundancyPolicy& policy) {
  if (is_rack_level(model.equipment_class)) {
    throw UsageError("site sizing does not apply to " +
                     std::string(to_string(model.equipment_class)));
  }
  if (!(demand_kw > 0)) throw UsageError("demand must be positive");
  validate(policy);
  return units_for(from_decimal(demand_kw), model, policy);
}

std::string_view to_string(Serving s) {
  switch (s) {
    case Serving::IT: return "IT";
    case Serving::Facility: return "Facility";
    case Serving::Both: return "Both";
  }
  return "?";
}

Serving parse_serving(std::string_view s) {
  if (s == "IT") return Serving::IT;
  if (s == "Facility") return Serving::Facility;
  if (s == "Both") return Serving::Both;
  throw DataError("unknown serving '" + std::string(s) + "'");
}

const ClassAllocation* FacilityPlan::find(EquipmentClass cls) const {
  auto it = std::find_if(classes.begin(), classes.end(),
                         [cls](const ClassAllocation& a) { return a.equipment_class == cls; });
  return it == classes.end() ? nullptr : &*it;
}

FacilityPlan plan_facility(const ITDesign& it, const Catalog& catalog, const PodLayout& layout,
                           const RedundancyPolicy& policy, HeatSinkKind heat_sink,
                           Objective objective) {
  validate(layout);
  validate(policy);

  FacilityPlan plan;
  plan.heat_sink = heat_sink;
  plan.policy = policy;
  plan.pod_layout = layout;
  plan.objective = objective;

  Rational it_kw = 0;
  for (const auto& e : it.per_class) it_kw += from_decimal(e.rack.peak_power_kw) * e.count;
  const double it_kw_value = exact::to_double(it_kw);

  auto rack_level = [&](EquipmentClass cls) {
    const auto sel = select_model_by(candidates_for(catalog, cls), objective,
                                     [&](const EquipmentModel& m) {
                                       std::int64_t total = 0;
                                       for (const auto& e : it.per_class) {
                                         if (e.count == 0) continue;
                                         const auto pods = exact::ceil(
                                             Rational(e.count, layout.racks_per_pod()));
                                         total += pods * pod_units_exact(
                                                             from_decimal(e.rack.peak_power_kw),
                                                             layout, m, policy);
                                       }
                                       return total;
                                     });
    ClassAllocation a;
    a.equipment_class = cls;
    a.model = sel.model;
    a.it_units = sel.unit_count;
    a.serving = Serving::IT;
    a.it_demand_kw = it_kw_value;
    for (const auto& e : it.per_class) {
      if (e.count == 0) continue;
      PodGroup g;
      g.node_type = e.rack.node_type;
      g.rack_peak_kw = e.rack.peak_power_kw;
      g.racks = e.count;
      g.pods = exact::ceil(Rational(e.count, layout.racks_per_pod()));
      g.units_per_pod = pod_units_exact(from_decimal(e.rack.peak_power_kw), layout, a.model, policy);
      a.pod_groups.push_back(g);
    }
    return a;
  };

  auto site_level = [&](EquipmentClass cls, const Rational& facility_kw) {
    const auto sel = select_model_by(candidates_for(catalog, cls), objective,
                                     [&](const EquipmentModel& m) {
                                       return units_for(it_kw, m, policy) +
                                              units_for(facility_kw, m, policy);
                                     });
    ClassAllocation a;
    a.equipment_class = cls;
    a.model = sel.model;
    a.it_units = units_for(it_kw, a.model, policy);
    a.facility_units = units_for(facility_kw, a.model, policy);
    a.serving = facility_kw > 0 ? Serving::Both : Serving::IT;
    a.it_demand_kw = it_kw_value;
    a.facility_demand_kw = exact::to_double(facility_kw);
    return a;
  };

  // Cooling chain first: its draw is a load on the power chain.
  plan.classes.push_back(rack_level(EquipmentClass::CDU));
  plan.classes.push_back(site_level(EquipmentClass::Chiller, 0));
  plan.classes.push_back(site_level(heat_sink_class(heat_sink), 0));

  Rational cooling_draw_kw = 0;
  for (const auto& a : plan.classes) {
    cooling_draw_kw += from_decimal(a.model.max_draw_kw) * a.unit_count();
  }

  plan.classes.push_back(rack_level(EquipmentClass::PDU));
  for (EquipmentClass cls : {EquipmentClass::UPS, EquipmentClass::MSB, EquipmentClass::Generator}) {
    plan.classes.push_back(site_level(cls, cooling_draw_kw));
  }

  plan.facility_peak_power_mw = exact::to_double(cooling_draw_kw / 1000);
  for (const auto& a : plan.classes) {
    (a.model.placement == Placement::Indoor ? plan.gray_space_indoor_m2
                                            : plan.gray_space_outdoor_m2) += a.gray_space_m2();
  }
  return plan;
}

}  // namespace dcgen
