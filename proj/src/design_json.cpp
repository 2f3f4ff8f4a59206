#include "dcgen/design_json.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "dcgen/errors.hpp"

namespace dcgen {

using nlohmann::json;
using nlohmann::ordered_json;

double round_sig6(double value) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return std::strtod(buf, nullptr);
}

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, round_sig6(value));
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

namespace {

double num(double v) { return round_sig6(v); }

ordered_json target_json(const SizingTarget& target) {
  ordered_json j;
  if (const auto* r = std::get_if<RackCountTarget>(&target)) {
    j["racks"] = r->racks;
  } else {
    j["power_mw"] = num(std::get<PowerTarget>(target).megawatts);
  }
  return j;
}

template <typename F>
auto data_field(const char* context, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw DataError(std::string(context) + ": " + e.what());
  }
}

bool close(double a, double b, double rel_tol) {
  return std::fabs(a - b) <= rel_tol * std::max({std::fabs(a), std::fabs(b), 1e-12});
}

}  // namespace

ordered_json to_json(const ScenarioRequest& r) {
  ordered_json j;
  j["name"] = r.name;
  if (r.dc_type) j["type"] = datacenter_slug(*r.dc_type);
  if (r.year) j["year"] = *r.year;
  j.update(target_json(r.target));
  if (r.reference_name) j["reference"] = *r.reference_name;
  j["redundancy"] = r.policy.label();
  j["safety_margin"] = num(r.policy.safety_margin);
  j["objective"] = r.objective == Objective::Space ? "space" : "power";
  j["heat_sink"] = to_string(r.heat_sink);
  j["ru"] = r.normalized_ru;
  j["rows_per_pod"] = r.pod_layout.rows_per_pod;
  j["racks_per_row"] = r.pod_layout.racks_per_row;
  return j;
}

ScenarioRequest parse_scenario_request(const json& j) {
  if (!j.is_object()) throw DataError("scenario must be a JSON object");
  return data_field("scenario", [&] {
    ScenarioRequest r;
    r.name = j.value("name", std::string{});
    if (j.contains("type")) r.dc_type = parse_datacenter_slug(j["type"].get<std::string>());
    if (j.contains("year")) r.year = j["year"].get<int>();
    const bool has_racks = j.contains("racks");
    const bool has_power = j.contains("power_mw");
    if (has_racks == has_power) {
      throw UsageError("scenario '" + r.name + "' needs exactly one of racks or power_mw");
    }
    if (has_racks) {
      r.target = RackCountTarget{j["racks"].get<std::int64_t>()};
    } else {
      r.target = PowerTarget{j["power_mw"].get<double>()};
    }
    if (j.contains("reference")) r.reference_name = j["reference"].get<std::string>();
    const double sm = j.value("safety_margin", 0.1);
    r.policy = parse_redundancy(j.value("redundancy", std::string("n+1")), sm);
    const auto objective = j.value("objective", std::string("space"));
    if (objective == "space") {
      r.objective = Objective::Space;
    } else if (objective == "power") {
      r.objective = Objective::Power;
    } else {
      throw UsageError("unknown objective '" + objective + "' (expected space or power)");
    }
    r.heat_sink = parse_heat_sink_choice(j.value("heat_sink", std::string("both")));
    r.normalized_ru = j.value("ru", kDefaultRackUnits);
    r.pod_layout.rows_per_pod = j.value("rows_per_pod", 2);
    r.pod_layout.racks_per_row = j.value("racks_per_row", 8);
    validate(r);
    return r;
  });
}

ordered_json to_json(const ITDesign& it) {
  ordered_json j;
  j["reference_name"] = it.reference_name;
  j["normalized_ru"] = it.normalized_ru;
  j["area_per_rack_m2"] = num(it.area_per_rack_m2);
  j["total_racks"] = it.total_racks;
  j["it_peak_power_mw"] = num(it.it_peak_power_mw);
  j["power_density_kw_m2"] = num(it.power_density_kw_m2);
  j["white_space_m2"] = num(it.white_space_m2);
  j["racks"] = ordered_json::array();
  for (const auto& e : it.per_class) {
    auto r = dcgen::to_json(e.rack);
    r["peak_power_kw"] = num(e.rack.peak_power_kw);
    if (e.rack.pflops) r["pflops"] = num(*e.rack.pflops);
    r["count"] = e.count;
    j["racks"].push_back(std::move(r));
  }
  return j;
}

ordered_json to_json(const FacilityPlan& plan) {
  ordered_json j;
  j["heat_sink"] = to_string(plan.heat_sink);
  j["objective"] = to_string(plan.objective);
  j["redundancy"] = plan.policy.label();
  j["safety_margin"] = num(plan.policy.safety_margin);
  j["pod_layout"] = {{"rows_per_pod", plan.pod_layout.rows_per_pod},
                     {"racks_per_row", plan.pod_layout.racks_per_row}};
  j["facility_peak_power_mw"] = num(plan.facility_peak_power_mw);
  j["gray_space_indoor_m2"] = num(plan.gray_space_indoor_m2);
  j["gray_space_outdoor_m2"] = num(plan.gray_space_outdoor_m2);
  j["equipment"] = ordered_json::array();
  for (const auto& a : plan.classes) {
    ordered_json e;
    e["class"] = to_string(a.equipment_class);
    auto model = dcgen::to_json(a.model);
    for (const char* key : {"rated_capacity_kw", "max_draw_kw", "footprint_m2", "access_factor"}) {
      model[key] = num(model[key].get<double>());
    }
    e["model"] = std::move(model);
    e["serving"] = to_string(a.serving);
    e["it_units"] = a.it_units;
    e["facility_units"] = a.facility_units;
    e["unit_count"] = a.unit_count();
    e["it_demand_kw"] = num(a.it_demand_kw);
    e["facility_demand_kw"] = num(a.facility_demand_kw);
    e["gray_space_m2"] = num(a.gray_space_m2());
    if (is_rack_level(a.equipment_class)) {
      e["pod_groups"] = ordered_json::array();
      for (const auto& g : a.pod_groups) {
        e["pod_groups"].push_back({{"node_type", to_string(g.node_type)},
                                   {"rack_peak_kw", num(g.rack_peak_kw)},
                                   {"racks", g.racks},
                                   {"pods", g.pods},
                                   {"units_per_pod", g.units_per_pod}});
      }
    }
    j["equipment"].push_back(std::move(e));
  }
  return j;
}

ordered_json to_json(const DesignDocument& doc) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["request"] = to_json(doc.request);
  j["reference"] = {{"name", doc.reference_name},
                    {"dc_type", to_string(doc.dc_type)},
                    {"year", doc.year}};
  j["it_design"] = to_json(doc.it);
  j["facility_plans"] = ordered_json::array();
  for (const auto& p : doc.plans) j["facility_plans"].push_back(to_json(p));
  j["summary"] = ordered_json::array();
  for (const auto& s : doc.summary) {
    ordered_json m;
    m["heat_sink"] = to_string(s.heat_sink);
    m["power_density_kw_m2"] = num(s.power_density_kw_m2);
    m["it_power_mw"] = num(s.it_power_mw);
    m["facility_power_mw"] = num(s.facility_power_mw);
    m["white_space_m2"] = num(s.white_space_m2);
    m["gray_space_indoor_m2"] = num(s.gray_space_indoor_m2);
    m["gray_space_outdoor_m2"] = num(s.gray_space_outdoor_m2);
    j["summary"].push_back(std::move(m));
  }
  return j;
}

std::string dump_document(const DesignDocument& doc) { return to_json(doc).dump(2) + "\n"; }

DesignDocument parse_design_document(const json& j) {
  check_schema_version(j, "design document");
  return data_field("design document", [&] {
    DesignDocument doc;
    doc.request = parse_scenario_request(j.at("request"));
    const auto& ref = j.at("reference");
    doc.reference_name = ref.at("name").get<std::string>();
    doc.dc_type = parse_datacenter_type(ref.at("dc_type").get<std::string>());
    doc.year = ref.at("year").get<int>();

    const auto& it = j.at("it_design");
    doc.it.reference_name = it.at("reference_name").get<std::string>();
    doc.it.normalized_ru = it.at("normalized_ru").get<int>();
    doc.it.area_per_rack_m2 = it.at("area_per_rack_m2").get<double>();
    doc.it.total_racks = it.at("total_racks").get<std::int64_t>();
    doc.it.it_peak_power_mw = it.at("it_peak_power_mw").get<double>();
    doc.it.power_density_kw_m2 = it.at("power_density_kw_m2").get<double>();
    doc.it.white_space_m2 = it.at("white_space_m2").get<double>();
    for (const auto& r : it.at("racks")) {
      RackEntry e;
      e.rack.node_type = parse_node_type(r.at("node_type").get<std::string>());
      e.rack.ru_height = r.at("ru_height").get<int>();
      e.rack.peak_power_kw = r.at("peak_power_kw").get<double>();
      e.rack.is_hpc = r.at("is_hpc").get<bool>();
      if (r.contains("pflops")) e.rack.pflops = r["pflops"].get<double>();
      e.count = r.at("count").get<std::int64_t>();
      doc.it.per_class.push_back(e);
    }

    for (const auto& p : j.at("facility_plans")) {
      FacilityPlan plan;
      plan.heat_sink = parse_heat_sink_kind(p.at("heat_sink").get<std::string>());
      plan.objective = parse_objective(p.at("objective").get<std::string>());
      plan.policy = parse_redundancy(p.at("redundancy").get<std::string>(),
                                     p.at("safety_margin").get<double>());
      plan.pod_layout.rows_per_pod = p.at("pod_layout").at("rows_per_pod").get<int>();
      plan.pod_layout.racks_per_row = p.at("pod_layout").at("racks_per_row").get<int>();
      plan.facility_peak_power_mw = p.at("facility_peak_power_mw").get<double>();
      plan.gray_space_indoor_m2 = p.at("gray_space_indoor_m2").get<double>();
      plan.gray_space_outdoor_m2 = p.at("gray_space_outdoor_m2").get<double>();
      for (const auto& e : p.at("equipment")) {
        ClassAllocation a;
        a.equipment_class = parse_equipment_class(e.at("class").get<std::string>());
        const auto& m = e.at("model");
        a.model.id = m.at("id").get<std::string>();
        a.model.equipment_class = parse_equipment_class(m.at("class").get<std::string>());
        a.model.rated_capacity_kw = m.at("rated_capacity_kw").get<double>();
        a.model.max_draw_kw = m.at("max_draw_kw").get<double>();
        a.model.footprint_m2 = m.at("footprint_m2").get<double>();
        a.model.access_factor = m.at("access_factor").get<double>();
        a.model.placement = parse_placement(m.at("placement").get<std::string>());
        if (m.contains("heat_sink_kind")) {
          a.model.heat_sink_kind = parse_heat_sink_kind(m["heat_sink_kind"].get<std::string>());
        }
        a.serving = parse_serving(e.at("serving").get<std::string>());
        a.it_units = e.at("it_units").get<std::int64_t>();
        a.facility_units = e.at("facility_units").get<std::int64_t>();
        a.it_demand_kw = e.at("it_demand_kw").get<double>();
        a.facility_demand_kw = e.at("facility_demand_kw").get<double>();
        if (e.contains("pod_groups")) {
          for (const auto& g : e["pod_groups"]) {
            PodGroup pg;
            pg.node_type = parse_node_type(g.at("node_type").get<std::string>());
            pg.rack_peak_kw = g.at("rack_peak_kw").get<double>();
            pg.racks = g.at("racks").get<std::int64_t>();
            pg.pods = g.at("pods").get<std::int64_t>();
            pg.units_per_pod = g.at("units_per_pod").get<std::int64_t>();
            a.pod_groups.push_back(pg);
          }
        }
        if (e.at("unit_count").get<std::int64_t>() != a.unit_count()) {
          throw DataError("unit_count of " + a.model.id + " disagrees with its IT/facility split");
        }
        plan.classes.push_back(std::move(a));
      }
      doc.plans.push_back(std::move(plan));
    }

    for (const auto& s : j.at("summary")) {
      SummaryMetrics m;
      m.heat_sink = parse_heat_sink_kind(s.at("heat_sink").get<std::string>());
      m.power_density_kw_m2 = s.at("power_density_kw_m2").get<double>();
      m.it_power_mw = s.at("it_power_mw").get<double>();
      m.facility_power_mw = s.at("facility_power_mw").get<double>();
      m.white_space_m2 = s.at("white_space_m2").get<double>();
      m.gray_space_indoor_m2 = s.at("gray_space_indoor_m2").get<double>();
      m.gray_space_outdoor_m2 = s.at("gray_space_outdoor_m2").get<double>();
      doc.summary.push_back(m);
    }
    return doc;
  });
}

std::vector<std::string> check_document(const DesignDocument& doc, double rel_tol) {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };

  const ITDesign& it = doc.it;
  std::int64_t racks = 0;
  double power_kw = 0.0;
  for (const auto& e : it.per_class) {
    racks += e.count;
    power_kw += static_cast<double>(e.count) * e.rack.peak_power_kw;
  }
  expect(racks == it.total_racks, "total_racks differs from the per-class sum");
  expect(close(power_kw / 1000.0, it.it_peak_power_mw, rel_tol),
         "it_peak_power_mw differs from the per-class power sum");
  expect(close(static_cast<double>(it.total_racks) * it.area_per_rack_m2, it.white_space_m2, rel_tol),
         "white_space_m2 differs from total_racks x area_per_rack_m2");
  if (it.white_space_m2 > 0) {
    expect(close(it.it_peak_power_mw * 1000.0 / it.white_space_m2, it.power_density_kw_m2, rel_tol),
           "power_density_kw_m2 differs from power / white space");
  }

  expect(doc.plans.size() == doc.summary.size(), "one summary entry per facility plan expected");
  for (std::size_t p = 0; p < doc.plans.size(); ++p) {
    const FacilityPlan& plan = doc.plans[p];
    const std::string tag = "plan " + std::string(to_string(plan.heat_sink)) + ": ";
    const double margin = 1.0 + plan.policy.safety_margin;
    const auto spares = plan.policy.spares();
    double indoor = 0.0, outdoor = 0.0, cooling_draw = 0.0;
    for (const auto& a : plan.classes) {
      const std::string who = tag + a.model.id + ": ";
      const double eff = effective_unit_capacity(a.model, plan.policy);
      expect(a.model.equipment_class == a.equipment_class, who + "model class mismatch");
      if (is_rack_level(a.equipment_class)) {
        std::int64_t units = 0;
        for (const auto& g : a.pod_groups) {
          units += g.pods * g.units_per_pod;
          const auto per_pod = plan.pod_layout.racks_per_pod();
          expect(g.pods == (g.racks + per_pod - 1) / per_pod, who + "pod count mismatch");
          const double pod_load = margin * static_cast<double>(per_pod) * g.rack_peak_kw;
          expect(static_cast<double>(g.units_per_pod - spares) * eff >= pod_load * (1 - rel_tol),
                 who + "pod capacity does not cover the pod load");
        }
        expect(units == a.it_units, who + "rack-level total differs from pods x units per pod");
      } else {
        if (a.it_demand_kw > 0) {
          expect(static_cast<double>(a.it_units - spares) * eff >=
                     margin * a.it_demand_kw * (1 - rel_tol),
                 who + "IT capacity does not cover the IT load");
        }
        if (a.facility_demand_kw > 0) {
          expect(static_cast<double>(a.facility_units - spares) * eff >=
                     margin * a.facility_demand_kw * (1 - rel_tol),
                 who + "facility capacity does not cover the cooling load");
        }
      }
      (a.model.placement == Placement::Indoor ? indoor : outdoor) += a.gray_space_m2();
      if (a.equipment_class == EquipmentClass::CDU || a.equipment_class == EquipmentClass::Chiller ||
          a.equipment_class == heat_sink_class(plan.heat_sink)) {
        cooling_draw += static_cast<double>(a.unit_count()) * a.model.max_draw_kw;
      }
    }
    expect(close(indoor, plan.gray_space_indoor_m2, rel_tol), tag + "indoor gray space mismatch");
    expect(close(outdoor, plan.gray_space_outdoor_m2, rel_tol), tag + "outdoor gray space mismatch");
    expect(close(cooling_draw / 1000.0, plan.facility_peak_power_mw, rel_tol),
           tag + "facility power differs from the cooling draw");

    if (p < doc.summary.size()) {
      const SummaryMetrics& s = doc.summary[p];
      expect(s.heat_sink == plan.heat_sink, tag + "summary heat sink mismatch");
      expect(s.power_density_kw_m2 == it.power_density_kw_m2 && s.it_power_mw == it.it_peak_power_mw &&
                 s.white_space_m2 == it.white_space_m2 &&
                 s.facility_power_mw == plan.facility_peak_power_mw &&
                 s.gray_space_indoor_m2 == plan.gray_space_indoor_m2 &&
                 s.gray_space_outdoor_m2 == plan.gray_space_outdoor_m2,
             tag + "summary differs from the embedded design");
    }
  }
  return bad;
}

}  // namespace dcgen
