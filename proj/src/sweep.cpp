#include "dcgen/sweep.hpp"

#include <sstream>

#include "dcgen/design_json.hpp"
#include "dcgen/errors.hpp"

#ifdef DCGEN_HAVE_OPENMP
#include <omp.h>
#endif

namespace dcgen {

namespace {

ScenarioOutcome evaluate_one(const SweepEntry& entry, const Catalog& catalog,
                             const ReferenceLibrary& library) {
  ScenarioOutcome out;
  out.request = entry.request;
  if (!entry.error.empty()) {
    out.error = entry.error;
    return out;
  }
  try {
    out.document = run(entry.request, catalog, library);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::vector<ScenarioOutcome> evaluate_sweep(const std::vector<SweepEntry>& entries,
                                            const Catalog& catalog,
                                            const ReferenceLibrary& library, Execution mode) {
  std::vector<ScenarioOutcome> outcomes(entries.size());
  const auto n = static_cast<std::ptrdiff_t>(entries.size());
  if (mode == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) outcomes[i] = evaluate_one(entries[i], catalog, library);
    return outcomes;
  }
#ifdef DCGEN_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) outcomes[i] = evaluate_one(entries[i], catalog, library);
  return outcomes;
}

std::vector<ScenarioOutcome> sweep(const std::vector<ScenarioRequest>& requests,
                                   const Catalog& catalog, const ReferenceLibrary& library,
                                   Execution mode) {
  std::vector<SweepEntry> entries;
  entries.reserve(requests.size());
  for (const auto& r : requests) entries.push_back({r, {}});
  return evaluate_sweep(entries, catalog, library, mode);
}

void write_sweep_csv(const std::vector<ScenarioOutcome>& outcomes, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const auto& o : outcomes) {
    const ScenarioRequest& r = o.request;
    std::string dc_type, year;
    if (o.document) {
      dc_type = datacenter_slug(o.document->dc_type);
      year = std::to_string(o.document->year);
    } else {
      if (r.dc_type) dc_type = datacenter_slug(*r.dc_type);
      if (r.year) year = std::to_string(*r.year);
    }
    std::string kind, value;
    if (const auto* racks = std::get_if<RackCountTarget>(&r.target)) {
      kind = "racks";
      value = std::to_string(racks->racks);
    } else {
      kind = "power_mw";
      value = format_number(std::get<PowerTarget>(r.target).megawatts);
    }
    const std::string prefix = csv_field(r.name) + ',' + dc_type + ',' + year + ',' + kind + ',' +
                               value + ',';
    if (!o.document) {
      out << prefix << ",,,,,,,," << csv_field(o.error) << '\n';
      continue;
    }
    const auto& doc = *o.document;
    for (const auto& s : doc.summary) {
      out << prefix << doc.it.total_racks << ',' << format_number(s.it_power_mw) << ','
          << format_number(s.facility_power_mw) << ',' << format_number(s.power_density_kw_m2)
          << ',' << format_number(s.white_space_m2) << ','
          << format_number(s.gray_space_indoor_m2) << ','
          << format_number(s.gray_space_outdoor_m2) << ',' << to_string(s.heat_sink) << ",\n";
    }
  }
}

std::string sweep_csv(const std::vector<ScenarioOutcome>& outcomes) {
  std::ostringstream os;
  write_sweep_csv(outcomes, os);
  return os.str();
}

std::vector<ScenarioRequest> case_study_scenarios() {
  std::vector<ScenarioRequest> out;
  for (int year : kDesignYears) {
    for (DatacenterType type : kAllDatacenterTypes) {
      ScenarioRequest by_racks;
      by_racks.dc_type = type;
      by_racks.year = year;
      by_racks.name = std::string(datacenter_slug(type)) + "-" + std::to_string(year) + "-10000racks";
      by_racks.target = RackCountTarget{10000};
      out.push_back(by_racks);

      ScenarioRequest by_power = by_racks;
      by_power.name = std::string(datacenter_slug(type)) + "-" + std::to_string(year) + "-1gw";
      by_power.target = PowerTarget{1000.0};
      out.push_back(by_power);
    }
  }
  return out;
}

std::optional<std::vector<SweepEntry>> sweep_preset(std::string_view name) {
  if (name != kPaperCaseStudiesPreset) return std::nullopt;
  std::vector<SweepEntry> entries;
  for (auto& r : case_study_scenarios()) entries.push_back({std::move(r), {}});
  return entries;
}

std::vector<SweepEntry> parse_sweep_file(const nlohmann::json& doc) {
  check_schema_version(doc, "sweep file");
  if (!doc.contains("scenarios") || !doc["scenarios"].is_array()) {
    throw DataError("sweep file: 'scenarios' must be an array");
  }
  std::vector<SweepEntry> entries;
  const auto& items = doc["scenarios"];
  for (std::size_t i = 0; i < items.size(); ++i) {
    SweepEntry entry;
    try {
      entry.request = parse_scenario_request(items[i]);
    } catch (const std::exception& e) {
      entry.error = e.what();
      if (items[i].is_object() && items[i].contains("name") && items[i]["name"].is_string()) {
        entry.request.name = items[i]["name"].get<std::string>();
      }
    }
    if (entry.request.name.empty()) entry.request.name = "scenario-" + std::to_string(i + 1);
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<SweepEntry> load_sweep_file(const std::filesystem::path& path) {
  return parse_sweep_file(read_json_file(path));
}

}  // namespace dcgen
