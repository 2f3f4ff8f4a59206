#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "dcgen/catalog.hpp"
#include "dcgen/design_json.hpp"
#include "dcgen/errors.hpp"
#include "dcgen/scenario.hpp"
#include "dcgen/sweep.hpp"

#ifndef DCGEN_DEFAULT_DATA_DIR
#define DCGEN_DEFAULT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace dcgen;

namespace {

enum ExitCode { kOk = 0, kUsage = 2, kData = 3, kInfeasible = 4 };

struct Options {
  std::optional<std::string> type;
  std::optional<int> year;
  std::optional<std::int64_t> racks;
  std::optional<double> power_mw;
  std::optional<std::string> reference;
  std::optional<std::string> redundancy;
  std::optional<double> safety_margin;
  std::optional<std::string> objective;
  std::optional<std::string> heat_sink;
  std::optional<int> ru;
  std::optional<std::string> catalog;
  std::optional<std::string> library;
  std::optional<std::string> out;
  std::optional<std::string> sweep;
};

fs::path data_dir() {
  if (const char* env = std::getenv("DCGEN_DATA_DIR"); env && *env) return env;
  return DCGEN_DEFAULT_DATA_DIR;
}

fs::path data_file(const std::optional<std::string>& flag, const char* name) {
  return flag ? fs::path(*flag) : data_dir() / name;
}

Objective parse_objective(const std::string& s) {
  if (s == "space") return Objective::Space;
  if (s == "power") return Objective::Power;
  throw UsageError("unknown objective '" + s + "' (expected space or power)");
}

// Flags that shape a design apart from its target; shared by single runs and presets.
void apply_design_options(const Options& o, ScenarioRequest& r) {
  if (o.redundancy || o.safety_margin) {
    const double sm = o.safety_margin.value_or(r.policy.safety_margin);
    r.policy = o.redundancy ? parse_redundancy(*o.redundancy, sm)
                            : RedundancyPolicy{r.policy.scheme, sm};
  }
  if (o.objective) r.objective = parse_objective(*o.objective);
  if (o.heat_sink) r.heat_sink = parse_heat_sink_choice(*o.heat_sink);
  if (o.ru) r.normalized_ru = *o.ru;
}

ScenarioRequest request_from(const Options& o) {
  ScenarioRequest r;
  if (o.type) r.dc_type = parse_datacenter_slug(*o.type);
  r.year = o.year;
  r.reference_name = o.reference;
  if (o.racks) {
    r.target = RackCountTarget{*o.racks};
  } else if (o.power_mw) {
    r.target = PowerTarget{*o.power_mw};
  } else {
    throw UsageError("one of --racks or --power-mw is required");
  }
  apply_design_options(o, r);

  std::string base = o.reference ? *o.reference
                                 : std::string(o.type ? *o.type : "design") + "-" +
                                       (o.year ? std::to_string(*o.year) : std::string("na"));
  r.name = o.racks ? base + "-" + std::to_string(*o.racks) + "racks"
                   : base + "-" + format_number(*o.power_mw) + "mw";
  return r;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write " + path.string());
  f << text;
  if (!f) throw DataError("failed writing " + path.string());
}

int run_single(const Options& o) {
  const ScenarioRequest request = request_from(o);
  validate(request);
  const Catalog catalog = load_catalog(data_file(o.catalog, "catalog.json"));
  const ReferenceLibrary library =
      load_reference_library(data_file(o.library, "reference_library.json"));
  const std::string text = dump_document(run(request, catalog, library));
  if (o.out) {
    write_text(*o.out, text);
  } else {
    std::cout << text;
  }
  return kOk;
}

int run_sweep(const Options& o) {
  std::vector<SweepEntry> entries;
  if (auto preset = sweep_preset(*o.sweep)) {
    entries = std::move(*preset);
    for (auto& e : entries) apply_design_options(o, e.request);
  } else if (fs::exists(*o.sweep)) {
    entries = load_sweep_file(*o.sweep);
  } else {
    throw UsageError("'" + *o.sweep + "' is neither a sweep preset nor a readable file");
  }
  const Catalog catalog = load_catalog(data_file(o.catalog, "catalog.json"));
  const ReferenceLibrary library =
      load_reference_library(data_file(o.library, "reference_library.json"));

  const auto outcomes = evaluate_sweep(entries, catalog, library);
  const std::string csv = sweep_csv(outcomes);
  if (!o.out) {
    std::cout << csv;
    return kOk;
  }
  const fs::path dir(*o.out);
  write_text(dir / "sweep.csv", csv);
  for (const auto& outcome : outcomes) {
    if (outcome.document) {
      write_text(dir / (outcome.request.name + ".json"), dump_document(*outcome.document));
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Datacenter design generator: sizes IT racks and facility equipment"};
  app.set_version_flag("--version", "dcgen 1.0");
  Options o;

  app.add_option("--type", o.type, "Datacenter type")
      ->check(CLI::IsMember({"ai-training", "mixed", "ai-inference", "cloud"}));
  app.add_option("--year", o.year, "Design year")->check(CLI::IsMember({2024, 2027, 2029}));
  auto* racks = app.add_option("--racks", o.racks, "Target number of racks");
  auto* power = app.add_option("--power-mw", o.power_mw, "Target IT power in MW");
  racks->excludes(power);
  power->excludes(racks);
  app.add_option("--reference", o.reference, "Reference configuration name");
  app.add_option("--redundancy", o.redundancy, "n+R, or XnY (2n, 4n3)");
  app.add_option("--safety-margin", o.safety_margin, "Capacity safety margin")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--objective", o.objective, "Selection objective")
      ->check(CLI::IsMember({"space", "power"}));
  app.add_option("--heat-sink", o.heat_sink, "Heat sink variant")
      ->check(CLI::IsMember({"evaporative", "dry", "both"}));
  app.add_option("--ru", o.ru, "Normalized rack size in RU");
  app.add_option("--catalog", o.catalog, "Equipment catalog JSON");
  app.add_option("--library", o.library, "Reference library JSON");
  app.add_option("--out", o.out, "Output file (single run) or directory (sweep)");
  app.add_option("--sweep", o.sweep, "Sweep preset name or sweep file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "dcgen: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return o.sweep ? run_sweep(o) : run_single(o);
  } catch (const UsageError& e) {
    std::cerr << "dcgen: " << e.what() << "\n";
    return kUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "dcgen: infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const DataError& e) {
    std::cerr << "dcgen: data error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "dcgen: " << e.what() << "\n";
    return kData;
  }
}
