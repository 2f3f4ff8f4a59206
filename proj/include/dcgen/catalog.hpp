#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dcgen/types.hpp"

namespace dcgen {

// One equipment catalog entry. Capacities in kW, areas in m².
struct EquipmentModel {
  std::string id;
  EquipmentClass equipment_class{};
  double rated_capacity_kw = 0.0;  // heat removed (cooling) or power delivered (electrical)
  double max_draw_kw = 0.0;        // electricity the unit itself consumes at peak
  double footprint_m2 = 0.0;
  double access_factor = 0.0;      // maintenance area as a fraction of the footprint
  Placement placement = Placement::Indoor;
  std::optional<HeatSinkKind> heat_sink_kind;

  // Footprint including access area.
  double gross_area_m2() const { return (1.0 + access_factor) * footprint_m2; }

  bool operator==(const EquipmentModel&) const = default;
};

struct RackClassSpec {
  NodeType node_type{};
  int ru_height = 42;
  double peak_power_kw = 0.0;
  bool is_hpc = false;
  std::optional<double> pflops;

  bool operator==(const RackClassSpec&) const = default;
};

struct RackEntry {
  RackClassSpec rack;
  std::int64_t count = 0;

  bool operator==(const RackEntry&) const = default;
};

struct ReferenceITConfig {
  std::string name;
  int year = 2024;
  DatacenterType dc_type{};
  std::vector<RackEntry> entries;
  double area_per_rack_m2 = 1.8;
  std::optional<double> total_storage_tb;
  std::optional<double> compute_capability_tflops;
  // Storage lives inside the compute racks; no storage racks are estimated.
  bool local_storage = false;
  // Actual deployment/announcement year when it differs from the design-year bucket.
  std::optional<int> deployed;

  std::int64_t total_reference_racks() const;
  const RackEntry* find(NodeType type) const;

  bool operator==(const ReferenceITConfig&) const = default;
};

struct PodLayout {
  int rows_per_pod = 2;
  int racks_per_row = 8;

  std::int64_t racks_per_pod() const {
    return static_cast<std::int64_t>(rows_per_pod) * racks_per_row;
  }

  bool operator==(const PodLayout&) const = default;
};

void validate(const PodLayout& layout);

using Catalog = std::vector<EquipmentModel>;

// Immutable, name-indexed collection of reference and canonical configurations.
class ReferenceLibrary {
 public:
  ReferenceLibrary() = default;
  explicit ReferenceLibrary(std::vector<ReferenceITConfig> configs);

  const std::vector<ReferenceITConfig>& configs() const { return configs_; }
  const ReferenceITConfig* find(std::string_view name) const;
  // Throws UsageError naming the missing entry.
  const ReferenceITConfig& at(std::string_view name) const;

  bool operator==(const ReferenceLibrary&) const = default;

 private:
  std::vector<ReferenceITConfig> configs_;
};

// "canonical-<slug>-<year>", e.g. canonical-ai-training-2024.
std::string canonical_name(DatacenterType type, int year);

inline constexpr int kSchemaMajorVersion = 1;
inline constexpr std::string_view kSchemaVersion = "1.0";

// Throws DataError if the version string is missing or of another major version.
void check_schema_version(const nlohmann::json& doc, std::string_view what);

// Throw DataError naming the offending entry.
void validate(const EquipmentModel& model);
void validate(const RackClassSpec& rack);
void validate(const ReferenceITConfig& config);
// Every class present, both heat-sink classes present, unique ids.
void validate_catalog(const Catalog& catalog);

std::vector<const EquipmentModel*> models_of(const Catalog& catalog, EquipmentClass cls);

Catalog parse_catalog(const nlohmann::json& doc);
nlohmann::ordered_json to_json(const Catalog& catalog);
Catalog load_catalog(const std::filesystem::path& path);

ReferenceLibrary parse_reference_library(const nlohmann::json& doc);
nlohmann::ordered_json to_json(const ReferenceLibrary& library);
ReferenceLibrary load_reference_library(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const EquipmentModel& model);
nlohmann::ordered_json to_json(const RackClassSpec& rack);

// Reads and parses a JSON file; DataError on I/O or syntax failure.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace dcgen
