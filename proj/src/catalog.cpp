#include "dcgen/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "dcgen/errors.hpp"

namespace dcgen {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string entry_label(const json& entry, std::size_t index, const char* key) {
  if (entry.is_object() && entry.contains(key) && entry[key].is_string()) {
    return "'" + entry[key].get<std::string>() + "'";
  }
  return "#" + std::to_string(index);
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<T>();
}

EquipmentModel parse_model(const json& j) {
  EquipmentModel m;
  m.id = j.at("id").get<std::string>();
  m.equipment_class = parse_equipment_class(j.at("class").get<std::string>());
  m.rated_capacity_kw = j.at("rated_capacity_kw").get<double>();
  m.max_draw_kw = j.at("max_draw_kw").get<double>();
  m.footprint_m2 = j.at("footprint_m2").get<double>();
  m.access_factor = j.at("access_factor").get<double>();
  m.placement = parse_placement(j.at("placement").get<std::string>());
  if (auto kind = optional_field<std::string>(j, "heat_sink_kind")) {
    m.heat_sink_kind = parse_heat_sink_kind(*kind);
  }
  return m;
}

RackEntry parse_rack_entry(const json& j) {
  RackEntry e;
  e.rack.node_type = parse_node_type(j.at("node_type").get<std::string>());
  e.rack.ru_height = j.at("ru_height").get<int>();
  e.rack.peak_power_kw = j.at("peak_power_kw").get<double>();
  e.rack.is_hpc = j.at("is_hpc").get<bool>();
  e.rack.pflops = optional_field<double>(j, "pflops");
  e.count = j.at("count").get<std::int64_t>();
  return e;
}

ReferenceITConfig parse_config(const json& j) {
  ReferenceITConfig c;
  c.name = j.at("name").get<std::string>();
  c.year = j.at("year").get<int>();
  c.dc_type = parse_datacenter_type(j.at("dc_type").get<std::string>());
  for (const auto& e : j.at("entries")) c.entries.push_back(parse_rack_entry(e));
  c.area_per_rack_m2 = j.value("area_per_rack_m2", 1.8);
  c.total_storage_tb = optional_field<double>(j, "total_storage_tb");
  c.compute_capability_tflops = optional_field<double>(j, "compute_capability_tflops");
  c.local_storage = j.value("local_storage", false);
  c.deployed = optional_field<int>(j, "deployed");
  return c;
}

}  // namespace

std::int64_t ReferenceITConfig::total_reference_racks() const {
  std::int64_t total = 0;
  for (const auto& e : entries) total += e.count;
  return total;
}

const RackEntry* ReferenceITConfig::find(NodeType type) const {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [type](const RackEntry& e) { return e.rack.node_type == type; });
  return it == entries.end() ? nullptr : &*it;
}

void validate(const PodLayout& layout) {
  if (layout.rows_per_pod < 1 || layout.racks_per_row < 1) {
    throw UsageError("pod layout needs at least one row and one rack per row");
  }
}

ReferenceLibrary::ReferenceLibrary(std::vector<ReferenceITConfig> configs)
    : configs_(std::move(configs)) {
  std::set<std::string> names;
  for (const auto& c : configs_) {
    validate(c);
    if (!names.insert(c.name).second) {
      throw DataError("duplicate reference configuration name '" + c.name + "'");
    }
  }
}

const ReferenceITConfig* ReferenceLibrary::find(std::string_view name) const {
  auto it = std::find_if(configs_.begin(), configs_.end(),
                         [name](const ReferenceITConfig& c) { return c.name == name; });
  return it == configs_.end() ? nullptr : &*it;
}

const ReferenceITConfig& ReferenceLibrary::at(std::string_view name) const {
  if (const auto* c = find(name)) return *c;
  throw UsageError("unknown reference configuration '" + std::string(name) + "'");
}

std::string canonical_name(DatacenterType type, int year) {
  return "canonical-" + std::string(datacenter_slug(type)) + "-" + std::to_string(year);
}

void check_schema_version(const json& doc, std::string_view what) {
  if (!doc.is_object() || !doc.contains("schema_version") || !doc["schema_version"].is_string()) {
    throw DataError(std::string(what) + ": missing schema_version");
  }
  const auto version = doc["schema_version"].get<std::string>();
  const auto dot = version.find('.');
  int major = -1;
  try {
    major = std::stoi(version.substr(0, dot));
  } catch (const std::exception&) {
    throw DataError(std::string(what) + ": malformed schema_version '" + version + "'");
  }
  if (major != kSchemaMajorVersion) {
    throw DataError(std::string(what) + ": unsupported schema_version '" + version + "'");
  }
}

void validate(const EquipmentModel& m) {
  const std::string who = "equipment model '" + m.id + "'";
  if (m.id.empty()) throw DataError("equipment model with empty id");
  if (!(m.rated_capacity_kw > 0)) throw DataError(who + ": rated_capacity_kw must be positive");
  if (!(m.footprint_m2 > 0)) throw DataError(who + ": footprint_m2 must be positive");
  if (!(m.access_factor >= 0)) throw DataError(who + ": access_factor must be nonnegative");
  if (!(m.max_draw_kw >= 0)) throw DataError(who + ": max_draw_kw must be nonnegative");
  const bool is_sink = m.equipment_class == EquipmentClass::DryCooler ||
                       m.equipment_class == EquipmentClass::EvaporativeTower;
  if (m.heat_sink_kind && !is_sink) {
    throw DataError(who + ": heat_sink_kind only applies to heat-sink classes");
  }
  if (is_sink && m.heat_sink_kind && heat_sink_class(*m.heat_sink_kind) != m.equipment_class) {
    throw DataError(who + ": heat_sink_kind does not match class");
  }
}

void validate(const RackClassSpec& rack) {
  if (!(rack.peak_power_kw > 0)) throw DataError("rack peak_power_kw must be positive");
  if (rack.ru_height < 1 || rack.ru_height > 60) throw DataError("rack ru_height must be in [1, 60]");
  if (rack.pflops && !(*rack.pflops >= 0)) throw DataError("rack pflops must be nonnegative");
}

void validate(const ReferenceITConfig& c) {
  const std::string who = "reference configuration '" + c.name + "'";
  if (c.name.empty()) throw DataError("reference configuration with empty name");
  if (!is_design_year(c.year)) throw DataError(who + ": year must be 2024, 2027 or 2029");
  if (c.entries.empty()) throw DataError(who + ": no rack entries");
  if (!(c.area_per_rack_m2 > 0)) throw DataError(who + ": area_per_rack_m2 must be positive");
  if (c.total_storage_tb && !(*c.total_storage_tb > 0)) {
    throw DataError(who + ": total_storage_tb must be positive");
  }
  if (c.compute_capability_tflops && !(*c.compute_capability_tflops > 0)) {
    throw DataError(who + ": compute_capability_tflops must be positive");
  }
  std::set<NodeType> seen;
  for (const auto& e : c.entries) {
    try {
      validate(e.rack);
    } catch (const DataError& err) {
      throw DataError(who + ": " + err.what());
    }
    if (e.count < 1) throw DataError(who + ": rack counts must be at least 1");
    if (!seen.insert(e.rack.node_type).second) {
      throw DataError(who + ": more than one entry for node type " +
                      std::string(to_string(e.rack.node_type)));
    }
    if (!node_type_allowed(c.dc_type, e.rack.node_type)) {
      throw DataError(who + ": node type " + std::string(to_string(e.rack.node_type)) +
                      " not allowed in " + std::string(to_string(c.dc_type)) + " datacenters");
    }
    if (e.rack.ru_height != c.entries.front().rack.ru_height) {
      throw DataError(who + ": all racks must share one rack size");
    }
  }
}

void validate_catalog(const Catalog& catalog) {
  std::set<std::string> ids;
  for (const auto& m : catalog) {
    validate(m);
    if (!ids.insert(m.id).second) throw DataError("duplicate equipment model id '" + m.id + "'");
  }
  for (EquipmentClass cls : kAllEquipmentClasses) {
    if (models_of(catalog, cls).empty()) {
      throw DataError("no models for class " + std::string(to_string(cls)));
    }
  }
}

std::vector<const EquipmentModel*> models_of(const Catalog& catalog, EquipmentClass cls) {
  std::vector<const EquipmentModel*> out;
  for (const auto& m : catalog) {
    if (m.equipment_class == cls) out.push_back(&m);
  }
  return out;
}

ordered_json to_json(const EquipmentModel& m) {
  ordered_json j;
  j["id"] = m.id;
  j["class"] = to_string(m.equipment_class);
  j["rated_capacity_kw"] = m.rated_capacity_kw;
  j["max_draw_kw"] = m.max_draw_kw;
  j["footprint_m2"] = m.footprint_m2;
  j["access_factor"] = m.access_factor;
  j["placement"] = to_string(m.placement);
  if (m.heat_sink_kind) j["heat_sink_kind"] = to_string(*m.heat_sink_kind);
  return j;
}

ordered_json to_json(const RackClassSpec& r) {
  ordered_json j;
  j["node_type"] = to_string(r.node_type);
  j["ru_height"] = r.ru_height;
  j["peak_power_kw"] = r.peak_power_kw;
  j["is_hpc"] = r.is_hpc;
  if (r.pflops) j["pflops"] = *r.pflops;
  return j;
}

Catalog parse_catalog(const json& doc) {
  check_schema_version(doc, "catalog");
  if (!doc.contains("models") || !doc["models"].is_array()) {
    throw DataError("catalog: 'models' must be an array");
  }
  Catalog catalog;
  const auto& models = doc["models"];
  for (std::size_t i = 0; i < models.size(); ++i) {
    try {
      catalog.push_back(parse_model(models[i]));
    } catch (const json::exception& e) {
      throw DataError("catalog entry " + entry_label(models[i], i, "id") + ": " + e.what());
    }
  }
  validate_catalog(catalog);
  return catalog;
}

ordered_json to_json(const Catalog& catalog) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["models"] = ordered_json::array();
  for (const auto& m : catalog) doc["models"].push_back(to_json(m));
  return doc;
}

Catalog load_catalog(const std::filesystem::path& path) {
  return parse_catalog(read_json_file(path));
}

ReferenceLibrary parse_reference_library(const json& doc) {
  check_schema_version(doc, "reference library");
  if (!doc.contains("configs") || !doc["configs"].is_array()) {
    throw DataError("reference library: 'configs' must be an array");
  }
  std::vector<ReferenceITConfig> configs;
  const auto& items = doc["configs"];
  for (std::size_t i = 0; i < items.size(); ++i) {
    try {
      configs.push_back(parse_config(items[i]));
    } catch (const json::exception& e) {
      throw DataError("reference configuration " + entry_label(items[i], i, "name") + ": " +
                      e.what());
    } catch (const DataError& e) {
      throw DataError("reference configuration " + entry_label(items[i], i, "name") + ": " +
                      e.what());
    }
  }
  return ReferenceLibrary(std::move(configs));
}

ordered_json to_json(const ReferenceLibrary& library) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["configs"] = ordered_json::array();
  for (const auto& c : library.configs()) {
    ordered_json j;
    j["name"] = c.name;
    j["year"] = c.year;
    j["dc_type"] = to_string(c.dc_type);
    j["area_per_rack_m2"] = c.area_per_rack_m2;
    if (c.total_storage_tb) j["total_storage_tb"] = *c.total_storage_tb;
    if (c.compute_capability_tflops) j["compute_capability_tflops"] = *c.compute_capability_tflops;
    if (c.local_storage) j["local_storage"] = true;
    if (c.deployed) j["deployed"] = *c.deployed;
    j["entries"] = ordered_json::array();
    for (const auto& e : c.entries) {
      auto r = to_json(e.rack);
      r["count"] = e.count;
      j["entries"].push_back(std::move(r));
    }
    doc["configs"].push_back(std::move(j));
  }
  return doc;
}

ReferenceLibrary load_reference_library(const std::filesystem::path& path) {
  return parse_reference_library(read_json_file(path));
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError("'" + path.string() + "': " + e.what());
  }
}

}  // namespace dcgen
