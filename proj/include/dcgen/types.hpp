#pragma once

#include <array>
#include <string>
#include <string_view>

namespace dcgen {

enum class EquipmentClass { CDU, PDU, Chiller, DryCooler, EvaporativeTower, UPS, MSB, Generator };

inline constexpr std::array<EquipmentClass, 8> kAllEquipmentClasses = {
    EquipmentClass::CDU,       EquipmentClass::PDU,     EquipmentClass::Chiller,
    EquipmentClass::DryCooler, EquipmentClass::EvaporativeTower,
    EquipmentClass::UPS,       EquipmentClass::MSB,     EquipmentClass::Generator};

// CDUs and PDUs are provisioned per pod; everything else per site.
constexpr bool is_rack_level(EquipmentClass c) {
  return c == EquipmentClass::CDU || c == EquipmentClass::PDU;
}

constexpr bool is_electrical(EquipmentClass c) {
  return c == EquipmentClass::PDU || c == EquipmentClass::UPS || c == EquipmentClass::MSB ||
         c == EquipmentClass::Generator;
}

enum class Placement { Indoor, Outdoor };
enum class HeatSinkKind { Evaporative, Dry };
enum class NodeType { GPU, CPU_GPU, CPU, Storage };
enum class DatacenterType { AITraining, MixedAITrainingInference, AIInference, Cloud };
enum class Objective { Space, Power };

inline constexpr std::array<DatacenterType, 4> kAllDatacenterTypes = {
    DatacenterType::AITraining, DatacenterType::MixedAITrainingInference,
    DatacenterType::AIInference, DatacenterType::Cloud};

inline constexpr std::array<int, 3> kDesignYears = {2024, 2027, 2029};

constexpr bool is_design_year(int year) {
  return year == 2024 || year == 2027 || year == 2029;
}

EquipmentClass heat_sink_class(HeatSinkKind kind);

// Canonical spellings used in data files and JSON output.
std::string_view to_string(EquipmentClass c);
std::string_view to_string(Placement p);
std::string_view to_string(HeatSinkKind k);
std::string_view to_string(NodeType t);
std::string_view to_string(DatacenterType t);
std::string_view to_string(Objective o);

// Parsers throw DataError on unknown spellings.
EquipmentClass parse_equipment_class(std::string_view s);
Placement parse_placement(std::string_view s);
HeatSinkKind parse_heat_sink_kind(std::string_view s);
NodeType parse_node_type(std::string_view s);
DatacenterType parse_datacenter_type(std::string_view s);
Objective parse_objective(std::string_view s);

// CLI slugs: ai-training, mixed, ai-inference, cloud.
std::string_view datacenter_slug(DatacenterType t);
DatacenterType parse_datacenter_slug(std::string_view s);

// Whether a node type may appear in a datacenter of the given type.
bool node_type_allowed(DatacenterType dc, NodeType node);

}  // namespace dcgen
