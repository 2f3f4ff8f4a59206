#include "dcgen/types.hpp"

#include <string>

#include "dcgen/errors.hpp"

namespace dcgen {

namespace {

template <typename Enum, std::size_t N>
Enum parse_from(std::string_view s, const std::array<Enum, N>& values, std::string_view what) {
  for (Enum v : values) {
    if (to_string(v) == s) return v;
  }
  throw DataError("unknown " + std::string(what) + " '" + std::string(s) + "'");
}

}  // namespace

EquipmentClass heat_sink_class(HeatSinkKind kind) {
  return kind == HeatSinkKind::Dry ? EquipmentClass::DryCooler : EquipmentClass::EvaporativeTower;
}

std::string_view to_string(EquipmentClass c) {
  switch (c) {
    case EquipmentClass::CDU: return "CDU";
    case EquipmentClass::PDU: return "PDU";
    case EquipmentClass::Chiller: return "Chiller";
    case EquipmentClass::DryCooler: return "DryCooler";
    case EquipmentClass::EvaporativeTower: return "EvaporativeTower";
    case EquipmentClass::UPS: return "UPS";
    case EquipmentClass::MSB: return "MSB";
    case EquipmentClass::Generator: return "Generator";
  }
  return "?";
}

std::string_view to_string(Placement p) { return p == Placement::Indoor ? "Indoor" : "Outdoor"; }

std::string_view to_string(HeatSinkKind k) { return k == HeatSinkKind::Dry ? "Dry" : "Evaporative"; }

std::string_view to_string(NodeType t) {
  switch (t) {
    case NodeType::GPU: return "GPU";
    case NodeType::CPU_GPU: return "CPU_GPU";
    case NodeType::CPU: return "CPU";
    case NodeType::Storage: return "Storage";
  }
  return "?";
}

std::string_view to_string(DatacenterType t) {
  switch (t) {
    case DatacenterType::AITraining: return "AITraining";
    case DatacenterType::MixedAITrainingInference: return "MixedAITrainingInference";
    case DatacenterType::AIInference: return "AIInference";
    case DatacenterType::Cloud: return "Cloud";
  }
  return "?";
}

std::string_view to_string(Objective o) { return o == Objective::Space ? "Space" : "Power"; }

EquipmentClass parse_equipment_class(std::string_view s) {
  return parse_from(s, kAllEquipmentClasses, "equipment class");
}

Placement parse_placement(std::string_view s) {
  return parse_from(s, std::array{Placement::Indoor, Placement::Outdoor}, "placement");
}

HeatSinkKind parse_heat_sink_kind(std::string_view s) {
  return parse_from(s, std::array{HeatSinkKind::Evaporative, HeatSinkKind::Dry}, "heat sink kind");
}

NodeType parse_node_type(std::string_view s) {
  return parse_from(s,
                    std::array{NodeType::GPU, NodeType::CPU_GPU, NodeType::CPU, NodeType::Storage},
                    "node type");
}

DatacenterType parse_datacenter_type(std::string_view s) {
  return parse_from(s, kAllDatacenterTypes, "datacenter type");
}

Objective parse_objective(std::string_view s) {
  return parse_from(s, std::array{Objective::Space, Objective::Power}, "objective");
}

std::string_view datacenter_slug(DatacenterType t) {
  switch (t) {
    case DatacenterType::AITraining: return "ai-training";
    case DatacenterType::MixedAITrainingInference: return "mixed";
    case DatacenterType::AIInference: return "ai-inference";
    case DatacenterType::Cloud: return "cloud";
  }
  return "?";
}

DatacenterType parse_datacenter_slug(std::string_view s) {
  for (DatacenterType t : kAllDatacenterTypes) {
    if (datacenter_slug(t) == s) return t;
  }
  throw UsageError("unknown datacenter type '" + std::string(s) +
                   "' (expected ai-training, mixed, ai-inference or cloud)");
}

bool node_type_allowed(DatacenterType dc, NodeType node) {
  if (node == NodeType::Storage) return true;
  switch (dc) {
    case DatacenterType::AITraining: return node == NodeType::GPU;
    case DatacenterType::MixedAITrainingInference:
      return node == NodeType::GPU || node == NodeType::CPU_GPU;
    case DatacenterType::AIInference: return node == NodeType::CPU_GPU || node == NodeType::CPU;
    case DatacenterType::Cloud: return node == NodeType::CPU;
  }
  return false;
}

}  // namespace dcgen
