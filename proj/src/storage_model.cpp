#include "dcgen/storage_model.hpp"

#include <string>

#include "dcgen/errors.hpp"
#include "dcgen/exact.hpp"

namespace dcgen {

using exact::from_decimal;
using exact::Rational;

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0)) throw UsageError(std::string(what) + " must be positive");
}

void require_positive(std::int64_t v, const char* what) {
  if (v <= 0) throw UsageError(std::string(what) + " must be positive");
}

// Shares are fixed decimal literals; keep them exact.
const Rational kAiShare(42, 1000);
const Rational kCloudShare(18, 100);

Rational node_power_kw(const StorageNodeModel& node, StorageRegime regime) {
  const double watts = regime == StorageRegime::AI ? node.peak_power_w_ai : node.peak_power_w_cloud;
  return from_decimal(watts) / 1000;
}

}  // namespace

void validate(const StorageNodeModel& node) {
  require_positive(node.capacity_tb_per_node, "storage node capacity");
  require_positive(node.peak_power_w_ai, "storage node AI power");
  require_positive(node.peak_power_w_cloud, "storage node cloud power");
  require_positive(node.iops_per_node, "storage node IOPS");
  require_positive(static_cast<std::int64_t>(node.ru_per_node), "storage node height");
}

std::int64_t nodes_per_rack(int ru_rack, const StorageNodeModel& node) {
  require_positive(static_cast<std::int64_t>(ru_rack), "rack size");
  validate(node);
  return ru_rack / node.ru_per_node;
}

std::int64_t storage_racks_from_volume(double total_storage_tb, int ru_rack,
                                       const StorageNodeModel& node) {
  require_positive(total_storage_tb, "total storage");
  const auto per_rack = nodes_per_rack(ru_rack, node);
  return exact::ceil(from_decimal(total_storage_tb) /
                     (from_decimal(node.capacity_tb_per_node) * per_rack));
}

double storage_power_ai_kw(std::int64_t compute_rack_count, double compute_rack_peak_kw) {
  require_positive(compute_rack_count, "compute rack count");
  require_positive(compute_rack_peak_kw, "compute rack power");
  const Rational compute = from_decimal(compute_rack_peak_kw) * compute_rack_count;
  return exact::to_double(kAiShare * compute / (1 - kAiShare));
}

std::int64_t storage_racks_ai_power_rule(std::int64_t compute_rack_count,
                                         double compute_rack_peak_kw, int ru_rack,
                                         const StorageNodeModel& node) {
  require_positive(compute_rack_count, "compute rack count");
  require_positive(compute_rack_peak_kw, "compute rack power");
  const auto per_rack = nodes_per_rack(ru_rack, node);
  const Rational compute = from_decimal(compute_rack_peak_kw) * compute_rack_count;
  const Rational rack_kw = node_power_kw(node, StorageRegime::AI) * per_rack;
  return exact::ceil(kAiShare * compute / ((1 - kAiShare) * rack_kw));
}

std::int64_t storage_racks_inference_iops_rule(double compute_capability_tflops, int ru_rack,
                                               const StorageNodeModel& node) {
  require_positive(compute_capability_tflops, "compute capability");
  const auto per_rack = nodes_per_rack(ru_rack, node);
  const Rational demand = from_decimal(compute_capability_tflops) * from_decimal(kIopsPerTflops);
  return exact::ceil(demand / (from_decimal(node.iops_per_node) * per_rack));
}

std::int64_t compute_racks_served_per_storage_rack(double rack_capability_tflops, int ru_rack,
                                                   const StorageNodeModel& node) {
  require_positive(rack_capability_tflops, "rack compute capability");
  const auto per_rack = nodes_per_rack(ru_rack, node);
  const Rational rack_iops = from_decimal(node.iops_per_node) * per_rack;
  return exact::round_half_up(rack_iops / (from_decimal(kIopsPerTflops) *
                                           from_decimal(rack_capability_tflops)));
}

double storage_rack_peak_kw(int ru_rack, const StorageNodeModel& node, StorageRegime regime) {
  const auto per_rack = nodes_per_rack(ru_rack, node);
  return exact::to_double(node_power_kw(node, regime) * per_rack);
}

double storage_power_cloud_kw(std::int64_t cpu_rack_count, double cpu_rack_peak_kw) {
  require_positive(cpu_rack_count, "CPU rack count");
  require_positive(cpu_rack_peak_kw, "CPU rack power");
  const Rational compute = from_decimal(cpu_rack_peak_kw) * cpu_rack_count;
  return exact::to_double(kCloudShare * compute / (1 - kCloudShare));
}

std::int64_t storage_racks_cloud_power_rule(std::int64_t cpu_rack_count, double cpu_rack_peak_kw,
                                            int ru_rack, const StorageNodeModel& node) {
  require_positive(cpu_rack_count, "CPU rack count");
  require_positive(cpu_rack_peak_kw, "CPU rack power");
  const auto per_rack = nodes_per_rack(ru_rack, node);
  const Rational compute = from_decimal(cpu_rack_peak_kw) * cpu_rack_count;
  const Rational rack_kw = node_power_kw(node, StorageRegime::Cloud) * per_rack;
  return exact::ceil(kCloudShare * compute / ((1 - kCloudShare) * rack_kw));
}

StorageRegime storage_regime(DatacenterType type) {
  return type == DatacenterType::Cloud ? StorageRegime::Cloud : StorageRegime::AI;
}

StorageRule storage_rule_for(const ReferenceITConfig& config) {
  if (config.local_storage || config.find(NodeType::Storage) != nullptr) return StorageRule::None;
  if (config.total_storage_tb) return StorageRule::Volume;
  if (config.dc_type == DatacenterType::AIInference && config.compute_capability_tflops) {
    return StorageRule::InferenceIops;
  }
  if (config.dc_type == DatacenterType::Cloud) return StorageRule::CloudPowerShare;
  // AI inference without a capability figure falls back to the power share.
  return StorageRule::AiPowerShare;
}

ReferenceITConfig complete_storage(const ReferenceITConfig& config, const StorageNodeModel& node) {
  const StorageRule rule = storage_rule_for(config);
  if (rule == StorageRule::None) return config;

  const int ru = config.entries.front().rack.ru_height;
  // Multiple compute classes contribute their combined load: Σ count × peak.
  double compute_kw = 0.0;
  for (const auto& e : config.entries) compute_kw += static_cast<double>(e.count) * e.rack.peak_power_kw;

  std::int64_t racks = 0;
  switch (rule) {
    case StorageRule::Volume:
      racks = storage_racks_from_volume(*config.total_storage_tb, ru, node);
      break;
    case StorageRule::InferenceIops:
      racks = storage_racks_inference_iops_rule(*config.compute_capability_tflops, ru, node);
      break;
    case StorageRule::AiPowerShare:
      racks = storage_racks_ai_power_rule(1, compute_kw, ru, node);
      break;
    case StorageRule::CloudPowerShare:
      racks = storage_racks_cloud_power_rule(1, compute_kw, ru, node);
      break;
    case StorageRule::None:
      break;
  }

  ReferenceITConfig out = config;
  RackEntry storage;
  storage.rack.node_type = NodeType::Storage;
  storage.rack.ru_height = ru;
  storage.rack.peak_power_kw = storage_rack_peak_kw(ru, node, storage_regime(config.dc_type));
  storage.rack.is_hpc = false;
  storage.count = racks;
  out.entries.push_back(storage);
  return out;
}

}  // namespace dcgen
