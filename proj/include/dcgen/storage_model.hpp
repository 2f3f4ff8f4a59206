#pragma once

#include <cstdint>

#include "dcgen/catalog.hpp"

namespace dcgen {

// Reference 1U NVMe storage node used to estimate storage racks when a
// configuration does not list them.
struct StorageNodeModel {
  double capacity_tb_per_node = 8 * 6.4;
  double peak_power_w_ai = 708.0;
  double peak_power_w_cloud = 438.0;
  double iops_per_node = 8 * 900000.0;
  int ru_per_node = 1;
};

enum class StorageRegime { AI, Cloud };

inline constexpr double kAiStoragePowerShare = 0.042;
inline constexpr double kCloudStoragePowerShare = 0.18;
inline constexpr double kIopsPerTflops = 404.0;

void validate(const StorageNodeModel& node);

// Nodes that fit in one rack.
std::int64_t nodes_per_rack(int ru_rack, const StorageNodeModel& node);

// ceil(volume / (node capacity × nodes per rack)).
std::int64_t storage_racks_from_volume(double total_storage_tb, int ru_rack,
                                       const StorageNodeModel& node = {});

// Storage power that makes storage 4.2% of the total, given the compute load.
double storage_power_ai_kw(std::int64_t compute_rack_count, double compute_rack_peak_kw);
std::int64_t storage_racks_ai_power_rule(std::int64_t compute_rack_count,
                                         double compute_rack_peak_kw, int ru_rack,
                                         const StorageNodeModel& node = {});

// Racks needed to sustain 404 IOPS per TFLOPS of compute.
std::int64_t storage_racks_inference_iops_rule(double compute_capability_tflops, int ru_rack,
                                               const StorageNodeModel& node = {});
// How many compute racks of the given capability one storage rack serves, to
// the nearest whole rack.
std::int64_t compute_racks_served_per_storage_rack(double rack_capability_tflops, int ru_rack,
                                                   const StorageNodeModel& node = {});

double storage_rack_peak_kw(int ru_rack, const StorageNodeModel& node, StorageRegime regime);

// Storage power that makes storage 18% of the total, given the CPU load.
double storage_power_cloud_kw(std::int64_t cpu_rack_count, double cpu_rack_peak_kw);
std::int64_t storage_racks_cloud_power_rule(std::int64_t cpu_rack_count, double cpu_rack_peak_kw,
                                            int ru_rack, const StorageNodeModel& node = {});

StorageRegime storage_regime(DatacenterType type);

// Which estimation rule applies to a configuration without storage racks.
enum class StorageRule { None, Volume, InferenceIops, AiPowerShare, CloudPowerShare };
StorageRule storage_rule_for(const ReferenceITConfig& config);

// Adds an estimated storage entry when the configuration has none and does not
// declare local storage. Configurations with storage racks are returned as is.
ReferenceITConfig complete_storage(const ReferenceITConfig& config,
                                   const StorageNodeModel& node = {});

}  // namespace dcgen
