#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dcgen/catalog.hpp"

namespace dcgen {

struct RackCountTarget {
  std::int64_t racks = 0;
  bool operator==(const RackCountTarget&) const = default;
};

struct PowerTarget {
  double megawatts = 0.0;
  bool operator==(const PowerTarget&) const = default;
};

using SizingTarget = std::variant<RackCountTarget, PowerTarget>;

inline constexpr int kDefaultRackUnits = 42;

struct ITDesign {
  std::string reference_name;
  std::vector<RackEntry> per_class;
  std::int64_t total_racks = 0;
  double it_peak_power_mw = 0.0;
  double power_density_kw_m2 = 0.0;
  double white_space_m2 = 0.0;
  double area_per_rack_m2 = 0.0;
  int normalized_ru = kDefaultRackUnits;

  // Largest per-rack peak among the classes present.
  double max_rack_peak_kw() const;
};

// Rescales a rack's peak power to another rack height. HPC cabinets are
// additionally derated to 2/3 and come out as ordinary racks.
RackClassSpec normalize_rack(const RackClassSpec& spec, int target_ru);
ReferenceITConfig normalize_config(const ReferenceITConfig& config, int target_ru);

// Splits `total` across classes in proportion to `weights` with the
// largest-remainder method. The result sums to `total`; ties in remainder go
// to the earlier class. When total >= weights.size(), no class is left empty.
std::vector<std::int64_t> apportion(std::span<const std::int64_t> weights, std::int64_t total);

// Peak kW per m² of white space for the reference mix.
double power_density(const ReferenceITConfig& ref);

ITDesign size_by_racks(const ReferenceITConfig& ref, std::int64_t n_rack);

// Total rack count that a power target maps to (nearest integer, halves up).
std::int64_t racks_for_power(const ReferenceITConfig& ref, double p_dc_max_mw);
ITDesign size_by_power(const ReferenceITConfig& ref, double p_dc_max_mw);

ITDesign size(const ReferenceITConfig& ref, const SizingTarget& target);

}  // namespace dcgen
