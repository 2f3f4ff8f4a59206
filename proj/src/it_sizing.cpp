#include "dcgen/it_sizing.hpp"

#include <algorithm>
#include <numeric>

#include "dcgen/errors.hpp"
#include "dcgen/exact.hpp"

namespace dcgen {

using exact::from_decimal;
using exact::Rational;

double ITDesign::max_rack_peak_kw() const {
  double m = 0.0;
  for (const auto& e : per_class) m = std::max(m, e.rack.peak_power_kw);
  return m;
}

RackClassSpec normalize_rack(const RackClassSpec& spec, int target_ru) {
  if (target_ru < 1) throw UsageError("target rack size must be at least 1U");
  if (target_ru == spec.ru_height && !spec.is_hpc) return spec;
  Rational peak = Rational(target_ru, spec.ru_height) * from_decimal(spec.peak_power_kw);
  if (spec.is_hpc) peak *= Rational(2, 3);
  RackClassSpec out = spec;
  out.peak_power_kw = exact::to_double(peak);
  out.ru_height = target_ru;
  out.is_hpc = false;
  return out;
}

ReferenceITConfig normalize_config(const ReferenceITConfig& config, int target_ru) {
  ReferenceITConfig out = config;
  for (auto& e : out.entries) e.rack = normalize_rack(e.rack, target_ru);
  return out;
}

__extension__ typedef __int128 wide_int;

std::vector<std::int64_t> apportion(std::span<const std::int64_t> weights, std::int64_t total) {
  const std::size_t k = weights.size();
  if (k == 0) throw UsageError("cannot apportion over zero classes");
  if (total < 0) throw UsageError("cannot apportion a negative total");
  const std::int64_t sum = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
  if (sum <= 0) throw UsageError("apportionment weights must sum to a positive value");

  // quota_i = total × w_i / sum, kept as (floor, remainder numerator) in 128-bit.
  std::vector<std::int64_t> counts(k);
  std::vector<wide_int> remainders(k);
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const wide_int scaled = static_cast<wide_int>(total) * weights[i];
    counts[i] = static_cast<std::int64_t>(scaled / sum);
    remainders[i] = scaled % sum;
    assigned += counts[i];
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainders[a] > remainders[b];
  });
  for (std::int64_t left = total - assigned, j = 0; left > 0; --left, ++j) {
    ++counts[order[static_cast<std::size_t>(j)]];
  }

  // A class with a tiny share can round to zero; borrow from the largest class.
  if (total >= static_cast<std::int64_t>(k)) {
    for (std::size_t i = 0; i < k; ++i) {
      if (counts[i] > 0 || weights[i] <= 0) continue;
      auto donor = std::max_element(counts.begin(), counts.end());
      --*donor;
      ++counts[i];
    }
  }
  return counts;
}

double power_density(const ReferenceITConfig& ref) {
  Rational power = 0;
  for (const auto& e : ref.entries) power += from_decimal(e.rack.peak_power_kw) * e.count;
  return exact::to_double(power / (from_decimal(ref.area_per_rack_m2) * ref.total_reference_racks()));
}

namespace {

std::vector<std::int64_t> reference_counts(const ReferenceITConfig& ref) {
  std::vector<std::int64_t> w;
  w.reserve(ref.entries.size());
  for (const auto& e : ref.entries) w.push_back(e.count);
  return w;
}

ITDesign build_design(const ReferenceITConfig& ref, std::int64_t n_rack) {
  const auto counts = apportion(reference_counts(ref), n_rack);
  ITDesign d;
  d.reference_name = ref.name;
  d.area_per_rack_m2 = ref.area_per_rack_m2;
  d.normalized_ru = ref.entries.front().rack.ru_height;
  Rational power_kw = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    d.per_class.push_back({ref.entries[i].rack, counts[i]});
    d.total_racks += counts[i];
    power_kw += from_decimal(ref.entries[i].rack.peak_power_kw) * counts[i];
  }
  const Rational area = from_decimal(ref.area_per_rack_m2) * d.total_racks;
  d.it_peak_power_mw = exact::to_double(power_kw / 1000);
  d.white_space_m2 = exact::to_double(area);
  d.power_density_kw_m2 = exact::to_double(power_kw / area);
  return d;
}

}  // namespace

ITDesign size_by_racks(const ReferenceITConfig& ref, std::int64_t n_rack) {
  validate(ref);
  if (n_rack < static_cast<std::int64_t>(ref.entries.size())) {
    throw InfeasibleError("target of " + std::to_string(n_rack) + " racks is below the " +
                          std::to_string(ref.entries.size()) + " rack classes of '" + ref.name +
                          "'");
  }
  return build_design(ref, n_rack);
}

std::int64_t racks_for_power(const ReferenceITConfig& ref, double p_dc_max_mw) {
  if (!(p_dc_max_mw > 0)) throw UsageError("power target must be positive");
  // floor space / A_rack; A_rack cancels: 1000·P·ΣN0 / Σ N0·P0.
  Rational ref_power_kw = 0;
  for (const auto& e : ref.entries) ref_power_kw += from_decimal(e.rack.peak_power_kw) * e.count;
  const Rational racks =
      from_decimal(p_dc_max_mw) * 1000 * ref.total_reference_racks() / ref_power_kw;
  return exact::round_half_up(racks);
}

ITDesign size_by_power(const ReferenceITConfig& ref, double p_dc_max_mw) {
  validate(ref);
  double smallest_kw = ref.entries.front().rack.peak_power_kw;
  for (const auto& e : ref.entries) smallest_kw = std::min(smallest_kw, e.rack.peak_power_kw);
  if (!(p_dc_max_mw > 0)) throw UsageError("power target must be positive");
  if (p_dc_max_mw * 1000.0 < smallest_kw) {
    throw InfeasibleError("power target is below the power of a single rack of '" + ref.name + "'");
  }
  const std::int64_t n_rack = racks_for_power(ref, p_dc_max_mw);
  if (n_rack < static_cast<std::int64_t>(ref.entries.size())) {
    throw InfeasibleError("power target maps to " + std::to_string(n_rack) +
                          " racks, fewer than the rack classes of '" + ref.name + "'");
  }
  return build_design(ref, n_rack);
}

ITDesign size(const ReferenceITConfig& ref, const SizingTarget& target) {
  if (const auto* racks = std::get_if<RackCountTarget>(&target)) {
    return size_by_racks(ref, racks->racks);
  }
  return size_by_power(ref, std::get<PowerTarget>(target).megawatts);
}

}  // namespace dcgen
