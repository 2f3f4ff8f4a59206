#include <cmath>
#include <random>

#include "doctest.h"

#include "dcgen/errors.hpp"
#include "dcgen/facility_sizing.hpp"
#include "test_support.hpp"

using namespace dcgen;
using test::make_model;

namespace {

// Smallest n with n·cap·y ≥ (1+sm)·demand·x, counted up one unit at a time in
// integers: demand and cap in kW, sm in percent.
std::int64_t increment_until_covered(std::int64_t demand_kw, std::int64_t cap_kw, int sm_pct,
                                     int x, int y, int r) {
  if (demand_kw == 0) return 0;
  std::int64_t n = 0;
  while (n * cap_kw * y * 100 < (100 + sm_pct) * demand_kw * x) ++n;
  return n + r;
}

ITDesign design_of(std::vector<RackEntry> per_class) {
  ITDesign d;
  d.per_class = std::move(per_class);
  double kw = 0;
  for (const auto& e : d.per_class) {
    d.total_racks += e.count;
    kw += static_cast<double>(e.count) * e.rack.peak_power_kw;
  }
  d.it_peak_power_mw = kw / 1000;
  d.area_per_rack_m2 = 1.8;
  d.white_space_m2 = 1.8 * static_cast<double>(d.total_racks);
  return d;
}

}  // namespace

TEST_CASE("redundancy parsing and labels") {
  CHECK(parse_redundancy("n+1") == RedundancyPolicy::n_plus(1));
  CHECK(parse_redundancy("N+0").label() == "N+0");
  CHECK(parse_redundancy("2n") == RedundancyPolicy::fractional(2, 1));
  CHECK(parse_redundancy("2N").label() == "2N");
  CHECK(parse_redundancy("4n3") == RedundancyPolicy::fractional(4, 3));
  CHECK(parse_redundancy("4n/3").label() == "4N/3");
  CHECK(parse_redundancy("n+2", 0.25).safety_margin == 0.25);
  CHECK_THROWS_AS(parse_redundancy("n+"), UsageError);
  CHECK_THROWS_AS(parse_redundancy("3n4"), UsageError);  // y > x
  CHECK_THROWS_AS(parse_redundancy("bogus"), UsageError);
  CHECK_THROWS_AS(validate(RedundancyPolicy::n_plus(1, 1.5)), UsageError);
  CHECK_THROWS_AS(validate(RedundancyPolicy::n_plus(-1)), UsageError);
}

TEST_CASE("effective capacity") {
  const auto m = make_model("c", EquipmentClass::Chiller, 2500, 500, 25);
  CHECK(effective_unit_capacity(m, RedundancyPolicy::n_plus(3)) == 2500);
  CHECK(effective_unit_capacity(m, RedundancyPolicy::fractional(2, 1)) == 1250);
  CHECK(effective_unit_capacity(m, RedundancyPolicy::fractional(4, 3)) == doctest::Approx(1875));
}

TEST_CASE("pod units") {
  const auto cdu = make_model("cdu", EquipmentClass::CDU, 600, 10, 1.5);
  const PodLayout layout;  // 2 × 8
  // 16 × 158 kW = 2528 kW; ceil(1.1 × 2528 / 600) = 5, plus one spare.
  CHECK(pod_units(158, layout, cdu, RedundancyPolicy::n_plus(1)) == 6);
  // 2N halves each unit to 300 kW: ceil(1.1 × 2528 / 300) = 10.
  CHECK(pod_units(158, layout, cdu, RedundancyPolicy::fractional(2, 1)) == 10);
  CHECK_THROWS_AS(pod_units(158, layout, make_model("u", EquipmentClass::UPS, 500, 0, 5),
                            RedundancyPolicy::n_plus(1)),
                  UsageError);
}

TEST_CASE("datacenter units") {
  const auto chiller = make_model("ch", EquipmentClass::Chiller, 2500, 500, 25);
  // ceil(1.1 × 48530 / 2500) = 22, plus two spares.
  CHECK(datacenter_units(48530, chiller, RedundancyPolicy::n_plus(2)) == 24);
  CHECK(datacenter_units(48530, chiller, RedundancyPolicy::fractional(2, 1)) == 43);
  CHECK_THROWS_AS(datacenter_units(0, chiller, RedundancyPolicy::n_plus(1)), UsageError);
  CHECK_THROWS_AS(datacenter_units(100, make_model("p", EquipmentClass::PDU, 300, 0, 1),
                                   RedundancyPolicy::n_plus(1)),
                  UsageError);
  CHECK(units_for_demand(0, chiller, RedundancyPolicy::n_plus(1)) == 0);
}

TEST_CASE("unit counts match increment-until-covered") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> demand(1, 200000);
  std::uniform_int_distribution<std::int64_t> cap(50, 10000);
  std::uniform_int_distribution<int> sm(0, 100);
  std::uniform_int_distribution<int> spare(0, 3);
  std::uniform_int_distribution<int> xs(1, 4);
  std::bernoulli_distribution additive(0.5);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t d = demand(rng);
    const std::int64_t c = cap(rng);
    const int s = sm(rng);
    int x = 1, y = 1, r = 0;
    RedundancyPolicy p;
    if (additive(rng)) {
      r = spare(rng);
      p = RedundancyPolicy::n_plus(r, s / 100.0);
    } else {
      x = xs(rng);
      y = std::uniform_int_distribution<int>(1, x)(rng);
      p = RedundancyPolicy::fractional(x, y, s / 100.0);
    }
    const auto m = make_model("m", EquipmentClass::UPS, static_cast<double>(c), 0, 5);
    REQUIRE(datacenter_units(static_cast<double>(d), m, p) ==
            increment_until_covered(d, c, s, x, y, r));
  }
}

TEST_CASE("more redundancy never needs fewer units") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> demand(1, 100000);
  std::uniform_real_distribution<double> cap(50, 5000);
  for (int i = 0; i < 500; ++i) {
    const double d = std::round(demand(rng) * 10) / 10;
    const auto m = make_model("m", EquipmentClass::MSB, std::round(cap(rng)), 0, 5);
    for (int r = 0; r < 4; ++r) {
      CHECK(datacenter_units(d, m, RedundancyPolicy::n_plus(r)) <=
            datacenter_units(d, m, RedundancyPolicy::n_plus(r + 1)));
    }
    CHECK(datacenter_units(d, m, RedundancyPolicy::fractional(4, 3)) <=
          datacenter_units(d, m, RedundancyPolicy::fractional(3, 2)));
    CHECK(datacenter_units(d, m, RedundancyPolicy::fractional(3, 2)) <=
          datacenter_units(d, m, RedundancyPolicy::fractional(2, 1)));
    CHECK(datacenter_units(d, m, RedundancyPolicy::n_plus(0, 0.0)) <=
          datacenter_units(d, m, RedundancyPolicy::n_plus(0, 0.2)));
  }
}

TEST_CASE("facility plan") {
  const Catalog& catalog = test::shipped_catalog();
  const ITDesign it = design_of({{{NodeType::GPU, 42, 158.0, false, std::nullopt}, 100},
                                 {{NodeType::Storage, 42, 29.7, false, std::nullopt}, 13}});
  const double it_kw = 100 * 158.0 + 13 * 29.7;

  for (HeatSinkKind sink : {HeatSinkKind::Evaporative, HeatSinkKind::Dry}) {
    for (Objective obj : {Objective::Space, Objective::Power}) {
      for (const auto& policy :
           {RedundancyPolicy::n_plus(1), RedundancyPolicy::fractional(2, 1)}) {
        const FacilityPlan plan = plan_facility(it, catalog, PodLayout{}, policy, sink, obj);
        CAPTURE(policy.label());

        REQUIRE(plan.classes.size() == 7);
        CHECK(plan.find(heat_sink_class(sink)) != nullptr);
        const HeatSinkKind other = sink == HeatSinkKind::Dry ? HeatSinkKind::Evaporative
                                                             : HeatSinkKind::Dry;
        CHECK(plan.find(heat_sink_class(other)) == nullptr);

        double indoor = 0, outdoor = 0, draw = 0;
        for (const auto& a : plan.classes) {
          CAPTURE(to_string(a.equipment_class));
          CHECK(a.model.equipment_class == a.equipment_class);
          (a.model.placement == Placement::Indoor ? indoor : outdoor) += a.gray_space_m2();
          CHECK(a.gray_space_m2() ==
                doctest::Approx(a.unit_count() * (1 + a.model.access_factor) *
                                a.model.footprint_m2));
          const double eff = effective_unit_capacity(a.model, policy);
          if (is_rack_level(a.equipment_class)) {
            std::int64_t sum = 0;
            for (const auto& g : a.pod_groups) {
              CHECK(g.pods == (g.racks + 15) / 16);
              CHECK(static_cast<double>(g.units_per_pod - policy.spares()) * eff >=
                    (1 + policy.safety_margin) * 16 * g.rack_peak_kw - 1e-9);
              sum += g.pods * g.units_per_pod;
            }
            CHECK(sum == a.unit_count());
          } else {
            CHECK(a.it_demand_kw == doctest::Approx(it_kw));
            CHECK(static_cast<double>(a.it_units - policy.spares()) * eff >=
                  (1 + policy.safety_margin) * it_kw - 1e-9);
          }
          if (a.equipment_class == EquipmentClass::CDU || a.equipment_class == EquipmentClass::Chiller ||
              a.equipment_class == heat_sink_class(sink)) {
            draw += a.unit_count() * a.model.max_draw_kw;
          }
        }
        CHECK(plan.gray_space_indoor_m2 == doctest::Approx(indoor));
        CHECK(plan.gray_space_outdoor_m2 == doctest::Approx(outdoor));
        CHECK(plan.facility_peak_power_mw == doctest::Approx(draw / 1000));
        for (EquipmentClass cls : {EquipmentClass::UPS, EquipmentClass::MSB, EquipmentClass::Generator}) {
          const auto* a = plan.find(cls);
          REQUIRE(a != nullptr);
          CHECK(a->facility_demand_kw == doctest::Approx(draw));
          CHECK(a->serving == (draw > 0 ? Serving::Both : Serving::IT));
        }
      }
    }
  }
}

TEST_CASE("gray space is additive over independent halves") {
  // Two identical pods-aligned halves need exactly the rack-level units of the whole.
  const Catalog& catalog = test::shipped_catalog();
  const ITDesign half = design_of({{{NodeType::GPU, 42, 158.0, false, std::nullopt}, 160}});
  const ITDesign whole = design_of({{{NodeType::GPU, 42, 158.0, false, std::nullopt}, 320}});
  const auto policy = RedundancyPolicy::n_plus(1);
  const auto a = plan_facility(half, catalog, PodLayout{}, policy, HeatSinkKind::Dry, Objective::Space);
  const auto b = plan_facility(whole, catalog, PodLayout{}, policy, HeatSinkKind::Dry, Objective::Space);
  for (EquipmentClass cls : {EquipmentClass::CDU, EquipmentClass::PDU}) {
    CHECK(b.find(cls)->unit_count() == 2 * a.find(cls)->unit_count());
    CHECK(b.find(cls)->gray_space_m2() == doctest::Approx(2 * a.find(cls)->gray_space_m2()));
  }
}
