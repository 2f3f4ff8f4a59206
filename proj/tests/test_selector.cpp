#include <random>
#include <tuple>

#include "doctest.h"

#include "dcgen/errors.hpp"
#include "dcgen/selector.hpp"
#include "test_support.hpp"

using namespace dcgen;
using test::make_model;

TEST_CASE("space objective picks the smaller installed area") {
  // A: 2 × 45 m² = 90; B: 5 × 15 m² = 75.
  const std::vector<EquipmentModel> chillers{
      make_model("A", EquipmentClass::Chiller, 2500, 800, 30),
      make_model("B", EquipmentClass::Chiller, 1000, 400, 10)};
  const auto sel = select_model(EquipmentClass::Chiller, 5000, chillers,
                                RedundancyPolicy::n_plus(0, 0.0), Objective::Space);
  CHECK(sel.model.id == "B");
  CHECK(sel.unit_count == 5);
  CHECK(sel.score == doctest::Approx(75));

  // Power: A draws 2 × 800 = 1600 kW, B 5 × 400 = 2000 kW.
  const auto pw = select_model(EquipmentClass::Chiller, 5000, chillers,
                               RedundancyPolicy::n_plus(0, 0.0), Objective::Power);
  CHECK(pw.model.id == "A");
  CHECK(pw.score == doctest::Approx(1600));
}

TEST_CASE("single candidate and tie-breaks") {
  const std::vector<EquipmentModel> one{make_model("only", EquipmentClass::UPS, 500, 0, 5)};
  CHECK(select_model(EquipmentClass::UPS, 1234, one, RedundancyPolicy{}, Objective::Space).model.id ==
        "only");

  const std::vector<EquipmentModel> twins{make_model("z-ups", EquipmentClass::UPS, 500, 0, 5),
                                          make_model("a-ups", EquipmentClass::UPS, 500, 0, 5)};
  CHECK(select_model(EquipmentClass::UPS, 1234, twins, RedundancyPolicy{}, Objective::Space).model.id ==
        "a-ups");

  // Equal area, fewer units wins: 2 × 10 m² against 4 × 5 m².
  const std::vector<EquipmentModel> equal_area{make_model("a", EquipmentClass::UPS, 250, 0, 5, 0),
                                               make_model("b", EquipmentClass::UPS, 500, 0, 10, 0)};
  const auto sel = select_model(EquipmentClass::UPS, 1000, equal_area,
                                RedundancyPolicy::n_plus(0, 0.0), Objective::Space);
  CHECK(sel.model.id == "b");
}

TEST_CASE("power objective falls back to area when nothing draws power") {
  const std::vector<EquipmentModel> ups{make_model("big", EquipmentClass::UPS, 1200, 0, 10),
                                        make_model("small", EquipmentClass::UPS, 500, 0, 5)};
  const auto space = select_model(EquipmentClass::UPS, 3000, ups, RedundancyPolicy{}, Objective::Space);
  const auto power = select_model(EquipmentClass::UPS, 3000, ups, RedundancyPolicy{}, Objective::Power);
  CHECK(space.model.id == power.model.id);
}

TEST_CASE("selection errors") {
  const std::vector<EquipmentModel> none;
  CHECK_THROWS(select_model(EquipmentClass::UPS, 10, none, RedundancyPolicy{}, Objective::Space));
  const std::vector<EquipmentModel> wrong{make_model("c", EquipmentClass::Chiller, 10, 1, 1)};
  CHECK_THROWS(select_model(EquipmentClass::UPS, 10, wrong, RedundancyPolicy{}, Objective::Space));
}

TEST_CASE("selection equals exhaustive enumeration") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> count(1, 8);
  std::uniform_int_distribution<int> cap(100, 3000);
  std::uniform_int_distribution<int> draw(0, 300);
  std::uniform_int_distribution<int> area(1, 40);
  std::uniform_int_distribution<int> demand(1, 10000);
  std::uniform_int_distribution<int> spare(0, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<EquipmentModel> cands;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      cands.push_back(make_model("m" + std::to_string(i), EquipmentClass::Chiller, cap(rng),
                                 draw(rng), area(rng)));
    }
    const double d = demand(rng);
    const auto policy = RedundancyPolicy::n_plus(spare(rng), 0.1);
    for (Objective obj : {Objective::Space, Objective::Power}) {
      bool any_draw = false;
      for (const auto& m : cands) any_draw = any_draw || m.max_draw_kw > 0;
      const bool by_area = obj == Objective::Space || !any_draw;
      const EquipmentModel* best = nullptr;
      std::tuple<double, std::int64_t, std::string> best_key;
      for (const auto& m : cands) {
        const auto n = units_for_demand(d, m, policy);
        const double score = static_cast<double>(n) *
                             (by_area ? (1 + m.access_factor) * m.footprint_m2 : m.max_draw_kw);
        const auto key = std::make_tuple(score, n, m.id);
        if (!best || key < best_key) {
          best = &m;
          best_key = key;
        }
      }
      const auto sel = select_model(EquipmentClass::Chiller, d, cands, policy, obj);
      REQUIRE(sel.model.id == best->id);
      // The chosen count covers the demand.
      CHECK(static_cast<double>(sel.unit_count - policy.spares()) * sel.model.rated_capacity_kw >=
            1.1 * d - 1e-9);
    }
  }
}
