#include "doctest.h"

#include "dcgen/catalog.hpp"
#include "dcgen/errors.hpp"
#include "test_support.hpp"

using namespace dcgen;
using nlohmann::json;

namespace {

json one_model(const std::string& id, const std::string& cls, double rated) {
  return {{"id", id},           {"class", cls},           {"rated_capacity_kw", rated},
          {"max_draw_kw", 1.0}, {"footprint_m2", 2.0},    {"access_factor", 0.5},
          {"placement", "Indoor"}};
}

json minimal_catalog() {
  json models = json::array();
  models.push_back(one_model("cdu", "CDU", 600));
  models.push_back(one_model("pdu", "PDU", 300));
  models.push_back(one_model("chiller", "Chiller", 2500));
  auto dry = one_model("dry", "DryCooler", 1200);
  dry["placement"] = "Outdoor";
  dry["heat_sink_kind"] = "Dry";
  models.push_back(dry);
  auto tower = one_model("tower", "EvaporativeTower", 1500);
  tower["placement"] = "Outdoor";
  tower["heat_sink_kind"] = "Evaporative";
  models.push_back(tower);
  models.push_back(one_model("ups", "UPS", 1200));
  models.push_back(one_model("msb", "MSB", 3000));
  auto gen = one_model("gen", "Generator", 3000);
  gen["placement"] = "Outdoor";
  models.push_back(gen);
  return {{"schema_version", "1.0"}, {"models", models}};
}

ReferenceITConfig small_config() {
  ReferenceITConfig c;
  c.name = "small";
  c.dc_type = DatacenterType::AITraining;
  c.entries = {{{NodeType::GPU, 42, 100.0, false, std::nullopt}, 10},
               {{NodeType::Storage, 42, 20.0, false, std::nullopt}, 2}};
  return c;
}

}  // namespace

TEST_CASE("shipped catalog covers every equipment class") {
  const Catalog& catalog = test::shipped_catalog();
  for (EquipmentClass cls : kAllEquipmentClasses) {
    CHECK_FALSE(models_of(catalog, cls).empty());
  }
  for (const auto& m : catalog) CHECK(m.gross_area_m2() > m.footprint_m2);
}

TEST_CASE("shipped library has every canonical model") {
  const ReferenceLibrary& lib = test::shipped_library();
  for (DatacenterType t : kAllDatacenterTypes) {
    for (int y : kDesignYears) {
      const auto* c = lib.find(canonical_name(t, y));
      REQUIRE(c != nullptr);
      CHECK(c->dc_type == t);
      CHECK(c->year == y);
      CHECK(c->area_per_rack_m2 == 1.8);
      for (const auto& e : c->entries) CHECK(e.rack.ru_height == 42);
    }
  }
  CHECK(lib.find("xai-colossus") != nullptr);
  CHECK(lib.find("fugaku") != nullptr);
  CHECK(lib.configs().size() == 30);
}

TEST_CASE("canonical names") {
  CHECK(canonical_name(DatacenterType::AITraining, 2024) == "canonical-ai-training-2024");
  CHECK(canonical_name(DatacenterType::MixedAITrainingInference, 2029) == "canonical-mixed-2029");
  CHECK(canonical_name(DatacenterType::Cloud, 2027) == "canonical-cloud-2027");
}

TEST_CASE("unknown reference is a usage error") {
  CHECK_THROWS_AS(test::shipped_library().at("no-such-config"), UsageError);
}

TEST_CASE("catalog round trip") {
  const Catalog parsed = parse_catalog(minimal_catalog());
  CHECK(parsed.size() == 8);
  CHECK(parse_catalog(to_json(parsed)) == parsed);
  const Catalog& shipped = test::shipped_catalog();
  CHECK(parse_catalog(to_json(shipped)) == shipped);
}

TEST_CASE("library round trip") {
  const ReferenceLibrary& lib = test::shipped_library();
  CHECK(parse_reference_library(to_json(lib)) == lib);
}

TEST_CASE("schema version checks") {
  json doc = minimal_catalog();
  doc["schema_version"] = "1.7";
  CHECK_NOTHROW(parse_catalog(doc));
  doc["schema_version"] = "2.0";
  CHECK_THROWS_AS(parse_catalog(doc), DataError);
  doc.erase("schema_version");
  CHECK_THROWS_AS(parse_catalog(doc), DataError);
}

TEST_CASE("catalog validation rejects bad entries") {
  SUBCASE("nonpositive capacity") {
    json doc = minimal_catalog();
    doc["models"][0]["rated_capacity_kw"] = 0.0;
    CHECK_THROWS_AS(parse_catalog(doc), DataError);
  }
  SUBCASE("negative draw") {
    json doc = minimal_catalog();
    doc["models"][2]["max_draw_kw"] = -1.0;
    CHECK_THROWS_AS(parse_catalog(doc), DataError);
  }
  SUBCASE("duplicate id") {
    json doc = minimal_catalog();
    doc["models"][1]["id"] = "cdu";
    CHECK_THROWS_AS(parse_catalog(doc), DataError);
  }
  SUBCASE("missing class") {
    json doc = minimal_catalog();
    doc["models"].erase(5);
    CHECK_THROWS_WITH_AS(parse_catalog(doc), doctest::Contains("UPS"), DataError);
  }
  SUBCASE("unknown class name") {
    json doc = minimal_catalog();
    doc["models"][0]["class"] = "Heater";
    CHECK_THROWS_AS(parse_catalog(doc), DataError);
  }
  SUBCASE("missing field names the entry") {
    json doc = minimal_catalog();
    doc["models"][3].erase("footprint_m2");
    CHECK_THROWS_WITH_AS(parse_catalog(doc), doctest::Contains("dry"), DataError);
  }
}

TEST_CASE("reference configuration validation") {
  CHECK_NOTHROW(validate(small_config()));

  SUBCASE("empty") {
    auto c = small_config();
    c.entries.clear();
    CHECK_THROWS_AS(validate(c), DataError);
  }
  SUBCASE("zero count") {
    auto c = small_config();
    c.entries[1].count = 0;
    CHECK_THROWS_AS(validate(c), DataError);
  }
  SUBCASE("node type not allowed for the datacenter type") {
    auto c = small_config();
    c.dc_type = DatacenterType::Cloud;
    CHECK_THROWS_AS(validate(c), DataError);
  }
  SUBCASE("duplicate node type") {
    auto c = small_config();
    c.entries.push_back(c.entries.front());
    CHECK_THROWS_AS(validate(c), DataError);
  }
  SUBCASE("rack size out of range") {
    auto c = small_config();
    c.entries[0].rack.ru_height = 61;
    c.entries[1].rack.ru_height = 61;
    CHECK_THROWS_AS(validate(c), DataError);
  }
  SUBCASE("mixed rack sizes") {
    auto c = small_config();
    c.entries[1].rack.ru_height = 48;
    CHECK_THROWS_AS(validate(c), DataError);
  }
  SUBCASE("year outside the design years") {
    auto c = small_config();
    c.year = 2025;
    CHECK_THROWS_AS(validate(c), DataError);
  }
  SUBCASE("duplicate names in a library") {
    CHECK_THROWS_AS(ReferenceLibrary({small_config(), small_config()}), DataError);
  }
}

TEST_CASE("node types allowed per datacenter type") {
  CHECK(node_type_allowed(DatacenterType::AITraining, NodeType::GPU));
  CHECK_FALSE(node_type_allowed(DatacenterType::AITraining, NodeType::CPU));
  CHECK(node_type_allowed(DatacenterType::MixedAITrainingInference, NodeType::CPU_GPU));
  CHECK(node_type_allowed(DatacenterType::AIInference, NodeType::CPU));
  CHECK_FALSE(node_type_allowed(DatacenterType::AIInference, NodeType::GPU));
  CHECK(node_type_allowed(DatacenterType::Cloud, NodeType::Storage));
  CHECK_FALSE(node_type_allowed(DatacenterType::Cloud, NodeType::CPU_GPU));
}
