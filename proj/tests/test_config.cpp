#include <doctest.h>

#include <string>

#include <nlohmann/json.hpp>

#include "frontspeed/errors.hpp"
#include "frontspeed/medium_json.hpp"
#include "frontspeed/run_config.hpp"

using namespace frontspeed;

namespace {

const char* kLineDoc = R"({
  "dimension": 1,
  "periods": [1.0],
  "fields": {"a": {"kind": "inverse_cosine", "params": [1.0, 0.5]}},
  "zeta": {"kind": "constant", "params": [1.0]}
})";

const char* kShearDoc = R"({
  "dimension": 1,
  "periods": [1.0],
  "fields": {
    "alpha": {"kind": "constant", "params": [1.0]},
    "d": {"kind": "constant", "params": [1.0]}
  },
  "zeta": {"kind": "cosine", "params": [1.0, 0.5]},
  "q1": {"kind": "cosine", "params": [0.0, 1.0]}
})";

}  // namespace

TEST_CASE("line medium documents parse into a 1D geometry") {
  auto doc = parse_medium_string(kLineDoc);
  REQUIRE(std::holds_alternative<LineMedium>(doc.medium));
  const auto& m = std::get<LineMedium>(doc.medium);
  CHECK(m.period == doctest::Approx(1.0));
  CHECK(m.a.value(0.0) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("shear medium documents parse with the optional flow") {
  auto doc = parse_medium_string(kShearDoc);
  REQUIRE(std::holds_alternative<ShearMedium>(doc.medium));
  const auto& m = std::get<ShearMedium>(doc.medium);
  REQUIRE(m.q1.has_value());
  CHECK(m.q1->value(0.0) == doctest::Approx(1.0));
}

TEST_CASE("round trip through JSON preserves the medium") {
  auto doc = parse_medium_string(kShearDoc);
  auto doc2 = parse_medium(medium_to_json(doc));
  CHECK(medium_id(doc.medium) == medium_id(doc2.medium));
}

TEST_CASE("unknown keys are rejected with the offending path") {
  nlohmann::json j = nlohmann::json::parse(kLineDoc);
  j["fields"]["bogus"] = 1.0;
  try {
    parse_medium(j);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }
}

TEST_CASE("non-positive periods are rejected by name") {
  nlohmann::json j = nlohmann::json::parse(kLineDoc);
  j["periods"][0] = -1.0;
  try {
    parse_medium(j);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("periods[0]") != std::string::npos);
  }
}

TEST_CASE("dimension must match the period count") {
  nlohmann::json j = nlohmann::json::parse(kShearDoc);
  j["periods"] = {1.0, 1.0};
  CHECK_THROWS_AS(parse_medium(j), ConfigError);
}

TEST_CASE("run config fills defaults and validates the command") {
  nlohmann::json j = {{"command", "speed"}, {"medium", "constant_line"}};
  auto cfg = parse_config(j);
  CHECK(cfg.command == "speed");
  REQUIRE(cfg.medium.has_value());
  CHECK(cfg.n == 128);
  CHECK(cfg.tol == doctest::Approx(1e-6));
  CHECK(cfg.format == "csv");
}

TEST_CASE("run config rejects unknown commands and keys") {
  nlohmann::json j = {{"command", "fly"}};
  CHECK_THROWS_AS(parse_config(j), ConfigError);
  nlohmann::json j2 = {{"command", "speed"}, {"spede", 1}};
  try {
    parse_config(j2);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("spede") != std::string::npos);
  }
}

TEST_CASE("waive_* keys populate the waiver set") {
  nlohmann::json j = {{"command", "sweep"},
                      {"regime", "epsilon"},
                      {"medium", "cosine_zeta_shear"},
                      {"waive_alternative", true},
                      {"waive_div_Ae_free", false}};
  auto cfg = parse_config(j);
  CHECK(cfg.waive("alternative"));
  CHECK_FALSE(cfg.waive("div_Ae_free"));
}

TEST_CASE("grid accepts a scalar or a pair") {
  nlohmann::json j = {{"command", "speed"}, {"medium", "sine_cell"},
                      {"grid", nlohmann::json::array({48, 32})}};
  auto cfg = parse_config(j);
  CHECK(cfg.n == 48);
  CHECK(cfg.n2 == 32);
}
