#include "frontspeed/run_config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "frontspeed/errors.hpp"
#include "frontspeed/presets.hpp"

namespace frontspeed {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw ConfigError(path + ": " + why);
}

const std::set<std::string> kCommands = {"speed", "sweep", "homogenize", "simulate",
                                         "validate"};
const std::set<std::string> kRegimes = {"epsilon",   "epsilon_shear", "diffusion",
                                        "reaction",  "reaction_small", "period",
                                        "beta",      "reaction_scaled"};

double positive_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  const double x = v.get<double>();
  if (!(x > 0.0)) fail(path, "must be positive");
  return x;
}

}  // namespace

RunConfig parse_config(const json& document) {
  if (!document.is_object()) fail("$", "config must be a JSON object");
  RunConfig cfg;
  for (const auto& [key, value] : document.items()) {
    if (key == "command") {
      if (!value.is_string()) fail("$.command", "expected a string");
      cfg.command = value.get<std::string>();
      if (!kCommands.count(cfg.command))
        fail("$.command", "unknown command '" + cfg.command + "'");
    } else if (key == "medium") {
      if (value.is_string()) {
        cfg.medium_path = value.get<std::string>();
      } else {
        cfg.medium = parse_medium(value);
      }
    } else if (key == "regime") {
      if (!value.is_string()) fail("$.regime", "expected a string");
      cfg.regime = value.get<std::string>();
      if (!kRegimes.count(cfg.regime))
        fail("$.regime", "unknown regime '" + cfg.regime + "'");
    } else if (key == "points") {
      if (!value.is_array()) fail("$.points", "expected an array of numbers");
      for (size_t i = 0; i < value.size(); ++i)
        cfg.points.push_back(
            positive_number(value[i], "$.points[" + std::to_string(i) + "]"));
    } else if (key == "grid") {
      if (value.is_number_integer()) {
        cfg.n = value.get<int>();
      } else if (value.is_array() && value.size() <= 2) {
        if (value.size() >= 1) cfg.n = value[0].get<int>();
        if (value.size() == 2) cfg.n2 = value[1].get<int>();
      } else {
        fail("$.grid", "expected N or [N, N]");
      }
      if (cfg.n < 4 || cfg.n2 < 0) fail("$.grid", "grid sizes must be >= 4");
    } else if (key == "tol") {
      cfg.tol = positive_number(value, "$.tol");
    } else if (key == "lambda_min") {
      cfg.lambda_min = positive_number(value, "$.lambda_min");
    } else if (key == "lambda_max") {
      cfg.lambda_max = positive_number(value, "$.lambda_max");
    } else if (key == "gamma") {
      if (!value.is_number()) fail("$.gamma", "expected a number");
      cfg.gamma = value.get<double>();
      if (cfg.gamma < 0.0) fail("$.gamma", "must be non-negative");
    } else if (key == "T") {
      cfg.total_time = positive_number(value, "$.T");
    } else if (key == "out") {
      if (!value.is_string()) fail("$.out", "expected a string");
      cfg.out_path = value.get<std::string>();
    } else if (key == "format") {
      if (!value.is_string()) fail("$.format", "expected a string");
      cfg.format = value.get<std::string>();
      if (cfg.format != "csv" && cfg.format != "json")
        fail("$.format", "must be 'csv' or 'json'");
    } else if (key.rfind("waive_", 0) == 0) {
      if (!value.is_boolean()) fail("$." + key, "expected a boolean");
      if (value.get<bool>()) cfg.waived.insert(key.substr(6));
    } else {
      fail("$." + key, "unknown key");
    }
  }
  if (cfg.command.empty()) fail("$.command", "missing");
  if (cfg.lambda_min > 0.0 && cfg.lambda_max > 0.0 && cfg.lambda_min >= cfg.lambda_max)
    fail("$.lambda_min", "must be < lambda_max");
  if (cfg.medium_path) {
    const auto names = presets::names();
    if (std::find(names.begin(), names.end(), *cfg.medium_path) != names.end())
      cfg.medium = presets::by_name(*cfg.medium_path);
    else
      cfg.medium = load_medium_file(*cfg.medium_path);
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  json document;
  try {
    document = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  return parse_config(document);
}

}  // namespace frontspeed
