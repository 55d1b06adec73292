#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "frontspeed/medium_json.hpp"

namespace frontspeed {

/// A validated run description: command, medium, numerics, output routing.
struct RunConfig {
  std::string command;                 ///< speed | sweep | homogenize | simulate | validate
  std::optional<std::string> medium_path;
  std::optional<MediumDocument> medium;  ///< inline medium, or loaded from path
  std::string regime;                  ///< sweep regime name
  std::vector<double> points;          ///< sweep parameter values
  int n = 128;
  int n2 = 0;                          ///< second grid size (2D); 0: same as n
  double tol = 1e-6;
  double lambda_min = 0.0;             ///< 0: automatic
  double lambda_max = 0.0;             ///< 0: automatic
  double gamma = 0.0;                  ///< advection exponent for M/B sweeps
  double total_time = 80.0;            ///< simulate horizon
  std::string out_path;                ///< empty: stdout
  std::string format = "csv";          ///< csv | json
  std::set<std::string> waived;        ///< hypothesis names demoted to warnings

  bool waive(const std::string& name) const { return waived.count(name) > 0; }
};

/// Strict parse with defaults filled; unknown keys rejected with a
/// path-to-field message (ConfigError). Keys "waive_<name>": true populate
/// the waiver set.
RunConfig parse_config(const nlohmann::json& document);
RunConfig load_config_file(const std::string& path);

}  // namespace frontspeed
