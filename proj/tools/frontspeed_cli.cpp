// frontspeed: minimal KPP front speeds in periodic media.
//
// Subcommands: speed, sweep, homogenize, simulate, validate. Exit codes:
// 0 success, 1 numeric failure, 2 hypothesis refusal, 64 malformed config.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "frontspeed/errors.hpp"
#include "frontspeed/frontsim.hpp"
#include "frontspeed/presets.hpp"
#include "frontspeed/regimes.hpp"
#include "frontspeed/run_config.hpp"

namespace fs = frontspeed;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitUsage = 64;

fs::MediumDocument resolve_medium(const std::string& ref) {
  if (std::filesystem::exists(ref)) return fs::load_medium_file(ref);
  for (const auto& name : fs::presets::names())
    if (name == ref) return fs::presets::by_name(ref);
  throw fs::ConfigError("medium '" + ref + "' is neither a file nor a preset (" +
                        "presets: constant_line, cosine_zeta_line, inverse_cosine_line, "
                        "cosine_zeta_shear, cosine_shear_flow, sine_cell)");
}

std::vector<double> parse_points(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size() || !(v > 0.0)) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw fs::ConfigError("--points: '" + item + "' is not a positive number");
    }
  }
  if (out.empty()) throw fs::ConfigError("--points: empty list");
  return out;
}

void write_output(const std::string& out_path, const std::string& format,
                  const fs::SweepTable& table) {
  auto emit = [&](std::ostream& os) {
    if (format == "json")
      os << table.to_json().dump(2) << '\n';
    else
      table.write_csv(os);
  };
  if (out_path.empty()) {
    emit(std::cout);
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw fs::ConfigError("cannot open output file: " + out_path);
    emit(f);
  }
}

void write_json_result(const std::string& out_path, const json& j) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw fs::ConfigError("cannot open output file: " + out_path);
    f << j.dump(2) << '\n';
  }
}

fs::Problem make_problem(const fs::AnyMedium& medium, int n, int n2) {
  return std::visit(
      [&](const auto& m) -> fs::Problem {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, fs::LineMedium>) {
          fs::LineProblem p;
          p.medium = m;
          p.n = n;
          return p;
        } else if constexpr (std::is_same_v<T, fs::ShearMedium>) {
          fs::ShearProblem p;
          p.medium = m;
          p.n = n;
          return p;
        } else {
          fs::CellProblem p;
          p.medium = m;
          p.n1 = n;
          p.n2 = n2 > 0 ? n2 : n;
          return p;
        }
      },
      medium);
}

int run_speed(const fs::RunConfig& cfg) {
  if (!cfg.medium) throw fs::ConfigError("speed: --medium is required");
  const fs::Problem problem = make_problem(cfg.medium->medium, cfg.n, cfg.n2);
  fs::SpeedOptions opt;
  opt.tol = cfg.tol;
  opt.lambda_min = cfg.lambda_min;
  opt.lambda_max = cfg.lambda_max;
  const fs::SpeedResult r = fs::minimal_speed(problem, opt);

  std::cout << "c* = " << std::fixed;
  std::cout.precision(6);
  std::cout << r.c_star << "  (lambda* = " << r.lambda_star
            << ", k(lambda*) = " << r.k_at_star << ")\n";
  std::cout.unsetf(std::ios::fixed);
  if (r.bracket_failure)
    std::cout << "warning: scan minimum at a lambda-range endpoint; widen "
                 "--lambda-min/--lambda-max\n";

  json j;
  j["c_star"] = r.c_star;
  j["lambda_star"] = r.lambda_star;
  j["k_at_star"] = r.k_at_star;
  j["bracket_failure"] = r.bracket_failure;
  j["upper_bound"] = fs::upper_bound(problem);
  j["medium_hash"] = fs::medium_id(cfg.medium->medium);
  if (!cfg.out_path.empty() || cfg.format == "json")
    write_json_result(cfg.out_path, j);
  return kExitOk;
}

int run_sweep(const fs::RunConfig& cfg) {
  if (!cfg.medium) throw fs::ConfigError("sweep: --medium is required");
  if (cfg.regime.empty()) throw fs::ConfigError("sweep: --regime is required");
  fs::SweepOptions opt;
  opt.tol = cfg.tol;
  opt.waive_hypotheses = !cfg.waived.empty();
  if (cfg.n != 128) opt.n_override = cfg.n;  // explicit grid beats regime adaptation

  const auto* shear = std::get_if<fs::ShearMedium>(&cfg.medium->medium);
  const auto* cell = std::get_if<fs::CellMedium2D>(&cfg.medium->medium);
  fs::SweepTable table;
  auto pts = [&](std::vector<double> defaults) {
    return cfg.points.empty() ? defaults : cfg.points;
  };

  if (cfg.regime == "epsilon") {
    if (!shear) throw fs::ConfigError("regime epsilon needs a shear medium");
    table = fs::sweep_small_diffusion(*shear, pts({1e-1, 1e-2, 1e-3, 1e-4}), opt);
  } else if (cfg.regime == "epsilon_shear") {
    if (!shear) throw fs::ConfigError("regime epsilon_shear needs a shear medium");
    table = fs::sweep_small_diffusion_shear(*shear, pts({1e-1, 1e-2, 1e-3, 1e-4}), opt);
  } else if (cfg.regime == "diffusion") {
    if (!cell) throw fs::ConfigError("regime diffusion needs a 2D cell medium");
    table = fs::sweep_large_diffusion(*cell, pts({1.0, 10.0, 100.0, 1000.0}),
                                      cfg.gamma, opt);
  } else if (cfg.regime == "reaction") {
    if (!shear) throw fs::ConfigError("regime reaction needs a shear medium");
    table = fs::sweep_reaction_large(*shear, pts({1.0, 10.0, 100.0, 1000.0}), opt);
  } else if (cfg.regime == "reaction_small") {
    if (!cell) throw fs::ConfigError("regime reaction_small needs a 2D cell medium");
    table = fs::sweep_reaction_small(*cell, pts({1.0, 0.1, 0.01, 0.001}),
                                     cfg.gamma > 0.0 ? cfg.gamma : 0.5, opt);
  } else if (cfg.regime == "period") {
    table = fs::sweep_period(make_problem(cfg.medium->medium, cfg.n, cfg.n2),
                             pts({0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0}), opt);
  } else if (cfg.regime == "beta") {
    if (!shear) throw fs::ConfigError("regime beta needs a shear medium");
    table = fs::sweep_beta(*shear, pts({0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0}),
                           opt);
  } else if (cfg.regime == "reaction_scaled") {
    if (!shear) throw fs::ConfigError("regime reaction_scaled needs a shear medium");
    table = fs::sweep_reaction_scaled(
        *shear, pts({0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0}), opt);
  } else {
    throw fs::ConfigError("unknown regime '" + cfg.regime + "'");
  }

  std::cout << "regime " << cfg.regime << ": " << table.quantity << " -> "
            << table.limit_tag << " = " << table.theory_limit << '\n';
  if (!table.rows.empty())
    std::cout << "last row rel_error = " << table.rows.back().rel_error << '\n';
  if (table.monotonicity)
    std::cout << "monotonicity: " << (table.monotonicity->pass ? "pass" : "FAIL")
              << '\n';
  write_output(cfg.out_path, cfg.format, table);
  return kExitOk;
}

int run_homogenize(const fs::RunConfig& cfg) {
  if (!cfg.medium) throw fs::ConfigError("homogenize: --medium is required");
  const auto* cell = std::get_if<fs::CellMedium2D>(&cfg.medium->medium);
  if (!cell) throw fs::ConfigError("homogenize needs a 2D cell medium");
  fs::SweepOptions opt;
  opt.tol = cfg.tol;
  opt.waive_hypotheses = !cfg.waived.empty();
  if (cfg.n != 128) opt.n_override = cfg.n;
  const std::vector<double> eps =
      cfg.points.empty() ? std::vector<double>{0.25, 0.125, 0.0625, 0.03125}
                         : cfg.points;
  const fs::SweepTable table = fs::homogenized_speed(*cell, eps, opt);
  std::cout << "homogenized limit " << table.limit_tag << " = " << table.theory_limit
            << '\n';
  if (!table.rows.empty())
    std::cout << "last row rel_error = " << table.rows.back().rel_error << '\n';
  write_output(cfg.out_path, cfg.format, table);
  return kExitOk;
}

int run_simulate(const fs::RunConfig& cfg) {
  if (!cfg.medium) throw fs::ConfigError("simulate: --medium is required");
  const auto* line = std::get_if<fs::LineMedium>(&cfg.medium->medium);
  if (!line) throw fs::ConfigError("simulate needs a 1D line medium");
  fs::SimOptions opt;
  opt.total_time = cfg.total_time;
  const fs::FrontMeasurement m = fs::measure_spreading_speed(*line, opt);
  std::cout << "fitted speed = " << m.speed
            << " (fit residual " << m.fit_residual << ", periodicity residual "
            << m.periodicity_residual << ")\n";
  if (m.window_exhausted)
    std::cout << "warning: front reached the window edge; enlarge the window or "
                 "shorten --T\n";
  write_json_result(cfg.out_path, m.to_json());
  return kExitOk;
}

int run_validate(const fs::RunConfig& cfg) {
  if (!cfg.medium) throw fs::ConfigError("validate: --medium is required");
  const fs::MediumDiagnostics diag = std::visit(
      [](const auto& m) { return fs::validate(m); }, cfg.medium->medium);
  json j = json::array();
  bool all = true;
  for (const auto& c : diag.checks) {
    const bool ok = c.pass || cfg.waive(c.name);
    all = all && ok;
    std::cout << (c.pass ? "pass  " : (ok ? "WAIVED" : "FAIL  ")) << ' ' << c.name
              << "  residual=" << c.residual
              << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
    j.push_back({{"name", c.name},
                 {"pass", c.pass},
                 {"waived", !c.pass && cfg.waive(c.name)},
                 {"residual", c.residual},
                 {"detail", c.detail}});
  }
  if (!cfg.out_path.empty()) write_json_result(cfg.out_path, j);
  return all ? kExitOk : kExitHypothesis;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal KPP pulsating-front speeds in periodic media"};
  app.require_subcommand(0, 1);

  fs::RunConfig cfg;
  std::string medium_arg, points_csv, grid_arg, config_path;
  std::vector<std::string> waive_names;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--medium", medium_arg, "medium JSON file or preset name");
    cmd->add_option("--grid", grid_arg, "grid size N or N,N");
    cmd->add_option("--tol", cfg.tol, "relative tolerance");
    cmd->add_option("--out", cfg.out_path, "output file (default stdout)");
    cmd->add_option("--format", cfg.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--waive", waive_names, "waive a named hypothesis check")
        ->take_all();
    cmd->add_flag_callback("--waive-zero-average",
                           [&] { waive_names.push_back("zero_average"); });
    cmd->add_flag_callback("--waive-div-ae-free",
                           [&] { waive_names.push_back("div_Ae_free"); });
    cmd->add_flag_callback("--waive-alternative",
                           [&] { waive_names.push_back("alternative"); });
  };

  CLI::App* c_speed = app.add_subcommand("speed", "one minimal speed c*");
  add_common(c_speed);
  c_speed->add_option("--lambda-min", cfg.lambda_min, "lower lambda bracket");
  c_speed->add_option("--lambda-max", cfg.lambda_max, "upper lambda bracket");

  CLI::App* c_sweep = app.add_subcommand("sweep", "asymptotic parameter sweep");
  add_common(c_sweep);
  c_sweep->add_option("--regime", cfg.regime,
                      "epsilon|epsilon_shear|diffusion|reaction|reaction_small|"
                      "period|beta|reaction_scaled");
  c_sweep->add_option("--points", points_csv, "comma-separated parameter values");
  c_sweep->add_option("--gamma", cfg.gamma, "advection exponent");

  CLI::App* c_hom = app.add_subcommand("homogenize", "shrinking-cell speed limit");
  add_common(c_hom);
  c_hom->add_option("--points", points_csv, "comma-separated epsilon values");

  CLI::App* c_sim = app.add_subcommand("simulate", "1D front simulation");
  add_common(c_sim);
  c_sim->add_option("--T", cfg.total_time, "total simulated time");

  CLI::App* c_val = app.add_subcommand("validate", "medium hypothesis diagnostics");
  add_common(c_val);

  app.add_option("--config", config_path, "run fully from a JSON config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!config_path.empty()) {
      cfg = fs::load_config_file(config_path);
    } else {
      if (c_speed->parsed()) cfg.command = "speed";
      else if (c_sweep->parsed()) cfg.command = "sweep";
      else if (c_hom->parsed()) cfg.command = "homogenize";
      else if (c_sim->parsed()) cfg.command = "simulate";
      else if (c_val->parsed()) cfg.command = "validate";
      else {
        std::cerr << app.help() << '\n';
        return kExitUsage;
      }
      if (!medium_arg.empty()) cfg.medium = resolve_medium(medium_arg);
      if (!points_csv.empty()) cfg.points = parse_points(points_csv);
      if (!grid_arg.empty()) {
        const auto comma = grid_arg.find(',');
        cfg.n = std::stoi(grid_arg.substr(0, comma));
        if (comma != std::string::npos) cfg.n2 = std::stoi(grid_arg.substr(comma + 1));
        if (cfg.n < 4) throw fs::ConfigError("--grid: sizes must be >= 4");
      }
      for (const auto& w : waive_names) cfg.waived.insert(w);
    }

    if (cfg.command == "speed") return run_speed(cfg);
    if (cfg.command == "sweep") return run_sweep(cfg);
    if (cfg.command == "homogenize") return run_homogenize(cfg);
    if (cfg.command == "simulate") return run_simulate(cfg);
    if (cfg.command == "validate") return run_validate(cfg);
    throw fs::ConfigError("unknown command '" + cfg.command + "'");
  } catch (const fs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fs::HypothesisError& e) {
    std::cerr << "hypothesis refused: " << e.what()
              << " (pass --waive-... to override)\n";
    return kExitHypothesis;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
}
