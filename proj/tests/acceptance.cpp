// Acceptance gate: one pass/fail line per criterion. Exit code is the
// number of failed criteria. An optional argument selects one criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "frontspeed/eigen.hpp"
#include "frontspeed/frontsim.hpp"
#include "frontspeed/presets.hpp"
#include "frontspeed/regimes.hpp"
#include "frontspeed/speed.hpp"

using namespace frontspeed;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& msg) {
    if (!ok) {
      pass = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << msg;
    }
  }
  void note(const std::string& msg) {
    if (detail.tellp() > 0) detail << "; ";
    detail << msg;
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool within(double value, double target, double rel) {
  return std::abs(value - target) <= rel * std::abs(target);
}

// ---------------------------------------------------------------------------

Outcome criterion1() {  // constant-coefficient exactness
  Outcome o;
  LineProblem p{presets::constant_line(), 1.0, 1.0, 128};
  SpeedOptions opt;
  opt.tol = 1e-8;
  opt.eigen_tol = 1e-12;
  const auto r = minimal_speed(p, opt);
  o.require(within(r.c_star, 2.0, 1e-6),
            "c* = " + fmt(r.c_star) + ", want 2 within 1e-6 relative");
  for (double lambda : {0.5, 1.0, 2.0}) {
    const double k = k_of_lambda(p, lambda, 1e-12);
    o.require(std::abs(k - (lambda * lambda + 1.0)) <= 1e-8,
              "k(" + fmt(lambda) + ") = " + fmt(k) + ", want " +
                  fmt(lambda * lambda + 1.0) + " within 1e-8");
  }
  o.note("c* = " + fmt(r.c_star));
  return o;
}

Outcome criterion2() {  // variational upper bound on all default media
  Outcome o;
  struct Case {
    std::string name;
    Problem problem;
    bool zeta_oscillates;
  };
  std::vector<Case> cases;
  cases.push_back({"constant_line",
                   LineProblem{presets::constant_line(), 1.0, 1.0, 256}, false});
  cases.push_back({"cosine_zeta_line",
                   LineProblem{presets::cosine_zeta_line(), 1.0, 1.0, 256}, true});
  cases.push_back({"inverse_cosine_line",
                   LineProblem{presets::inverse_cosine_line(), 1.0, 1.0, 256}, false});
  cases.push_back({"cosine_zeta_shear",
                   ShearProblem{presets::cosine_zeta_shear(), 1.0, 1.0, 1.0, 256},
                   true});
  cases.push_back({"cosine_shear_flow",
                   ShearProblem{presets::cosine_shear_flow(), 1.0, 1.0, 1.0, 256},
                   false});
  cases.push_back({"sine_cell",
                   CellProblem{presets::sine_cell(), 1.0, 1.0, 1.0, 48, 48}, true});
  for (const auto& c : cases) {
    const double ub = upper_bound(c.problem);
    const double cs = minimal_speed(c.problem).c_star;
    o.require(cs <= ub + 1e-8, c.name + ": c* = " + fmt(cs) +
                                   " exceeds the bound " + fmt(ub));
    if (c.zeta_oscillates)
      o.require(ub - cs > 1e-3, c.name + ": gap " + fmt(ub - cs) +
                                    " not strictly positive (> 1e-3)");
  }
  return o;
}

Outcome criterion3() {  // small-diffusion limit, shear without flow
  Outcome o;
  SweepOptions opt;
  auto t = sweep_small_diffusion(presets::cosine_zeta_shear(),
                                 {1e-1, 1e-2, 1e-3, 1e-4}, opt);
  const auto& last = t.rows.back();
  o.require(last.rel_error <= 0.05,
            "c*(1e-4)/sqrt(eps) = " + fmt(last.quantity) + " vs limit " +
                fmt(t.theory_limit) + ": rel error " + fmt(last.rel_error));
  for (size_t i = 0; i + 1 < t.rows.size(); ++i)
    o.require(t.rows[i + 1].rel_error < t.rows[i].rel_error,
              "error did not decrease from eps = " + fmt(t.rows[i].value));
  o.note("final rel error " + fmt(last.rel_error));
  return o;
}

Outcome criterion4() {  // small-diffusion limit with shear flow
  Outcome o;
  SweepOptions opt;
  auto t = sweep_small_diffusion_shear(presets::cosine_shear_flow(),
                                       {1e-1, 1e-2, 1e-3, 1e-4}, opt);
  const auto& last = t.rows.back();
  o.require(within(last.quantity, 1.0, 0.05),
            "c*(1e-4) = " + fmt(last.quantity) + ", want 1 within 5%");
  for (const auto& row : t.rows)
    o.require(row.quantity <= row.bound_high + 1e-8,
              "eps = " + fmt(row.value) + ": c* = " + fmt(row.quantity) +
                  " exceeds 1 + 2 sqrt(eps) = " + fmt(row.bound_high));
  o.note("c*(1e-4) = " + fmt(last.quantity));
  return o;
}

Outcome criterion5() {  // large-diffusion limit on the 2D cell
  Outcome o;
  SweepOptions opt;
  opt.base_n2d = 64;
  const std::vector<double> M{1.0, 10.0, 100.0, 1000.0};
  auto t0 = sweep_large_diffusion(presets::sine_cell(), M, 0.0, opt);
  auto th = sweep_large_diffusion(presets::sine_cell(), M, 0.5, opt);
  for (auto* t : {&t0, &th}) {
    const auto& last = t->rows.back();
    o.require(within(last.quantity, 2.0, 0.03),
              "c*/sqrt(M) at M=1000 is " + fmt(last.quantity) +
                  ", want 2 within 3%");
    // the continuous bound is checked up to the grid truncation error ~ h^2
    const double slack = 2.0 / (64.0 * 64.0);
    for (const auto& row : t->rows)
      o.require(row.quantity >= row.bound_low - slack,
                "M = " + fmt(row.value) + ": quantity " + fmt(row.quantity) +
                    " below the lower bound " + fmt(row.bound_low));
  }
  const double q0 = t0.rows.back().quantity, qh = th.rows.back().quantity;
  o.require(std::abs(q0 - qh) <= 0.01 * std::abs(q0),
            "gamma = 0 and gamma = 1/2 disagree: " + fmt(q0) + " vs " + fmt(qh));
  o.note("quantity at M=1000: " + fmt(q0) + " (gamma 0), " + fmt(qh) +
         " (gamma 1/2)");
  return o;
}

Outcome criterion6() {  // 1D period sweep: homogenized and stretched limits
  Outcome o;
  LineProblem p{presets::inverse_cosine_line(), 1.0, 1.0, 256};
  SweepOptions opt;
  const double c_small = scaled_speed_by_period(p, 1.0 / 32.0, opt);
  // L -> 0: c* -> 2 sqrt(harmonic mean of a * average zeta) = 2
  o.require(within(c_small, 2.0, 0.01),
            "c*(1/32) = " + fmt(c_small) + ", want 2 within 1%");
  const double c_large = scaled_speed_by_period(p, 32.0, opt);
  const double target = 2.0 * std::sqrt(2.0);  // 2 sqrt(max a * max zeta)
  o.require(within(c_large, target, 0.05),
            "c*(32) = " + fmt(c_large) + ", want " + fmt(target) + " within 5%");
  o.note("c*(1/32) = " + fmt(c_small) + ", c*(32) = " + fmt(c_large));
  return o;
}

Outcome criterion7() {  // large- and small-reaction limits
  Outcome o;
  SweepOptions opt;
  auto big = sweep_reaction_large(presets::cosine_zeta_shear(),
                                  {1.0, 10.0, 100.0, 1000.0}, opt);
  const double want_big = 2.0 * std::sqrt(1.5);
  o.require(within(big.rows.back().quantity, want_big, 0.05),
            "c*/sqrt(B) at B=1000 is " + fmt(big.rows.back().quantity) +
                ", want " + fmt(want_big) + " within 5%");
  SweepOptions opt2;
  opt2.base_n2d = 64;
  auto small = sweep_reaction_small(presets::sine_cell(), {1.0, 0.1, 0.01, 1e-3},
                                    0.5, opt2);
  o.require(within(small.rows.back().quantity, 2.0, 0.05),
            "c*/sqrt(B) at B=1e-3 is " + fmt(small.rows.back().quantity) +
                ", want 2 within 5%");
  o.note("B=1000: " + fmt(big.rows.back().quantity) +
         ", B=1e-3: " + fmt(small.rows.back().quantity));
  return o;
}

Outcome criterion8() {  // monotonicity of the three normalized maps
  Outcome o;
  SweepOptions opt;
  const std::vector<double> pts{0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
  auto beta = sweep_beta(presets::cosine_zeta_shear(), pts, opt);
  o.require(beta.monotonicity && beta.monotonicity->pass,
            "beta |-> c*(beta)/sqrt(beta) is not decreasing");
  auto period = sweep_period(
      ShearProblem{presets::cosine_zeta_shear(), 1.0, 1.0, 1.0, 256}, pts, opt);
  o.require(period.monotonicity && period.monotonicity->pass,
            "L |-> c*(L) is not increasing");
  auto reaction = sweep_reaction_scaled(presets::cosine_zeta_shear(), pts, opt);
  o.require(reaction.monotonicity && reaction.monotonicity->pass,
            "B |-> c*(B)/sqrt(B) is not increasing");
  return o;
}

Outcome criterion9() {  // homogenization limit, advection-independent
  Outcome o;
  SweepOptions opt;
  opt.base_n2d = 64;
  const std::vector<double> eps{1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125};
  auto with_flow = homogenized_speed(presets::sine_cell(), eps, opt);
  o.require(with_flow.rows.back().rel_error <= 0.03,
            "eps = 1/32: rel error " + fmt(with_flow.rows.back().rel_error) +
                " vs the homogenized limit");
  CellMedium2D still = presets::sine_cell();
  still.stream_function.reset();
  auto no_flow = homogenized_speed(still, eps, opt);
  const double a = with_flow.rows.back().quantity;
  const double b = no_flow.rows.back().quantity;
  o.require(std::abs(a - b) <= 0.01 * std::abs(a),
            "flow changes the homogenized value: " + fmt(a) + " vs " + fmt(b));
  o.note("eps=1/32: " + fmt(a) + " (with flow), " + fmt(b) + " (without)");
  return o;
}

Outcome criterion10() {  // eigen solver vs time-stepping oracle
  Outcome o;
  std::vector<std::pair<std::string, OperatorMatrix>> cases;
  cases.emplace_back("line constant",
                     assemble_line_operator(presets::constant_line(), 1.0, 1.0, 64));
  cases.emplace_back("line cosine zeta", assemble_line_operator(
                                             presets::cosine_zeta_line(), 0.7, 1.0, 64));
  cases.emplace_back("line inverse cosine", assemble_line_operator(
                                                presets::inverse_cosine_line(), 2.0,
                                                1.0, 64));
  cases.emplace_back("shear cosine zeta",
                     assemble_cross_section_operator(presets::cosine_zeta_shear(), 1.0,
                                                     1.0, 1.0, 64));
  cases.emplace_back("shear flow",
                     assemble_cross_section_operator(presets::cosine_shear_flow(), 1.5,
                                                     0.5, 1.0, 64));
  cases.emplace_back("cell", assemble_cell_operator(presets::sine_cell(), 1.0, 1.0,
                                                    1.0, 1.0, 8, 8));
  for (const auto& [name, op] : cases) {
    EigenOptions eopt;
    eopt.tol = 1e-11;
    const auto p = principal_eig_power(op, eopt);
    const double k_oracle = growth_rate_oracle(op, 400.0);
    o.require(std::abs(p.k - k_oracle) <= 1e-6 * std::max(1.0, std::abs(p.k)),
              name + ": solver " + fmt(p.k) + " vs oracle " + fmt(k_oracle));
    if (op.symmetric()) {
      const double rq = rayleigh_value(op, p.psi);
      o.require(std::abs(rq - p.k) <= 10.0 * eopt.tol * std::max(1.0, std::abs(p.k)),
                name + ": Rayleigh quotient " + fmt(rq) + " vs k " + fmt(p.k));
    }
  }
  return o;
}

Outcome criterion11() {  // dynamical cross-check against the simulator
  Outcome o;
  SimOptions sopt;
  sopt.window_periods = 160;
  sopt.total_time = 60.0;
  for (const auto* name : {"constant_line", "cosine_zeta_line"}) {
    const LineMedium m = std::string(name) == "constant_line"
                             ? presets::constant_line()
                             : presets::cosine_zeta_line();
    const double cs = minimal_speed(LineProblem{m, 1.0, 1.0, 256}).c_star;
    const auto f = measure_spreading_speed(m, sopt);
    o.require(within(f.speed, cs, 0.05),
              std::string(name) + ": simulated " + fmt(f.speed) +
                  " vs variational " + fmt(cs));
    o.require(f.u_min >= -1e-12 && f.u_max <= 1.0 + 1e-12,
              std::string(name) + ": maximum principle violated [" +
                  fmt(f.u_min) + ", " + fmt(f.u_max) + "]");
    o.note(std::string(name) + ": sim " + fmt(f.speed) + " vs c* " + fmt(cs));
  }
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "constant-coefficient exactness", 1.0, criterion1},
      {2, "variational upper bound on all default media", 10.0, criterion2},
      {3, "small-diffusion limit (shear, no flow)", 60.0, criterion3},
      {4, "small-diffusion limit with shear flow", 60.0, criterion4},
      {5, "large-diffusion limit on the 2D cell", 300.0, criterion5},
      {6, "1D period sweep limits", 60.0, criterion6},
      {7, "large- and small-reaction limits", 120.0, criterion7},
      {8, "monotonicity of the normalized speed maps", 120.0, criterion8},
      {9, "homogenized speed, advection-independent", 300.0, criterion9},
      {10, "eigen solver vs time-stepping oracle", 120.0, criterion10},
      {11, "dynamical cross-check (direct simulation)", 120.0, criterion11},
  };
  int selected = 0;
  if (argc > 1) selected = std::atoi(argv[1]);

  int failures = 0;
  for (const auto& c : criteria) {
    if (selected != 0 && c.id != selected) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.note("runtime " + fmt(secs) + " s exceeds the " +
             fmt(c.budget_seconds) + " s budget");
    }
    std::printf("%s criterion %d: %s (%s; %.1f s)\n", o.pass ? "PASS" : "FAIL",
                c.id, c.name.c_str(), o.detail.str().c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures;
}
