#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "frontspeed/frontsim.hpp"
#include "frontspeed/presets.hpp"

using namespace frontspeed;

TEST_CASE("u = 0 and u = 1 are discrete equilibria away from the clamps") {
  LineMedium m = presets::cosine_zeta_line();
  SimOptions opt;
  opt.window_periods = 8;
  SimState zero = make_initial_state(m, opt);
  std::fill(zero.u.begin(), zero.u.end(), 0.0);
  SimState one = zero;
  std::fill(one.u.begin(), one.u.end(), 1.0);
  const double dt = 0.5 * stable_dt(zero, m);
  step(zero, m, dt);
  step(one, m, dt);
  const size_t n = zero.u.size();
  for (size_t i = 1; i + 1 < n; ++i) {
    if (i == 1 || i + 2 == n) continue;  // neighbors of the clamped ends move
    CHECK(zero.u[i] == doctest::Approx(0.0));
    CHECK(one.u[i] == doctest::Approx(1.0));
  }
}

TEST_CASE("explicit step rejects a dt above the stability bound") {
  LineMedium m = presets::constant_line();
  SimOptions opt;
  opt.window_periods = 8;
  SimState s = make_initial_state(m, opt);
  const double bound = stable_dt(s, m);
  CHECK_NOTHROW(step(s, m, 0.9 * bound));
  CHECK_THROWS_AS(step(s, m, 2.0 * bound), std::invalid_argument);
}

TEST_CASE("maximum principle: the solution stays inside [0, 1]") {
  LineMedium m = presets::cosine_zeta_line();
  SimOptions opt;
  opt.window_periods = 20;
  opt.total_time = 5.0;
  auto f = measure_spreading_speed(m, opt);
  CHECK(f.u_min >= -1e-12);
  CHECK(f.u_max <= 1.0 + 1e-12);
}

TEST_CASE("initial state covers whole periods with the front on the left") {
  LineMedium m = presets::constant_line();
  SimOptions opt;
  opt.window_periods = 16;
  opt.points_per_period = 32;
  SimState s = make_initial_state(m, opt);
  CHECK(s.u.size() == 16u * 32u + 1u);
  CHECK(s.u.front() == 1.0);
  CHECK(s.u.back() == 0.0);
  CHECK(s.h == doctest::Approx(1.0 / 32.0));
}

TEST_CASE("measured speed approaches 2 on the constant medium") {
  SimOptions opt;
  opt.window_periods = 120;
  opt.total_time = 40.0;
  auto f = measure_spreading_speed(presets::constant_line(), opt);
  CHECK_FALSE(f.window_exhausted);
  CHECK(f.speed == doctest::Approx(2.0).epsilon(0.05));
  CHECK(f.fit_residual < 0.1);
  CHECK(f.periodicity_residual < 0.05);
}

TEST_CASE("speed scales like sqrt(a) on a faster medium") {
  LineMedium fast;
  fast.a = CoefficientField::constant(4.0);
  SimOptions opt;
  opt.window_periods = 220;
  opt.total_time = 40.0;
  auto f = measure_spreading_speed(fast, opt);
  CHECK(f.speed == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("too-small windows are rejected") {
  SimOptions opt;
  opt.window_periods = 2;
  CHECK_THROWS_AS(make_initial_state(presets::constant_line(), opt),
                  std::invalid_argument);
}

TEST_CASE("frame dump emits t,x,u rows at the requested times") {
  SimOptions opt;
  opt.window_periods = 8;
  opt.total_time = 1.0;
  std::ostringstream os;
  dump_frames_csv(os, presets::constant_line(), opt, {0.0, 0.5});
  std::istringstream is(os.str());
  std::string header;
  std::getline(is, header);
  CHECK(header == "t,x,u");
  size_t rows = 0;
  std::string line;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 2u * (8u * 32u + 1u));
}

TEST_CASE("measurement serializes to JSON") {
  SimOptions opt;
  opt.window_periods = 20;
  opt.total_time = 4.0;
  auto f = measure_spreading_speed(presets::constant_line(), opt);
  auto j = f.to_json();
  CHECK(j.contains("speed"));
  CHECK(j["times"].size() == j["positions"].size());
}
