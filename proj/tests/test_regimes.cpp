#include <doctest.h>

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "frontspeed/errors.hpp"
#include "frontspeed/presets.hpp"
#include "frontspeed/regimes.hpp"

using namespace frontspeed;

TEST_CASE("check_monotone flags the offending transition") {
  CHECK(check_monotone({1.0, 2.0, 3.0}, MonotoneExpect::Increasing).pass);
  CHECK(check_monotone({3.0, 2.0, 1.0}, MonotoneExpect::Decreasing).pass);
  auto v = check_monotone({1.0, 3.0, 2.0, 4.0}, MonotoneExpect::Increasing);
  CHECK_FALSE(v.pass);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0] == 1);
  // tiny noise within the slack does not count as a violation
  CHECK(check_monotone({1.0, 1.0 - 1e-12, 2.0}, MonotoneExpect::Increasing).pass);
}

TEST_CASE("adapted resolution grows as eps shrinks, power of two, clamped") {
  const int base = 256;
  CHECK(adapted_resolution(1.0, 1.0, base) == base);
  const int fine = adapted_resolution(1e-4, 1.0, base);
  CHECK(fine > base);
  CHECK((fine & (fine - 1)) == 0);
  CHECK(adapted_resolution(1e-12, 1.0, base) <= 4096);
}

TEST_CASE("CSV output is deterministic with a fixed header") {
  SweepOptions opt;
  opt.tol = 1e-5;
  opt.base_n = 128;
  auto t1 = sweep_beta(presets::cosine_zeta_shear(), {1.0, 2.0, 4.0}, opt);
  auto t2 = sweep_beta(presets::cosine_zeta_shear(), {1.0, 2.0, 4.0}, opt);
  std::ostringstream s1, s2;
  t1.write_csv(s1);
  t2.write_csv(s2);
  CHECK(s1.str() == s2.str());
  CHECK(s1.str().rfind("parameter,value,quantity,theory_limit,rel_error", 0) == 0);
  CHECK(s1.str().find("\r") == std::string::npos);
}

TEST_CASE("sweep tables serialize to JSON with rows and metadata") {
  SweepOptions opt;
  opt.tol = 1e-5;
  opt.base_n = 128;
  auto t = sweep_beta(presets::cosine_zeta_shear(), {1.0, 4.0}, opt);
  auto j = t.to_json();
  CHECK(j["rows"].size() == 2);
  CHECK(j.contains("medium_hash"));
  CHECK(j.contains("theory_limit"));
}

TEST_CASE("hypothesis violations refuse to run unless waived") {
  ShearMedium bad;
  bad.alpha = CoefficientField::cosine(1.0, 0.3);
  bad.zeta = CoefficientField::cosine(1.0, 0.3);  // neither alternative holds
  SweepOptions opt;
  opt.base_n = 128;
  CHECK_THROWS_AS(sweep_small_diffusion(bad, {0.1}, opt), HypothesisError);
  opt.waive_hypotheses = true;
  CHECK_NOTHROW(sweep_small_diffusion(bad, {0.1}, opt));
}

TEST_CASE("period rescaling identity is exact at L = 1") {
  LineProblem p{presets::cosine_zeta_line(), 1.0, 1.0, 256};
  SweepOptions opt;
  opt.tol = 1e-7;
  const double direct = minimal_speed(p, {.tol = 1e-7}).c_star;
  CHECK(scaled_speed_by_period(p, 1.0, opt) == doctest::Approx(direct).epsilon(1e-6));
}

TEST_CASE("period rescaling matches a brute-force stretched medium") {
  // solve directly on a cell of period L = 2 and compare against the
  // rescaling identity evaluated on the unit cell.
  const double L = 2.0;
  LineMedium stretched;
  stretched.period = L;
  stretched.a = CoefficientField::constant(1.0, 1, {L});
  stretched.zeta = CoefficientField::cosine(1.0, 0.5, 1, {L});
  LineProblem direct{stretched, 1.0, 1.0, 512};
  const double brute = minimal_speed(direct, {.tol = 1e-7}).c_star;

  LineProblem unit{presets::cosine_zeta_line(), 1.0, 1.0, 512};
  SweepOptions opt;
  opt.tol = 1e-7;
  CHECK(scaled_speed_by_period(unit, L, opt) == doctest::Approx(brute).epsilon(1e-5));
}

TEST_CASE("sweep rows carry bounds and the monotone verdict") {
  SweepOptions opt;
  opt.tol = 1e-5;
  opt.base_n = 256;
  auto t = sweep_small_diffusion_shear(presets::cosine_shear_flow(),
                                       {1e-1, 1e-2}, opt);
  REQUIRE(t.rows.size() == 2);
  for (const auto& row : t.rows) {
    CHECK(row.has_bound_high);
    CHECK(row.quantity <= row.bound_high + 1e-8);
  }
  CHECK(t.theory_limit == doctest::Approx(1.0));
}

TEST_CASE("thread override does not change results") {
  SweepOptions serial;
  serial.tol = 1e-6;
  serial.base_n = 128;
  serial.threads = 1;
  SweepOptions parallel = serial;
  parallel.threads = 4;
  auto a = sweep_beta(presets::cosine_zeta_shear(), {1.0, 2.0, 4.0, 8.0}, serial);
  auto b = sweep_beta(presets::cosine_zeta_shear(), {1.0, 2.0, 4.0, 8.0}, parallel);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i)
    CHECK(a.rows[i].speed == doctest::Approx(b.rows[i].speed).epsilon(1e-12));
}
