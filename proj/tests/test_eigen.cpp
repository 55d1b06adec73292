#include <doctest.h>

#include <cmath>
#include <random>

#include "frontspeed/assembly.hpp"
#include "frontspeed/eigen.hpp"
#include "frontspeed/presets.hpp"

using namespace frontspeed;

namespace {

std::vector<OperatorMatrix> test_matrices(int n1d, int n2d) {
  std::vector<OperatorMatrix> ms;
  ms.push_back(assemble_line_operator(presets::constant_line(), 1.0, 1.0, n1d));
  ms.push_back(assemble_line_operator(presets::cosine_zeta_line(), 0.7, 1.0, n1d));
  ms.push_back(assemble_line_operator(presets::inverse_cosine_line(), 2.0, 1.0, n1d));
  ms.push_back(assemble_cross_section_operator(presets::cosine_zeta_shear(), 1.0,
                                               1.0, 1.0, n1d));
  ms.push_back(assemble_cross_section_operator(presets::cosine_shear_flow(), 1.5,
                                               0.5, 1.0, n1d));
  ms.push_back(assemble_cell_operator(presets::sine_cell(), 1.0, 1.0, 1.0, 1.0,
                                      n2d, n2d));
  return ms;
}

}  // namespace

TEST_CASE("constant-coefficient eigenvalue is exact: k = lambda^2 + 1") {
  for (double lambda : {0.5, 1.0, 2.0}) {
    auto op = assemble_line_operator(presets::constant_line(), lambda, 1.0, 64);
    EigenOptions opt;
    opt.tol = 1e-12;
    auto p = principal_eig_power(op, opt);
    CHECK(p.k == doctest::Approx(lambda * lambda + 1.0).epsilon(1e-10));
    for (double v : p.psi) CHECK(v > 0.0);
  }
}

TEST_CASE("eigenvalue shifts exactly with the operator") {
  auto op = assemble_line_operator(presets::cosine_zeta_line(), 1.0, 1.0, 64);
  EigenOptions opt;
  opt.tol = 1e-11;
  const double k = principal_eig_power(op, opt).k;
  const double ks = principal_eig_power(op.shifted(3.25), opt).k;
  CHECK(ks == doctest::Approx(k + 3.25).epsilon(1e-9));
}

TEST_CASE("power/shift-invert value agrees with the time-stepping oracle") {
  for (const auto& op : test_matrices(64, 8)) {
    EigenOptions opt;
    opt.tol = 1e-11;
    const double k = principal_eig_power(op, opt).k;
    const double k_oracle = growth_rate_oracle(op, 400.0);
    CHECK(k == doctest::Approx(k_oracle).epsilon(1e-6));
  }
}

TEST_CASE("Rayleigh quotient at the eigenvector matches k on symmetric cases") {
  for (const auto& op : test_matrices(64, 8)) {
    if (!op.symmetric()) continue;
    EigenOptions opt;
    opt.tol = 1e-11;
    auto p = principal_eig_power(op, opt);
    CHECK(rayleigh_value(op, p.psi) == doctest::Approx(p.k).epsilon(1e-9));
  }
}

TEST_CASE("Rayleigh quotient on random vectors never exceeds k (symmetric)") {
  auto op = assemble_cross_section_operator(presets::cosine_zeta_shear(), 1.0, 1.0,
                                            1.0, 48);
  REQUIRE(op.symmetric());
  EigenOptions opt;
  opt.tol = 1e-11;
  const double k = principal_eig_power(op, opt).k;
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> uni(0.1, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> v(static_cast<size_t>(op.size()));
    for (double& x : v) x = uni(rng);
    CHECK(rayleigh_value(op, v) <= k + 1e-10 * std::abs(k));
  }
}

TEST_CASE("warm start converges to the same value") {
  auto op = assemble_line_operator(presets::cosine_zeta_line(), 1.3, 1.0, 128);
  EigenOptions opt;
  opt.tol = 1e-11;
  auto cold = principal_eig_power(op, opt);
  EigenOptions warm = opt;
  warm.warm_start = &cold.psi;
  auto again = principal_eig_power(op, warm);
  CHECK(again.k == doctest::Approx(cold.k).epsilon(1e-10));
}

TEST_CASE("residual reported by the solver is small") {
  auto op = assemble_line_operator(presets::inverse_cosine_line(), 1.0, 1.0, 128);
  EigenOptions opt;
  opt.tol = 1e-11;
  auto p = principal_eig_power(op, opt);
  CHECK(p.residual <= 1e-6 * std::max(1.0, std::abs(p.k)));
}

TEST_CASE("stiff small-diffusion operators still converge (shift-invert path)") {
  // eps = 1e-3 with shear advection: the eigenfunction localizes sharply.
  auto op = assemble_cross_section_operator(presets::cosine_shear_flow(), 20.0,
                                            1e-3, 1.0, 512);
  EigenOptions opt;
  opt.tol = 1e-10;
  auto p = principal_eig_power(op, opt);
  const double k_oracle = growth_rate_oracle(op, 100.0);
  CHECK(p.k == doctest::Approx(k_oracle).epsilon(1e-5));
}
