#include <benchmark/benchmark.h>

#include "frontspeed/eigen.hpp"
#include "frontspeed/presets.hpp"
#include "frontspeed/regimes.hpp"
#include "frontspeed/speed.hpp"

using namespace frontspeed;

static void BM_AssembleLine(benchmark::State& state) {
  const auto medium = presets::cosine_zeta_line();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto op = assemble_line_operator(medium, 1.0, 1.0, n);
    benchmark::DoNotOptimize(op);
  }
}
BENCHMARK(BM_AssembleLine)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_AssembleCell(benchmark::State& state) {
  const auto medium = presets::sine_cell();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto op = assemble_cell_operator(medium, 1.0, 1.0, 1.0, 1.0, n, n);
    benchmark::DoNotOptimize(op);
  }
}
BENCHMARK(BM_AssembleCell)->Arg(32)->Arg(64);

static void BM_PrincipalEigLine(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = assemble_line_operator(presets::cosine_zeta_line(), 1.0, 1.0, n);
  EigenOptions opt;
  opt.tol = 1e-10;
  for (auto _ : state) {
    auto p = principal_eig_power(op, opt);
    benchmark::DoNotOptimize(p.k);
  }
}
BENCHMARK(BM_PrincipalEigLine)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_PrincipalEigStiff(benchmark::State& state) {
  // small-diffusion shear operator: the hard case for the solver
  const auto op = assemble_cross_section_operator(presets::cosine_shear_flow(),
                                                  20.0, 1e-3, 1.0, 1024);
  EigenOptions opt;
  opt.tol = 1e-10;
  for (auto _ : state) {
    auto p = principal_eig_power(op, opt);
    benchmark::DoNotOptimize(p.k);
  }
}
BENCHMARK(BM_PrincipalEigStiff);

static void BM_PrincipalEigCell(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = assemble_cell_operator(presets::sine_cell(), 1.0, 1.0, 1.0, 1.0,
                                         n, n);
  EigenOptions opt;
  opt.tol = 1e-8;
  for (auto _ : state) {
    auto p = principal_eig_power(op, opt);
    benchmark::DoNotOptimize(p.k);
  }
}
BENCHMARK(BM_PrincipalEigCell)->Arg(16)->Arg(32);

static void BM_MinimalSpeedLine(benchmark::State& state) {
  LineProblem p{presets::cosine_zeta_line(), 1.0, 1.0,
                static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto r = minimal_speed(p);
    benchmark::DoNotOptimize(r.c_star);
  }
}
BENCHMARK(BM_MinimalSpeedLine)->Arg(256)->Arg(1024);

static void BM_ScaledSpeedByPeriod(benchmark::State& state) {
  LineProblem p{presets::inverse_cosine_line(), 1.0, 1.0, 256};
  SweepOptions opt;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scaled_speed_by_period(p, 8.0, opt));
  }
}
BENCHMARK(BM_ScaledSpeedByPeriod);

BENCHMARK_MAIN();
