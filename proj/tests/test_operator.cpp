#include <doctest.h>

#include <cmath>
#include <sstream>

#include "frontspeed/assembly.hpp"
#include "frontspeed/errors.hpp"
#include "frontspeed/operator_matrix.hpp"
#include "frontspeed/presets.hpp"

using namespace frontspeed;

namespace {

OperatorMatrix tiny_cycle() {
  MatrixBuilder b(3);
  for (int i = 0; i < 3; ++i) {
    b.add(i, i, -2.0);
    b.add(i, (i + 1) % 3, 1.0);
    b.add(i, (i + 2) % 3, 1.0);
  }
  return std::move(b).build(true, {});
}

}  // namespace

TEST_CASE("builder accumulates duplicate entries and applies correctly") {
  MatrixBuilder b(2);
  b.add(0, 0, 1.0);
  b.add(0, 0, 2.0);
  b.add(0, 1, 0.5);
  b.add(1, 0, 0.5);
  b.add(1, 1, -1.0);
  auto m = std::move(b).build(true, {});
  CHECK(m.entry(0, 0) == doctest::Approx(3.0));
  std::vector<double> x{1.0, 2.0}, y;
  m.apply(x, y);
  CHECK(y[0] == doctest::Approx(4.0));
  CHECK(y[1] == doctest::Approx(-1.5));
}

TEST_CASE("negative off-diagonal entries are rejected") {
  MatrixBuilder b(3);
  b.add(0, 0, -1.0);
  b.add(0, 1, -0.5);  // breaks the monotone stencil
  b.add(1, 1, -1.0);
  b.add(2, 2, -1.0);
  CHECK_THROWS_AS(std::move(b).build(false, {}), NumericError);
}

TEST_CASE("tiny near-zero negatives are clamped away when allowed") {
  MatrixBuilder b(2);
  b.add(0, 0, 1.0);
  b.add(0, 1, -1e-16);
  b.add(1, 0, 0.0);
  b.add(1, 1, 1.0);
  auto m = std::move(b).build(false, {}, 1e-12);
  CHECK(m.min_offdiag() >= 0.0);
}

TEST_CASE("shift adds c to the diagonal only") {
  auto m = tiny_cycle();
  auto s = m.shifted(5.0);
  CHECK(s.diag(0) == doctest::Approx(3.0));
  CHECK(s.entry(0, 1) == doctest::Approx(1.0));
}

TEST_CASE("coordinate dump is row col value per line") {
  auto m = tiny_cycle();
  std::ostringstream os;
  m.dump_coordinate(os);
  std::istringstream is(os.str());
  int i, j, entries = 0;
  double v;
  while (is >> i >> j >> v) {
    CHECK(m.entry(i, j) == doctest::Approx(v));
    ++entries;
  }
  CHECK(entries == 9);
}

TEST_CASE("line operator: constant vector picks up the zeroth-order term") {
  // diffusion and drift stencils have zero row sums, so acting on the
  // constant vector exposes eps*lambda^2*a + zeta exactly.
  const double lambda = 0.7, eps = 2.0;
  auto op = assemble_line_operator(presets::constant_line(), lambda, eps, 64);
  std::vector<double> ones(64, 1.0), y;
  op.apply(ones, y);
  for (double v : y)
    CHECK(v == doctest::Approx(eps * lambda * lambda + 1.0).epsilon(1e-12));
}

TEST_CASE("line operator respects the reaction scale") {
  auto op = assemble_line_operator(presets::constant_line(), 1.0, 1.0, 32, 5.0);
  std::vector<double> ones(32, 1.0), y;
  op.apply(ones, y);
  CHECK(y[0] == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("cross-section operator is symmetric without advection") {
  auto op = assemble_cross_section_operator(presets::cosine_zeta_shear(), 1.0, 1.0,
                                            1.0, 32);
  CHECK(op.symmetric());
  for (int i = 0; i < op.size(); ++i)
    for (int j = 0; j < op.size(); ++j)
      CHECK(op.entry(i, j) == doctest::Approx(op.entry(j, i)).epsilon(1e-12));
}

TEST_CASE("shear flow enters the cross-section operator as -lambda q1") {
  // the reduced operator stays symmetric: the flow only shifts the
  // zeroth-order coefficient, visible on the constant vector.
  const double lambda = 1.5;
  auto op = assemble_cross_section_operator(presets::cosine_shear_flow(), lambda,
                                            1.0, 1.0, 32);
  CHECK(op.symmetric());
  std::vector<double> ones(32, 1.0), y;
  op.apply(ones, y);
  for (int i = 0; i < 32; ++i) {
    const double yi = (i + 0.5) / 32.0;
    const double q1 = std::cos(2.0 * 3.14159265358979323846 * yi);
    CHECK(y[static_cast<size_t>(i)] ==
          doctest::Approx(lambda * lambda - lambda * q1 + 1.0).epsilon(1e-10));
  }
}

TEST_CASE("cell operator keeps a monotone stencil on the rotating flow") {
  auto op = assemble_cell_operator(presets::sine_cell(), 1.0, 1.0, 1.0, 1.0, 16, 16);
  CHECK(op.min_offdiag() >= 0.0);
  CHECK(op.size() == 256);
  // constant vector again exposes the zeroth-order coefficient at each node
  std::vector<double> ones(256, 1.0), y;
  op.apply(ones, y);
  // lambda^2 eAe - lambda q.e + zeta, with zeta in [0.5, 1.5] and |q| <= 1
  for (double v : y) {
    CHECK(v >= 1.0 + 0.5 - 1.0 - 1e-9);
    CHECK(v <= 1.0 + 1.5 + 1.0 + 1e-9);
  }
}

TEST_CASE("gamma form matches the explicit advection scale") {
  const double M = 100.0, gamma = 0.5;
  auto a = assemble_cell_operator_gamma(presets::sine_cell(), 1.0, M, gamma, 1.0, 16, 16);
  auto b = assemble_cell_operator(presets::sine_cell(), 1.0, M, std::pow(M, gamma),
                                  1.0, 16, 16);
  for (int i = 0; i < a.size(); ++i)
    CHECK(a.diag(i) == doctest::Approx(b.diag(i)).epsilon(1e-12));
}
