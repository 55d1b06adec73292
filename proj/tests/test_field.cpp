#include <doctest.h>

#include <cmath>

#include "frontspeed/field.hpp"

using namespace frontspeed;

TEST_CASE("constant field is exact under every reduction") {
  auto f = CoefficientField::constant(3.5);
  CHECK(f.value(0.0) == 3.5);
  CHECK(f.value(0.73) == 3.5);
  CHECK(cell_average(f) == doctest::Approx(3.5).epsilon(1e-14));
  CHECK(harmonic_mean(f) == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(max_over_cell(f) == doctest::Approx(3.5).epsilon(1e-14));
}

TEST_CASE("cosine profile: average kills the oscillation, max adds it") {
  auto f = CoefficientField::cosine(1.0, 0.5);
  CHECK(f.value(0.0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(f.value(0.5) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(cell_average(f) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_over_cell(f, 4096) == doctest::Approx(1.5).epsilon(1e-6));
  auto b = field_bounds(f, 4096);
  CHECK(b.lower == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(b.upper == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("harmonic mean of 1 + 0.5 cos equals sqrt(3)/2") {
  // closed form: avg(1/(c0 + c1 cos)) = 1/sqrt(c0^2 - c1^2)
  auto f = CoefficientField::cosine(1.0, 0.5);
  const double expected = std::sqrt(0.75);
  CHECK(harmonic_mean(f) == doctest::Approx(expected).epsilon(1e-10));
  // and the AM-HM inequality is strict for a non-constant field
  CHECK(harmonic_mean(f) < cell_average(f));
}

TEST_CASE("inverse cosine profile values and averages") {
  auto f = CoefficientField::inverse_cosine(1.0, 0.5);
  CHECK(f.value(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(f.value(0.5) == doctest::Approx(2.0).epsilon(1e-14));
  // avg(1/f) = avg(1 + 0.5 cos) = 1, so the harmonic mean is exactly 1
  CHECK(harmonic_mean(f) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cell_average(f) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-10));
}

TEST_CASE("quadrature reductions are sampling-stable (n vs 3n)") {
  auto f = CoefficientField::cosine(1.0, 0.5);
  CHECK(cell_average(f, 512) == doctest::Approx(cell_average(f, 1536)).epsilon(1e-10));
  CHECK(harmonic_mean(f, 512) ==
        doctest::Approx(harmonic_mean(f, 1536)).epsilon(1e-8));
}

TEST_CASE("sample fields wrap periodically with linear interpolation") {
  auto f = CoefficientField::samples({1.0, 2.0, 3.0, 2.0});
  // cell centers at 1/8, 3/8, 5/8, 7/8
  CHECK(f.value(1.0 / 8.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(f.value(2.0 / 8.0) == doctest::Approx(1.5).epsilon(1e-14));
  // wrap-around midpoint between the last and first sample
  CHECK(f.value(0.0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(f.value(1.0) == doctest::Approx(f.value(0.0)).epsilon(1e-14));
}

TEST_CASE("scaled keeps the profile and multiplies values") {
  auto f = CoefficientField::cosine(1.0, 0.5).scaled(4.0);
  CHECK(f.value(0.0) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(cell_average(f) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("2D sine product field") {
  auto f = CoefficientField::sine_product(1.0, 0.5);
  CHECK(f.dimension() == 2);
  CHECK(f.value(0.25, 0.25) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(f.value(0.25, 0.75) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(cell_average(f, 256) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("sampling matches pointwise evaluation at cell centers") {
  auto f = CoefficientField::cosine(2.0, 0.7);
  const int n = 16;
  auto s = sample_field(f, n);
  REQUIRE(static_cast<int>(s.size()) == n);
  for (int j = 0; j < n; ++j) {
    const double x = (j + 0.5) / n;
    CHECK(s[static_cast<size_t>(j)] == doctest::Approx(f.value(x)).epsilon(1e-14));
  }
}
