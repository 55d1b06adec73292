#include "frontspeed/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace frontspeed {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}
}  // namespace

CoefficientField CoefficientField::constant(double c, int dimension,
                                            std::vector<double> periods) {
  require(dimension == 1 || dimension == 2, "field dimension must be 1 or 2");
  require(static_cast<int>(periods.size()) == dimension, "periods/dimension mismatch");
  for (double L : periods) require(L > 0.0, "periods must be positive");
  CoefficientField f;
  f.kind_ = ProfileKind::Constant;
  f.dimension_ = dimension;
  f.periods_ = std::move(periods);
  f.params_ = {c};
  return f;
}

CoefficientField CoefficientField::cosine(double c0, double c1, int dimension,
                                          std::vector<double> periods) {
  CoefficientField f = constant(c0, dimension, std::move(periods));
  f.kind_ = ProfileKind::Cosine;
  f.params_ = {c0, c1};
  return f;
}

CoefficientField CoefficientField::inverse_cosine(double c0, double c1, double period) {
  require(c0 > std::abs(c1), "inverse_cosine requires c0 > |c1|");
  CoefficientField f = constant(c0, 1, {period});
  f.kind_ = ProfileKind::InverseCosine;
  f.params_ = {c0, c1};
  return f;
}

CoefficientField CoefficientField::sine_product(double c0, double c1,
                                                std::vector<double> periods) {
  CoefficientField f = constant(c0, 2, std::move(periods));
  f.kind_ = ProfileKind::SineProduct;
  f.params_ = {c0, c1};
  return f;
}

CoefficientField CoefficientField::samples(std::vector<double> values, double period) {
  require(values.size() >= 2, "samples profile needs at least 2 values");
  CoefficientField f = constant(0.0, 1, {period});
  f.kind_ = ProfileKind::Samples;
  f.params_ = std::move(values);
  return f;
}

CoefficientField CoefficientField::scaled(double factor) const {
  CoefficientField f = *this;
  switch (kind_) {
    case ProfileKind::Constant:
      f.params_[0] *= factor;
      break;
    case ProfileKind::Cosine:
    case ProfileKind::SineProduct:
      f.params_[0] *= factor;
      f.params_[1] *= factor;
      break;
    case ProfileKind::InverseCosine:
      require(factor > 0.0, "inverse_cosine scaling must be positive");
      f.params_[0] /= factor;
      f.params_[1] /= factor;
      break;
    case ProfileKind::Samples:
      for (double& v : f.params_) v *= factor;
      break;
  }
  return f;
}

double CoefficientField::value(double x) const {
  switch (kind_) {
    case ProfileKind::Constant:
      return params_[0];
    case ProfileKind::Cosine:
      return params_[0] + params_[1] * std::cos(kTwoPi * x / periods_[0]);
    case ProfileKind::InverseCosine:
      return 1.0 / (params_[0] + params_[1] * std::cos(kTwoPi * x / periods_[0]));
    case ProfileKind::SineProduct:
      throw std::invalid_argument("sine_product profile is 2D");
    case ProfileKind::Samples: {
      // Periodic linear interpolation between cell-centered samples.
      const auto n = static_cast<int>(params_.size());
      const double L = periods_[0];
      double s = x / L - std::floor(x / L);  // in [0,1)
      double pos = s * n - 0.5;
      double base = std::floor(pos);
      double w = pos - base;
      int j0 = static_cast<int>(base);
      int j1 = j0 + 1;
      j0 = ((j0 % n) + n) % n;
      j1 = ((j1 % n) + n) % n;
      return (1.0 - w) * params_[j0] + w * params_[j1];
    }
  }
  return 0.0;
}

double CoefficientField::value(double x, double y) const {
  if (dimension_ == 1) return value(x);
  switch (kind_) {
    case ProfileKind::Constant:
      return params_[0];
    case ProfileKind::Cosine:
      return params_[0] + params_[1] * std::cos(kTwoPi * x / periods_[0]) *
                              std::cos(kTwoPi * y / periods_[1]);
    case ProfileKind::SineProduct:
      return params_[0] + params_[1] * std::sin(kTwoPi * x / periods_[0]) *
                              std::sin(kTwoPi * y / periods_[1]);
    default:
      throw std::invalid_argument("profile kind not available in 2D");
  }
}

std::string profile_kind_name(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::Constant: return "constant";
    case ProfileKind::Cosine: return "cosine";
    case ProfileKind::InverseCosine: return "inverse_cosine";
    case ProfileKind::SineProduct: return "sine_product";
    case ProfileKind::Samples: return "samples";
  }
  return "?";
}

std::vector<double> sample_field(const CoefficientField& field, int n) {
  if (n < 4) throw std::invalid_argument("sample_field requires n >= 4");
  if (field.dimension() == 1) {
    const double L = field.periods()[0];
    std::vector<double> out(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) out[j] = field.value((j + 0.5) * L / n);
    return out;
  }
  const double L1 = field.periods()[0];
  const double L2 = field.periods()[1];
  std::vector<double> out(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    const double y = (j + 0.5) * L2 / n;
    for (int i = 0; i < n; ++i) {
      out[static_cast<size_t>(j) * n + i] = field.value((i + 0.5) * L1 / n, y);
    }
  }
  return out;
}

double cell_average(const CoefficientField& field, int n) {
  auto v = sample_field(field, n);
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

double harmonic_mean(const CoefficientField& field, int n) {
  auto v = sample_field(field, n);
  double sum = 0.0;
  for (double x : v) {
    if (x <= 0.0) throw std::domain_error("harmonic_mean: non-positive sample");
    sum += 1.0 / x;
  }
  return static_cast<double>(v.size()) / sum;
}

double max_over_cell(const CoefficientField& field, int n) {
  auto v = sample_field(field, n);
  return *std::max_element(v.begin(), v.end());
}

FieldBounds field_bounds(const CoefficientField& field, int n) {
  auto v = sample_field(field, n);
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return {*lo, *hi};
}

}  // namespace frontspeed
