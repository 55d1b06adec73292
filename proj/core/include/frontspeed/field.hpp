#pragma once

#include <string>
#include <vector>

namespace frontspeed {

enum class ProfileKind { Constant, Cosine, InverseCosine, SineProduct, Samples };

/// Periodic scalar coefficient on a 1D or 2D cell.
///
/// Built-in profiles are periodic by construction. Raw samples are
/// interpreted as cell-centered values over one period and wrap with
/// periodic linear interpolation.
class CoefficientField {
 public:
  CoefficientField() = default;

  static CoefficientField constant(double c, int dimension = 1,
                                   std::vector<double> periods = {1.0});
  /// c0 + c1*cos(2*pi*x/L1) in 1D, c0 + c1*cos(2*pi*x/L1)*cos(2*pi*y/L2) in 2D.
  static CoefficientField cosine(double c0, double c1, int dimension = 1,
                                 std::vector<double> periods = {1.0});
  /// 1/(c0 + c1*cos(2*pi*x/L1)); 1D only, requires |c1| < c0.
  static CoefficientField inverse_cosine(double c0, double c1, double period = 1.0);
  /// c0 + c1*sin(2*pi*x/L1)*sin(2*pi*y/L2); 2D only.
  static CoefficientField sine_product(double c0, double c1,
                                       std::vector<double> periods = {1.0, 1.0});
  /// Cell-centered raw samples over one period; 1D only.
  static CoefficientField samples(std::vector<double> values, double period = 1.0);

  /// Pointwise scaling; keeps the profile family closed under c*field.
  CoefficientField scaled(double factor) const;

  int dimension() const { return dimension_; }
  const std::vector<double>& periods() const { return periods_; }
  ProfileKind kind() const { return kind_; }
  const std::vector<double>& params() const { return params_; }
  bool is_constant() const { return kind_ == ProfileKind::Constant; }

  double value(double x) const;
  double value(double x, double y) const;

 private:
  ProfileKind kind_ = ProfileKind::Constant;
  int dimension_ = 1;
  std::vector<double> periods_{1.0};
  std::vector<double> params_{1.0};
};

std::string profile_kind_name(ProfileKind kind);

/// Cell-centered samples over one period: x_j = (j+1/2)*L/n.
/// In 2D returns n*n values, row-major with x fastest.
std::vector<double> sample_field(const CoefficientField& field, int n);

/// Midpoint-rule cell average; exact for constants and pure Fourier modes.
double cell_average(const CoefficientField& field, int n = 4096);

/// <field>_H = 1 / avg(1/field); requires a strictly positive field.
double harmonic_mean(const CoefficientField& field, int n = 4096);

/// Maximum over the sample grid. A lower estimate of the true sup; callers
/// pass n >= 512 when the value feeds a theoretical limit.
double max_over_cell(const CoefficientField& field, int n = 512);

struct FieldBounds {
  double lower;
  double upper;
};

FieldBounds field_bounds(const CoefficientField& field, int n = 512);

}  // namespace frontspeed
