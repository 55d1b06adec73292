#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frontspeed/field.hpp"

namespace frontspeed {

/// Reaction term f(x,s) = zeta(x) * g(s) with g(0) = g(1) = 0 and the
/// sub-tangency bound g(s) <= g'(0) s on (0,1). Default shape is logistic.
struct ReactionProfile {
  CoefficientField zeta = CoefficientField::constant(1.0);
  std::function<double(double)> shape = [](double s) { return s * (1.0 - s); };
  double shape_slope0 = 1.0;
  std::string shape_name = "logistic";
};

/// 1D medium: diffusion a(x) and reaction slope zeta(x), both periodic in
/// the propagation direction. No advection.
struct LineMedium {
  double period = 1.0;
  CoefficientField a = CoefficientField::constant(1.0);
  CoefficientField zeta = CoefficientField::constant(1.0);
};

/// Invariant-cylinder medium: coefficients depend on the cross-section
/// coordinate y only, with A e = alpha(y) e along the propagation axis and
/// an optional zero-average shear profile q1(y).
struct ShearMedium {
  double period_y = 1.0;
  CoefficientField alpha = CoefficientField::constant(1.0);  // eAe profile
  CoefficientField d = CoefficientField::constant(1.0);      // yy diffusion entry
  CoefficientField zeta = CoefficientField::constant(1.0);
  std::optional<CoefficientField> q1;
};

/// Full 2D torus cell: symmetric diffusion tensor, reaction slope, optional
/// stream-function advection q = (dH/dy, -dH/dx), and a unit direction e
/// (axis directions only).
struct CellMedium2D {
  double period_x = 1.0;
  double period_y = 1.0;
  CoefficientField a11 = CoefficientField::constant(1.0, 2, {1.0, 1.0});
  CoefficientField a12 = CoefficientField::constant(0.0, 2, {1.0, 1.0});
  CoefficientField a22 = CoefficientField::constant(1.0, 2, {1.0, 1.0});
  std::optional<CoefficientField> stream_function;
  CoefficientField zeta = CoefficientField::constant(1.0, 2, {1.0, 1.0});
  std::array<double, 2> direction{1.0, 0.0};
  /// When set, validation requires the discrete divergence of A*e to vanish.
  bool require_div_Ae_free = false;
};

struct HypothesisCheck {
  std::string name;
  bool pass = true;
  double residual = 0.0;
  std::string detail;
};

struct MediumDiagnostics {
  std::vector<HypothesisCheck> checks;
  bool all_pass() const;
  const HypothesisCheck* find(const std::string& name) const;
};

/// Structural hypothesis diagnostics; never throws, never mutates.
MediumDiagnostics validate(const LineMedium& medium, int n = 512);
MediumDiagnostics validate(const ShearMedium& medium, int n = 512);
MediumDiagnostics validate(const CellMedium2D& medium, int n = 64);
MediumDiagnostics validate(const ReactionProfile& reaction, int n_shape = 1000);

/// (alt 1): alpha constant; (alt 2): zeta constant. The small-diffusion and
/// large-reaction limits require one of the two.
bool shear_alternative_holds(const ShearMedium& medium, int n = 512);

/// Advection samples derived from the stream function on an n1 x n2
/// cell-centered grid by centered differences (exactly divergence-free in
/// the discrete sense). Returns {q1, q2}, row-major with x fastest; zero
/// vectors when no stream function is present.
std::array<std::vector<double>, 2> cell_advection_from_stream(const CellMedium2D& medium,
                                                              int n1, int n2);

/// Discrete divergence of A*e from face fluxes; identically zero when the
/// tensor is constant along the relevant axes.
std::vector<double> discrete_div_Ae(const CellMedium2D& medium, int n1, int n2);

/// Stable identifier of the medium content, for result metadata.
std::string medium_id(const LineMedium& medium);
std::string medium_id(const ShearMedium& medium);
std::string medium_id(const CellMedium2D& medium);

}  // namespace frontspeed
