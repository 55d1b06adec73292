#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "frontspeed/assembly.hpp"
#include "frontspeed/medium.hpp"

namespace frontspeed {

/// A complete eigenvalue problem instance: medium plus scale factors plus
/// grid resolution. Diffusion scale multiplies A, advection scale multiplies
/// q, reaction scale multiplies zeta.
struct LineProblem {
  LineMedium medium;
  double diffusion = 1.0;
  double reaction = 1.0;
  int n = 128;
};

struct ShearProblem {
  ShearMedium medium;
  double diffusion = 1.0;
  double advection = 1.0;
  double reaction = 1.0;
  int n = 128;
};

struct CellProblem {
  CellMedium2D medium;
  double diffusion = 1.0;
  double advection = 1.0;
  double reaction = 1.0;
  int n1 = 64;
  int n2 = 64;
};

using Problem = std::variant<LineProblem, ShearProblem, CellProblem>;

OperatorMatrix assemble(const Problem& problem, double lambda);

struct SpeedResult {
  double c_star = 0.0;
  double lambda_star = 0.0;
  double k_at_star = 0.0;
  std::vector<std::pair<double, double>> scan;  ///< (lambda, k(lambda)/lambda)
  int refinement_iterations = 0;
  double bracket_error = 0.0;  ///< final relative lambda-bracket width
  bool bracket_failure = false;
};

struct SpeedOptions {
  double lambda_min = 0.0;  ///< 0 selects 1e-3 * lambda_hat
  double lambda_max = 0.0;  ///< 0 selects 1e3 * lambda_hat
  double tol = 1e-6;        ///< relative lambda-width of the refinement
  int scan_points = 40;
  double eigen_tol = 0.0;   ///< 0 selects tol/10
  int max_eigen_iter = 500000;
};

/// Principal eigenvalue of the operator assembled at this lambda.
double k_of_lambda(const Problem& problem, double lambda, double eigen_tol = 1e-10);

/// c* = min over lambda > 0 of k(lambda)/lambda: log-spaced global scan
/// followed by golden-section refinement around the scan minimum.
SpeedResult minimal_speed(const Problem& problem, const SpeedOptions& options = {});

/// Closed form for constant coefficients: 2 sqrt(a zeta) - q1.
double analytic_speed_constant(double a, double zeta, double q1 = 0.0);

/// ||(q.e)^-||_inf + 2 sqrt(max zeta) sqrt(max eAe), scales included.
double upper_bound(const Problem& problem, int n_max = 512);

/// lambda_hat = sqrt(B avg(zeta) / (D avg(eAe))): the scan center; the exact
/// minimizer when the coefficients are replaced by their averages.
double default_lambda_center(const Problem& problem);

}  // namespace frontspeed
