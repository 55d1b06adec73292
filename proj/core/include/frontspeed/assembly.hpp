#pragma once

#include <vector>

#include "frontspeed/medium.hpp"
#include "frontspeed/operator_matrix.hpp"

namespace frontspeed {

/// Periodic grid over one cell, cell-centered nodes.
struct Grid {
  int dimension = 1;
  int n1 = 128;
  int n2 = 0;
  double L1 = 1.0;
  double L2 = 0.0;

  double h1() const { return L1 / n1; }
  double h2() const { return L2 / n2; }
  int total() const { return dimension == 1 ? n1 : n1 * n2; }
};

/// 1D operator in the propagation direction (no advection):
/// eps*(a psi')' - 2*eps*lambda*a psi' + [eps*lambda^2 a - eps*lambda a' + B zeta] psi.
/// Flux-form diffusion with harmonic face averages, upwinded drift.
OperatorMatrix assemble_line_operator(const std::vector<double>& a,
                                      const std::vector<double>& zeta, double lambda,
                                      double eps, double period = 1.0,
                                      double reaction_scale = 1.0);

OperatorMatrix assemble_line_operator(const LineMedium& medium, double lambda,
                                      double eps, int n, double reaction_scale = 1.0);

/// Symmetric reduced operator on the cross-section torus:
/// eps*(d phi')' + [eps*lambda^2 alpha(y) - lambda*s*q1(y) + B zeta(y)] phi,
/// with advection scale s multiplying the shear profile.
OperatorMatrix assemble_cross_section_operator(const ShearMedium& medium, double lambda,
                                               double eps, double reaction_scale, int n,
                                               double advection_scale = 1.0);

/// Full 2D cell operator:
/// M div(A grad) - 2 M lambda (A e).grad + s q.grad
/// + [M lambda^2 eAe - lambda s q.e - M lambda div(A e) + B zeta].
/// Cross terms a12 by centered differences (guarded); drift upwinded.
OperatorMatrix assemble_cell_operator(const CellMedium2D& medium, double lambda,
                                      double diffusion_scale, double advection_scale,
                                      double reaction_scale, int n1, int n2);

/// Convenience form with advection scale M^gamma, 0 <= gamma <= 1/2.
OperatorMatrix assemble_cell_operator_gamma(const CellMedium2D& medium, double lambda,
                                            double diffusion_scale, double gamma,
                                            double reaction_scale, int n1, int n2);

}  // namespace frontspeed
