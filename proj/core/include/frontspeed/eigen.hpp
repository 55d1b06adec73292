#pragma once

#include <vector>

#include "frontspeed/operator_matrix.hpp"

namespace frontspeed {

struct PrincipalPair {
  double k = 0.0;                ///< principal eigenvalue
  std::vector<double> psi;       ///< positive eigenfunction, ||psi||_2 = 1
  int iterations = 0;
  double residual = 0.0;         ///< ||L psi - k psi||_2
};

struct EigenOptions {
  double tol = 1e-10;            ///< relative eigenvalue tolerance
  int max_iter = 500000;
  const std::vector<double>* warm_start = nullptr;
};

/// Power iteration on sigma*I + L with sigma = 1 + max|diag|, so the shifted
/// matrix is entrywise non-negative and irreducible. Aitken extrapolation is
/// applied to the eigenvalue sequence when the spectral gap is small.
PrincipalPair principal_eig_power(const OperatorMatrix& matrix,
                                  const EigenOptions& options = {});

/// (v^T L v)/(v^T v); requires the symmetry flag. The principal eigenvalue
/// maximizes this quotient.
double rayleigh_value(const OperatorMatrix& matrix, const std::vector<double>& v);

/// Independent verification oracle: evolve v <- (I + dt L) v from a positive
/// start, renormalizing; the growth factor of the dominant mode per step is
/// exactly 1 + dt*k. Returns k averaged over the last 20% of the horizon.
/// dt = 0 selects the largest stable step 0.9/sigma.
double growth_rate_oracle(const OperatorMatrix& matrix, double horizon = 200.0,
                          double dt = 0.0);

}  // namespace frontspeed
