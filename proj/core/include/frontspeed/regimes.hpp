#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "frontspeed/speed.hpp"

namespace frontspeed {

enum class MonotoneExpect { Increasing, Decreasing };

struct MonotoneVerdict {
  bool pass = true;
  std::vector<int> violations;  ///< indices i where rows i -> i+1 break the trend
};

struct SweepRow {
  double value = 0.0;         ///< parameter value
  double speed = 0.0;         ///< raw c*
  double quantity = 0.0;      ///< normalized quantity (c*, c*/sqrt(param), ...)
  double theory_limit = 0.0;
  double rel_error = 0.0;
  double bound_low = 0.0;     ///< non-asymptotic lower bound when one exists
  double bound_high = 0.0;    ///< per-row upper bound when one exists
  bool has_bound_low = false;
  bool has_bound_high = false;
  double lambda_star = 0.0;
};

struct SweepTable {
  std::string parameter;      ///< swept parameter name
  std::string quantity;       ///< name of the normalized quantity
  std::string limit_tag;      ///< which closed-form limit the column carries
  double theory_limit = 0.0;
  std::optional<double> limit_at_infinity;  ///< second limit (period sweeps)
  std::vector<SweepRow> rows;
  std::optional<double> richardson;  ///< Aitken extrapolation of the last 3 rows
  std::optional<MonotoneVerdict> monotonicity;
  std::string medium_hash;
  std::vector<int> grid_sizes;
  double tol = 0.0;

  void write_csv(std::ostream& os) const;
  nlohmann::json to_json() const;
};

struct SweepOptions {
  int n_override = 0;       ///< fixed grid size; 0 selects regime-adapted
  int base_n = 256;         ///< 1D floor when adapting
  int base_n2d = 64;        ///< per-axis 2D size
  double tol = 1e-6;
  int scan_points = 40;
  bool waive_hypotheses = false;
  int threads = 0;          ///< 0: FRONTSPEED_THREADS env, else hardware
};

/// c*(eps)/sqrt(eps) -> 2 sqrt(max zeta) sqrt(max eAe) as eps -> 0
/// (shear geometry, no advection, alpha or zeta constant).
SweepTable sweep_small_diffusion(const ShearMedium& medium, std::vector<double> eps,
                                 const SweepOptions& options = {});

/// c*(eps) -> max(-q1) as eps -> 0 (shear advection present).
SweepTable sweep_small_diffusion_shear(const ShearMedium& medium,
                                       std::vector<double> eps,
                                       const SweepOptions& options = {});

/// c*(M, M^gamma q)/sqrt(M) -> 2 sqrt(avg eAe) sqrt(avg zeta) as M -> inf
/// (requires discrete div(A e) = 0), with the non-asymptotic per-row lower
/// bound 2 sqrt(m0 m).
SweepTable sweep_large_diffusion(const CellMedium2D& medium, std::vector<double> M,
                                 double gamma, const SweepOptions& options = {});

/// c*(B)/sqrt(B) -> 2 sqrt(max zeta) sqrt(max eAe) as B -> inf
/// (shear geometry, no advection, alpha or zeta constant).
SweepTable sweep_reaction_large(const ShearMedium& medium, std::vector<double> B,
                                const SweepOptions& options = {});

/// c*(B, B^gamma q)/sqrt(B) -> 2 sqrt(avg eAe) sqrt(avg zeta) as B -> 0
/// (cell medium, div(A e) = 0, gamma >= 1/2).
SweepTable sweep_reaction_small(const CellMedium2D& medium, std::vector<double> B,
                                double gamma, const SweepOptions& options = {});

/// beta |-> c*(beta A, sqrt(beta) q)/sqrt(beta): decreasing on shear media
/// with alpha or zeta non-constant.
SweepTable sweep_beta(const ShearMedium& medium, std::vector<double> beta,
                      const SweepOptions& options = {});

/// B |-> c*(A, sqrt(B) q, B zeta)/sqrt(B): increasing on the same media.
SweepTable sweep_reaction_scaled(const ShearMedium& medium, std::vector<double> B,
                                 const SweepOptions& options = {});

/// c* of the problem with all coefficients stretched to period L, computed
/// through the rescaling identity c*_L = L * c*(A/L^2, q/L, f) on the unit
/// cell; never re-meshes the scaled cell.
double scaled_speed_by_period(const Problem& unit_problem, double L,
                              const SweepOptions& options = {});

/// L |-> c*(L); increasing where the hypotheses hold; limit column carries
/// the L -> 0 (homogenized) value, limit_at_infinity the L -> inf value.
SweepTable sweep_period(const Problem& unit_problem, std::vector<double> L,
                        const SweepOptions& options = {});

/// Shrinking-cell speed c*_eps, computed through c*_eps = c*(M, sqrt(M) q)/sqrt(M)
/// with M = 1/eps^2; limit 2 sqrt(avg eAe) sqrt(avg zeta), advection-independent.
SweepTable homogenized_speed(const CellMedium2D& medium, std::vector<double> eps,
                             const SweepOptions& options = {});

MonotoneVerdict check_monotone(const std::vector<double>& values, MonotoneExpect expect,
                               double slack_scale = 1e-9);
MonotoneVerdict check_monotone(const SweepTable& table, MonotoneExpect expect,
                               double slack_scale = 1e-9);

/// Grid size so a layer of width sqrt(eps) spans >= 8 cells; power of two,
/// clamped to [base_n, 4096].
int adapted_resolution(double eps_min, double period, int base_n);

}  // namespace frontspeed
