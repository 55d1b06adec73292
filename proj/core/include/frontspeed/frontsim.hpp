#pragma once

#include <iosfwd>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "frontspeed/medium.hpp"

namespace frontspeed {

/// 1D reaction-diffusion state on a window of whole periods: u = 1 far left,
/// u = 0 far right (a rightward front).
struct SimState {
  double h = 0.0;          ///< grid spacing
  double x0 = 0.0;         ///< left edge coordinate
  double t = 0.0;
  std::vector<double> u;   ///< node values in [0, 1]
};

struct SimOptions {
  int window_periods = 60;
  int points_per_period = 32;
  double total_time = 80.0;
  double burn_in_fraction = 0.5;
  double theta = 0.5;        ///< tracked level
  int samples = 200;         ///< level-set records over the run
  double dt = 0.0;           ///< 0 selects 0.9 * stability bound
};

struct FrontMeasurement {
  std::vector<double> times;
  std::vector<double> positions;  ///< x where u crosses theta
  double speed = 0.0;             ///< least-squares slope, final half of record
  double fit_residual = 0.0;      ///< RMS residual of the linear fit
  double periodicity_residual = 0.0;  ///< pulsating-front shift mismatch
  double u_min = 0.0, u_max = 1.0;    ///< extremes seen over all frames
  bool window_exhausted = false;      ///< front left the window early

  nlohmann::json to_json() const;
};

SimState make_initial_state(const LineMedium& medium, const SimOptions& options = {});

/// One explicit flux-form diffusion + logistic reaction step. Throws
/// std::invalid_argument when dt breaks the positivity (stability) bound
/// dt <= min(h^2 / (2 max a), 1 / max zeta).
void step(SimState& state, const LineMedium& medium, double dt);

/// Largest dt the maximum principle allows for this state/medium.
double stable_dt(const SimState& state, const LineMedium& medium);

FrontMeasurement measure_spreading_speed(const LineMedium& medium,
                                         const SimOptions& options = {});

/// CSV frames "t,x,u" at the requested times (nearest recorded step).
void dump_frames_csv(std::ostream& os, const LineMedium& medium,
                     const SimOptions& options, const std::vector<double>& times);

}  // namespace frontspeed
