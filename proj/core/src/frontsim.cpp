#include "frontspeed/frontsim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace frontspeed {

namespace {

struct Precomputed {
  std::vector<double> a_face;  ///< harmonic face diffusivity, a_face[i] between i and i+1
  std::vector<double> zeta;    ///< node reaction rate
  double max_a = 0.0;
  double max_zeta = 0.0;
};

Precomputed precompute(const SimState& state, const LineMedium& medium) {
  const size_t n = state.u.size();
  Precomputed pc;
  pc.a_face.resize(n - 1);
  pc.zeta.resize(n);
  std::vector<double> a_node(n);
  for (size_t i = 0; i < n; ++i) {
    const double x = state.x0 + static_cast<double>(i) * state.h;
    a_node[i] = medium.a.value(x);
    pc.zeta[i] = medium.zeta.value(x);
    pc.max_a = std::max(pc.max_a, a_node[i]);
    pc.max_zeta = std::max(pc.max_zeta, pc.zeta[i]);
  }
  for (size_t i = 0; i + 1 < n; ++i)
    pc.a_face[i] = 2.0 * a_node[i] * a_node[i + 1] / (a_node[i] + a_node[i + 1]);
  return pc;
}

void step_impl(SimState& state, const Precomputed& pc, double dt,
               std::vector<double>& scratch) {
  const size_t n = state.u.size();
  const double h2 = state.h * state.h;
  scratch.resize(n);
  scratch[0] = 1.0;      // far-left clamp: invaded state
  scratch[n - 1] = 0.0;  // far-right clamp: unstable state
  for (size_t i = 1; i + 1 < n; ++i) {
    const double ui = state.u[i];
    const double flux = (pc.a_face[i] * (state.u[i + 1] - ui) -
                         pc.a_face[i - 1] * (ui - state.u[i - 1])) /
                        h2;
    scratch[i] = ui + dt * (flux + pc.zeta[i] * ui * (1.0 - ui));
  }
  state.u.swap(scratch);
  state.t += dt;
}

double level_crossing(const SimState& state, double theta) {
  const size_t n = state.u.size();
  // rightmost downward crossing of theta (the leading edge)
  for (size_t i = n - 1; i > 0; --i) {
    if (state.u[i - 1] >= theta && state.u[i] < theta) {
      const double frac = (state.u[i - 1] - theta) / (state.u[i - 1] - state.u[i]);
      return state.x0 + (static_cast<double>(i - 1) + frac) * state.h;
    }
  }
  return state.x0;
}

/// Periodic-by-construction evaluation of u at an off-grid point (linear).
double sample_u(const SimState& state, double x) {
  const size_t n = state.u.size();
  double s = (x - state.x0) / state.h;
  s = std::clamp(s, 0.0, static_cast<double>(n - 1));
  const size_t i = std::min(static_cast<size_t>(s), n - 2);
  const double frac = s - static_cast<double>(i);
  return (1.0 - frac) * state.u[i] + frac * state.u[i + 1];
}

}  // namespace

SimState make_initial_state(const LineMedium& medium, const SimOptions& options) {
  if (options.window_periods < 4 || options.points_per_period < 4)
    throw std::invalid_argument("simulation window too small");
  SimState state;
  const int n = options.window_periods * options.points_per_period + 1;
  state.h = medium.period / options.points_per_period;
  state.x0 = 0.0;
  state.u.assign(static_cast<size_t>(n), 0.0);
  // Heaviside-type data occupying the left tenth of the window.
  const size_t edge = state.u.size() / 10;
  for (size_t i = 0; i <= edge; ++i) state.u[i] = 1.0;
  return state;
}

double stable_dt(const SimState& state, const LineMedium& medium) {
  const Precomputed pc = precompute(state, medium);
  return std::min(state.h * state.h / (2.0 * pc.max_a), 1.0 / pc.max_zeta);
}

void step(SimState& state, const LineMedium& medium, double dt) {
  const Precomputed pc = precompute(state, medium);
  const double bound = std::min(state.h * state.h / (2.0 * pc.max_a), 1.0 / pc.max_zeta);
  if (dt > bound)
    throw std::invalid_argument("step: dt violates the explicit stability bound");
  std::vector<double> scratch;
  step_impl(state, pc, dt, scratch);
}

FrontMeasurement measure_spreading_speed(const LineMedium& medium,
                                         const SimOptions& options) {
  SimState state = make_initial_state(medium, options);
  const Precomputed pc = precompute(state, medium);
  const double bound =
      std::min(state.h * state.h / (2.0 * pc.max_a), 1.0 / pc.max_zeta);
  const double dt = options.dt > 0.0 ? options.dt : 0.9 * bound;
  if (dt > bound)
    throw std::invalid_argument("measure_spreading_speed: dt violates stability");

  const long steps = std::lround(std::ceil(options.total_time / dt));
  const int samples = std::max(options.samples, 8);
  const long sample_stride = std::max<long>(steps / samples, 1);
  // The exponential leading edge feels the u=0 clamp long before the level
  // set reaches it; stop a generous buffer away.
  const double x_end = state.x0 + static_cast<double>(state.u.size() - 1) * state.h;
  const double right_guard = x_end - 10.0 * medium.period;

  FrontMeasurement m;
  std::vector<double> scratch;
  // Front-region slices for the pulsating-periodicity check, recorded
  // densely over the final stretch of the run.
  struct Frame {
    double t;
    double x0;
    std::vector<double> u;
  };
  std::vector<Frame> frames;
  const long frame_stride = std::max<long>(steps / 1000, 1);
  const double slice_half = 6.0 * medium.period;
  for (long s = 0; s < steps; ++s) {
    step_impl(state, pc, dt, scratch);
    for (double v : state.u) {
      m.u_min = std::min(m.u_min, v);
      m.u_max = std::max(m.u_max, v);
    }
    if (s % sample_stride == 0 || s == steps - 1) {
      const double pos = level_crossing(state, options.theta);
      m.times.push_back(state.t);
      m.positions.push_back(pos);
      if (pos > right_guard) {
        // early exit is a diagnostic only when it pre-empts the burn-in
        m.window_exhausted =
            state.t < options.burn_in_fraction * options.total_time;
        break;
      }
    }
    if (s % frame_stride == 0 && state.t >= 0.6 * options.total_time) {
      const double front = level_crossing(state, options.theta);
      const size_t lo = static_cast<size_t>(std::max(
          0.0, std::floor((front - slice_half - state.x0) / state.h)));
      const size_t hi = std::min(
          state.u.size() - 1,
          static_cast<size_t>(std::ceil((front + slice_half - state.x0) / state.h)));
      Frame f;
      f.t = state.t;
      f.x0 = state.x0 + static_cast<double>(lo) * state.h;
      f.u.assign(state.u.begin() + static_cast<long>(lo),
                 state.u.begin() + static_cast<long>(hi) + 1);
      frames.push_back(std::move(f));
    }
  }

  // Least-squares slope over the final half of the record.
  const size_t total = m.times.size();
  if (total < 8)
    throw std::runtime_error("measure_spreading_speed: record too short");
  const double t_mid = 0.5 * m.times.back();
  size_t start = 0;
  while (start + 4 < total && m.times[start] < t_mid) ++start;
  double st = 0, sx = 0, stt = 0, stx = 0;
  const double cnt = static_cast<double>(total - start);
  for (size_t i = start; i < total; ++i) {
    st += m.times[i];
    sx += m.positions[i];
    stt += m.times[i] * m.times[i];
    stx += m.times[i] * m.positions[i];
  }
  const double denom = cnt * stt - st * st;
  if (denom <= 0.0 || cnt < 2)
    throw std::runtime_error("measure_spreading_speed: degenerate fit record");
  m.speed = (cnt * stx - st * sx) / denom;
  const double intercept = (sx - m.speed * st) / cnt;
  double res = 0.0;
  for (size_t i = start; i < total; ++i) {
    const double r = m.positions[i] - (intercept + m.speed * m.times[i]);
    res += r * r;
  }
  m.fit_residual = std::sqrt(res / cnt);

  // Pulsating periodicity: u(t, .) vs u(t + L/c, . - L) over the front region.
  if (m.speed > 0.0 && frames.size() >= 4) {
    const double shift_t = medium.period / m.speed;
    auto slice_value = [&](const Frame& f, double x) {
      const double last = static_cast<double>(f.u.size() - 1);
      double s = std::clamp((x - f.x0) / state.h, 0.0, last);
      const size_t i = std::min(static_cast<size_t>(s), f.u.size() - 2);
      const double frac = s - static_cast<double>(i);
      return (1.0 - frac) * f.u[i] + frac * f.u[i + 1];
    };
    double worst = 0.0;
    int checked = 0;
    const size_t stride = std::max<size_t>(frames.size() / 8, 1);
    for (size_t i = 0; i < frames.size() && checked < 8; i += stride) {
      const double target = frames[i].t + shift_t;
      if (target > frames.back().t) break;
      // bracket the shifted time and interpolate between the two frames
      size_t j = i;
      while (j + 2 < frames.size() && frames[j + 1].t <= target) ++j;
      const double span = frames[j + 1].t - frames[j].t;
      if (span <= 0.0) continue;
      const double w = std::clamp((target - frames[j].t) / span, 0.0, 1.0);
      SimState si{state.h, frames[i].x0, frames[i].t, frames[i].u};
      const double front_i = level_crossing(si, options.theta);
      double diff = 0.0, norm = 0.0;
      const double half_width = 5.0 * medium.period;
      const int probes = 200;
      for (int p = 0; p < probes; ++p) {
        const double x = front_i - half_width +
                         2.0 * half_width * static_cast<double>(p) / (probes - 1);
        const double vi = slice_value(frames[i], x);
        const double vj = (1.0 - w) * slice_value(frames[j], x + medium.period) +
                          w * slice_value(frames[j + 1], x + medium.period);
        diff += (vi - vj) * (vi - vj);
        norm += vi * vi;
      }
      if (norm > 0.0) {
        worst = std::max(worst, std::sqrt(diff / norm));
        ++checked;
      }
    }
    m.periodicity_residual = worst;
  }
  return m;
}

void dump_frames_csv(std::ostream& os, const LineMedium& medium,
                     const SimOptions& options, const std::vector<double>& times) {
  SimState state = make_initial_state(medium, options);
  const Precomputed pc = precompute(state, medium);
  const double bound =
      std::min(state.h * state.h / (2.0 * pc.max_a), 1.0 / pc.max_zeta);
  const double dt = options.dt > 0.0 ? options.dt : 0.9 * bound;
  std::vector<double> wanted = times;
  std::sort(wanted.begin(), wanted.end());

  os << "t,x,u\n";
  char buf[128];
  auto emit = [&]() {
    for (size_t i = 0; i < state.u.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", state.t,
                    state.x0 + static_cast<double>(i) * state.h, state.u[i]);
      os << buf;
    }
  };
  size_t next = 0;
  while (next < wanted.size() && wanted[next] <= state.t) {
    emit();
    ++next;
  }
  std::vector<double> scratch;
  const double t_end = wanted.empty() ? 0.0 : wanted.back();
  while (state.t < t_end) {
    step_impl(state, pc, dt, scratch);
    while (next < wanted.size() && state.t >= wanted[next]) {
      emit();
      ++next;
    }
  }
}

nlohmann::json FrontMeasurement::to_json() const {
  nlohmann::json j;
  j["speed"] = speed;
  j["fit_residual"] = fit_residual;
  j["periodicity_residual"] = periodicity_residual;
  j["u_min"] = u_min;
  j["u_max"] = u_max;
  j["window_exhausted"] = window_exhausted;
  j["times"] = times;
  j["positions"] = positions;
  return j;
}

}  // namespace frontspeed
