#include "frontspeed/eigen.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "frontspeed/errors.hpp"

namespace frontspeed {

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Tridiag {
  std::vector<double> sub, dia, sup;
  double cl = 0.0;  // wrap entry L[0][n-1]
  double cu = 0.0;  // wrap entry L[n-1][0]
};

std::optional<Tridiag> extract_tridiag(const OperatorMatrix& m) {
  const int n = m.size();
  if (n < 4) return std::nullopt;
  Tridiag t;
  t.sub.assign(static_cast<size_t>(n), 0.0);
  t.dia.assign(static_cast<size_t>(n), 0.0);
  t.sup.assign(static_cast<size_t>(n), 0.0);
  const auto& rp = m.row_ptr();
  const auto& col = m.col();
  const auto& val = m.val();
  for (int i = 0; i < n; ++i) {
    for (int p = rp[i]; p < rp[i + 1]; ++p) {
      const int j = col[p];
      const double v = val[p];
      if (j == i) t.dia[i] = v;
      else if (j == i - 1) t.sub[i] = v;
      else if (j == i + 1) t.sup[i] = v;
      else if (i == 0 && j == n - 1) t.cl = v;
      else if (i == n - 1 && j == 0) t.cu = v;
      else if (v != 0.0) return std::nullopt;
    }
  }
  return t;
}

/// Factored solver for (s I - L) with cyclic-tridiagonal L, via Thomas
/// elimination plus a Sherman-Morrison rank-one correction for the wrap
/// entries.
class CyclicSolver {
 public:
  bool factor(const Tridiag& t, double s) {
    n_ = static_cast<int>(t.dia.size());
    sub_.resize(n_);
    piv_.resize(n_);
    cfrac_.resize(n_);
    std::vector<double> dia(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      sub_[i] = -t.sub[i];
      dia[i] = s - t.dia[i];
    }
    sup_.resize(n_);
    for (int i = 0; i < n_; ++i) sup_[i] = -t.sup[i];
    const double bl = -t.cl, bu = -t.cu;
    gamma_ = std::abs(dia[0]) > 1e-300 ? -dia[0] : 1.0;
    bl_over_gamma_ = bl / gamma_;
    // T' = (s I - L) with the corners removed and the two diagonal entries
    // adjusted so that T' + u v^T restores them.
    dia[0] -= gamma_;
    dia[n_ - 1] -= bl * bu / gamma_;

    double scale = 0.0;
    for (int i = 0; i < n_; ++i) scale = std::max(scale, std::abs(dia[i]));
    const double tiny = 1e-14 * std::max(scale, 1.0);
    double prev_c = 0.0;
    for (int i = 0; i < n_; ++i) {
      const double p = dia[i] - (i > 0 ? sub_[i] * prev_c : 0.0);
      if (std::abs(p) < tiny) return false;
      piv_[i] = p;
      prev_c = sup_[i] / p;
      cfrac_[i] = prev_c;
    }
    // z = T'^{-1} u with u = (gamma, 0, ..., 0, bu)
    std::vector<double> u(static_cast<size_t>(n_), 0.0);
    u[0] = gamma_;
    u[n_ - 1] = bu;
    z_.resize(n_);
    thomas(u, z_);
    denom_ = 1.0 + z_[0] + bl_over_gamma_ * z_[n_ - 1];
    return std::abs(denom_) > 1e-14;
  }

  void solve(const std::vector<double>& b, std::vector<double>& x) const {
    thomas(b, x);
    const double corr = (x[0] + bl_over_gamma_ * x[n_ - 1]) / denom_;
    for (int i = 0; i < n_; ++i) x[i] -= corr * z_[i];
  }

 private:
  void thomas(const std::vector<double>& b, std::vector<double>& x) const {
    x.resize(n_);
    x[0] = b[0] / piv_[0];
    for (int i = 1; i < n_; ++i) x[i] = (b[i] - sub_[i] * x[i - 1]) / piv_[i];
    for (int i = n_ - 2; i >= 0; --i) x[i] -= cfrac_[i] * x[i + 1];
  }

  int n_ = 0;
  std::vector<double> sub_, sup_, piv_, cfrac_, z_;
  double gamma_ = 1.0, bl_over_gamma_ = 0.0, denom_ = 1.0;
};

/// Shift-inverted iteration for cyclic-tridiagonal operators: the shift
/// chases the Rayleigh estimate from above, so each solve contracts the
/// non-principal modes by (s - k1)/(s - k2) << 1.
PrincipalPair principal_eig_shift_invert(const OperatorMatrix& matrix,
                                         const Tridiag& t,
                                         const EigenOptions& options) {
  const int n = matrix.size();
  const double scale = 1.0 + matrix.max_abs_diag();

  // Gershgorin upper bound on the principal eigenvalue (off-diagonals >= 0).
  double s = -1e300;
  for (int i = 0; i < n; ++i) {
    double row = t.dia[i] + t.sub[i] + t.sup[i];
    if (i == 0) row += t.cl;
    if (i == n - 1) row += t.cu;
    s = std::max(s, row);
  }
  s += 1e-3 * scale;

  std::vector<double> v;
  if (options.warm_start && static_cast<int>(options.warm_start->size()) == n) {
    v = *options.warm_start;
    bool positive = true;
    for (double x : v) positive = positive && x > 0.0;
    if (!positive) v.assign(static_cast<size_t>(n), 1.0);
  } else {
    v.assign(static_cast<size_t>(n), 1.0);
  }
  {
    const double nv = norm2(v);
    for (double& x : v) x /= nv;
  }

  CyclicSolver solver;
  if (!solver.factor(t, s)) {
    s += scale;
    if (!solver.factor(t, s))
      throw NumericError("principal_eig_shift_invert: factorization failed");
  }

  std::vector<double> y(static_cast<size_t>(n)), Lv(static_cast<size_t>(n));
  double k = 0.0, k_prev = 1e300, delta_prev = 0.0;
  int it = 0;
  const int max_it = 500;
  bool converged = false;
  for (; it < max_it; ++it) {
    solver.solve(v, y);
    double ny = norm2(y);
    if (!(ny > 0.0)) throw NumericError("principal_eig_shift_invert: collapse");
    double sum = 0.0;
    for (double x : y) sum += x;
    const double sign = sum < 0.0 ? -1.0 : 1.0;
    double ymax = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] = sign * y[i] / ny;
      ymax = std::max(ymax, y[i]);
    }
    bool sign_flip = false;
    for (double x : y) sign_flip = sign_flip || x < -1e-10 * ymax;
    if (sign_flip) {
      // shift drifted below the principal eigenvalue: back off and retry
      s += 0.5 * (1.0 + std::abs(s));
      if (!solver.factor(t, s))
        throw NumericError("principal_eig_shift_invert: factorization failed");
      continue;
    }
    // strongly localized eigenvectors underflow; clamp the dust positive
    for (int i = 0; i < n; ++i) y[i] = std::max(y[i], 1e-250 * ymax);
    v = y;

    // L*v in extended precision: the +-a/h^2 cancellation otherwise caps
    // the achievable Collatz-Wielandt gap at ~1e-16 * max|entry|.
    for (int i = 0; i < n; ++i) {
      long double acc = static_cast<long double>(t.dia[i]) * v[i];
      if (i > 0) acc += static_cast<long double>(t.sub[i]) * v[i - 1];
      if (i < n - 1) acc += static_cast<long double>(t.sup[i]) * v[i + 1];
      if (i == 0) acc += static_cast<long double>(t.cl) * v[n - 1];
      if (i == n - 1) acc += static_cast<long double>(t.cu) * v[0];
      Lv[i] = static_cast<double>(acc);
    }
    k = dot(v, Lv);
    // Collatz-Wielandt bounds cw_min <= k1 <= cw_max from the positive
    // iterate; components below the rounding floor of L*v carry no
    // information and are excluded.
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, x);
    const double floor = 1e-8 * vmax;
    double cw_min = 1e300, cw_max = -1e300;
    for (int i = 0; i < n; ++i) {
      if (v[i] < floor) continue;
      const double q = Lv[i] / v[i];
      cw_min = std::min(cw_min, q);
      cw_max = std::max(cw_max, q);
    }
    const double accept = options.tol * std::max(1.0, std::abs(k));
    if (cw_max - cw_min <= accept) {
      ++it;
      converged = true;
      break;
    }
    // The CW gap floors out at solver-noise level for huge |entries|; the
    // eigenvalue estimate itself contracts geometrically once the shift is
    // tight, so a ratio-aware delta test closes the remaining cases.
    const double delta = std::abs(k - k_prev);
    if (it >= 2) {
      const double rho =
          delta_prev > 0.0 ? std::min(delta / delta_prev, 0.9) : 0.0;
      if (delta <= 0.5 * accept && delta * rho / (1.0 - rho) <= 0.5 * accept) {
        ++it;
        converged = true;
        break;
      }
    }
    delta_prev = delta;
    k_prev = k;
    const double margin = std::max(0.02 * (cw_max - cw_min), 1e-12 * scale);
    const double s_new = cw_max + margin;
    if (s_new < s && solver.factor(t, s_new)) s = s_new;
    // else keep the previous factorization: still a valid contraction
  }
  if (!converged)
    throw NumericError("principal_eig_shift_invert: no convergence");

  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = Lv[i] - k * v[i];
    res += r * r;
  }
  PrincipalPair out;
  out.k = k;
  out.psi = std::move(v);
  out.iterations = it;
  out.residual = std::sqrt(res);
  return out;
}

}  // namespace

PrincipalPair principal_eig_power(const OperatorMatrix& matrix,
                                  const EigenOptions& options) {
  if (matrix.min_offdiag() < 0.0)
    throw NumericError("principal_eig_power: negative off-diagonal entry");

  if (auto t = extract_tridiag(matrix))
    return principal_eig_shift_invert(matrix, *t, options);

  const int n = matrix.size();
  const double sigma = 1.0 + matrix.max_abs_diag();

  std::vector<double> v;
  if (options.warm_start && static_cast<int>(options.warm_start->size()) == n) {
    v = *options.warm_start;
    bool positive = true;
    for (double x : v) positive = positive && x > 0.0;
    if (!positive) v.assign(static_cast<size_t>(n), 1.0);
  } else {
    v.assign(static_cast<size_t>(n), 1.0);
  }
  {
    const double nv = norm2(v);
    for (double& x : v) x /= nv;
  }

  std::vector<double> y(static_cast<size_t>(n));
  double k_prev2 = 0.0, k_prev = 0.0, k_cur = 0.0;
  double rho = 0.0;  // running contraction estimate
  int it = 0;
  for (; it < options.max_iter; ++it) {
    matrix.apply(v, y);
    k_cur = dot(v, y);  // Rayleigh estimate of k (v has unit norm)
    // shifted iterate: (sigma I + L) v
    for (int i = 0; i < n; ++i) y[i] += sigma * v[i];
    const double ny = norm2(y);
    if (!(ny > 0.0)) throw NumericError("principal_eig_power: iterate collapsed");
    for (int i = 0; i < n; ++i) v[i] = y[i] / ny;

    if (it >= 2) {
      const double d1 = k_prev - k_prev2;
      const double d2 = k_cur - k_prev;
      if (std::abs(d1) > 0.0) {
        const double r = std::min(std::abs(d2 / d1), 0.999999);
        rho = rho == 0.0 ? r : 0.5 * (rho + r);
      }
      const double gap_factor = rho > 0.0 && rho < 1.0 ? rho / (1.0 - rho) : 1.0;
      const double err_est = std::abs(d2) * std::max(1.0, gap_factor);
      if (err_est <= options.tol * std::max(1.0, std::abs(k_cur))) {
        ++it;
        break;
      }
    }
    k_prev2 = k_prev;
    k_prev = k_cur;
  }
  if (it >= options.max_iter)
    throw NumericError("principal_eig_power: no convergence within max_iter");

  // Aitken-extrapolated eigenvalue when the delta sequence is clean.
  double k = k_cur;
  const double d1 = k_prev - k_prev2, d2 = k_cur - k_prev;
  const double denom = d2 - d1;
  if (std::abs(denom) > 1e-3 * std::abs(d2)) {
    const double k_aitken = k_cur - d2 * d2 / denom;
    if (std::abs(k_aitken - k_cur) < std::max(1.0, std::abs(k_cur))) k = k_aitken;
  }

  matrix.apply(v, y);
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = y[i] - k * v[i];
    res += r * r;
  }
  PrincipalPair out;
  out.k = k;
  out.psi = std::move(v);
  out.iterations = it;
  out.residual = std::sqrt(res);
  return out;
}

double rayleigh_value(const OperatorMatrix& matrix, const std::vector<double>& v) {
  if (!matrix.symmetric())
    throw std::invalid_argument("rayleigh_value requires a symmetric operator");
  const double vv = dot(v, v);
  if (vv == 0.0) throw std::invalid_argument("rayleigh_value: zero vector");
  std::vector<double> y;
  matrix.apply(v, y);
  return dot(v, y) / vv;
}

double growth_rate_oracle(const OperatorMatrix& matrix, double horizon, double dt) {
  const double sigma = 1.0 + matrix.max_abs_diag();
  if (dt == 0.0) dt = 0.9 / sigma;
  if (dt > 1.0 / sigma)
    throw std::invalid_argument("growth_rate_oracle: dt violates positivity bound");

  const int n = matrix.size();
  const long steps = std::lround(std::ceil(horizon / dt));
  const long tail_start = steps - steps / 5;

  std::vector<double> v(static_cast<size_t>(n), 1.0 / std::sqrt(double(n)));
  std::vector<double> y(static_cast<size_t>(n));
  double k_sum = 0.0;
  long k_count = 0;
  for (long s = 0; s < steps; ++s) {
    matrix.apply(v, y);
    for (int i = 0; i < n; ++i) y[i] = v[i] + dt * y[i];
    const double factor = norm2(y);  // ||v|| == 1 entering the step
    for (int i = 0; i < n; ++i) v[i] = y[i] / factor;
    if (s >= tail_start) {
      k_sum += (factor - 1.0) / dt;
      ++k_count;
    }
  }
  return k_sum / static_cast<double>(k_count);
}

}  // namespace frontspeed
