#include "frontspeed/speed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frontspeed/eigen.hpp"
#include "frontspeed/errors.hpp"

namespace frontspeed {

OperatorMatrix assemble(const Problem& problem, double lambda) {
  return std::visit(
      [&](const auto& p) -> OperatorMatrix {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LineProblem>) {
          return assemble_line_operator(p.medium, lambda, p.diffusion, p.n, p.reaction);
        } else if constexpr (std::is_same_v<T, ShearProblem>) {
          return assemble_cross_section_operator(p.medium, lambda, p.diffusion,
                                                 p.reaction, p.n, p.advection);
        } else {
          return assemble_cell_operator(p.medium, lambda, p.diffusion, p.advection,
                                        p.reaction, p.n1, p.n2);
        }
      },
      problem);
}

namespace {

/// k(lambda) evaluator with eigenvector warm start across nearby lambdas.
class KEvaluator {
 public:
  KEvaluator(const Problem& problem, double eigen_tol, int max_iter)
      : problem_(problem), tol_(eigen_tol), max_iter_(max_iter) {}

  double operator()(double lambda) {
    EigenOptions opt;
    opt.tol = tol_;
    opt.max_iter = max_iter_;
    if (!psi_.empty()) opt.warm_start = &psi_;
    PrincipalPair pair = principal_eig_power(assemble(problem_, lambda), opt);
    psi_ = std::move(pair.psi);
    return pair.k;
  }

 private:
  const Problem& problem_;
  double tol_;
  int max_iter_;
  std::vector<double> psi_;
};

struct AveragedCoefficients {
  double eAe = 1.0;   // diffusion-scaled
  double zeta = 1.0;  // reaction-scaled
};

AveragedCoefficients averaged(const Problem& problem) {
  return std::visit(
      [&](const auto& p) -> AveragedCoefficients {
        using T = std::decay_t<decltype(p)>;
        AveragedCoefficients c;
        if constexpr (std::is_same_v<T, LineProblem>) {
          c.eAe = p.diffusion * cell_average(p.medium.a);
          c.zeta = p.reaction * cell_average(p.medium.zeta);
        } else if constexpr (std::is_same_v<T, ShearProblem>) {
          c.eAe = p.diffusion * cell_average(p.medium.alpha);
          c.zeta = p.reaction * cell_average(p.medium.zeta);
        } else {
          const auto& f = p.medium.direction[0] != 0.0 ? p.medium.a11 : p.medium.a22;
          c.eAe = p.diffusion * cell_average(f, 1024);
          c.zeta = p.reaction * cell_average(p.medium.zeta, 1024);
        }
        return c;
      },
      problem);
}

}  // namespace

double default_lambda_center(const Problem& problem) {
  const AveragedCoefficients c = averaged(problem);
  return std::sqrt(c.zeta / c.eAe);
}

double k_of_lambda(const Problem& problem, double lambda, double eigen_tol) {
  if (lambda <= 0.0) throw std::invalid_argument("lambda must be positive");
  EigenOptions opt;
  opt.tol = eigen_tol;
  return principal_eig_power(assemble(problem, lambda), opt).k;
}

namespace {

/// Largest lambda the grid can represent faithfully: the conjugated drift is
/// only resolved while lambda * h stays below ~1/2.
double resolution_lambda_cap(const Problem& problem) {
  return std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LineProblem>) {
          return 0.5 * p.n / p.medium.period;
        } else if constexpr (std::is_same_v<T, ShearProblem>) {
          return 0.5 * p.n / p.medium.period_y;
        } else {
          return 0.5 * std::min(p.n1 / p.medium.period_x, p.n2 / p.medium.period_y);
        }
      },
      problem);
}

}  // namespace

SpeedResult minimal_speed(const Problem& problem, const SpeedOptions& options) {
  const double lambda_hat = default_lambda_center(problem);
  const double lo = options.lambda_min > 0.0 ? options.lambda_min : 1e-3 * lambda_hat;
  double hi = options.lambda_max > 0.0 ? options.lambda_max : 1e3 * lambda_hat;
  if (options.lambda_max <= 0.0) {
    const double cap = std::max(resolution_lambda_cap(problem), 10.0 * lo);
    hi = std::min(hi, cap);
  }
  if (!(0.0 < lo && lo < hi))
    throw std::invalid_argument("minimal_speed: need 0 < lambda_min < lambda_max");
  const double eigen_tol = options.eigen_tol > 0.0 ? options.eigen_tol : options.tol / 10.0;

  KEvaluator k_eval(problem, eigen_tol, options.max_eigen_iter);
  auto phi = [&](double lambda) { return k_eval(lambda) / lambda; };

  SpeedResult result;
  const int m = std::max(options.scan_points, 3);
  result.scan.reserve(static_cast<size_t>(m));
  int best = 0;
  for (int i = 0; i < m; ++i) {
    const double t = static_cast<double>(i) / (m - 1);
    const double lambda = lo * std::pow(hi / lo, t);
    const double value = phi(lambda);
    result.scan.emplace_back(lambda, value);
    if (value < result.scan[best].second) best = i;
  }
  result.bracket_failure = best == 0 || best == m - 1;

  // Golden-section refinement inside the scan bracket around the minimum.
  double a = result.scan[std::max(best - 1, 0)].first;
  double b = result.scan[std::min(best + 1, m - 1)].first;
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - (b - a) * kInvPhi;
  double x2 = a + (b - a) * kInvPhi;
  double f1 = phi(x1);
  double f2 = phi(x2);
  int iterations = 0;
  const double mid0 = 0.5 * (a + b);
  while ((b - a) > options.tol * std::max(mid0, 0.5 * (a + b)) && iterations < 200) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - (b - a) * kInvPhi;
      f1 = phi(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + (b - a) * kInvPhi;
      f2 = phi(x2);
    }
    ++iterations;
  }
  result.refinement_iterations = iterations;
  result.lambda_star = f1 < f2 ? x1 : x2;
  result.bracket_error = (b - a) / result.lambda_star;
  result.k_at_star = k_eval(result.lambda_star);
  result.c_star = result.k_at_star / result.lambda_star;

  // The scan minimum wins if refinement stalled above it.
  if (result.scan[best].second < result.c_star) {
    result.lambda_star = result.scan[best].first;
    result.c_star = result.scan[best].second;
    result.k_at_star = result.c_star * result.lambda_star;
  }
  return result;
}

double analytic_speed_constant(double a, double zeta, double q1) {
  if (a <= 0.0 || zeta <= 0.0)
    throw std::invalid_argument("analytic_speed_constant: a and zeta must be positive");
  return 2.0 * std::sqrt(a * zeta) - q1;
}

double upper_bound(const Problem& problem, int n_max) {
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LineProblem>) {
          return 2.0 * std::sqrt(p.reaction * max_over_cell(p.medium.zeta, n_max)) *
                 std::sqrt(p.diffusion * max_over_cell(p.medium.a, n_max));
        } else if constexpr (std::is_same_v<T, ShearProblem>) {
          double q_minus = 0.0;
          if (p.medium.q1) {
            auto s = sample_field(*p.medium.q1, n_max);
            for (double v : s) q_minus = std::max(q_minus, -p.advection * v);
          }
          return q_minus +
                 2.0 * std::sqrt(p.reaction * max_over_cell(p.medium.zeta, n_max)) *
                     std::sqrt(p.diffusion * max_over_cell(p.medium.alpha, n_max));
        } else {
          double q_minus = 0.0;
          if (p.medium.stream_function) {
            auto q = cell_advection_from_stream(p.medium, n_max, n_max);
            const auto& qe = p.medium.direction[0] != 0.0 ? q[0] : q[1];
            for (double v : qe) q_minus = std::max(q_minus, -p.advection * v);
          }
          const auto& eAe = p.medium.direction[0] != 0.0 ? p.medium.a11 : p.medium.a22;
          return q_minus +
                 2.0 * std::sqrt(p.reaction * max_over_cell(p.medium.zeta, n_max)) *
                     std::sqrt(p.diffusion * max_over_cell(eAe, n_max));
        }
      },
      problem);
}

}  // namespace frontspeed
