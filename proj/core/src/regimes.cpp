#include "frontspeed/regimes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "frontspeed/errors.hpp"

namespace frontspeed {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int worker_count(const SweepOptions& options, size_t rows) {
  int n = options.threads;
  if (n <= 0) {
    if (const char* env = std::getenv("FRONTSPEED_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  return std::min<int>(n, static_cast<int>(rows));
}

/// Evaluate one speed per parameter value, in parallel, deterministic order.
template <typename MakeProblem>
std::vector<SpeedResult> run_rows(const std::vector<double>& params,
                                  MakeProblem&& make_problem,
                                  const SweepOptions& options) {
  std::vector<SpeedResult> out(params.size());
  const int workers = worker_count(options, params.size());
  std::atomic<size_t> next{0};
  auto body = [&]() {
    for (size_t i = next.fetch_add(1); i < params.size(); i = next.fetch_add(1)) {
      SpeedOptions sopt;
      sopt.tol = options.tol;
      sopt.scan_points = options.scan_points;
      out[i] = minimal_speed(make_problem(params[i]), sopt);
    }
  };
  if (workers <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  return out;
}

void finalize(SweepTable& table) {
  for (auto& row : table.rows) {
    row.theory_limit = table.theory_limit;
    row.rel_error = table.theory_limit != 0.0
                        ? std::abs(row.quantity - table.theory_limit) /
                              std::abs(table.theory_limit)
                        : std::abs(row.quantity - table.theory_limit);
  }
  if (table.rows.size() >= 3) {
    const size_t n = table.rows.size();
    const double v1 = table.rows[n - 3].quantity;
    const double v2 = table.rows[n - 2].quantity;
    const double v3 = table.rows[n - 1].quantity;
    const double denom = (v3 - v2) - (v2 - v1);
    if (std::abs(denom) > 1e-300) {
      const double extrap = v3 - (v3 - v2) * (v3 - v2) / denom;
      if (std::isfinite(extrap)) table.richardson = extrap;
    }
  }
}

void require_hypothesis(bool ok, const SweepOptions& options, const std::string& what) {
  if (!ok && !options.waive_hypotheses) throw HypothesisError(what);
}

double shear_limit_max(const ShearMedium& medium) {
  return 2.0 * std::sqrt(max_over_cell(medium.zeta, 2048)) *
         std::sqrt(max_over_cell(medium.alpha, 2048));
}

double shear_limit_avg(const ShearMedium& medium) {
  return 2.0 * std::sqrt(cell_average(medium.alpha)) *
         std::sqrt(cell_average(medium.zeta));
}

double cell_limit_avg(const CellMedium2D& medium) {
  const auto& eAe = medium.direction[0] != 0.0 ? medium.a11 : medium.a22;
  return 2.0 * std::sqrt(cell_average(eAe, 1024)) *
         std::sqrt(cell_average(medium.zeta, 1024));
}

void check_cell_hypotheses(const CellMedium2D& medium, const SweepOptions& options) {
  MediumDiagnostics diag = validate(medium);
  const HypothesisCheck* c = diag.find("div_Ae_free");
  require_hypothesis(c && c->pass, options, "discrete div(A e) does not vanish");
  require_hypothesis(diag.find("ellipticity")->pass, options, "ellipticity violated");
}

}  // namespace

int adapted_resolution(double eps_min, double period, int base_n) {
  const double layer = std::sqrt(std::max(eps_min, 1e-300));
  double need = 8.0 * period / layer;
  int n = base_n;
  while (n < need && n < 4096) n *= 2;
  return n;
}

MonotoneVerdict check_monotone(const std::vector<double>& values, MonotoneExpect expect,
                               double slack_scale) {
  MonotoneVerdict verdict;
  if (values.size() < 2) return verdict;
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  const double slack = slack_scale * scale;
  for (size_t i = 0; i + 1 < values.size(); ++i) {
    const double step = values[i + 1] - values[i];
    const bool ok = expect == MonotoneExpect::Increasing ? step >= -slack : step <= slack;
    if (!ok) {
      verdict.pass = false;
      verdict.violations.push_back(static_cast<int>(i));
    }
  }
  return verdict;
}

MonotoneVerdict check_monotone(const SweepTable& table, MonotoneExpect expect,
                               double slack_scale) {
  std::vector<double> values;
  values.reserve(table.rows.size());
  for (const auto& row : table.rows) values.push_back(row.quantity);
  return check_monotone(values, expect, slack_scale);
}

void SweepTable::write_csv(std::ostream& os) const {
  os << "parameter,value,quantity,theory_limit,rel_error\n";
  for (const auto& row : rows) {
    os << parameter << ',' << fmt17(row.value) << ',' << fmt17(row.quantity) << ','
       << fmt17(row.theory_limit) << ',' << fmt17(row.rel_error) << '\n';
  }
}

nlohmann::json SweepTable::to_json() const {
  nlohmann::json j;
  j["parameter"] = parameter;
  j["quantity"] = quantity;
  j["limit_tag"] = limit_tag;
  j["theory_limit"] = theory_limit;
  if (limit_at_infinity) j["limit_at_infinity"] = *limit_at_infinity;
  j["medium_hash"] = medium_hash;
  j["grid_sizes"] = grid_sizes;
  j["tol"] = tol;
  if (richardson) j["richardson_estimate"] = *richardson;
  if (monotonicity) {
    j["monotone"] = monotonicity->pass;
    j["monotone_violations"] = monotonicity->violations;
  }
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    r["value"] = row.value;
    r["speed"] = row.speed;
    r["quantity"] = row.quantity;
    r["theory_limit"] = row.theory_limit;
    r["rel_error"] = row.rel_error;
    r["lambda_star"] = row.lambda_star;
    if (row.has_bound_low) r["bound_low"] = row.bound_low;
    if (row.has_bound_high) r["bound_high"] = row.bound_high;
    j["rows"].push_back(std::move(r));
  }
  return j;
}

SweepTable sweep_small_diffusion(const ShearMedium& medium, std::vector<double> eps,
                                 const SweepOptions& options) {
  require_hypothesis(!medium.q1, options, "small-diffusion sweep requires no advection");
  require_hypothesis(shear_alternative_holds(medium), options,
                     "small-diffusion limit needs alpha or zeta constant");
  require_hypothesis(validate(medium).all_pass(), options, "medium validation failed");
  std::sort(eps.begin(), eps.end(), std::greater<>());

  SweepTable table;
  table.parameter = "eps";
  table.quantity = "c_over_sqrt_eps";
  table.limit_tag = "2*sqrt(max zeta)*sqrt(max eAe)";
  table.theory_limit = shear_limit_max(medium);
  table.medium_hash = medium_id(medium);
  table.tol = options.tol;
  const int n = options.n_override > 0
                    ? options.n_override
                    : adapted_resolution(eps.back(), medium.period_y, options.base_n);
  table.grid_sizes = {n};

  auto results = run_rows(
      eps,
      [&](double e) {
        ShearProblem p;
        p.medium = medium;
        p.diffusion = e;
        p.n = n;
        return Problem{p};
      },
      options);
  for (size_t i = 0; i < eps.size(); ++i) {
    SweepRow row;
    row.value = eps[i];
    row.speed = results[i].c_star;
    row.quantity = results[i].c_star / std::sqrt(eps[i]);
    row.lambda_star = results[i].lambda_star;
    row.bound_high = table.theory_limit;
    row.has_bound_high = true;
    table.rows.push_back(row);
  }
  finalize(table);
  return table;
}

SweepTable sweep_small_diffusion_shear(const ShearMedium& medium,
                                       std::vector<double> eps,
                                       const SweepOptions& options) {
  require_hypothesis(medium.q1.has_value(), options, "shear sweep requires q1");
  MediumDiagnostics diag = validate(medium);
  const HypothesisCheck* zero_avg = diag.find("q1_zero_average");
  require_hypothesis(zero_avg && zero_avg->pass, options, "q1 must have zero average");
  double q_amp = 0.0, neg_max = 0.0;
  if (medium.q1) {
    for (double v : sample_field(*medium.q1, 2048)) {
      q_amp = std::max(q_amp, std::abs(v));
      neg_max = std::max(neg_max, -v);
    }
  }
  require_hypothesis(q_amp > 0.0, options, "q1 must not vanish identically");
  std::sort(eps.begin(), eps.end(), std::greater<>());

  SweepTable table;
  table.parameter = "eps";
  table.quantity = "c_star";
  table.limit_tag = "max(-q1)";
  table.theory_limit = neg_max;
  table.medium_hash = medium_id(medium);
  table.tol = options.tol;
  const int n = options.n_override > 0
                    ? options.n_override
                    : adapted_resolution(eps.back(), medium.period_y, options.base_n);
  table.grid_sizes = {n};

  const double bound_coeff = 2.0 * std::sqrt(max_over_cell(medium.alpha, 2048)) *
                             std::sqrt(max_over_cell(medium.zeta, 2048));
  auto results = run_rows(
      eps,
      [&](double e) {
        ShearProblem p;
        p.medium = medium;
        p.diffusion = e;
        p.n = n;
        return Problem{p};
      },
      options);
  for (size_t i = 0; i < eps.size(); ++i) {
    SweepRow row;
    row.value = eps[i];
    row.speed = results[i].c_star;
    row.quantity = results[i].c_star;
    row.lambda_star = results[i].lambda_star;
    row.bound_high = neg_max + bound_coeff * std::sqrt(eps[i]);
    row.has_bound_high = true;
    table.rows.push_back(row);
  }
  finalize(table);
  return table;
}

SweepTable sweep_large_diffusion(const CellMedium2D& medium, std::vector<double> M,
                                 double gamma, const SweepOptions& options) {
  if (gamma < 0.0 || gamma > 0.5)
    throw std::invalid_argument("large-diffusion sweep needs gamma in [0, 1/2]");
  check_cell_hypotheses(medium, options);
  std::sort(M.begin(), M.end());

  SweepTable table;
  table.parameter = "M";
  table.quantity = "c_over_sqrt_M";
  table.limit_tag = "2*sqrt(avg eAe)*sqrt(avg zeta)";
  table.theory_limit = cell_limit_avg(medium);
  table.medium_hash = medium_id(medium);
  table.tol = options.tol;
  const int n = options.n_override > 0 ? options.n_override : options.base_n2d;
  table.grid_sizes = {n, n};

  auto results = run_rows(
      M,
      [&](double m) {
        CellProblem p;
        p.medium = medium;
        p.diffusion = m;
        p.advection = std::pow(m, gamma);
        p.n1 = p.n2 = n;
        return Problem{p};
      },
      options);
  for (size_t i = 0; i < M.size(); ++i) {
    SweepRow row;
    row.value = M[i];
    row.speed = results[i].c_star;
    row.quantity = results[i].c_star / std::sqrt(M[i]);
    row.lambda_star = results[i].lambda_star;
    row.bound_low = table.theory_limit;
    row.has_bound_low = true;
    table.rows.push_back(row);
  }
  finalize(table);
  return table;
}

SweepTable sweep_reaction_large(const ShearMedium& medium, std::vector<double> B,
                                const SweepOptions& options) {
  require_hypothesis(!medium.q1, options, "large-reaction sweep requires no advection");
  require_hypothesis(shear_alternative_holds(medium), options,
                     "large-reaction limit needs alpha or zeta constant");
  std::sort(B.begin(), B.end());

  SweepTable table;
  table.parameter = "B";
  table.quantity = "c_over_sqrt_B";
  table.limit_tag = "2*sqrt(max zeta)*sqrt(max eAe)";
  table.theory_limit = shear_limit_max(medium);
  table.medium_hash = medium_id(medium);
  table.tol = options.tol;
  // large B localizes the eigenfunction like small diffusion at scale 1/B
  const int n = options.n_override > 0
                    ? options.n_override
                    : adapted_resolution(1.0 / B.back(), medium.period_y, options.base_n);
  table.grid_sizes = {n};

  auto results = run_rows(
      B,
      [&](double b) {
        ShearProblem p;
        p.medium = medium;
        p.reaction = b;
        p.n = n;
        return Problem{p};
      },
      options);
  for (size_t i = 0; i < B.size(); ++i) {
    SweepRow row;
    row.value = B[i];
    row.speed = results[i].c_star;
    row.quantity = results[i].c_star / std::sqrt(B[i]);
    row.lambda_star = results[i].lambda_star;
    row.bound_high = table.theory_limit;
    row.has_bound_high = true;
    table.rows.push_back(row);
  }
  finalize(table);
  return table;
}

SweepTable sweep_reaction_small(const CellMedium2D& medium, std::vector<double> B,
                                double gamma, const SweepOptions& options) {
  if (gamma < 0.5)
    throw std::invalid_argument("small-reaction sweep needs gamma >= 1/2");
  check_cell_hypotheses(medium, options);
  std::sort(B.begin(), B.end(), std::greater<>());

  SweepTable table;
  table.parameter = "B";
  table.quantity = "c_over_sqrt_B";
  table.limit_tag = "2*sqrt(avg eAe)*sqrt(avg zeta)";
  table.theory_limit = cell_limit_avg(medium);
  table.medium_hash = medium_id(medium);
  table.tol = options.tol;
  const int n = options.n_override > 0 ? options.n_override : options.base_n2d;
  table.grid_sizes = {n, n};

  auto results = run_rows(
      B,
      [&](double b) {
        CellProblem p;
        p.medium = medium;
        p.reaction = b;
        p.advection = std::pow(b, gamma);
        p.n1 = p.n2 = n;
        return Problem{p};
      },
      options);
  for (size_t i = 0; i < B.size(); ++i) {
    SweepRow row;
    row.value = B[i];
    row.speed = results[i].c_star;
    row.quantity = results[i].c_star / std::sqrt(B[i]);
    row.lambda_star = results[i].lambda_star;
    table.rows.push_back(row);
  }
  finalize(table);
  return table;
}

SweepTable sweep_beta(const ShearMedium& medium, std::vector<double> beta,
                      const SweepOptions& options) {
  std::sort(beta.begin(), beta.end());

  SweepTable table;
  table.parameter = "beta";
  table.quantity = "c_over_sqrt_beta";
  table.limit_tag = "2*sqrt(avg eAe)*sqrt(avg zeta) (beta->inf)";
  table.theory_limit = shear_limit_avg(medium);
  table.medium_hash = medium_id(medium);
  table.tol = options.tol;
  const int n = options.n_override > 0
                    ? options.n_override
                    : adapted_resolution(beta.front(), medium.period_y, options.base_n);
  table.grid_sizes = {n};

  auto results = run_rows(
      beta,
      [&](double b) {
        ShearProblem p;
        p.medium = medium;
        p.diffusion = b;
        p.advection = std::sqrt(b);
        p.n = n;
        return Problem{p};
      },
      options);
  for (size_t i = 0; i < beta.size(); ++i) {
    SweepRow row;
    row.value = beta[i];
    row.speed = results[i].c_star;
    row.quantity = results[i].c_star / std::sqrt(beta[i]);
    row.lambda_star = results[i].lambda_star;
    table.rows.push_back(row);
  }
  finalize(table);
  table.monotonicity = check_monotone(table, MonotoneExpect::Decreasing);
  return table;
}

SweepTable sweep_reaction_scaled(const ShearMedium& medium, std::vector<double> B,
                                 const SweepOptions& options) {
  std::sort(B.begin(), B.end());

  SweepTable table;
  table.parameter = "B";
  table.quantity = "c_over_sqrt_B";
  table.limit_tag = "2*sqrt(avg eAe)*sqrt(avg zeta) (B->0)";
  table.theory_limit = shear_limit_avg(medium);
  table.medium_hash = medium_id(medium);
  table.tol = options.tol;
  const int n = options.n_override > 0
                    ? options.n_override
                    : adapted_resolution(1.0 / B.back(), medium.period_y, options.base_n);
  table.grid_sizes = {n};

  auto results = run_rows(
      B,
      [&](double b) {
        ShearProblem p;
        p.medium = medium;
        p.reaction = b;
        p.advection = std::sqrt(b);
        p.n = n;
        return Problem{p};
      },
      options);
  for (size_t i = 0; i < B.size(); ++i) {
    SweepRow row;
    row.value = B[i];
    row.speed = results[i].c_star;
    row.quantity = results[i].c_star / std::sqrt(B[i]);
    row.lambda_star = results[i].lambda_star;
    table.rows.push_back(row);
  }
  finalize(table);
  table.monotonicity = check_monotone(table, MonotoneExpect::Increasing);
  return table;
}

double scaled_speed_by_period(const Problem& unit_problem, double L,
                              const SweepOptions& options) {
  if (L <= 0.0) throw std::invalid_argument("period scale must be positive");
  Problem scaled = unit_problem;
  std::visit(
      [&](auto& p) {
        using T = std::decay_t<decltype(p)>;
        p.diffusion /= L * L;
        if constexpr (!std::is_same_v<T, LineProblem>) p.advection /= L;
        if constexpr (std::is_same_v<T, LineProblem>) {
          if (options.n_override > 0)
            p.n = options.n_override;
          else
            p.n = adapted_resolution(std::min(p.diffusion, 1.0), p.medium.period,
                                     options.base_n);
        } else if constexpr (std::is_same_v<T, ShearProblem>) {
          if (options.n_override > 0)
            p.n = options.n_override;
          else
            p.n = adapted_resolution(std::min(p.diffusion, 1.0), p.medium.period_y,
                                     options.base_n);
        } else {
          if (options.n_override > 0) p.n1 = p.n2 = options.n_override;
        }
      },
      scaled);
  SpeedOptions sopt;
  sopt.tol = options.tol;
  sopt.scan_points = options.scan_points;
  return L * minimal_speed(scaled, sopt).c_star;
}

SweepTable sweep_period(const Problem& unit_problem, std::vector<double> L,
                        const SweepOptions& options) {
  std::sort(L.begin(), L.end());

  SweepTable table;
  table.parameter = "L";
  table.quantity = "c_star";
  table.tol = options.tol;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LineProblem>) {
          table.limit_tag = "2*sqrt(harmonic_mean(a)*avg zeta) (L->0)";
          table.theory_limit = 2.0 * std::sqrt(harmonic_mean(p.medium.a) *
                                               cell_average(p.medium.zeta));
          table.limit_at_infinity = 2.0 * std::sqrt(max_over_cell(p.medium.a, 2048) *
                                                    max_over_cell(p.medium.zeta, 2048));
          table.medium_hash = medium_id(p.medium);
        } else if constexpr (std::is_same_v<T, ShearProblem>) {
          table.limit_tag = "2*sqrt(avg eAe)*sqrt(avg zeta) (L->0)";
          table.theory_limit = shear_limit_avg(p.medium);
          if (!p.medium.q1 && shear_alternative_holds(p.medium))
            table.limit_at_infinity = shear_limit_max(p.medium);
          table.medium_hash = medium_id(p.medium);
        } else {
          table.limit_tag = "2*sqrt(avg eAe)*sqrt(avg zeta) (L->0)";
          table.theory_limit = cell_limit_avg(p.medium);
          table.medium_hash = medium_id(p.medium);
        }
      },
      unit_problem);

  std::vector<double> speeds(L.size());
  const int workers = worker_count(options, L.size());
  std::atomic<size_t> next{0};
  auto body = [&]() {
    for (size_t i = next.fetch_add(1); i < L.size(); i = next.fetch_add(1))
      speeds[i] = scaled_speed_by_period(unit_problem, L[i], options);
  };
  if (workers <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  for (size_t i = 0; i < L.size(); ++i) {
    SweepRow row;
    row.value = L[i];
    row.speed = speeds[i];
    row.quantity = speeds[i];
    table.rows.push_back(row);
  }
  finalize(table);
  table.monotonicity = check_monotone(table, MonotoneExpect::Increasing);
  return table;
}

SweepTable homogenized_speed(const CellMedium2D& medium, std::vector<double> eps,
                             const SweepOptions& options) {
  check_cell_hypotheses(medium, options);
  std::sort(eps.begin(), eps.end(), std::greater<>());

  SweepTable table;
  table.parameter = "eps";
  table.quantity = "c_star_cell";
  table.limit_tag = "2*sqrt(avg eAe)*sqrt(avg zeta) (advection-independent)";
  table.theory_limit = cell_limit_avg(medium);
  table.medium_hash = medium_id(medium);
  table.tol = options.tol;
  const int n = options.n_override > 0 ? options.n_override : options.base_n2d;
  table.grid_sizes = {n, n};

  auto results = run_rows(
      eps,
      [&](double e) {
        CellProblem p;
        p.medium = medium;
        p.diffusion = 1.0 / (e * e);
        p.advection = 1.0 / e;  // sqrt(M) with M = 1/eps^2
        p.n1 = p.n2 = n;
        return Problem{p};
      },
      options);
  for (size_t i = 0; i < eps.size(); ++i) {
    SweepRow row;
    row.value = eps[i];
    row.speed = results[i].c_star;
    row.quantity = eps[i] * results[i].c_star;
    row.lambda_star = results[i].lambda_star;
    row.bound_low = table.theory_limit;
    row.has_bound_low = true;
    table.rows.push_back(row);
  }
  finalize(table);
  return table;
}

}  // namespace frontspeed
