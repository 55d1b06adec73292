#include "frontspeed/assembly.hpp"

#include <cmath>
#include <stdexcept>

#include "frontspeed/errors.hpp"

namespace frontspeed {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

double harmonic_face(double a, double b) { return 2.0 * a * b / (a + b); }

void add_upwind_drift(MatrixBuilder& b, int row, int plus, int minus, double w,
                      double h) {
  // w * dpsi/dx with the one-sided difference that keeps the off-diagonal
  // coefficient non-negative.
  if (w > 0.0) {
    b.add(row, plus, w / h);
    b.add(row, row, -w / h);
  } else if (w < 0.0) {
    b.add(row, minus, -w / h);
    b.add(row, row, w / h);
  }
}

}  // namespace

OperatorMatrix assemble_line_operator(const std::vector<double>& a,
                                      const std::vector<double>& zeta, double lambda,
                                      double eps, double period, double reaction_scale) {
  const int n = static_cast<int>(a.size());
  if (zeta.size() != a.size()) throw std::invalid_argument("a/zeta length mismatch");
  if (n < 4) throw std::invalid_argument("need at least 4 samples");
  if (lambda <= 0.0) throw std::invalid_argument("lambda must be positive");
  if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
  for (double v : a)
    if (v <= 0.0) throw std::invalid_argument("diffusion samples must be positive");

  const double h = period / n;
  std::vector<double> af(static_cast<size_t>(n));  // face between j and j+1
  for (int j = 0; j < n; ++j) af[j] = harmonic_face(a[j], a[wrap(j + 1, n)]);

  MatrixBuilder b(n);
  for (int j = 0; j < n; ++j) {
    const int jp = wrap(j + 1, n), jm = wrap(j - 1, n);
    const double fp = af[j], fm = af[jm];
    // eps * (a psi')' in flux form
    b.add(j, jp, eps * fp / (h * h));
    b.add(j, jm, eps * fm / (h * h));
    b.add(j, j, -eps * (fp + fm) / (h * h));
    // -2 eps lambda a psi'
    add_upwind_drift(b, j, jp, jm, -2.0 * eps * lambda * a[j], h);
    // zeroth order, with a' from face differences
    const double aprime = (fp - fm) / h;
    b.add(j, j, eps * lambda * lambda * a[j] - eps * lambda * aprime +
                    reaction_scale * zeta[j]);
  }
  OperatorMeta meta;
  meta.lambda = lambda;
  meta.diffusion_scale = eps;
  meta.reaction_scale = reaction_scale;
  return std::move(b).build(/*symmetric=*/false, meta);
}

OperatorMatrix assemble_line_operator(const LineMedium& medium, double lambda,
                                      double eps, int n, double reaction_scale) {
  auto m = assemble_line_operator(sample_field(medium.a, n),
                                  sample_field(medium.zeta, n), lambda, eps,
                                  medium.period, reaction_scale);
  return m;
}

OperatorMatrix assemble_cross_section_operator(const ShearMedium& medium, double lambda,
                                               double eps, double reaction_scale, int n,
                                               double advection_scale) {
  if (lambda <= 0.0) throw std::invalid_argument("lambda must be positive");
  if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
  if (reaction_scale <= 0.0) throw std::invalid_argument("reaction scale must be positive");

  const double h = medium.period_y / n;
  auto alpha = sample_field(medium.alpha, n);
  auto d = sample_field(medium.d, n);
  auto zeta = sample_field(medium.zeta, n);
  std::vector<double> q1(static_cast<size_t>(n), 0.0);
  if (medium.q1) q1 = sample_field(*medium.q1, n);

  std::vector<double> df(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) df[j] = harmonic_face(d[j], d[wrap(j + 1, n)]);

  MatrixBuilder b(n);
  for (int j = 0; j < n; ++j) {
    const int jp = wrap(j + 1, n), jm = wrap(j - 1, n);
    b.add(j, jp, eps * df[j] / (h * h));
    b.add(j, jm, eps * df[jm] / (h * h));
    b.add(j, j, -eps * (df[j] + df[jm]) / (h * h));
    b.add(j, j, eps * lambda * lambda * alpha[j] - lambda * advection_scale * q1[j] +
                    reaction_scale * zeta[j]);
  }
  OperatorMeta meta;
  meta.lambda = lambda;
  meta.diffusion_scale = eps;
  meta.advection_scale = medium.q1 ? advection_scale : 0.0;
  meta.reaction_scale = reaction_scale;
  meta.medium_id = medium_id(medium);
  return std::move(b).build(/*symmetric=*/true, meta);
}

OperatorMatrix assemble_cell_operator(const CellMedium2D& medium, double lambda,
                                      double diffusion_scale, double advection_scale,
                                      double reaction_scale, int n1, int n2) {
  if (lambda <= 0.0) throw std::invalid_argument("lambda must be positive");
  if (diffusion_scale <= 0.0) throw std::invalid_argument("diffusion scale must be positive");
  if (reaction_scale <= 0.0) throw std::invalid_argument("reaction scale must be positive");
  const bool along_x = medium.direction[0] != 0.0;

  const double M = diffusion_scale;
  const double h1 = medium.period_x / n1;
  const double h2 = medium.period_y / n2;
  const size_t total = static_cast<size_t>(n1) * n2;

  std::vector<double> a11(total), a12(total), a22(total), zeta(total);
  for (int j = 0; j < n2; ++j)
    for (int i = 0; i < n1; ++i) {
      const size_t id = static_cast<size_t>(j) * n1 + i;
      const double x = (i + 0.5) * h1, y = (j + 0.5) * h2;
      a11[id] = medium.a11.value(x, y);
      a12[id] = medium.a12.value(x, y);
      a22[id] = medium.a22.value(x, y);
      zeta[id] = medium.zeta.value(x, y);
      if (a11[id] <= 0.0 || a11[id] * a22[id] - a12[id] * a12[id] <= 0.0)
        throw NumericError("ellipticity violated at a grid node");
    }
  auto q = cell_advection_from_stream(medium, n1, n2);
  auto div_Ae = discrete_div_Ae(medium, n1, n2);

  const bool has_cross = !medium.a12.is_constant() ||
                         medium.a12.value(0.5 * h1, 0.5 * h2) != 0.0;

  auto idx = [&](int i, int j) {
    return wrap(j, n2) * n1 + wrap(i, n1);
  };
  MatrixBuilder b(static_cast<int>(total));
  for (int j = 0; j < n2; ++j) {
    for (int i = 0; i < n1; ++i) {
      const int row = idx(i, j);
      // diagonal-tensor diffusion, flux form with harmonic faces
      const double fxp = harmonic_face(a11[row], a11[idx(i + 1, j)]);
      const double fxm = harmonic_face(a11[idx(i - 1, j)], a11[row]);
      const double fyp = harmonic_face(a22[row], a22[idx(i, j + 1)]);
      const double fym = harmonic_face(a22[idx(i, j - 1)], a22[row]);
      b.add(row, idx(i + 1, j), M * fxp / (h1 * h1));
      b.add(row, idx(i - 1, j), M * fxm / (h1 * h1));
      b.add(row, idx(i, j + 1), M * fyp / (h2 * h2));
      b.add(row, idx(i, j - 1), M * fym / (h2 * h2));
      b.add(row, row, -M * ((fxp + fxm) / (h1 * h1) + (fyp + fym) / (h2 * h2)));

      if (has_cross) {
        // d/dx(a12 d/dy psi) + d/dy(a12 d/dx psi), centered
        const double cxy = M / (4.0 * h1 * h2);
        const double ap = a12[idx(i + 1, j)], am = a12[idx(i - 1, j)];
        b.add(row, idx(i + 1, j + 1), cxy * ap);
        b.add(row, idx(i + 1, j - 1), -cxy * ap);
        b.add(row, idx(i - 1, j + 1), -cxy * am);
        b.add(row, idx(i - 1, j - 1), cxy * am);
        const double bp = a12[idx(i, j + 1)], bm = a12[idx(i, j - 1)];
        b.add(row, idx(i + 1, j + 1), cxy * bp);
        b.add(row, idx(i - 1, j + 1), -cxy * bp);
        b.add(row, idx(i + 1, j - 1), -cxy * bm);
        b.add(row, idx(i - 1, j - 1), cxy * bm);
      }

      // drift w = -2 M lambda (A e) + s q, upwinded per component
      const double Ae1 = along_x ? a11[row] : a12[row];
      const double Ae2 = along_x ? a12[row] : a22[row];
      const double w1 = -2.0 * M * lambda * Ae1 + advection_scale * q[0][row];
      const double w2 = -2.0 * M * lambda * Ae2 + advection_scale * q[1][row];
      add_upwind_drift(b, row, idx(i + 1, j), idx(i - 1, j), w1, h1);
      add_upwind_drift(b, row, idx(i, j + 1), idx(i, j - 1), w2, h2);

      const double eAe = along_x ? a11[row] : a22[row];
      const double q_dot_e = along_x ? q[0][row] : q[1][row];
      b.add(row, row, M * lambda * lambda * eAe - lambda * advection_scale * q_dot_e -
                          M * lambda * div_Ae[row] + reaction_scale * zeta[row]);
    }
  }
  OperatorMeta meta;
  meta.lambda = lambda;
  meta.diffusion_scale = M;
  meta.advection_scale = advection_scale;
  meta.reaction_scale = reaction_scale;
  meta.medium_id = medium_id(medium);
  return std::move(b).build(/*symmetric=*/false, meta, /*offdiag_clamp=*/1e-12);
}

OperatorMatrix assemble_cell_operator_gamma(const CellMedium2D& medium, double lambda,
                                            double diffusion_scale, double gamma,
                                            double reaction_scale, int n1, int n2) {
  if (gamma < 0.0 || gamma > 0.5)
    throw std::invalid_argument("gamma must lie in [0, 1/2]");
  return assemble_cell_operator(medium, lambda, diffusion_scale,
                                std::pow(diffusion_scale, gamma), reaction_scale, n1,
                                n2);
}

}  // namespace frontspeed
