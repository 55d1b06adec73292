#include "frontspeed/medium.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace frontspeed {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

HypothesisCheck positivity_check(const std::string& name, const CoefficientField& f,
                                 int n) {
  FieldBounds b = field_bounds(f, n);
  HypothesisCheck c;
  c.name = name + "_positive";
  c.pass = b.lower > 0.0;
  c.residual = std::min(0.0, b.lower);
  std::ostringstream os;
  os << "bounds [" << b.lower << ", " << b.upper << "]";
  c.detail = os.str();
  return c;
}

std::string field_descriptor(const CoefficientField& f) {
  std::ostringstream os;
  os << profile_kind_name(f.kind()) << "(";
  for (size_t i = 0; i < f.params().size(); ++i) {
    if (i) os << ",";
    os << f.params()[i];
  }
  os << ")L";
  for (double L : f.periods()) os << L << ",";
  return os.str();
}

std::string hash_hex(const std::string& s) {
  std::ostringstream os;
  os << std::hex << std::hash<std::string>{}(s);
  return os.str();
}

}  // namespace

bool MediumDiagnostics::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const HypothesisCheck& c) { return c.pass; });
}

const HypothesisCheck* MediumDiagnostics::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

MediumDiagnostics validate(const LineMedium& medium, int n) {
  MediumDiagnostics d;
  d.checks.push_back(positivity_check("a", medium.a, n));
  d.checks.push_back(positivity_check("zeta", medium.zeta, n));
  return d;
}

MediumDiagnostics validate(const ShearMedium& medium, int n) {
  MediumDiagnostics d;
  d.checks.push_back(positivity_check("alpha", medium.alpha, n));
  d.checks.push_back(positivity_check("d", medium.d, n));
  d.checks.push_back(positivity_check("zeta", medium.zeta, n));
  if (medium.q1) {
    auto q = sample_field(*medium.q1, n);
    double mean = 0.0, amp = 0.0;
    for (double v : q) {
      mean += v;
      amp = std::max(amp, std::abs(v));
    }
    mean /= static_cast<double>(q.size());
    HypothesisCheck c;
    c.name = "q1_zero_average";
    c.residual = std::abs(mean);
    c.pass = std::abs(mean) <= 1e-12 * std::max(amp, 1e-300);
    d.checks.push_back(c);
  }
  return d;
}

std::array<std::vector<double>, 2> cell_advection_from_stream(const CellMedium2D& medium,
                                                              int n1, int n2) {
  const size_t total = static_cast<size_t>(n1) * n2;
  std::array<std::vector<double>, 2> q{std::vector<double>(total, 0.0),
                                       std::vector<double>(total, 0.0)};
  if (!medium.stream_function) return q;
  const double h1 = medium.period_x / n1;
  const double h2 = medium.period_y / n2;
  std::vector<double> H(total);
  for (int j = 0; j < n2; ++j)
    for (int i = 0; i < n1; ++i)
      H[static_cast<size_t>(j) * n1 + i] =
          medium.stream_function->value((i + 0.5) * h1, (j + 0.5) * h2);
  auto at = [&](int i, int j) {
    return H[static_cast<size_t>(wrap(j, n2)) * n1 + wrap(i, n1)];
  };
  for (int j = 0; j < n2; ++j) {
    for (int i = 0; i < n1; ++i) {
      const size_t id = static_cast<size_t>(j) * n1 + i;
      q[0][id] = (at(i, j + 1) - at(i, j - 1)) / (2.0 * h2);
      q[1][id] = -(at(i + 1, j) - at(i - 1, j)) / (2.0 * h1);
    }
  }
  return q;
}

std::vector<double> discrete_div_Ae(const CellMedium2D& medium, int n1, int n2) {
  const double h1 = medium.period_x / n1;
  const double h2 = medium.period_y / n2;
  const bool along_x = medium.direction[0] != 0.0;
  // (A e) components: e=(1,0) -> (a11, a12); e=(0,1) -> (a12, a22).
  const CoefficientField& fx = along_x ? medium.a11 : medium.a12;
  const CoefficientField& fy = along_x ? medium.a12 : medium.a22;
  const bool fx_positive = along_x;  // diagonal entries use harmonic faces
  const bool fy_positive = !along_x;

  std::vector<double> sx(static_cast<size_t>(n1) * n2), sy(sx.size());
  for (int j = 0; j < n2; ++j)
    for (int i = 0; i < n1; ++i) {
      const size_t id = static_cast<size_t>(j) * n1 + i;
      sx[id] = fx.value((i + 0.5) * h1, (j + 0.5) * h2);
      sy[id] = fy.value((i + 0.5) * h1, (j + 0.5) * h2);
    }
  auto face = [](double a, double b, bool harmonic) {
    return harmonic ? 2.0 * a * b / (a + b) : 0.5 * (a + b);
  };
  std::vector<double> div(sx.size());
  for (int j = 0; j < n2; ++j) {
    for (int i = 0; i < n1; ++i) {
      const size_t id = static_cast<size_t>(j) * n1 + i;
      auto ax = [&](int ii, int jj) {
        return sx[static_cast<size_t>(wrap(jj, n2)) * n1 + wrap(ii, n1)];
      };
      auto ay = [&](int ii, int jj) {
        return sy[static_cast<size_t>(wrap(jj, n2)) * n1 + wrap(ii, n1)];
      };
      const double fxp = face(ax(i, j), ax(i + 1, j), fx_positive);
      const double fxm = face(ax(i - 1, j), ax(i, j), fx_positive);
      const double fyp = face(ay(i, j), ay(i, j + 1), fy_positive);
      const double fym = face(ay(i, j - 1), ay(i, j), fy_positive);
      div[id] = (fxp - fxm) / h1 + (fyp - fym) / h2;
    }
  }
  return div;
}

MediumDiagnostics validate(const CellMedium2D& medium, int n) {
  MediumDiagnostics d;
  const double h1 = medium.period_x / n;
  const double h2 = medium.period_y / n;

  double min_a11 = 1e300, min_det = 1e300, max_abs_A = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x = (i + 0.5) * h1, y = (j + 0.5) * h2;
      const double a11 = medium.a11.value(x, y);
      const double a12 = medium.a12.value(x, y);
      const double a22 = medium.a22.value(x, y);
      min_a11 = std::min(min_a11, a11);
      min_det = std::min(min_det, a11 * a22 - a12 * a12);
      max_abs_A = std::max({max_abs_A, std::abs(a11), std::abs(a12), std::abs(a22)});
    }
  }
  d.checks.push_back({"ellipticity", min_a11 > 0.0 && min_det > 0.0,
                      std::min(min_a11, min_det), ""});
  d.checks.push_back(positivity_check("zeta", medium.zeta, n));

  if (medium.stream_function) {
    auto q = cell_advection_from_stream(medium, n, n);
    double grad_scale = 0.0, mean1 = 0.0, mean2 = 0.0, max_div = 0.0;
    auto at = [&](const std::vector<double>& v, int i, int j) {
      return v[static_cast<size_t>(wrap(j, n)) * n + wrap(i, n)];
    };
    for (size_t id = 0; id < q[0].size(); ++id) {
      grad_scale = std::max({grad_scale, std::abs(q[0][id]), std::abs(q[1][id])});
      mean1 += q[0][id];
      mean2 += q[1][id];
    }
    mean1 /= static_cast<double>(q[0].size());
    mean2 /= static_cast<double>(q[1].size());
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        double div = (at(q[0], i + 1, j) - at(q[0], i - 1, j)) / (2.0 * h1) +
                     (at(q[1], i, j + 1) - at(q[1], i, j - 1)) / (2.0 * h2);
        max_div = std::max(max_div, std::abs(div));
      }
    const double tol = 1e-12 * std::max(grad_scale, 1e-300);
    d.checks.push_back({"q_divergence_free", max_div <= tol, max_div, ""});
    d.checks.push_back({"q_zero_average",
                        std::abs(mean1) <= tol && std::abs(mean2) <= tol,
                        std::max(std::abs(mean1), std::abs(mean2)), ""});
  }

  auto div_Ae = discrete_div_Ae(medium, n, n);
  double max_res = 0.0;
  for (double v : div_Ae) max_res = std::max(max_res, std::abs(v));
  d.checks.push_back({"div_Ae_free", max_res <= 1e-10 * std::max(1.0, max_abs_A),
                      max_res, ""});
  return d;
}

MediumDiagnostics validate(const ReactionProfile& reaction, int n_shape) {
  MediumDiagnostics d;
  d.checks.push_back(positivity_check("zeta", reaction.zeta, 512));

  double worst_kpp = 0.0;
  double min_interior = 1e300;
  for (int i = 1; i < n_shape; ++i) {
    const double s = static_cast<double>(i) / n_shape;
    const double g = reaction.shape(s);
    worst_kpp = std::max(worst_kpp, g - reaction.shape_slope0 * s);
    min_interior = std::min(min_interior, g);
  }
  d.checks.push_back({"kpp_sub_tangency", worst_kpp <= 0.0, worst_kpp, ""});
  d.checks.push_back({"shape_positive_interior", min_interior > 0.0, min_interior, ""});
  const double ends = std::max(std::abs(reaction.shape(0.0)), std::abs(reaction.shape(1.0)));
  d.checks.push_back({"shape_zero_at_ends", ends == 0.0, ends, ""});
  return d;
}

bool shear_alternative_holds(const ShearMedium& medium, int n) {
  auto spread = [n](const CoefficientField& f) {
    FieldBounds b = field_bounds(f, n);
    return b.upper - b.lower;
  };
  const double tol = 1e-12;
  return spread(medium.alpha) <= tol * std::max(1.0, std::abs(field_bounds(medium.alpha, n).upper)) ||
         spread(medium.zeta) <= tol * std::max(1.0, std::abs(field_bounds(medium.zeta, n).upper));
}

std::string medium_id(const LineMedium& m) {
  return hash_hex("line|" + field_descriptor(m.a) + "|" + field_descriptor(m.zeta));
}

std::string medium_id(const ShearMedium& m) {
  std::string s = "shear|" + field_descriptor(m.alpha) + "|" + field_descriptor(m.d) +
                  "|" + field_descriptor(m.zeta);
  if (m.q1) s += "|" + field_descriptor(*m.q1);
  return hash_hex(s);
}

std::string medium_id(const CellMedium2D& m) {
  std::string s = "cell|" + field_descriptor(m.a11) + "|" + field_descriptor(m.a12) +
                  "|" + field_descriptor(m.a22) + "|" + field_descriptor(m.zeta);
  if (m.stream_function) s += "|" + field_descriptor(*m.stream_function);
  s += m.direction[0] != 0.0 ? "|ex" : "|ey";
  return hash_hex(s);
}

}  // namespace frontspeed
