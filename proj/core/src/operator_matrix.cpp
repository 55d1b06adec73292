#include "frontspeed/operator_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "frontspeed/errors.hpp"

namespace frontspeed {

OperatorMatrix::OperatorMatrix(std::vector<int> row_ptr, std::vector<int> col,
                               std::vector<double> val, bool symmetric,
                               OperatorMeta meta)
    : row_ptr_(std::move(row_ptr)),
      col_(std::move(col)),
      val_(std::move(val)),
      symmetric_(symmetric),
      meta_(std::move(meta)) {
  const int n = size();
  diag_index_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      if (col_[k] == i) diag_index_[i] = k;
}

void OperatorMatrix::apply(const std::vector<double>& x, std::vector<double>& y) const {
  const int n = size();
  y.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) acc += val_[k] * x[col_[k]];
    y[i] = acc;
  }
}

double OperatorMatrix::entry(int i, int j) const {
  for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
    if (col_[k] == j) return val_[k];
  return 0.0;
}

double OperatorMatrix::diag(int i) const {
  return diag_index_[i] >= 0 ? val_[diag_index_[i]] : 0.0;
}

double OperatorMatrix::max_abs_diag() const {
  double m = 0.0;
  for (int i = 0; i < size(); ++i) m = std::max(m, std::abs(diag(i)));
  return m;
}

double OperatorMatrix::min_offdiag() const {
  double m = 0.0;
  for (int i = 0; i < size(); ++i)
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      if (col_[k] != i) m = std::min(m, val_[k]);
  return m;
}

double OperatorMatrix::max_abs_entry() const {
  double m = 0.0;
  for (double v : val_) m = std::max(m, std::abs(v));
  return m;
}

OperatorMatrix OperatorMatrix::shifted(double c) const {
  OperatorMatrix out = *this;
  for (int i = 0; i < size(); ++i) {
    if (out.diag_index_[i] < 0) throw NumericError("shifted: missing diagonal entry");
    out.val_[out.diag_index_[i]] += c;
  }
  return out;
}

void OperatorMatrix::dump_coordinate(std::ostream& os) const {
  for (int i = 0; i < size(); ++i)
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      char buf[80];
      std::snprintf(buf, sizeof buf, "%d %d %.17g\n", i, col_[k], val_[k]);
      os << buf;
    }
}

MatrixBuilder::MatrixBuilder(int n) : n_(n), rows_(static_cast<size_t>(n)) {}

void MatrixBuilder::add(int i, int j, double v) {
  for (auto& [c, x] : rows_[i]) {
    if (c == j) {
      x += v;
      return;
    }
  }
  rows_[i].emplace_back(j, v);
}

OperatorMatrix MatrixBuilder::build(bool symmetric, OperatorMeta meta,
                                    double offdiag_clamp) && {
  double max_abs = 0.0;
  for (auto& row : rows_)
    for (auto& [c, v] : row) max_abs = std::max(max_abs, std::abs(v));
  const double clamp = offdiag_clamp * max_abs;

  std::vector<int> row_ptr(static_cast<size_t>(n_) + 1, 0);
  std::vector<int> col;
  std::vector<double> val;
  for (int i = 0; i < n_; ++i) {
    auto& row = rows_[i];
    std::sort(row.begin(), row.end());
    bool has_diag = false;
    for (auto& [c, v] : row) {
      if (c != i && v < 0.0) {
        if (v >= -clamp) {
          v = 0.0;  // rounding noise from centered cross terms
        } else {
          std::ostringstream os;
          os << "monotone stencil violated at (" << i << "," << c << "): " << v;
          throw NumericError(os.str());
        }
      }
      has_diag = has_diag || c == i;
    }
    if (!has_diag) row.emplace_back(i, 0.0);
    std::sort(row.begin(), row.end());
    for (auto& [c, v] : row) {
      col.push_back(c);
      val.push_back(v);
    }
    row_ptr[i + 1] = static_cast<int>(col.size());
  }
  return OperatorMatrix(std::move(row_ptr), std::move(col), std::move(val), symmetric,
                        std::move(meta));
}

}  // namespace frontspeed
