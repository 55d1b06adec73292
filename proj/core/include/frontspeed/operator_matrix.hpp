#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frontspeed {

struct OperatorMeta {
  double lambda = 0.0;
  double diffusion_scale = 1.0;
  double advection_scale = 0.0;
  double reaction_scale = 1.0;
  std::string medium_id;
};

/// Sparse periodic discrete operator with a monotone stencil: all
/// off-diagonal entries are non-negative, so the shifted matrix is a
/// non-negative irreducible Perron matrix.
class OperatorMatrix {
 public:
  OperatorMatrix(std::vector<int> row_ptr, std::vector<int> col,
                 std::vector<double> val, bool symmetric, OperatorMeta meta);

  int size() const { return static_cast<int>(row_ptr_.size()) - 1; }
  bool symmetric() const { return symmetric_; }
  const OperatorMeta& meta() const { return meta_; }

  void apply(const std::vector<double>& x, std::vector<double>& y) const;

  double entry(int i, int j) const;
  double diag(int i) const;
  double max_abs_diag() const;
  double min_offdiag() const;
  double max_abs_entry() const;

  /// Same operator plus c*I (shift tests and spectral shifts).
  OperatorMatrix shifted(double c) const;

  /// Coordinate-format text dump: "row col value" per line.
  void dump_coordinate(std::ostream& os) const;

  const std::vector<int>& row_ptr() const { return row_ptr_; }
  const std::vector<int>& col() const { return col_; }
  const std::vector<double>& val() const { return val_; }

 private:
  std::vector<int> row_ptr_;
  std::vector<int> col_;
  std::vector<double> val_;
  std::vector<int> diag_index_;
  bool symmetric_ = false;
  OperatorMeta meta_;
};

/// Row-wise assembly helper; duplicate (i,j) contributions accumulate.
class MatrixBuilder {
 public:
  explicit MatrixBuilder(int n);
  void add(int i, int j, double v);
  OperatorMatrix build(bool symmetric, OperatorMeta meta,
                       double offdiag_clamp = 0.0) &&;

 private:
  int n_;
  std::vector<std::vector<std::pair<int, double>>> rows_;
};

}  // namespace frontspeed
