#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "csh/common.hpp"

namespace csh {

/// Column-major sparse integer matrix; entries within a column sorted by row.
struct sparse_matrix {
  int nrows = 0;
  int ncols = 0;
  std::vector<std::vector<std::pair<int, i64>>> cols;

  sparse_matrix() = default;
  sparse_matrix(int r, int c) : nrows(r), ncols(c), cols(c) {}

  void set(int r, int c, i64 v);
  i64 get(int r, int c) const;
  i64 nnz() const;
  void sort_columns();
  /// y = A x (dense x).
  std::vector<i64> apply(const std::vector<i64>& x) const;
  sparse_matrix multiply(const sparse_matrix& other) const;  // this * other
  bool is_zero() const;
};

/// MatrixMarket coordinate integer format.
void write_matrix_market(std::ostream& os, const sparse_matrix& m);
std::string matrix_market_string(const sparse_matrix& m);

/// Sidecar label file: "row <i> <label>" / "col <j> <label>" lines, 1-based.
std::string label_sidecar(const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels);

}  // namespace csh
