#include "csh/sparse_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace csh {

void sparse_matrix::set(int r, int c, i64 v) {
  if (r < 0 || r >= nrows || c < 0 || c >= ncols) throw domain_error("sparse_matrix::set out of range");
  for (auto& [rr, vv] : cols[c]) {
    if (rr == r) {
      vv = v;
      return;
    }
  }
  if (v != 0) cols[c].emplace_back(r, v);
}

i64 sparse_matrix::get(int r, int c) const {
  for (auto& [rr, vv] : cols[c])
    if (rr == r) return vv;
  return 0;
}

i64 sparse_matrix::nnz() const {
  i64 t = 0;
  for (auto& c : cols)
    for (auto& [r, v] : c)
      if (v != 0) ++t;
  return t;
}

void sparse_matrix::sort_columns() {
  for (auto& c : cols) {
    std::sort(c.begin(), c.end());
    // merge duplicates, drop zeros
    std::vector<std::pair<int, i64>> merged;
    for (auto& [r, v] : c) {
      if (!merged.empty() && merged.back().first == r)
        merged.back().second = checked_add(merged.back().second, v);
      else
        merged.emplace_back(r, v);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](auto& p) { return p.second == 0; }),
                 merged.end());
    c = std::move(merged);
  }
}

std::vector<i64> sparse_matrix::apply(const std::vector<i64>& x) const {
  if ((int)x.size() != ncols) throw domain_error("sparse_matrix::apply size mismatch");
  std::vector<i64> y(nrows, 0);
  for (int c = 0; c < ncols; ++c) {
    if (x[c] == 0) continue;
    for (auto& [r, v] : cols[c]) y[r] = checked_add(y[r], checked_mul(v, x[c]));
  }
  return y;
}

sparse_matrix sparse_matrix::multiply(const sparse_matrix& other) const {
  if (ncols != other.nrows) throw domain_error("sparse_matrix::multiply shape mismatch");
  sparse_matrix out(nrows, other.ncols);
  for (int c = 0; c < other.ncols; ++c) {
    std::vector<i64> acc(nrows, 0);
    for (auto& [k, v] : other.cols[c])
      for (auto& [r, w] : cols[k]) acc[r] = checked_add(acc[r], checked_mul(v, w));
    for (int r = 0; r < nrows; ++r)
      if (acc[r] != 0) out.cols[c].emplace_back(r, acc[r]);
  }
  return out;
}

bool sparse_matrix::is_zero() const { return nnz() == 0; }

void write_matrix_market(std::ostream& os, const sparse_matrix& m) {
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << m.nrows << " " << m.ncols << " " << m.nnz() << "\n";
  for (int c = 0; c < m.ncols; ++c)
    for (auto& [r, v] : m.cols[c])
      if (v != 0) os << r + 1 << " " << c + 1 << " " << v << "\n";
}

std::string matrix_market_string(const sparse_matrix& m) {
  std::ostringstream os;
  write_matrix_market(os, m);
  return os.str();
}

std::string label_sidecar(const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels) {
  std::ostringstream os;
  for (size_t i = 0; i < row_labels.size(); ++i) os << "row " << i + 1 << " " << row_labels[i] << "\n";
  for (size_t j = 0; j < col_labels.size(); ++j) os << "col " << j + 1 << " " << col_labels[j] << "\n";
  return os.str();
}

}  // namespace csh
