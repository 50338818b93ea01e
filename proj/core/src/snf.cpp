#include "csh/snf.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace csh {

namespace {

// Sparse elimination workspace shared by the integer unit-pivot phase and the
// mod-p rank computation.
struct sparse_elim {
  int nrows, ncols;
  std::vector<std::unordered_map<int, i64>> rows;
  std::vector<std::unordered_set<int>> col_rows;
  std::vector<char> row_active, col_active;
  std::set<std::pair<int, int>> row_queue;  // (nnz, row)

  explicit sparse_elim(const sparse_matrix& m)
      : nrows(m.nrows), ncols(m.ncols), rows(m.nrows), col_rows(m.ncols),
        row_active(m.nrows, 1), col_active(m.ncols, 1) {
    for (int c = 0; c < m.ncols; ++c)
      for (auto& [r, v] : m.cols[c]) {
        if (v == 0) continue;
        rows[r][c] = v;
        col_rows[c].insert(r);
      }
    for (int r = 0; r < nrows; ++r) row_queue.insert({(int)rows[r].size(), r});
  }

  void requeue(int r, int old_size) {
    row_queue.erase({old_size, r});
    row_queue.insert({(int)rows[r].size(), r});
  }

  void drop_row(int r) {
    row_queue.erase({(int)rows[r].size(), r});
    for (auto& [c, v] : rows[r]) col_rows[c].erase(r);
    rows[r].clear();
    row_active[r] = 0;
  }

  void drop_col(int c) {
    for (int r : col_rows[c]) {
      int old = (int)rows[r].size();
      rows[r].erase(c);
      requeue(r, old);
    }
    col_rows[c].clear();
    col_active[c] = 0;
  }

  // row_r -= factor * row_p
  void row_axpy(int r, i64 factor, int p) {
    if (factor == 0) return;
    int old = (int)rows[r].size();
    for (auto& [c, v] : rows[p]) {
      auto it = rows[r].find(c);
      if (it == rows[r].end()) {
        i64 nv = checked_mul(-factor, v);
        if (nv != 0) {
          rows[r][c] = nv;
          col_rows[c].insert(r);
        }
      } else {
        it->second = checked_add(it->second, checked_mul(-factor, v));
        if (it->second == 0) {
          rows[r].erase(it);
          col_rows[c].erase(r);
        }
      }
    }
    requeue(r, old);
  }

  // Eliminate all unit (+-1) pivots; returns how many were eliminated.
  int unit_pivot_phase() {
    int count = 0;
    while (true) {
      int pr = -1, pc = -1;
      i64 pv = 0;
      // Rows by increasing nnz; take the first offering a unit entry, use its
      // unit entry with the shortest column (Markowitz-flavored).
      for (auto& [sz, r] : row_queue) {
        if (sz == 0) continue;
        size_t best_col = SIZE_MAX;
        for (auto& [c, v] : rows[r]) {
          if (v != 1 && v != -1) continue;
          if (col_rows[c].size() < best_col) {
            best_col = col_rows[c].size();
            pr = r;
            pc = c;
            pv = v;
          }
        }
        if (pr >= 0) break;
      }
      if (pr < 0) return count;
      // Clear column pc with row operations, then delete the pivot row/col.
      std::vector<int> others(col_rows[pc].begin(), col_rows[pc].end());
      for (int r : others) {
        if (r == pr) continue;
        i64 factor = rows[r][pc] * pv;  // entry / pivot since pv = +-1
        row_axpy(r, factor, pr);
      }
      drop_row(pr);
      drop_col(pc);
      ++count;
    }
  }

  // Remaining active entries as a dense mpz matrix (row-major), with maps of
  // the surviving row/col indices.
  std::vector<std::vector<mpz_class>> residual_dense() const {
    std::vector<int> live_rows, live_cols;
    for (int r = 0; r < nrows; ++r)
      if (row_active[r] && !rows[r].empty()) live_rows.push_back(r);
    std::vector<char> col_used(ncols, 0);
    for (int r : live_rows)
      for (auto& [c, v] : rows[r]) col_used[c] = 1;
    for (int c = 0; c < ncols; ++c)
      if (col_used[c]) live_cols.push_back(c);
    if ((i64)live_rows.size() * (i64)live_cols.size() > 16'000'000)
      throw size_error("SNF residual core too large for the dense fallback");
    std::unordered_map<int, int> cmap;
    for (size_t i = 0; i < live_cols.size(); ++i) cmap[live_cols[i]] = (int)i;
    std::vector<std::vector<mpz_class>> d(live_rows.size(),
                                          std::vector<mpz_class>(live_cols.size(), 0));
    for (size_t i = 0; i < live_rows.size(); ++i)
      for (auto& [c, v] : rows[live_rows[i]]) d[i][cmap[c]] = (long)v;
    return d;
  }
};

// Textbook dense SNF over Z on an mpz matrix; returns the invariant factors.
std::vector<mpz_class> dense_snf(std::vector<std::vector<mpz_class>> m) {
  std::vector<mpz_class> factors;
  size_t nr = m.size(), nc = nr ? m[0].size() : 0;
  size_t t = 0;
  while (t < nr && t < nc) {
    // find a pivot of minimal absolute value
    size_t pr = SIZE_MAX, pc = SIZE_MAX;
    mpz_class best;
    for (size_t r = t; r < nr; ++r)
      for (size_t c = t; c < nc; ++c) {
        if (m[r][c] == 0) continue;
        mpz_class a = abs(m[r][c]);
        if (pr == SIZE_MAX || a < best) {
          best = a;
          pr = r;
          pc = c;
        }
      }
    if (pr == SIZE_MAX) break;
    std::swap(m[t], m[pr]);
    for (size_t r = t; r < nr; ++r) std::swap(m[r][t], m[r][pc]);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      // clear column t
      for (size_t r = t + 1; r < nr; ++r) {
        if (m[r][t] == 0) continue;
        mpz_class q = m[r][t] / m[t][t];
        if (q != 0)
          for (size_t c = t; c < nc; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) {  // remainder smaller than pivot: swap up, restart
          std::swap(m[t], m[r]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // clear row t
      for (size_t c = t + 1; c < nc; ++c) {
        if (m[t][c] == 0) continue;
        mpz_class q = m[t][c] / m[t][t];
        if (q != 0)
          for (size_t r = t; r < nr; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) {
          for (size_t r = t; r < nr; ++r) std::swap(m[r][t], m[r][c]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // divisibility: pivot must divide every trailing entry
      for (size_t r = t + 1; r < nr && !dirty; ++r)
        for (size_t c = t + 1; c < nc && !dirty; ++c)
          if (m[r][c] % m[t][t] != 0) {
            for (size_t cc = t; cc < nc; ++cc) m[t][cc] += m[r][cc];
            dirty = true;
          }
    }
    factors.push_back(abs(m[t][t]));
    ++t;
  }
  return factors;
}

}  // namespace

snf_result smith_normal_form(const sparse_matrix& m) {
  sparse_elim e(m);
  int units = e.unit_pivot_phase();
  std::vector<mpz_class> rest = dense_snf(e.residual_dense());
  snf_result out;
  out.factors.assign(units, 1);
  for (auto& f : rest) {
    if (f == 0) continue;
    if (!f.fits_slong_p()) throw overflow_error("invariant factor exceeds int64");
    out.factors.push_back(f.get_si());
  }
  out.rank = (int)out.factors.size();
  return out;
}

int rank_exact(const sparse_matrix& m) { return smith_normal_form(m).rank; }

int rank_mod_p(const sparse_matrix& m, i64 p) {
  if (p < 2) throw domain_error("rank_mod_p: p must be >= 2");
  // Dedicated sparse elimination in GF(p).
  int nrows = m.nrows, ncols = m.ncols;
  std::vector<std::unordered_map<int, i64>> rows(nrows);
  std::vector<std::unordered_set<int>> col_rows(ncols);
  for (int c = 0; c < ncols; ++c)
    for (auto& [r, v] : m.cols[c]) {
      i64 vv = ((v % p) + p) % p;
      if (vv == 0) continue;
      rows[r][c] = vv;
      col_rows[c].insert(r);
    }
  std::set<std::pair<int, int>> queue;
  for (int r = 0; r < nrows; ++r)
    if (!rows[r].empty()) queue.insert({(int)rows[r].size(), r});

  auto mod_inverse = [p](i64 a) {
    i64 t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
      i64 q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
  };

  int rank = 0;
  while (!queue.empty()) {
    auto [sz, pr] = *queue.begin();
    if (sz == 0) {
      queue.erase(queue.begin());
      continue;
    }
    // pick the entry with the shortest column
    int pc = -1;
    size_t best = SIZE_MAX;
    for (auto& [c, v] : rows[pr])
      if (col_rows[c].size() < best) {
        best = col_rows[c].size();
        pc = c;
      }
    i64 inv = mod_inverse(rows[pr][pc]);
    std::vector<int> others(col_rows[pc].begin(), col_rows[pc].end());
    for (int r : others) {
      if (r == pr) continue;
      i64 factor = rows[r][pc] * inv % p;
      queue.erase({(int)rows[r].size(), r});
      for (auto& [c, v] : rows[pr]) {
        auto it = rows[r].find(c);
        i64 delta = factor * v % p;
        if (it == rows[r].end()) {
          i64 nv = (p - delta) % p;
          if (nv != 0) {
            rows[r][c] = nv;
            col_rows[c].insert(r);
          }
        } else {
          it->second = (it->second - delta % p + p) % p;
          if (it->second == 0) {
            rows[r].erase(it);
            col_rows[c].erase(r);
          }
        }
      }
      queue.insert({(int)rows[r].size(), r});
    }
    queue.erase({(int)rows[pr].size(), pr});
    for (auto& [c, v] : rows[pr]) col_rows[c].erase(pr);
    rows[pr].clear();
    for (int r : std::vector<int>(col_rows[pc].begin(), col_rows[pc].end())) {
      queue.erase({(int)rows[r].size(), r});
      rows[r].erase(pc);
      queue.insert({(int)rows[r].size(), r});
    }
    col_rows[pc].clear();
    ++rank;
  }
  return rank;
}

namespace {

// Dense SNF with tracked row transform: U * A * V = D. Returns D diagonal
// entries and fills U (nr x nr).
std::vector<mpz_class> dense_snf_with_u(std::vector<std::vector<mpz_class>>& m,
                                        std::vector<std::vector<mpz_class>>& u) {
  size_t nr = m.size(), nc = nr ? m[0].size() : 0;
  u.assign(nr, std::vector<mpz_class>(nr, 0));
  for (size_t i = 0; i < nr; ++i) u[i][i] = 1;
  auto row_sub = [&](size_t r, const mpz_class& q, size_t p) {
    for (size_t c = 0; c < nc; ++c) m[r][c] -= q * m[p][c];
    for (size_t c = 0; c < nr; ++c) u[r][c] -= q * u[p][c];
  };
  std::vector<mpz_class> diag;
  size_t t = 0;
  while (t < nr && t < nc) {
    size_t pr = SIZE_MAX, pc = SIZE_MAX;
    mpz_class best;
    for (size_t r = t; r < nr; ++r)
      for (size_t c = t; c < nc; ++c) {
        if (m[r][c] == 0) continue;
        mpz_class a = abs(m[r][c]);
        if (pr == SIZE_MAX || a < best) {
          best = a;
          pr = r;
          pc = c;
        }
      }
    if (pr == SIZE_MAX) break;
    std::swap(m[t], m[pr]);
    std::swap(u[t], u[pr]);
    for (size_t r = 0; r < nr; ++r) std::swap(m[r][t], m[r][pc]);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t r = t + 1; r < nr; ++r) {
        if (m[r][t] == 0) continue;
        mpz_class q = m[r][t] / m[t][t];
        if (q != 0) row_sub(r, q, t);
        if (m[r][t] != 0) {
          std::swap(m[t], m[r]);
          std::swap(u[t], u[r]);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (size_t c = t + 1; c < nc; ++c) {
        if (m[t][c] == 0) continue;
        mpz_class q = m[t][c] / m[t][t];
        if (q != 0)
          for (size_t r = 0; r < nr; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) {
          for (size_t r = 0; r < nr; ++r) std::swap(m[r][t], m[r][c]);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (size_t r = t + 1; r < nr && !dirty; ++r)
        for (size_t c = t + 1; c < nc && !dirty; ++c)
          if (m[r][c] % m[t][t] != 0) {
            for (size_t cc = 0; cc < nc; ++cc) m[t][cc] += m[r][cc];
            for (size_t cc = 0; cc < nr; ++cc) u[t][cc] += u[r][cc];
            dirty = true;
          }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

std::vector<std::vector<mpz_class>> to_dense(const sparse_matrix& a) {
  std::vector<std::vector<mpz_class>> m(a.nrows, std::vector<mpz_class>(a.ncols, 0));
  for (int c = 0; c < a.ncols; ++c)
    for (auto& [r, v] : a.cols[c]) m[r][c] = (long)v;
  return m;
}

}  // namespace

bool integer_solvable(const sparse_matrix& a, const std::vector<i64>& b) {
  if ((int)b.size() != a.nrows) throw domain_error("integer_solvable: size mismatch");
  auto m = to_dense(a);
  std::vector<std::vector<mpz_class>> u;
  std::vector<mpz_class> diag = dense_snf_with_u(m, u);
  // U A V = D with V unimodular: A x = b solvable over Z iff D z = U b is,
  // i.e. d_i | (U b)_i on the pivots and (U b)_i = 0 beyond the rank.
  // Divisibility is insensitive to the sign convention in diag.
  std::vector<mpz_class> y(a.nrows, 0);
  for (int r = 0; r < a.nrows; ++r)
    for (int k = 0; k < a.nrows; ++k)
      if (u[r][k] != 0 && b[k] != 0) y[r] += u[r][k] * mpz_class((long)b[k]);
  size_t rank = diag.size();
  for (size_t i = 0; i < (size_t)a.nrows; ++i) {
    if (i < rank) {
      if (diag[i] == 0 || y[i] % diag[i] != 0) return false;
    } else {
      if (y[i] != 0) return false;
    }
  }
  return true;
}

std::vector<std::vector<i64>> integer_kernel(const sparse_matrix& a) {
  // Kernel of A = columns of V beyond the rank, where U A V = D. Track V by
  // running the transposed computation: ker(A) from SNF of A^T row transform.
  sparse_matrix at(a.ncols, a.nrows);
  for (int c = 0; c < a.ncols; ++c)
    for (auto& [r, v] : a.cols[c]) at.cols[r].emplace_back(c, v);
  at.sort_columns();
  auto m = to_dense(at);
  std::vector<std::vector<mpz_class>> u;
  std::vector<mpz_class> diag = dense_snf_with_u(m, u);
  size_t rank = diag.size();
  while (rank > 0 && diag[rank - 1] == 0) --rank;
  std::vector<std::vector<i64>> out;
  for (size_t r = rank; r < (size_t)at.nrows; ++r) {
    std::vector<i64> v(at.nrows);
    for (size_t c = 0; c < (size_t)at.nrows; ++c) {
      if (!u[r][c].fits_slong_p()) throw overflow_error("kernel vector entry exceeds int64");
      v[c] = u[r][c].get_si();
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace csh
