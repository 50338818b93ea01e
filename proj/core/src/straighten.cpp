#include "csh/straighten.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

namespace csh {

void straightened_expr::add(const numbering& u, i64 c) {
  if (c == 0) return;
  auto it = coeff.find(u);
  if (it == coeff.end()) {
    coeff.emplace(u, c);
  } else {
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeff.erase(it);
  }
}

straightened_expr& straightened_expr::operator+=(const straightened_expr& o) {
  for (auto& [u, c] : o.coeff) add(u, c);
  return *this;
}

straightened_expr straightened_expr::scaled(i64 c) const {
  straightened_expr r;
  if (c == 0) return r;
  for (auto& [u, d] : coeff) r.coeff[u] = checked_mul(c, d);
  return r;
}

std::pair<numbering, int> row_normalize(const numbering& s) {
  numbering t = s;
  for (auto& r : t.rows) std::sort(r.begin(), r.end());
  // Bubble equal-length rows into first-entry order, (-1)^len per swap.
  int sign = 1;
  for (size_t i = 0; i + 1 < t.rows.size(); ++i) {
    for (size_t j = 0; j + 1 < t.rows.size() - i; ++j) {
      if (t.rows[j].size() == t.rows[j + 1].size() && t.rows[j][0] > t.rows[j + 1][0]) {
        std::swap(t.rows[j], t.rows[j + 1]);
        if (t.rows[j].size() % 2 == 1) sign = -sign;
      }
    }
  }
  return {t, sign};
}

std::vector<numbering> xi_expand(const numbering& s, int i, int j) {
  if (i < 0 || i + 1 >= (int)s.rows.size()) throw domain_error("xi_expand: bad row index");
  if (j < 1 || j > (int)s.rows[i + 1].size()) throw domain_error("xi_expand: bad prefix length");
  const auto& upper = s.rows[i];
  std::vector<numbering> out;
  std::vector<int> pick(j);
  // Choose positions in row i to vacate; the first j entries of row i+1 move
  // up into them in order, the displaced entries fill the prefix in order.
  std::vector<int> idx(j);
  for (int k = 0; k < j; ++k) idx[k] = k;
  while (true) {
    numbering u = s;
    for (int k = 0; k < j; ++k) {
      u.rows[i][idx[k]] = s.rows[i + 1][k];
      u.rows[i + 1][k] = upper[idx[k]];
    }
    out.push_back(std::move(u));
    int k = j - 1;
    while (k >= 0 && idx[k] == (int)upper.size() - j + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int l = k + 1; l < j; ++l) idx[l] = idx[l - 1] + 1;
  }
  return out;
}

namespace {

struct numbering_hash {
  size_t operator()(const numbering& t) const {
    size_t h = 1469598103934665603ull;
    for (auto& r : t.rows) {
      h = (h ^ r.size()) * 1099511628211ull;
      for (int v : r) h = (h ^ (size_t)v) * 1099511628211ull;
    }
    return h;
  }
};

std::unordered_map<numbering, straightened_expr, numbering_hash> g_memo;
std::mutex g_memo_mutex;

numbering sort_rows_only(const numbering& s) {
  numbering t = s;
  for (auto& r : t.rows) std::sort(r.begin(), r.end());
  return t;
}

// Bottom-most row pair with a column decrease, rightmost decrease in it.
bool find_decrease(const numbering& s, int& di, int& dj) {
  for (int i = (int)s.rows.size() - 2; i >= 0; --i) {
    for (int j = (int)s.rows[i + 1].size() - 1; j >= 0; --j) {
      if (s.rows[i][j] > s.rows[i + 1][j]) {
        di = i;
        dj = j;
        return true;
      }
    }
  }
  return false;
}

straightened_expr straighten_rec(const numbering& key, std::set<numbering>& in_progress) {
  {
    std::lock_guard<std::mutex> lk(g_memo_mutex);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;
  }
  straightened_expr result;
  if (key.is_standard()) {
    result.add(key, 1);
  } else if (in_progress.count(key)) {
    // Rewrite cycle: the prescribed iteration failed to make progress.
    result = oracle_straighten(key);
  } else {
    in_progress.insert(key);
    int di = 0, dj = 0;
    if (!find_decrease(key, di, dj)) throw consistency_error("straighten: non-standard without decrease");
    int sgn = (dj + 1) % 2 == 0 ? 1 : -1;  // (-1)^j with 1-based prefix length
    for (const numbering& u : xi_expand(key, di, dj + 1)) {
      straightened_expr sub = straighten_rec(sort_rows_only(u), in_progress);
      result += sub.scaled(sgn);
    }
    in_progress.erase(key);
  }
  std::lock_guard<std::mutex> lk(g_memo_mutex);
  return g_memo.emplace(key, std::move(result)).first->second;
}

}  // namespace

straightened_expr straighten(const numbering& s) {
  std::set<numbering> in_progress;
  return straighten_rec(sort_rows_only(s), in_progress);
}

group_algebra_element evaluate_expr(const straightened_expr& e, const partition& shape) {
  // Y1 = row-reading filling.
  std::vector<std::vector<int>> rows(shape.length());
  int v = 1;
  for (int i = 0; i < shape.length(); ++i)
    for (int j = 0; j < shape.parts[i]; ++j) rows[i].push_back(v++);
  numbering y1(rows);
  group_algebra_element acc = group_algebra_element::zero(shape.n());
  for (auto& [u, c] : e.coeff) acc = acc + v_element(u, y1).scaled(c);
  return acc;
}

straightened_expr oracle_straighten(const numbering& s) {
  int n = s.n();
  if (n > 7) throw size_error("oracle_straighten: n <= 7 only");
  partition lam = s.shape();
  std::vector<numbering> syt = standard_tableaux(lam, listing_order::bottom_row);
  // Y1 = row-reading filling (first in every listing convention).
  const numbering& y1 = syt.front();

  // Dense vectors over the permutation index.
  std::vector<permutation> perms = permutation::all(n);
  std::map<permutation, int> pidx;
  for (size_t i = 0; i < perms.size(); ++i) pidx[perms[i]] = (int)i;
  auto densify = [&](const group_algebra_element& e) {
    std::vector<mpz_class> v(perms.size(), 0);
    for (auto& [p, c] : e.terms) v[pidx[p]] = (long)c;
    return v;
  };
  size_t dim = perms.size();
  size_t f = syt.size();
  std::vector<std::vector<mpz_class>> cols;
  for (auto& u : syt) cols.push_back(densify(v_element(u, y1)));
  std::vector<mpz_class> rhs = densify(v_element(s, y1));

  // Exact rational elimination on the stacked (dim x f | rhs) system.
  std::vector<std::vector<mpq_class>> m(dim, std::vector<mpq_class>(f + 1));
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < f; ++j) m[i][j] = mpq_class(cols[j][i]);
    m[i][f] = mpq_class(rhs[i]);
  }
  size_t row = 0;
  std::vector<size_t> pivot_of_col(f, SIZE_MAX);
  for (size_t c = 0; c < f && row < dim; ++c) {
    size_t pr = SIZE_MAX;
    for (size_t r = row; r < dim; ++r)
      if (m[r][c] != 0) {
        pr = r;
        break;
      }
    if (pr == SIZE_MAX) continue;
    std::swap(m[row], m[pr]);
    mpq_class pv = m[row][c];
    for (size_t j = c; j <= f; ++j) m[row][j] /= pv;
    for (size_t r = 0; r < dim; ++r) {
      if (r == row || m[r][c] == 0) continue;
      mpq_class factor = m[r][c];
      for (size_t j = c; j <= f; ++j) m[r][j] -= factor * m[row][j];
    }
    pivot_of_col[c] = row++;
  }
  // The SYT polytabloids are independent; the system must be uniquely solvable.
  straightened_expr out;
  for (size_t c = 0; c < f; ++c) {
    if (pivot_of_col[c] == SIZE_MAX) throw consistency_error("oracle_straighten: singular system");
    mpq_class x = m[pivot_of_col[c]][f];
    if (x.get_den() != 1) throw consistency_error("oracle_straighten: non-integral solution");
    if (!x.get_num().fits_slong_p()) throw overflow_error("oracle_straighten coefficient overflow");
    out.add(syt[c], x.get_num().get_si());
  }
  for (size_t r = row; r < dim; ++r)
    if (m[r][f] != 0) throw consistency_error("oracle_straighten: inconsistent system");
  return out;
}

}  // namespace csh
