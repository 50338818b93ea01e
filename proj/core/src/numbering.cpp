#include "csh/numbering.hpp"

#include <algorithm>
#include <map>

namespace csh {

partition numbering::shape() const {
  std::vector<int> p;
  p.reserve(rows.size());
  for (auto& r : rows) p.push_back((int)r.size());
  return partition(std::move(p));
}

int numbering::n() const {
  int s = 0;
  for (auto& r : rows) s += (int)r.size();
  return s;
}

bool numbering::rows_increasing() const {
  for (auto& r : rows)
    for (size_t j = 1; j < r.size(); ++j)
      if (r[j - 1] >= r[j]) return false;
  return true;
}

bool numbering::is_standard() const {
  if (!rows_increasing()) return false;
  for (size_t i = 1; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i - 1][j] >= rows[i][j]) return false;
  return true;
}

std::vector<int> numbering::word() const {
  std::vector<int> w;
  w.reserve(n());
  for (auto& r : rows) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::string numbering::to_string() const {
  std::string s;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += "|";
    for (int v : rows[i]) s += v < 10 ? std::string(1, char('0' + v)) : "(" + std::to_string(v) + ")";
  }
  return s;
}

int compare(const numbering& t, const numbering& s) {
  if (t.shape() != s.shape()) throw domain_error("compare: shape mismatch");
  // Bottom-most differing row, rightmost differing column in it.
  for (int i = (int)t.rows.size() - 1; i >= 0; --i) {
    for (int j = (int)t.rows[i].size() - 1; j >= 0; --j) {
      if (t.rows[i][j] != s.rows[i][j]) return t.rows[i][j] > s.rows[i][j] ? 1 : -1;
    }
  }
  return 0;
}

bool listed_before(listing_order order, const numbering& a, const numbering& b) {
  if (order == listing_order::bottom_row) return compare(a, b) > 0;  // largest first
  return a.word() < b.word();
}

void sort_listing(listing_order order, std::vector<numbering>& v) {
  std::sort(v.begin(), v.end(),
            [order](const numbering& a, const numbering& b) { return listed_before(order, a, b); });
}

static void gen_syt(const partition& lam, int next, std::vector<int>& fill_len,
                    std::vector<std::vector<int>>& rows, std::vector<numbering>& out) {
  int n = lam.n();
  if (next > n) {
    out.push_back(numbering(rows));
    return;
  }
  for (int i = 0; i < lam.length(); ++i) {
    if (fill_len[i] >= lam.parts[i]) continue;
    if (i > 0 && fill_len[i - 1] <= fill_len[i]) continue;  // column would not increase
    rows[i].push_back(next);
    fill_len[i]++;
    gen_syt(lam, next + 1, fill_len, rows, out);
    fill_len[i]--;
    rows[i].pop_back();
  }
}

std::vector<numbering> standard_tableaux(const partition& lam, listing_order order) {
  std::vector<numbering> out;
  std::vector<int> fill_len(lam.length(), 0);
  std::vector<std::vector<int>> rows(lam.length());
  gen_syt(lam, 1, fill_len, rows, out);
  sort_listing(order, out);
  return out;
}

partition semistandard_tableau::shape() const {
  std::vector<int> p;
  for (auto& r : rows) p.push_back((int)r.size());
  return partition(std::move(p));
}

partition semistandard_tableau::weight() const {
  std::map<int, int> cnt;
  for (auto& r : rows)
    for (int v : r) cnt[v]++;
  std::vector<int> w;
  for (auto& [v, c] : cnt) {
    (void)v;
    w.push_back(c);
  }
  std::sort(w.rbegin(), w.rend());
  return partition(std::move(w));
}

namespace {
struct ssyt_gen {
  const partition& lam;
  std::vector<int> remaining;  // per value
  std::vector<std::vector<int>> rows;
  std::vector<semistandard_tableau>* out;

  void rec(int r, int c) {
    if (r == lam.length()) {
      out->push_back(semistandard_tableau{rows});
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == lam.parts[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1, hi = (int)remaining.size();
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);                            // weakly increasing rows
    if (r > 0 && c < (int)rows[r - 1].size()) lo = std::max(lo, rows[r - 1][c] + 1);  // strict columns
    for (int v = lo; v <= hi; ++v) {
      if (remaining[v - 1] == 0) continue;
      remaining[v - 1]--;
      rows[r].push_back(v);
      rec(nr, nc);
      rows[r].pop_back();
      remaining[v - 1]++;
    }
  }
};
}  // namespace

std::vector<semistandard_tableau> semistandard_tableaux(const partition& lam, const partition& mu) {
  if (lam.n() != mu.n()) throw domain_error("semistandard_tableaux: |lam| != |mu|");
  std::vector<semistandard_tableau> out;
  std::vector<int> rem(mu.parts.begin(), mu.parts.end());
  ssyt_gen g{lam, rem, std::vector<std::vector<int>>(lam.length()), &out};
  g.rec(0, 0);
  return out;
}

i64 kostka(const partition& lam, const partition& mu) {
  return (i64)semistandard_tableaux(lam, mu).size();
}

numbering numbering_of_blocks(const std::vector<std::vector<int>>& blocks) {
  std::vector<std::vector<int>> rows = blocks;
  for (auto& r : rows) std::sort(r.begin(), r.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a[0] < b[0];
  });
  return numbering(std::move(rows));
}

numbering standardize(const semistandard_tableau& y, const numbering& t) {
  if (y.weight() != t.shape()) throw domain_error("standardize: weight of Y must equal shape of T");
  std::vector<size_t> next(t.rows.size(), 0);
  std::vector<std::vector<int>> rows(y.rows.size());
  for (size_t i = 0; i < y.rows.size(); ++i) {
    for (int v : y.rows[i]) {
      if (v < 1 || v > (int)t.rows.size() || next[v - 1] >= t.rows[v - 1].size())
        throw domain_error("standardize: incompatible content");
      rows[i].push_back(t.rows[v - 1][next[v - 1]++]);
    }
  }
  return numbering(std::move(rows));
}

}  // namespace csh
