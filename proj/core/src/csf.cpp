#include "csh/csf.hpp"

#include <algorithm>

#include "csh/characters.hpp"

namespace csh {

i64 schur_expansion::coeff(const partition& lam) const {
  auto it = coeffs.find(lam);
  return it == coeffs.end() ? 0 : it->second;
}

namespace {

// conn[U] = signed count of connected spanning subgraphs of G[U]:
// sum over connected S subset E(G[U]) covering U of (-1)^|S|.
std::vector<i64> signed_connected_counts(const graph& g) {
  int n = g.n;
  std::vector<int> edges_in(1 << n, 0);
  for (auto& [a, b] : g.edges) {
    int mask = (1 << (a - 1)) | (1 << (b - 1));
    for (int u = 0; u < 1 << n; ++u)
      if ((u & mask) == mask) edges_in[u]++;
  }
  // z(U) = [no edges inside U]; all-subset alternating sum collapses to it.
  std::vector<i64> conn(1 << n, 0);
  for (int u = 1; u < 1 << n; ++u) {
    int v0 = u & -u;
    i64 z_u = edges_in[u] == 0 ? 1 : 0;
    i64 acc = z_u;
    // subtract conn(V) z(U\V) over proper subsets V of U containing v0
    for (int v = (u - 1) & u; v > 0; v = (v - 1) & u) {
      if (!(v & v0)) continue;
      int rest = u ^ v;
      if (edges_in[rest] != 0) continue;
      acc -= conn[v];
    }
    conn[u] = acc;
  }
  return conn;
}

void partitions_rec(const std::vector<i64>& conn, int remaining, std::vector<int>& sizes,
                    i64 weight, std::map<partition, i64>& out) {
  if (remaining == 0) {
    std::vector<int> s = sizes;
    std::sort(s.rbegin(), s.rend());
    out[partition(std::move(s))] += weight;
    return;
  }
  int v0 = remaining & -remaining;
  // enumerate blocks containing the lowest remaining vertex
  int pool = remaining ^ v0;
  for (int sub = pool;; sub = (sub - 1) & pool) {
    int block = sub | v0;
    if (conn[block] != 0) {
      sizes.push_back(__builtin_popcount(block));
      partitions_rec(conn, remaining ^ block, sizes, checked_mul(weight, conn[block]), out);
      sizes.pop_back();
    }
    if (sub == 0) break;
  }
}

}  // namespace

std::map<partition, i64> signed_type_counts(const graph& g) {
  if (g.n > 10) throw size_error("signed_type_counts: n <= 10");
  std::vector<i64> conn = signed_connected_counts(g);
  std::map<partition, i64> out;
  std::vector<int> sizes;
  partitions_rec(conn, (1 << g.n) - 1, sizes, 1, out);
  return out;
}

schur_expansion csf_schur(const graph& g) {
  if (g.n > 10) throw size_error("csf_schur: n <= 10");
  std::map<partition, i64> counts = signed_type_counts(g);
  schur_expansion x;
  x.n = g.n;
  for (const partition& lam : partitions_of(g.n)) {
    i64 c = 0;
    for (auto& [mu, w] : counts) c = checked_add(c, checked_mul(w, mn_character(lam, mu)));
    if (c != 0) x.coeffs[lam] = c;
  }
  return x;
}

coloring_tally csf_from_colorings(const graph& g, int bound) {
  if (g.n > 7) throw size_error("csf_from_colorings: n <= 7");
  if (bound < 1 || bound > g.n) throw domain_error("csf_from_colorings: 1 <= bound <= n");
  coloring_tally tally;
  tally.chromatic_values.assign(bound + 1, 0);
  std::vector<int> color(g.n, 0);
  while (true) {
    bool proper = true;
    for (auto& [a, b] : g.edges)
      if (color[a - 1] == color[b - 1]) {
        proper = false;
        break;
      }
    if (proper) {
      std::vector<int> comp(bound, 0);
      for (int v = 0; v < g.n; ++v) comp[color[v]]++;
      tally.by_composition[comp]++;
    }
    int i = 0;
    while (i < g.n && color[i] == bound - 1) color[i++] = 0;
    if (i == g.n) break;
    color[i]++;
  }
  // chromatic_values[k] = number of proper colorings with palette {1..k}
  for (int k = 1; k <= bound; ++k) {
    i64 total = 0;
    for (auto& [comp, cnt] : tally.by_composition) {
      bool ok = true;
      for (int j = k; j < bound; ++j)
        if (comp[j] != 0) ok = false;
      if (ok) total += cnt;
    }
    tally.chromatic_values[k] = total;
  }
  return tally;
}

}  // namespace csh
