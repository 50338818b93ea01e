#include <algorithm>

#include "csh/graph.hpp"

namespace csh {

namespace {

// Exhaustive minor search: assign every vertex to one of `classes` branch
// sets or leave it out, require each branch set connected and every class
// pair joined by an edge (for K33, only cross-part pairs).
struct minor_search {
  const graph& g;
  int classes;
  bool bipartite;  // K33 pattern: classes 0,1,2 vs 3,4,5
  std::vector<int> label;  // 0 = unused, 1..classes
  std::vector<std::vector<char>> adj;

  explicit minor_search(const graph& g_, int classes_, bool bip)
      : g(g_), classes(classes_), bipartite(bip), label(g_.n, 0),
        adj(g_.n, std::vector<char>(g_.n, 0)) {
    for (auto& [a, b] : g.edges) adj[a - 1][b - 1] = adj[b - 1][a - 1] = 1;
  }

  bool class_connected(int c) const {
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
      if (label[v] == c) verts.push_back(v);
    if (verts.empty()) return false;
    std::vector<char> vis(g.n, 0);
    std::vector<int> stack{verts[0]};
    vis[verts[0]] = 1;
    int cnt = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++cnt;
      for (int u = 0; u < g.n; ++u)
        if (!vis[u] && label[u] == c && adj[v][u]) {
          vis[u] = 1;
          stack.push_back(u);
        }
    }
    return cnt == (int)verts.size();
  }

  bool pair_required(int a, int b) const {
    if (!bipartite) return true;
    return (a <= classes / 2) != (b <= classes / 2);
  }

  bool classes_joined(int a, int b) const {
    for (int v = 0; v < g.n; ++v) {
      if (label[v] != a) continue;
      for (int u = 0; u < g.n; ++u)
        if (label[u] == b && adj[v][u]) return true;
    }
    return false;
  }

  bool complete() const {
    for (int c = 1; c <= classes; ++c)
      if (!class_connected(c)) return false;
    for (int a = 1; a <= classes; ++a)
      for (int b = a + 1; b <= classes; ++b)
        if (pair_required(a, b) && !classes_joined(a, b)) return false;
    return true;
  }

  bool class_used(int v, int c) const {
    return std::count(label.begin(), label.begin() + v, c) != 0;
  }

  bool rec(int v) {
    if (v == g.n) return complete();
    for (int c = 0; c <= classes; ++c) {
      // Symmetry pruning: only over genuinely interchangeable classes. For
      // the complete pattern all classes are; for the bipartite pattern only
      // classes within one part (plus the part swap, broken via class 1).
      if (c >= 2) {
        bool same_group = !bipartite || c != classes / 2 + 1;
        if (same_group && !class_used(v, c - 1)) continue;
        if (bipartite && c == classes / 2 + 1 && !class_used(v, 1)) continue;
      }
      label[v] = c;
      if (rec(v + 1)) return true;
    }
    label[v] = 0;
    return false;
  }
};

}  // namespace

bool has_k5_minor(const graph& g) {
  if (g.n < 5 || g.m() < 10) return false;
  minor_search s(g, 5, false);
  return s.rec(0);
}

bool has_k33_minor(const graph& g) {
  if (g.n < 6 || g.m() < 9) return false;
  minor_search s(g, 6, true);
  return s.rec(0);
}

bool is_planar(const graph& g) {
  // Wagner: planar iff no K5 minor and no K33 minor. Desk scale only.
  if (g.n >= 3 && g.m() > 3 * g.n - 6) return false;
  return !has_k5_minor(g) && !has_k33_minor(g);
}

namespace {

// Subdivision search helper: with branch set B and spare vertices S
// (|S| <= 2), each required branch pair must be a direct edge or a path
// through one or two distinct spare vertices.
bool subdivision_with_branches(const graph& g, const std::vector<int>& branch,
                               const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> spares;
  std::vector<char> in_branch(g.n + 1, 0);
  for (int v : branch) in_branch[v] = 1;
  for (int v = 1; v <= g.n; ++v)
    if (!in_branch[v]) spares.push_back(v);
  if (spares.size() > 2) return false;  // complete only for n <= 7

  int np = (int)pairs.size();
  // assignment[s] = index of the pair the spare vertex subdivides, or -1.
  std::vector<int> assignment(spares.size(), -1);
  auto ok = [&]() {
    for (int k = 0; k < np; ++k) {
      auto [a, b] = pairs[k];
      std::vector<int> mid;
      for (size_t s = 0; s < spares.size(); ++s)
        if (assignment[s] == k) mid.push_back(spares[s]);
      bool good = false;
      if (mid.empty()) {
        good = g.has_edge(a, b);
      } else if (mid.size() == 1) {
        good = g.has_edge(a, mid[0]) && g.has_edge(mid[0], b);
      } else {
        good = (g.has_edge(a, mid[0]) && g.has_edge(mid[0], mid[1]) && g.has_edge(mid[1], b)) ||
               (g.has_edge(a, mid[1]) && g.has_edge(mid[1], mid[0]) && g.has_edge(mid[0], b));
      }
      if (!good) return false;
    }
    return true;
  };
  int combos = 1;
  for (size_t s = 0; s < spares.size(); ++s) combos *= np + 1;
  for (int code = 0; code < combos; ++code) {
    int c = code;
    for (size_t s = 0; s < spares.size(); ++s) {
      assignment[s] = c % (np + 1) - 1;
      c /= np + 1;
    }
    if (ok()) return true;
  }
  return false;
}

}  // namespace

bool has_kuratowski_subdivision(const graph& g) {
  if (g.n > 7) throw size_error("has_kuratowski_subdivision: exhaustive search is n <= 7 only");
  // K5 subdivisions.
  std::vector<int> vs(g.n);
  for (int i = 0; i < g.n; ++i) vs[i] = i + 1;
  std::vector<char> pick(g.n, 0);
  if (g.n >= 5) {
    std::fill(pick.begin(), pick.end(), 0);
    std::fill(pick.begin(), pick.begin() + 5, 1);
    std::sort(pick.begin(), pick.end());
    do {
      std::vector<int> branch;
      for (int i = 0; i < g.n; ++i)
        if (pick[i]) branch.push_back(vs[i]);
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.emplace_back(branch[a], branch[b]);
      if (subdivision_with_branches(g, branch, pairs)) return true;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  // K33 subdivisions.
  if (g.n >= 6) {
    std::fill(pick.begin(), pick.end(), 0);
    std::fill(pick.begin(), pick.begin() + 6, 1);
    std::sort(pick.begin(), pick.end());
    do {
      std::vector<int> branch;
      for (int i = 0; i < g.n; ++i)
        if (pick[i]) branch.push_back(vs[i]);
      // all 3|3 bipartitions containing branch[0] on the left
      for (int m1 = 0; m1 < 1 << 6; ++m1) {
        if (__builtin_popcount(m1) != 3 || !(m1 & 1)) continue;
        std::vector<int> left, right;
        for (int i = 0; i < 6; ++i) (m1 >> i & 1 ? left : right).push_back(branch[i]);
        std::vector<std::pair<int, int>> pairs;
        for (int a : left)
          for (int b : right) pairs.emplace_back(a, b);
        if (subdivision_with_branches(g, branch, pairs)) return true;
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return false;
}

}  // namespace csh
