#include "csh/chain_complex.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <unordered_map>

namespace csh {

bool integer_chain_complex::differential_squares_to_zero() const {
  for (size_t i = 1; i + 1 < boundaries.size(); ++i) {
    if (!boundaries[i].multiply(boundaries[i + 1]).is_zero()) return false;
  }
  return true;
}

i64 tabloid_count(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  i64 r = factorial(n);
  for (int s : sizes) r /= factorial(s);
  return r;
}

i64 tabloid_rank(const std::vector<int>& sizes, const std::vector<int>& slot_of_vertex) {
  std::vector<int> rem = sizes;
  int n = (int)slot_of_vertex.size();
  i64 rank = 0;
  for (int v = 0; v < n; ++v) {
    int total = n - v;
    for (int s = 0; s < slot_of_vertex[v]; ++s) {
      if (rem[s] == 0) continue;
      rem[s]--;
      // count of completions with vertex v in slot s
      i64 ways = factorial(total - 1);
      for (int x : rem) ways /= factorial(x);
      rank += ways;
      rem[s]++;
    }
    rem[slot_of_vertex[v]]--;
  }
  return rank;
}

std::vector<int> tabloid_unrank(const std::vector<int>& sizes, i64 rank) {
  std::vector<int> rem = sizes;
  int n = 0;
  for (int s : sizes) n += s;
  std::vector<int> slot(n);
  for (int v = 0; v < n; ++v) {
    int total = n - v;
    for (int s = 0; s < (int)rem.size(); ++s) {
      if (rem[s] == 0) continue;
      rem[s]--;
      i64 ways = factorial(total - 1);
      for (int x : rem) ways /= factorial(x);
      if (rank < ways) {
        slot[v] = s;
        break;
      }
      rank -= ways;
      rem[s]++;
    }
  }
  return slot;
}

namespace {

std::vector<int> block_sizes(const std::vector<std::vector<int>>& comps) {
  std::vector<int> sz;
  sz.reserve(comps.size());
  for (auto& c : comps) sz.push_back((int)c.size());
  return sz;
}

// Enumerate all s-subsets of the positions 0..count-1 of `pool`, invoking f
// with the chosen element subset (order preserved).
template <class F>
void for_each_subset(const std::vector<int>& pool, int s, F&& f) {
  std::vector<int> idx(s);
  for (int k = 0; k < s; ++k) idx[k] = k;
  if (s > (int)pool.size()) return;
  while (true) {
    std::vector<int> chosen(s);
    for (int k = 0; k < s; ++k) chosen[k] = pool[idx[k]];
    f(chosen);
    int k = s - 1;
    while (k >= 0 && idx[k] == (int)pool.size() - s + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int l = k + 1; l < s; ++l) idx[l] = idx[l - 1] + 1;
  }
}

}  // namespace

full_complex build_full_complex(const graph& g, int max_degree, i64 basis_budget) {
  if (g.n > 8) throw size_error("build_full_complex: hard cap n <= 8");
  int m = g.m();
  if (m > 30) throw size_error("build_full_complex: too many edges");
  int top = max_degree < 0 ? m : std::min(max_degree, m);

  full_complex fc;
  fc.g = g;
  fc.blocks.resize(top + 1);
  fc.cc.dims.resize(top + 1, 0);
  fc.cc.boundaries.resize(top + 1);
  fc.cc.labels.resize(top + 1);

  // Enumerate spanning subgraphs level by level (lex order of edge index sets).
  std::vector<std::unordered_map<uint32_t, int>> index_of(top + 1);
  i64 total = 0;
  for (int i = 0; i <= top; ++i) {
    std::vector<uint32_t> masks;
    std::vector<int> comb(i);
    for (int k = 0; k < i; ++k) comb[k] = k;
    while (true) {
      uint32_t mask = 0;
      for (int k = 0; k < i; ++k) mask |= 1u << comb[k];
      masks.push_back(mask);
      int k = i - 1;
      while (k >= 0 && comb[k] == m - i + k) --k;
      if (k < 0) break;
      ++comb[k];
      for (int l = k + 1; l < i; ++l) comb[l] = comb[l - 1] + 1;
    }
    for (uint32_t mask : masks) {
      spanning_subgraph f = components_of(g, mask);
      module_block b;
      b.edge_mask = mask;
      b.comps = f.components;
      b.offset = fc.cc.dims[i];
      b.dim = tabloid_count(block_sizes(b.comps));
      fc.cc.dims[i] += b.dim;
      index_of[i][mask] = (int)fc.blocks[i].size();
      fc.blocks[i].push_back(std::move(b));
    }
    total += fc.cc.dims[i];
    if (total > basis_budget)
      throw size_error("chain complex basis budget exceeded (" + std::to_string(total) + " > " +
                       std::to_string(basis_budget) + "); graphs this size need reduction techniques (broken-circuit models, algebraic Morse compression) this tool does not implement");
  }

  // Boundaries.
  for (int i = 1; i <= top; ++i) {
    sparse_matrix d((int)fc.cc.dims[i - 1], (int)fc.cc.dims[i]);
    for (const module_block& src : fc.blocks[i]) {
      std::vector<int> src_sizes = block_sizes(src.comps);
      for (int e = 0; e < m; ++e) {
        if (!(src.edge_mask >> e & 1)) continue;
        uint32_t tmask = src.edge_mask & ~(1u << e);
        const module_block& dst = fc.blocks[i - 1][index_of[i - 1].at(tmask)];
        int sign = lattice_sign(src.edge_mask, e);
        std::vector<int> dst_sizes = block_sizes(dst.comps);

        // Match blocks by vertex content; at most one source block splits.
        std::map<std::vector<int>, int> dst_slot;
        for (size_t k = 0; k < dst.comps.size(); ++k) dst_slot[dst.comps[k]] = (int)k;
        int broken = -1;
        std::vector<int> slot_map(src.comps.size(), -1);
        int slot_a = -1, slot_b = -1;
        for (size_t k = 0; k < src.comps.size(); ++k) {
          auto it = dst_slot.find(src.comps[k]);
          if (it != dst_slot.end()) {
            slot_map[k] = it->second;
          } else {
            broken = (int)k;
          }
        }
        if (broken >= 0) {
          // the two destination comps not hit by slot_map partition src.comps[broken]
          std::vector<char> used(dst.comps.size(), 0);
          for (int s : slot_map)
            if (s >= 0) used[s] = 1;
          for (size_t k = 0; k < dst.comps.size(); ++k)
            if (!used[k]) (slot_a < 0 ? slot_a : slot_b) = (int)k;
        }

        for (i64 t = 0; t < src.dim; ++t) {
          std::vector<int> slot = tabloid_unrank(src_sizes, t);
          if (broken < 0) {
            std::vector<int> dslot(g.n);
            for (int v = 0; v < g.n; ++v) dslot[v] = slot_map[slot[v]];
            d.cols[src.offset + t].emplace_back((int)(dst.offset + tabloid_rank(dst_sizes, dslot)),
                                                sign);
          } else {
            std::vector<int> content;
            for (int v = 0; v < g.n; ++v)
              if (slot[v] == broken) content.push_back(v);
            int size_a = (int)dst.comps[slot_a].size();
            for_each_subset(content, size_a, [&](const std::vector<int>& da) {
              std::vector<int> dslot(g.n);
              std::vector<char> in_a(g.n, 0);
              for (int v : da) in_a[v] = 1;
              for (int v = 0; v < g.n; ++v) {
                if (slot[v] == broken)
                  dslot[v] = in_a[v] ? slot_a : slot_b;
                else
                  dslot[v] = slot_map[slot[v]];
              }
              d.cols[src.offset + t].emplace_back(
                  (int)(dst.offset + tabloid_rank(dst_sizes, dslot)), sign);
            });
          }
        }
      }
    }
    d.sort_columns();
    fc.cc.boundaries[i] = std::move(d);
  }
  return fc;
}

std::vector<i64> coefficients_of_image(const straightened_expr& gen,
                                       const std::vector<straightened_expr>& target_generators,
                                       const std::vector<numbering>& syt) {
  // Solve sum_j c_j * target[j] = gen in the SYT coordinate basis, exactly
  // over the rationals; require a unique integral solution.
  size_t f = syt.size(), k = target_generators.size();
  std::map<numbering, size_t> idx;
  for (size_t i = 0; i < f; ++i) idx[syt[i]] = i;
  std::vector<std::vector<i64>> a(f, std::vector<i64>(k + 1, 0));
  for (size_t j = 0; j < k; ++j)
    for (auto& [u, c] : target_generators[j].coeff) a[idx.at(u)][j] = c;
  for (auto& [u, c] : gen.coeff) a[idx.at(u)][k] = c;

  // Exact rational elimination.
  std::vector<std::vector<mpq_class>> work(f, std::vector<mpq_class>(k + 1));
  for (size_t i = 0; i < f; ++i)
    for (size_t j = 0; j <= k; ++j) work[i][j] = (long)a[i][j];
  size_t row = 0;
  std::vector<size_t> where(k, SIZE_MAX);
  for (size_t c = 0; c < k && row < f; ++c) {
    size_t pr = SIZE_MAX;
    for (size_t r = row; r < f; ++r)
      if (work[r][c] != 0) {
        pr = r;
        break;
      }
    if (pr == SIZE_MAX) continue;
    std::swap(work[row], work[pr]);
    mpq_class pv = work[row][c];
    for (size_t j = c; j <= k; ++j) work[row][j] /= pv;
    for (size_t r = 0; r < f; ++r) {
      if (r == row || work[r][c] == 0) continue;
      mpq_class q = work[r][c];
      for (size_t j = c; j <= k; ++j) work[r][j] -= q * work[row][j];
    }
    where[c] = row++;
  }
  std::vector<i64> out(k, 0);
  for (size_t c = 0; c < k; ++c) {
    if (where[c] == SIZE_MAX) throw consistency_error("coefficients_of_image: dependent generators");
    mpq_class x = work[where[c]][k];
    if (x.get_den() != 1) throw consistency_error("coefficients_of_image: non-integral solution");
    if (!x.get_num().fits_slong_p()) throw overflow_error("coefficients_of_image: overflow");
    out[c] = x.get_num().get_si();
  }
  // verify exactly in integers
  std::map<numbering, i64> check;
  for (size_t j = 0; j < k; ++j)
    for (auto& [u, c] : target_generators[j].coeff) check[u] += checked_mul(out[j], c);
  for (auto& [u, c] : gen.coeff) check[u] -= c;
  for (auto& [u, c] : check)
    if (c != 0) throw consistency_error("coefficients_of_image: residual after solve");
  return out;
}

}  // namespace csh
