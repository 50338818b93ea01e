#include <algorithm>
#include <map>

#include "csh/chain_complex.hpp"

namespace csh {

namespace {

char edge_index_char(int i) {  // 1-based, letters past 9 (a = 10, b = 11, ...)
  return i <= 9 ? char('0' + i) : char('a' + i - 10);
}

numbering edge_numbering(const graph& g, int e) {
  spanning_subgraph f = components_of(g, 1u << e);
  return numbering_of_blocks(f.components);
}

}  // namespace

restricted_complex build_restricted_complex(const graph& g, const partition& lambda,
                                            listing_order order) {
  int n = g.n;
  // lambda must be (2^k, 1^(n-2k)) with k >= 1
  int k = 0;
  for (int p : lambda.parts) {
    if (p > 2) throw domain_error("restricted complex supports shapes (2^k,1^(n-2k)) only");
    if (p == 2) ++k;
  }
  if (lambda.n() != n) throw domain_error("restricted complex: |lambda| != n");
  if (k < 1) throw domain_error("restricted complex: need at least one row of length 2");

  restricted_complex rc;
  rc.g = g;
  rc.lambda = lambda;
  rc.order = order;

  std::vector<numbering> syt = standard_tableaux(lambda, order);
  std::map<numbering, size_t> syt_index;
  for (size_t i = 0; i < syt.size(); ++i) syt_index[syt[i]] = i;
  size_t f = syt.size();

  int m = g.m();
  partition mu = two_column_shape(n, 1);
  std::vector<semistandard_tableau> ssyt_mu = semistandard_tableaux(lambda, mu);
  size_t kmu = ssyt_mu.size();

  // C1 generators per edge, listed in the chosen order.
  std::vector<std::vector<numbering>> xgens(m);
  std::vector<std::vector<straightened_expr>> xexpr(m);
  for (int e = 0; e < m; ++e) {
    numbering t = edge_numbering(g, e);
    for (auto& y : ssyt_mu) xgens[e].push_back(standardize(y, t));
    sort_listing(order, xgens[e]);
    for (auto& x : xgens[e]) xexpr[e].push_back(straighten(x));
  }

  // C2: spanning subgraphs of component type (2^2, 1^(n-4)), lex pairs.
  partition nu;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<numbering>> wgens;
  std::vector<semistandard_tableau> ssyt_nu;
  if (n >= 4) {
    nu = two_column_shape(n, 2);
    ssyt_nu = semistandard_tableaux(lambda, nu);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        auto [a1, b1] = g.edges[i];
        auto [a2, b2] = g.edges[j];
        if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
        pairs.emplace_back(i, j);
      }
    for (auto& [i, j] : pairs) {
      spanning_subgraph fsub = components_of(g, (1u << i) | (1u << j));
      numbering t = numbering_of_blocks(fsub.components);
      std::vector<numbering> ws;
      for (auto& y : ssyt_nu) ws.push_back(standardize(y, t));
      sort_listing(order, ws);
      wgens.push_back(std::move(ws));
    }
  }
  size_t knu = ssyt_nu.size();

  rc.cc.dims = {(i64)f, (i64)(m * kmu), (i64)(pairs.size() * knu)};
  rc.cc.boundaries.resize(3);
  rc.cc.labels.resize(3);
  for (size_t i = 0; i < f; ++i) rc.cc.labels[0].push_back("Y_" + std::to_string(i + 1));
  for (int e = 0; e < m; ++e)
    for (size_t j = 0; j < kmu; ++j)
      rc.cc.labels[1].push_back("X_" + std::to_string(e + 1) + "^" + std::to_string(j + 1));
  for (size_t p = 0; p < pairs.size(); ++p)
    for (size_t l = 0; l < knu; ++l) {
      std::string lab = std::string("W_{") + edge_index_char(pairs[p].first + 1) +
                        edge_index_char(pairs[p].second + 1) + "}";
      if (knu > 1) lab += "^" + std::to_string(l + 1);
      rc.cc.labels[2].push_back(lab);
    }

  // d1: column of X_e^j = straightened coefficients over the Y basis.
  sparse_matrix d1((int)f, (int)(m * kmu));
  for (int e = 0; e < m; ++e)
    for (size_t j = 0; j < kmu; ++j)
      for (auto& [u, c] : xexpr[e][j].coeff)
        d1.cols[e * kmu + j].emplace_back((int)syt_index.at(u), c);
  d1.sort_columns();
  rc.cc.boundaries[1] = std::move(d1);

  // d2: removing the smaller edge keeps sign +1 and lands in the block of the
  // larger edge; removing the larger edge carries sign -1.
  sparse_matrix d2((int)(m * kmu), (int)(pairs.size() * knu));
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    for (size_t l = 0; l < knu; ++l) {
      straightened_expr w = straighten(wgens[p][l]);
      std::vector<i64> cj = coefficients_of_image(w, xexpr[j], syt);
      std::vector<i64> ci = coefficients_of_image(w, xexpr[i], syt);
      int col = (int)(p * knu + l);
      for (size_t s = 0; s < kmu; ++s) {
        if (cj[s] != 0) d2.cols[col].emplace_back((int)(j * kmu + s), cj[s]);
        if (ci[s] != 0) d2.cols[col].emplace_back((int)(i * kmu + s), -ci[s]);
      }
    }
  }
  d2.sort_columns();
  rc.cc.boundaries[2] = std::move(d2);
  if (!rc.cc.boundaries[1].multiply(rc.cc.boundaries[2]).is_zero())
    throw consistency_error("restricted complex: d1 o d2 != 0");
  return rc;
}

}  // namespace csh
