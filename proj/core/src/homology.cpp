#include "csh/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>

#include "csh/characters.hpp"

namespace csh {

std::string homology_group::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (free_rank > 0) {
    s = "Z";
    if (free_rank > 1) s += "^" + std::to_string(free_rank);
  }
  for (i64 t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(t);
  }
  return s;
}

homology_group homology_at(const integer_chain_complex& cc, int degree) {
  if (degree < 0 || degree > cc.top_degree()) throw domain_error("homology_at: bad degree");
  if (degree >= 1 && degree + 1 <= cc.top_degree() &&
      !cc.boundaries[degree].multiply(cc.boundaries[degree + 1]).is_zero())
    throw consistency_error("homology_at: d o d != 0");
  int rank_in = 0;
  std::vector<i64> torsion;
  if (degree + 1 <= cc.top_degree()) {
    snf_result s = smith_normal_form(cc.boundaries[degree + 1]);
    rank_in = s.rank;
    torsion = s.nontrivial();
  }
  int rank_out = degree >= 1 ? rank_exact(cc.boundaries[degree]) : 0;
  homology_group h;
  h.free_rank = cc.dims[degree] - rank_out - rank_in;
  h.torsion = std::move(torsion);
  if (h.free_rank < 0) throw consistency_error("negative free rank: complex is inconsistent");
  return h;
}

std::vector<homology_group> homology(const integer_chain_complex& cc) {
  if (!cc.differential_squares_to_zero()) throw consistency_error("homology: d o d != 0");
  // One SNF per boundary, reused by the two adjacent degrees.
  int top = cc.top_degree();
  std::vector<snf_result> snf(top + 2);
  for (int i = 1; i <= top; ++i) snf[i] = smith_normal_form(cc.boundaries[i]);
  std::vector<homology_group> hs(top + 1);
  for (int i = 0; i <= top; ++i) {
    int rank_out = i >= 1 ? snf[i].rank : 0;
    int rank_in = i + 1 <= top ? snf[i + 1].rank : 0;
    hs[i].free_rank = cc.dims[i] - rank_out - rank_in;
    if (i + 1 <= top) hs[i].torsion = snf[i + 1].nontrivial();
    if (hs[i].free_rank < 0) throw consistency_error("negative free rank: complex is inconsistent");
  }
  return hs;
}

i64 torsion_signature_fast(const integer_chain_complex& cc, i64 p, int degree) {
  int top = cc.top_degree();
  int rq_out = degree >= 1 ? rank_exact(cc.boundaries[degree]) : 0;
  int rp_out = degree >= 1 ? rank_mod_p(cc.boundaries[degree], p) : 0;
  if (rq_out != rp_out) {
    // H_{degree-1} may have p-torsion: the universal-coefficients shortcut is
    // not justified, fall back to the full computation.
    homology_group h = homology_at(cc, degree);
    return (i64)std::count_if(h.torsion.begin(), h.torsion.end(),
                              [p](i64 t) { return t % p == 0; });
  }
  int rq_in = degree + 1 <= top ? rank_exact(cc.boundaries[degree + 1]) : 0;
  int rp_in = degree + 1 <= top ? rank_mod_p(cc.boundaries[degree + 1], p) : 0;
  return rq_in - rp_in;
}

namespace {

// Apply sigma (a permutation of vertices) to a tabloid index within a block.
i64 permuted_tabloid(const std::vector<int>& sizes, const std::vector<int>& slot, int n,
                     const permutation& sg) {
  std::vector<int> nslot(n);
  for (int v = 0; v < n; ++v) nslot[sg.img[v]] = slot[v];
  return tabloid_rank(sizes, nslot);
}

// Incremental exact column-echelon basis over Q (integer arithmetic with
// content normalization).
struct echelon_basis {
  std::vector<std::vector<mpz_class>> basis;
  std::vector<size_t> pivots;

  int rank() const { return (int)basis.size(); }

  // Reduce col against the basis; if independent, insert and return true.
  bool insert(std::vector<mpz_class> col) {
    for (size_t b = 0; b < basis.size(); ++b) {
      const mpz_class& here = col[pivots[b]];
      if (here == 0) continue;
      const mpz_class& lead = basis[b][pivots[b]];
      mpz_class g = gcd(lead, here);
      mpz_class mult_col = lead / g, mult_bas = here / g;
      for (size_t r = 0; r < col.size(); ++r) col[r] = col[r] * mult_col - basis[b][r] * mult_bas;
    }
    size_t pr = SIZE_MAX;
    for (size_t r = 0; r < col.size(); ++r)
      if (col[r] != 0) {
        pr = r;
        break;
      }
    if (pr == SIZE_MAX) return false;
    mpz_class g = 0;
    for (auto& x : col) g = gcd(g, x);
    if (g > 1)
      for (auto& x : col) x /= g;
    basis.push_back(std::move(col));
    pivots.push_back(pr);
    return true;
  }
};

int dense_rank(std::vector<std::vector<mpz_class>>& colvecs) {
  echelon_basis eb;
  for (auto& col : colvecs) eb.insert(std::move(col));
  return eb.rank();
}

}  // namespace

std::vector<i64> isotype_multiplicities(const full_complex& fc, const partition& lambda,
                                        int max_degree) {
  int n = fc.g.n;
  if (lambda.n() != n) throw domain_error("isotype_multiplicities: |lambda| != n");
  i64 f = lambda.hook_length_count();
  int top = std::min(max_degree, fc.cc.top_degree());
  // mult(H_i) needs the projected rank of d_{i+1} as well
  int rank_top = std::min(max_degree + 1, fc.cc.top_degree());

  // chi values indexed by permutation (by cycle type).
  std::vector<permutation> perms = permutation::all(n);
  std::vector<i64> chi(perms.size());
  for (size_t i = 0; i < perms.size(); ++i) chi[i] = mn_character(lambda, cycle_type(perms[i]));

  // For each degree, pick per-block projected columns spanning the isotypic
  // subspace (rank f * K_{lambda, shape(F)} per block).
  auto projected_basis = [&](int degree) {
    std::vector<std::vector<mpz_class>> cols;  // in C_degree coordinates
    i64 dim = fc.cc.dims[degree];
    for (const module_block& b : fc.blocks[degree]) {
      std::vector<int> sizes;
      for (auto& c : b.comps) sizes.push_back((int)c.size());
      std::vector<int> asc = sizes;
      std::sort(asc.rbegin(), asc.rend());
      i64 target = f * kostka(lambda, partition(asc));
      if (target == 0) continue;
      // Pick block tabloids whose projections increase the rank until the
      // isotypic subspace (dimension f*K) is spanned.
      echelon_basis local;
      std::vector<std::vector<mpz_class>> chosen_cols;
      for (i64 t = 0; t < b.dim && local.rank() < target; ++t) {
        std::vector<int> slot = tabloid_unrank(sizes, t);
        std::vector<mpz_class> v(b.dim, 0);
        for (size_t pi = 0; pi < perms.size(); ++pi) {
          if (chi[pi] == 0) continue;
          v[permuted_tabloid(sizes, slot, n, perms[pi])] += (long)chi[pi];
        }
        if (local.insert(v)) chosen_cols.push_back(std::move(v));
      }
      if (local.rank() != target)
        throw consistency_error("isotype projection rank mismatch in block");
      for (auto& v : chosen_cols) {
        std::vector<mpz_class> full(dim, 0);
        for (i64 r = 0; r < b.dim; ++r) full[b.offset + r] = v[r];
        cols.push_back(std::move(full));
      }
    }
    return cols;
  };

  // mult_lambda(C_i) and projected ranks of d_i.
  std::vector<i64> mult_c(top + 2, 0);
  for (int i = 0; i <= top; ++i)
    for (const module_block& b : fc.blocks[i]) {
      std::vector<int> sizes;
      for (auto& c : b.comps) sizes.push_back((int)c.size());
      std::sort(sizes.rbegin(), sizes.rend());
      mult_c[i] += kostka(lambda, partition(sizes));
    }

  std::vector<i64> rank_lambda(rank_top + 2, 0);  // rank_lambda[i] = module rank of d_i
  for (int i = 1; i <= rank_top; ++i) {
    // d_i applied to the projected basis of C_i.
    std::vector<std::vector<mpz_class>> basis_i = projected_basis(i);
    const sparse_matrix& d = fc.cc.boundaries[i];
    std::vector<std::vector<mpz_class>> image;
    for (auto& col : basis_i) {
      std::vector<mpz_class> y(d.nrows, 0);
      for (int c = 0; c < d.ncols; ++c) {
        if (col[c] == 0) continue;
        for (auto& [r, v] : d.cols[c]) y[r] += (long)v * col[c];
      }
      image.push_back(std::move(y));
    }
    int rk = dense_rank(image);
    if (rk % f != 0) throw consistency_error("projected rank not a multiple of f^lambda");
    rank_lambda[i] = rk / f;
  }

  std::vector<i64> out(top + 1);
  for (int i = 0; i <= top; ++i) {
    i64 rank_in = i + 1 <= rank_top ? rank_lambda[i + 1] : 0;
    out[i] = mult_c[i] - rank_lambda[i] - rank_in;
    if (out[i] < 0) throw consistency_error("negative isotype multiplicity");
  }
  return out;
}

bool verify_torsion_witness(const integer_chain_complex& cc, const std::vector<i64>& g_chain,
                            const std::vector<i64>& h_chain) {
  if (cc.top_degree() < 2) throw domain_error("verify_torsion_witness: need degrees 0..2");
  const sparse_matrix& d1 = cc.boundaries[1];
  const sparse_matrix& d2 = cc.boundaries[2];
  if ((int)g_chain.size() != d2.ncols || (int)h_chain.size() != d2.nrows)
    throw domain_error("verify_torsion_witness: basis mismatch");
  std::vector<i64> d2g = d2.apply(g_chain);
  for (int r = 0; r < d2.nrows; ++r)
    if (d2g[r] != 2 * h_chain[r]) return false;
  std::vector<i64> d1h = d1.apply(h_chain);
  for (i64 v : d1h)
    if (v != 0) return false;
  return !integer_solvable(d2, h_chain);
}

std::vector<i64> parse_chain(const integer_chain_complex& cc, int degree, const std::string& text) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < cc.labels[degree].size(); ++i) index[cc.labels[degree][i]] = (int)i;
  std::vector<i64> out(cc.dims[degree], 0);
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && isspace((unsigned char)text[pos])) ++pos;
    if (pos >= text.size()) break;
    i64 sign = 1;
    if (text[pos] == '+') {
      ++pos;
    } else if (text[pos] == '-') {
      sign = -1;
      ++pos;
    }
    while (pos < text.size() && isspace((unsigned char)text[pos])) ++pos;
    i64 coeff = 1;
    if (pos < text.size() && isdigit((unsigned char)text[pos])) {
      coeff = 0;
      while (pos < text.size() && isdigit((unsigned char)text[pos]))
        coeff = coeff * 10 + (text[pos++] - '0');
    }
    size_t start = pos;
    while (pos < text.size() && text[pos] != '+' && text[pos] != '-') ++pos;
    std::string label = text.substr(start, pos - start);
    while (!label.empty() && isspace((unsigned char)label.back())) label.pop_back();
    auto it = index.find(label);
    if (it == index.end()) throw parse_error("unknown basis label: '" + label + "'");
    out[it->second] += sign * coeff;
  }
  return out;
}

}  // namespace csh
