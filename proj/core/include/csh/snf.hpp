#pragma once

#include <vector>

#include "csh/sparse_matrix.hpp"

namespace csh {

struct snf_result {
  std::vector<i64> factors;  // invariant factors, divisibility chain, 1s included
  int rank = 0;

  std::vector<i64> nontrivial() const {
    std::vector<i64> t;
    for (i64 f : factors)
      if (f > 1) t.push_back(f);
    return t;
  }
};

/// Invariant factors of an integer matrix. Sparse unit-pivot elimination with
/// Markowitz-style pivot choice, dense big-integer SNF on the residual core.
snf_result smith_normal_form(const sparse_matrix& m);

/// Rank over Q.
int rank_exact(const sparse_matrix& m);

/// Rank over GF(p).
int rank_mod_p(const sparse_matrix& m, i64 p);

/// Does A x = b have an integer solution? (Dense; intended for small systems.)
bool integer_solvable(const sparse_matrix& a, const std::vector<i64>& b);

/// Integer kernel basis of A (columns of the result span ker A over Z).
/// Dense; intended for small systems.
std::vector<std::vector<i64>> integer_kernel(const sparse_matrix& a);

}  // namespace csh
