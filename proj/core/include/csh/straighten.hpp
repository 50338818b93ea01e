#pragma once

#include <map>

#include "csh/group_algebra.hpp"
#include "csh/numbering.hpp"

namespace csh {

/// Integer combination of SYT-indexed polytabloids of one shape.
struct straightened_expr {
  std::map<numbering, i64> coeff;

  void add(const numbering& u, i64 c);
  straightened_expr& operator+=(const straightened_expr& o);
  straightened_expr scaled(i64 c) const;
  bool operator==(const straightened_expr&) const = default;
  bool is_zero() const { return coeff.empty(); }
};

/// Sort every row ascending (no sign) and order equal-length rows by their
/// first entry, picking up (-1)^len per adjacent swap of equal-length rows.
std::pair<numbering, int> row_normalize(const numbering& s);

/// All numberings obtained from S by exchanging the first j entries of row
/// i+1 (0-based i) with j-subsets of row i, preserving the order within each
/// moved subset. C(lambda_i, j) results.
std::vector<numbering> xi_expand(const numbering& s, int i, int j);

/// Express v_S^T as an integer combination of v_U^T over standard U.
/// Memoized; falls back to the regular-representation oracle if the rewrite
/// ever cycles (never observed, n <= 7 required for the fallback).
straightened_expr straighten(const numbering& s);

/// Independent check: compute v_S^{Y1} and all v_U^{Y1} as dense vectors in
/// the regular representation and solve the exact linear system. n <= 7.
straightened_expr oracle_straighten(const numbering& s);

/// Evaluate an expression as a group algebra element sum(coeff * v_U^{Y1})
/// where Y1 is the row-reading tableau of the shape.
group_algebra_element evaluate_expr(const straightened_expr& e, const partition& shape);

}  // namespace csh
