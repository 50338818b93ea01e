#pragma once

#include <map>

#include "csh/graph.hpp"
#include "csh/partition.hpp"

namespace csh {

/// Chromatic symmetric function in the Schur basis; exact integer coefficients.
struct schur_expansion {
  int n = 0;
  std::map<partition, i64> coeffs;

  bool operator==(const schur_expansion&) const = default;
  i64 coeff(const partition& lam) const;
};

/// X_G in the Schur basis: [s_lambda] = sum_{S subset E} (-1)^|S| chi^lambda(type(S)),
/// evaluated through the signed connected-subgraph count per component type
/// (no power-set materialization). n <= 10.
schur_expansion csf_schur(const graph& g);

/// Signed counts N_mu = sum over edge subsets of component type mu of (-1)^|S|.
std::map<partition, i64> signed_type_counts(const graph& g);

/// Oracle: enumerate proper colorings with at most `bound` colors and tally
/// color-class compositions. n <= 7.
struct coloring_tally {
  /// count per color-size composition (c_1..c_bound, zeros allowed)
  std::map<std::vector<int>, i64> by_composition;
  /// count of proper colorings using at most k colors, k = 1..bound
  std::vector<i64> chromatic_values;
};

coloring_tally csf_from_colorings(const graph& g, int bound);

}  // namespace csh
