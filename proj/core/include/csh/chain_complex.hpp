#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csh/graph.hpp"
#include "csh/numbering.hpp"
#include "csh/sparse_matrix.hpp"
#include "csh/straighten.hpp"

namespace csh {

/// Chain complex of sparse integer matrices. boundaries[i] is d_i: C_i -> C_{i-1}
/// (rows indexed by C_{i-1}); boundaries[0] is unused.
struct integer_chain_complex {
  std::vector<i64> dims;
  std::vector<sparse_matrix> boundaries;
  std::vector<std::vector<std::string>> labels;  // may be empty per degree

  int top_degree() const { return (int)dims.size() - 1; }
  /// d_i o d_{i+1} = 0 for every i.
  bool differential_squares_to_zero() const;
};

/// One permutation-module summand of a full chain group.
struct module_block {
  uint32_t edge_mask = 0;
  std::vector<std::vector<int>> comps;  // canonical block order
  i64 offset = 0;
  i64 dim = 0;
};

/// Full q-degree-zero complex in tabloid bases.
struct full_complex {
  graph g;
  integer_chain_complex cc;
  std::vector<std::vector<module_block>> blocks;  // per degree
};

/// Build C_0..C_D with boundaries, D = max_degree (default: all m edges).
/// Throws size_error beyond n = 8 or when the basis budget is exceeded.
full_complex build_full_complex(const graph& g, int max_degree = -1,
                                i64 basis_budget = 200000);

/// Tabloid rank/unrank for a block-size vector (assignment of 1..n to slots).
i64 tabloid_rank(const std::vector<int>& sizes, const std::vector<int>& slot_of_vertex);
std::vector<int> tabloid_unrank(const std::vector<int>& sizes, i64 rank);
i64 tabloid_count(const std::vector<int>& sizes);

/// Specht-restricted complex (degrees 0..2) for lambda = (2^k, 1^(n-2k)),
/// k >= 1, reproducing the reference generator conventions.
struct restricted_complex {
  graph g;
  partition lambda;
  listing_order order = listing_order::bottom_row;
  integer_chain_complex cc;
};

restricted_complex build_restricted_complex(const graph& g, const partition& lambda,
                                            listing_order order = listing_order::bottom_row);

/// Integer coefficients expressing the straightened image of `gen` in the
/// given target generators (each given by its straightened expression).
/// Exact solve; throws consistency_error if no unique integral solution.
std::vector<i64> coefficients_of_image(const straightened_expr& gen,
                                       const std::vector<straightened_expr>& target_generators,
                                       const std::vector<numbering>& syt);

}  // namespace csh
