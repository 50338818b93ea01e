#pragma once

#include "csh/group_algebra.hpp"
#include "csh/partition.hpp"

namespace csh {

/// Cycle type of a permutation, as a partition of n.
partition cycle_type(const permutation& p);

/// Irreducible symmetric group character chi^lambda on the class of cycle
/// type mu, via the Murnaghan-Nakayama border-strip recursion (memoized).
i64 mn_character(const partition& lambda, const partition& mu);

/// Full character table for S_n: table[i][j] = chi^{lambda_i}(mu_j) with both
/// indices running over partitions_of(n).
std::vector<std::vector<i64>> character_table(int n);

}  // namespace csh
