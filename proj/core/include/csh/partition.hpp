#pragma once

#include <string>
#include <vector>

#include "csh/common.hpp"

namespace csh {

/// Integer partition, parts weakly decreasing and positive.
struct partition {
  std::vector<int> parts;

  partition() = default;
  explicit partition(std::vector<int> p);

  int n() const;
  int length() const { return (int)parts.size(); }
  bool operator==(const partition&) const = default;
  bool operator<(const partition& o) const { return parts < o.parts; }

  partition conjugate() const;
  /// Dominance order: this >= other (both partitions of the same n).
  bool dominates(const partition& other) const;
  /// Number of standard Young tableaux via the hook length formula.
  i64 hook_length_count() const;
  std::string to_string() const;
};

/// All partitions of n, in descending lexicographic order ((n) first, (1^n) last).
std::vector<partition> partitions_of(int n);

/// Shape (2^k, 1^(n-2k)).
partition two_column_shape(int n, int k);

}  // namespace csh
