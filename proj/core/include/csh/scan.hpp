#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csh/graph.hpp"
#include "csh/homology.hpp"

namespace csh {

/// One corpus graph's verdict for the torsion/planarity scan.
struct scan_record {
  std::string graph6;
  int n = 0;
  int m = 0;
  bool planar = false;
  i64 h1_free_rank = 0;
  i64 h1_two_torsion = 0;
  bool consistent() const { return planar == (h1_two_torsion == 0); }
  std::string verdict() const { return consistent() ? "consistent" : "counterexample"; }
  std::string csv_line() const;
};

struct scan_summary {
  i64 total = 0;
  i64 skipped = 0;  // unparsable or disconnected lines
  i64 torsion_count = 0;
  i64 nonplanar_count = 0;
  i64 counterexamples = 0;
};

/// Compute one record at the torsion prime p in degree `degree` (fast rank
/// path; exact ranks over Q, torsion count over GF(p)).
scan_record scan_graph(const graph& g, i64 p = 2, int degree = 1);

/// Scan a graph6 corpus (one graph per line). `emit` is called in input
/// order. Parallel over `jobs` workers.
scan_summary scan_corpus(const std::vector<std::string>& lines, i64 p, int degree, int jobs,
                         const std::function<void(const scan_record&)>& emit,
                         const std::function<void(size_t, const std::string&)>& warn);

/// File-per-key JSON result cache with atomic writes. Disabled when dir empty.
class result_cache {
 public:
  explicit result_cache(std::string dir) : dir_(std::move(dir)) {}
  bool enabled() const { return !dir_.empty(); }
  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value) const;
  static std::string key_for(const graph& g, const std::string& kind, const std::string& params);

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

}  // namespace csh
