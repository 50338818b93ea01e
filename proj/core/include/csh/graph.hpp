#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csh/numbering.hpp"
#include "csh/partition.hpp"

namespace csh {

/// Simple graph on vertex set 1..n with a lex-sorted edge list.
struct graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (i,j), i<j, strictly lex increasing

  graph() = default;
  graph(int n_, std::vector<std::pair<int, int>> e);

  int m() const { return (int)edges.size(); }
  bool has_edge(int a, int b) const;
  bool is_connected() const;
  bool operator==(const graph&) const = default;
  std::string edge_list_string() const;
};

/// Spanning subgraph: an edge subset of a parent graph, with its connected
/// component partition (blocks sorted ascending; ordered by size descending
/// then minimum element) and shape.
struct spanning_subgraph {
  uint32_t edge_mask = 0;
  std::vector<std::vector<int>> components;
  partition shape;
};

/// Connected components of ([n], selected edges).
spanning_subgraph components_of(const graph& g, uint32_t edge_mask);

/// (-1)^(number of edges of F strictly below e in the lex edge order).
int lattice_sign(const spanning_subgraph& f, int edge_index);
int lattice_sign(uint32_t edge_mask, int edge_index);

/// graph6 (short form, n <= 62).
graph parse_graph6(const std::string& text);
std::string encode_graph6(const graph& g);

/// Plain edge-list file: first line n, then "i j" per line (1-indexed).
graph parse_edge_list(const std::string& text);
graph read_edge_list_file(const std::string& path);

/// Planarity via exhaustive K5/K33 minor search (desk scale; exact for all n
/// but exponential, intended for n <= 10).
bool is_planar(const graph& g);
bool has_k5_minor(const graph& g);
bool has_k33_minor(const graph& g);

/// Test-oracle style subdivision search (Kuratowski), complete for n <= 7.
bool has_kuratowski_subdivision(const graph& g);

/// Orellana-Scott construction: base must contain {u,z} and {v,w}, none of
/// {u,w},{v,z},{w,z}, and admit an automorphism exchanging {u,w} <-> {v,z}.
/// Returns (base + uw + wz, base + vz + wz).
std::pair<graph, graph> orellana_scott_pair(const graph& base, int u, int v, int w, int z);

/// Named graphs: K1..K6, K33, C3..C7, star4..star7, G1..G8.
graph builtin_graph(const std::string& name);
std::vector<std::string> builtin_names();

/// All connected graphs with n <= max_n vertices, one canonical graph6 line
/// per isomorphism class (exhaustive; max_n <= 7).
std::vector<std::string> connected_graph_corpus(int max_n);

/// Number of blocks (maximal 2-connected subgraphs) of a connected graph.
int block_count(const graph& g);

}  // namespace csh
