#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nutkit/errors.hpp"

namespace nutkit {

/// Simple undirected graph on 0-based vertices, one 64-bit adjacency row per
/// vertex.  Values are immutable after construction; "edits" like with_edge()
/// build new graphs.  The 64-vertex cap keeps a row in one machine word; to go
/// beyond, widen row_t to a two-word bitset and bump max_vertices.
class Graph {
public:
  using row_t = std::uint64_t;
  static constexpr int max_vertices = 64;

  Graph() = default;

  // Validates symmetry, absence of loops, and that no bit >= n is set.
  Graph(int n, std::vector<row_t> rows);

  static Graph empty(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  std::size_t edge_count() const;

  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1u; }
  row_t neighbors(int u) const { return rows_[u]; }
  int degree(int u) const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  bool operator==(const Graph& other) const = default;

private:
  int n_ = 0;
  std::vector<row_t> rows_;
};

struct DegreeProfile {
  std::vector<int> degrees;
  bool is_regular = false;
  int d = -1; // common degree when regular
};

DegreeProfile degree_profile(const Graph& g);

bool is_connected(const Graph& g);

// Length of a shortest cycle; 0 when the graph is acyclic.
int girth(const Graph& g);

// --- adjacency-list text format -------------------------------------------
//
// list := "{" group (";" group)* "}" , group := INT ":" INT*
// Groups may also be separated by newlines; whitespace is free.  Every edge
// must appear in both endpoint groups.

Graph parse_adjacency_list(const std::string& text);
std::string to_adjacency_list(const Graph& g);

// --- graph6 -----------------------------------------------------------------
//
// Standard short-form graph6 (n <= 62): header byte n+63, then the upper
// triangle in column-major order packed into 6-bit groups, each offset by 63.

std::string to_graph6(const Graph& g);
Graph parse_graph6(const std::string& s);

// --- derived graphs and named families --------------------------------------

Graph complement(const Graph& g);

// Two concentric k-cycles joined by a zig-zag matching; 4-regular on 2k vertices.
Graph make_antiprism(int k);

// K_m minus the perfect matching {i, m-1-i}; (m-2)-regular.
Graph make_complete_minus_matching(int m);

Graph make_cycle(int n);
Graph make_path(int n);
Graph make_complete(int n);

} // namespace nutkit
