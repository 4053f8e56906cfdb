#pragma once

#include <set>
#include <utility>
#include <vector>

#include "cct/trivalue.hpp"

namespace cct {

/// Bipartite graph with `num_bottom` bottom and `num_top` top vertices.
/// Edges are kept as a sorted set of (bottom, top) pairs.
struct BipartiteGraph {
  int num_bottom = 0;
  int num_top = 0;
  std::set<std::pair<int, int>> edges;

  bool has_edge(int bottom, int top) const { return edges.count({bottom, top}) != 0; }
  void add_edge(int bottom, int top);
  /// Largest vertex degree on either side.
  int max_degree() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

/// A set of vertex-disjoint (bottom, top) pairs, kept sorted.
struct Matching {
  std::vector<std::pair<int, int>> pairs;

  bool contains(int bottom, int top) const;
  bool covers_bottom(int bottom) const;
  bool covers_top(int top) const;
  void add(int bottom, int top);

  friend bool operator==(const Matching&, const Matching&) = default;
};

struct DiGraph {
  int num_vertices = 0;
  std::set<std::pair<int, int>> edges;

  bool has_edge(int from, int to) const { return edges.count({from, to}) != 0; }
  void add_edge(int from, int to);

  friend bool operator==(const DiGraph&, const DiGraph&) = default;
};

/// Row d marks the vertices reachable from vertex 0 by a path of length at
/// most d; rows grow monotonically and row 0 is {0}.
struct ConnMatrix {
  int n = 0;
  std::vector<bool> cells;  // n*n, row-major

  bool at(int d, int i) const { return cells[static_cast<std::size_t>(d) * n + i]; }
  void set(int d, int i, bool v) { cells[static_cast<std::size_t>(d) * n + i] = v; }

  friend bool operator==(const ConnMatrix&, const ConnMatrix&) = default;
};

/// Greedy matching: scan bottoms in index order, each takes its
/// least-indexed unmatched neighbour.
Matching lfm_matching(const BipartiteGraph& g);

/// Checks the defining biconditional of the greedy matching certificate:
/// L(i,j) holds exactly when (i,j) is an edge, neither endpoint is used
/// earlier, and every smaller neighbour of i was taken by an earlier bottom.
bool check_lfm_certificate(const BipartiteGraph& g, const Matching& l);

bool lfmm_decide_edge(const BipartiteGraph& g, int bottom, int top);
bool vlfmm_decide_vertex(const BipartiteGraph& g, int top);

/// Breadth-first reachability; the independent reference for the circuit
/// constructions.
std::vector<int> reachable_set(const DiGraph& g, int src);

/// BFS distances from `src`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const DiGraph& g, int src);

/// true when every edge goes index-upward.
bool check_topological(const DiGraph& g);

/// n^2-vertex layered graph: copy (layer, vertex) at index layer*n + vertex,
/// with an edge into the next layer for every self-copy and every original
/// edge. Always index-upward.
struct LayeredGraph {
  DiGraph graph;
  int base_n = 0;
  int vertex_at(int layer, int v) const { return layer * base_n + v; }
};

LayeredGraph layered_expansion(const DiGraph& g);

}  // namespace cct
