#include "cct/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cct {

void BipartiteGraph::add_edge(int bottom, int top) {
  if (bottom < 0 || bottom >= num_bottom || top < 0 || top >= num_top)
    throw std::invalid_argument("edge endpoint out of range");
  edges.insert({bottom, top});
}

int BipartiteGraph::max_degree() const {
  std::vector<int> bottom_deg(num_bottom, 0), top_deg(num_top, 0);
  for (auto [b, t] : edges) {
    ++bottom_deg[b];
    ++top_deg[t];
  }
  int d = 0;
  for (int x : bottom_deg) d = std::max(d, x);
  for (int x : top_deg) d = std::max(d, x);
  return d;
}

bool Matching::contains(int bottom, int top) const {
  return std::find(pairs.begin(), pairs.end(), std::pair{bottom, top}) != pairs.end();
}

bool Matching::covers_bottom(int bottom) const {
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](auto p) { return p.first == bottom; });
}

bool Matching::covers_top(int top) const {
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](auto p) { return p.second == top; });
}

void Matching::add(int bottom, int top) {
  pairs.emplace_back(bottom, top);
  std::sort(pairs.begin(), pairs.end());
}

void DiGraph::add_edge(int from, int to) {
  if (from < 0 || from >= num_vertices || to < 0 || to >= num_vertices)
    throw std::invalid_argument("edge endpoint out of range");
  edges.insert({from, to});
}

Matching lfm_matching(const BipartiteGraph& g) {
  Matching m;
  std::vector<bool> top_taken(g.num_top, false);
  for (int b = 0; b < g.num_bottom; ++b) {
    auto lo = g.edges.lower_bound({b, 0});
    auto hi = g.edges.lower_bound({b + 1, 0});
    for (auto it = lo; it != hi; ++it)
      if (!top_taken[it->second]) {
        top_taken[it->second] = true;
        m.pairs.emplace_back(b, it->second);
        break;
      }
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

bool check_lfm_certificate(const BipartiteGraph& g, const Matching& l) {
  auto in_l = [&](int i, int j) { return l.contains(i, j); };
  for (int i = 0; i < g.num_bottom; ++i)
    for (int j = 0; j < g.num_top; ++j) {
      bool lhs = in_l(i, j);
      bool rhs = g.has_edge(i, j);
      if (rhs)
        for (int k = 0; k < j && rhs; ++k)
          if (in_l(i, k)) rhs = false;
      if (rhs)
        for (int b = 0; b < i && rhs; ++b)
          if (in_l(b, j)) rhs = false;
      if (rhs)
        for (int k = 0; k < j && rhs; ++k) {
          if (!g.has_edge(i, k)) continue;
          bool taken_earlier = false;
          for (int b = 0; b < i; ++b)
            if (in_l(b, k)) { taken_earlier = true; break; }
          if (!taken_earlier) rhs = false;
        }
      if (lhs != rhs) return false;
    }
  return true;
}

bool lfmm_decide_edge(const BipartiteGraph& g, int bottom, int top) {
  if (bottom < 0 || bottom >= g.num_bottom || top < 0 || top >= g.num_top)
    throw std::invalid_argument("designated edge out of range");
  return lfm_matching(g).contains(bottom, top);
}

bool vlfmm_decide_vertex(const BipartiteGraph& g, int top) {
  if (top < 0 || top >= g.num_top)
    throw std::invalid_argument("designated vertex out of range");
  return lfm_matching(g).covers_top(top);
}

std::vector<int> bfs_distances(const DiGraph& g, int src) {
  if (src < 0 || src >= g.num_vertices)
    throw std::invalid_argument("source vertex out of range");
  std::vector<int> dist(g.num_vertices, -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    auto lo = g.edges.lower_bound({v, 0});
    auto hi = g.edges.lower_bound({v + 1, 0});
    for (auto it = lo; it != hi; ++it)
      if (dist[it->second] == -1) {
        dist[it->second] = dist[v] + 1;
        queue.push_back(it->second);
      }
  }
  return dist;
}

std::vector<int> reachable_set(const DiGraph& g, int src) {
  std::vector<int> out;
  auto dist = bfs_distances(g, src);
  for (int v = 0; v < g.num_vertices; ++v)
    if (dist[v] >= 0) out.push_back(v);
  return out;
}

bool check_topological(const DiGraph& g) {
  return std::all_of(g.edges.begin(), g.edges.end(),
                     [](auto e) { return e.first < e.second; });
}

LayeredGraph layered_expansion(const DiGraph& g) {
  const int n = g.num_vertices;
  LayeredGraph out;
  out.base_n = n;
  out.graph.num_vertices = n * n;
  for (int layer = 0; layer + 1 < n; ++layer)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i == j || g.has_edge(i, j))
          out.graph.add_edge(out.vertex_at(layer, i), out.vertex_at(layer + 1, j));
  return out;
}

}  // namespace cct
