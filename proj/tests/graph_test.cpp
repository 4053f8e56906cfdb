#include "cct/graph.hpp"

#include "cct/oracles.hpp"
#include "doctest.h"

using namespace cct;

namespace {

// Bottoms x,y,z = 0,1,2 against tops a,b,c,d = 0,1,2,3.
BipartiteGraph seven_vertex_graph() {
  BipartiteGraph g;
  g.num_bottom = 3;
  g.num_top = 4;
  for (auto [b, t] : {std::pair{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 1}, {2, 3}})
    g.add_edge(b, t);
  return g;
}

DiGraph five_vertex_dag() {
  DiGraph g;
  g.num_vertices = 5;
  for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {2, 3}, {2, 4}}) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("greedy matching takes the least available neighbour") {
  Matching m = lfm_matching(seven_vertex_graph());
  CHECK(m.pairs == std::vector<std::pair<int, int>>{{0, 0}, {1, 2}, {2, 1}});
  CHECK_FALSE(m.covers_top(3));

  BipartiteGraph g2;
  g2.num_bottom = 3;
  g2.num_top = 3;
  for (auto [b, t] : {std::pair{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 1}})
    g2.add_edge(b, t);
  CHECK(lfm_matching(g2).pairs ==
        std::vector<std::pair<int, int>>{{0, 0}, {1, 2}, {2, 1}});

  BipartiteGraph edgeless{4, 4, {}};
  CHECK(lfm_matching(edgeless).pairs.empty());
}

TEST_CASE("certificate check accepts exactly the greedy matching") {
  BipartiteGraph g = seven_vertex_graph();
  CHECK(check_lfm_certificate(g, lfm_matching(g)));

  Matching wrong;
  wrong.pairs = {{0, 1}, {1, 0}, {2, 3}};
  CHECK_FALSE(check_lfm_certificate(g, wrong));

  BipartiteGraph edgeless{3, 3, {}};
  CHECK(check_lfm_certificate(edgeless, Matching{}));
}

TEST_CASE("certificate is unique and matching maximal on random graphs") {
  for (int trial = 0; trial < 200; ++trial) {
    BipartiteGraph g = random_bipartite(5100 + trial, 1 + trial % 7, 1 + trial % 5);
    Matching m = lfm_matching(g);
    CHECK(check_lfm_certificate(g, m));
    for (auto [b, t] : g.edges)
      CHECK((m.covers_bottom(b) || m.covers_top(t)));  // maximality
  }
}

TEST_CASE("designated edge and vertex queries") {
  BipartiteGraph g = seven_vertex_graph();
  CHECK(lfmm_decide_edge(g, 1, 2));
  CHECK_FALSE(lfmm_decide_edge(g, 0, 1));
  CHECK_FALSE(vlfmm_decide_vertex(g, 3));
  CHECK(vlfmm_decide_vertex(g, 0));
  CHECK_THROWS_AS(lfmm_decide_edge(g, 5, 0), std::invalid_argument);

  BipartiteGraph edgeless{2, 2, {}};
  CHECK_FALSE(vlfmm_decide_vertex(edgeless, 1));
}

TEST_CASE("breadth-first reachability") {
  CHECK(reachable_set(five_vertex_dag(), 0) == std::vector<int>{0, 1, 2, 3, 4});

  DiGraph edgeless{3, {}};
  CHECK(reachable_set(edgeless, 0) == std::vector<int>{0});

  DiGraph path{3, {}};
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(reachable_set(path, 1) == std::vector<int>{1, 2});
  CHECK(bfs_distances(path, 0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("reachability is monotone in the edge set") {
  for (int trial = 0; trial < 100; ++trial) {
    DiGraph g = random_topological_dag(6300 + trial, 2 + trial % 7, 0.3);
    auto base = reachable_set(g, 0);
    DiGraph more = g;
    SplitMix64 rng(7100 + trial);
    more.add_edge(rng.below(more.num_vertices), rng.below(more.num_vertices));
    auto grown = reachable_set(more, 0);
    for (int v : base) CHECK(std::find(grown.begin(), grown.end(), v) != grown.end());
  }
}

TEST_CASE("index-upward check") {
  CHECK(check_topological(five_vertex_dag()));
  DiGraph back{3, {}};
  back.add_edge(2, 1);
  CHECK_FALSE(check_topological(back));
  CHECK(check_topological(DiGraph{4, {}}));
}

TEST_CASE("layered expansion: smallest cases") {
  DiGraph one{1, {}};
  LayeredGraph l1 = layered_expansion(one);
  CHECK(l1.graph.num_vertices == 1);
  CHECK(l1.graph.edges.empty());

  DiGraph two{2, {}};
  two.add_edge(0, 1);
  LayeredGraph l2 = layered_expansion(two);
  CHECK(l2.graph.num_vertices == 4);
  CHECK(l2.graph.edges ==
        std::set<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}});
}

TEST_CASE("layered expansion tracks bounded-distance reachability") {
  DiGraph g = five_vertex_dag();
  LayeredGraph layered = layered_expansion(g);
  CHECK(layered.graph.num_vertices == 25);
  CHECK(check_topological(layered.graph));

  auto dist = bfs_distances(g, 0);
  auto expanded = bfs_distances(layered.graph, layered.vertex_at(0, 0));
  for (int layer = 0; layer < 5; ++layer)
    for (int v = 0; v < 5; ++v) {
      bool reachable = expanded[layered.vertex_at(layer, v)] >= 0;
      CHECK(reachable == (dist[v] >= 0 && dist[v] <= layer));
    }
}

TEST_CASE("layered expansion is always index-upward") {
  for (int trial = 0; trial < 50; ++trial) {
    SplitMix64 rng(8200 + trial);
    DiGraph g;
    g.num_vertices = 1 + rng.below(7);
    int edges = rng.below(12);
    for (int e = 0; e < edges; ++e) {
      int a = rng.below(g.num_vertices), b = rng.below(g.num_vertices);
      if (a != b) g.add_edge(a, b);
    }
    CHECK(check_topological(layered_expansion(g).graph));
  }
}
