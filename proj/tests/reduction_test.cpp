#include "cct/reductions.hpp"

#include "cct/oracles.hpp"
#include "cct/verify.hpp"
#include "doctest.h"

using namespace cct;

namespace {

const TriValue O = TriValue::Zero;
const TriValue I = TriValue::One;
const TriValue S = TriValue::Star;

CcvInstance staircase_example() {
  Circuit c;
  c.num_wires = 3;
  c.domain = Domain::Boolean;
  c.gates = {Gate::comparator(1, 0), Gate::comparator(2, 1)};
  return {c, {O, I, I}, 2};
}

BipartiteGraph seven_vertex_graph() {
  BipartiteGraph g;
  g.num_bottom = 3;
  g.num_top = 4;
  for (auto [b, t] : {std::pair{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 1}, {2, 3}})
    g.add_edge(b, t);
  return g;
}

}  // namespace

TEST_CASE("circuit to matching: staircase produces the worked 18-node graph") {
  CcvToVlfmmResult red = ccv_to_3vlfmm(staircase_example());
  CHECK_FALSE(red.pre_normalized);
  CHECK(red.layers == 3);
  CHECK(red.graph.num_top == 9);
  CHECK(red.graph.num_bottom == 9);

  // node(layer, wire) = 3*layer + wire on both sides
  std::set<std::pair<int, int>> expected = {
      {1, 1}, {2, 2},                          // input edges for wires 1, 2
      {3, 0}, {3, 3}, {4, 1}, {4, 3}, {4, 4},  // gate layer 1 gadget
      {5, 2}, {5, 5},                          // wire 2 forwarded
      {7, 4}, {7, 7}, {8, 5}, {8, 7}, {8, 8},  // gate layer 2 gadget
      {6, 3}, {6, 6},                          // wire 0 forwarded
  };
  CHECK(red.graph.edges == expected);
  CHECK(red.graph.max_degree() <= 3);

  Matching lfm = lfm_matching(red.graph);
  CHECK(lfm.covers_top(red.output_top[0]));
  CHECK(lfm.covers_top(red.output_top[1]));
  CHECK_FALSE(lfm.covers_top(red.output_top[2]));  // the one zero output
  CHECK(red.designated_top == red.output_top[2]);
}

TEST_CASE("circuit to matching: one-wire no-gate instance") {
  Circuit c;
  c.num_wires = 1;
  CcvToVlfmmResult red = ccv_to_3vlfmm({c, {I}, 0});
  CHECK(red.graph.edges == std::set<std::pair<int, int>>{{0, 0}});
  CHECK(lfm_matching(red.graph).covers_top(red.designated_top));
}

TEST_CASE("circuit to matching rejects negations, normalizes directions") {
  Circuit with_neg;
  with_neg.num_wires = 2;
  with_neg.gates = {Gate::negation(0)};
  CHECK_THROWS_AS(ccv_to_3vlfmm({with_neg, {O, O}, 0}), std::invalid_argument);

  Circuit downward;  // max moves to the larger index: not gadget-ready
  downward.num_wires = 2;
  downward.gates = {Gate::comparator(0, 1)};
  CcvToVlfmmResult red = ccv_to_3vlfmm({downward, {I, O}, 1});
  CHECK(red.pre_normalized);
  CHECK(lfm_matching(red.graph).covers_top(red.designated_top));  // output is 1
  CHECK(red.graph.max_degree() <= 3);
}

TEST_CASE("vertex question to edge question") {
  BipartiteGraph g;  // x~{a,b,c}, y~{a,c}, z~{b}; ask about b
  g.num_bottom = 3;
  g.num_top = 3;
  for (auto [b, t] : {std::pair{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 1}})
    g.add_edge(b, t);

  // Wrap as a circuit question first so the whole pipeline is exercised.
  VlfmmToCcvResult circuit = vlfmm_to_ccv(g, 1);
  CcvToLfmmResult red = ccv_to_3lfmm(circuit.instance);
  CHECK(red.graph.max_degree() <= 3);
  // b is matched (by z), so the fresh edge joins the matching.
  CHECK(lfmm_decide_edge(red.graph, red.designated_edge.first, red.designated_edge.second));
}

TEST_CASE("vertex question to edge question: unmatched designated top") {
  Circuit c;  // designated wire stays 0, so the designated top stays unmatched
  c.num_wires = 2;
  c.gates = {Gate::comparator(1, 0)};
  CcvToLfmmResult red = ccv_to_3lfmm({c, {O, O}, 0});
  CHECK_FALSE(lfmm_decide_edge(red.graph, red.designated_edge.first,
                               red.designated_edge.second));
}

TEST_CASE("matching to circuit: seven-vertex instance") {
  VlfmmToCcvResult red = vlfmm_to_ccv(seven_vertex_graph(), 3);
  const Circuit& c = red.instance.circuit;
  CHECK(c.num_wires == 7);
  CHECK(c.gates.size() == 12);  // complete 3x4 grid of comparator-or-dummy

  std::vector<Gate> expected = {
      Gate::comparator(4, 0), Gate::comparator(4, 1), Gate::comparator(4, 2),
      Gate::dummy(4),
      Gate::comparator(5, 0), Gate::dummy(5), Gate::comparator(5, 2),
      Gate::dummy(5),
      Gate::dummy(6), Gate::comparator(6, 1), Gate::dummy(6),
      Gate::comparator(6, 3),
  };
  CHECK(c.gates == expected);

  auto outputs = evaluate_final(c, red.instance.inputs);
  CHECK(outputs == std::vector<TriValue>{I, I, I, O, O, O, O});
  CHECK(evaluate_designated(red.instance) == O);  // top d stays unmatched
}

TEST_CASE("matching to circuit: edgeless graph is all dummies") {
  BipartiteGraph g{2, 2, {}};
  VlfmmToCcvResult red = vlfmm_to_ccv(g, 0);
  for (const Gate& gate : red.instance.circuit.gates)
    CHECK(gate.kind == GateKind::Dummy);
  auto outputs = evaluate_final(red.instance.circuit, red.instance.inputs);
  CHECK(outputs[red.top_wire(0)] == O);
  CHECK(outputs[red.top_wire(1)] == O);
}

TEST_CASE("double rail: worked three-wire example with one negation") {
  Circuit c;
  c.num_wires = 3;
  c.gates = {Gate::comparator(1, 0), Gate::comparator(2, 1), Gate::negation(2)};
  CcvInstance inst{c, {O, I, I}, 0};

  CcvnegToCcvResult red = ccvneg_to_ccv(inst);
  CHECK(red.instance.circuit.num_wires == 7);
  CHECK(red.instance.inputs == std::vector<TriValue>{O, I, I, O, I, O, O});
  auto outputs = evaluate_final(red.instance.circuit, red.instance.inputs);
  CHECK(outputs == std::vector<TriValue>{I, O, I, O, I, O, O});
  CHECK(evaluate_designated(red.instance) == evaluate_designated(inst));
}

TEST_CASE("double rail: lone negation") {
  Circuit c;
  c.num_wires = 1;
  c.gates = {Gate::negation(0)};
  CcvnegToCcvResult red = ccvneg_to_ccv({c, {O}, 0});
  CHECK(evaluate_designated(red.instance) == I);
}

TEST_CASE("edge membership circuit: worked five-vertex example") {
  BipartiteGraph g;  // x~{a,b}, y~{a,c}; ask about (y,c)
  g.num_bottom = 2;
  g.num_top = 3;
  for (auto [b, t] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 2}}) g.add_edge(b, t);

  LfmmToCcvnegResult red = lfmm_to_ccvneg(g, 1, 2);
  CHECK(red.instance.circuit.num_wires == 10);
  CHECK(evaluate_designated(red.instance) == I);
  CHECK(lfmm_decide_edge(g, 1, 2));
}

TEST_CASE("edge membership circuit: single edge and absent edge") {
  BipartiteGraph g{1, 2, {}};
  g.add_edge(0, 0);
  LfmmToCcvnegResult red = lfmm_to_ccvneg(g, 0, 0);
  CHECK(red.instance.circuit.num_wires == 4);
  CHECK(evaluate_designated(red.instance) == I);
  CHECK_THROWS_AS(lfmm_to_ccvneg(g, 0, 1), std::invalid_argument);
}

TEST_CASE("edge membership circuit: edge beaten by an earlier bottom") {
  BipartiteGraph g;  // both bottoms want top 0; the second loses
  g.num_bottom = 2;
  g.num_top = 1;
  g.add_edge(0, 0);
  g.add_edge(1, 0);
  CHECK(evaluate_designated(lfmm_to_ccvneg(g, 1, 0).instance) == O);
  CHECK_FALSE(lfmm_decide_edge(g, 1, 0));
  CHECK(evaluate_designated(lfmm_to_ccvneg(g, 0, 0).instance) == I);
}

TEST_CASE("rail pairs: all nine input combinations of one gate") {
  Circuit tri;
  tri.num_wires = 2;
  tri.domain = Domain::ThreeValued;
  tri.gates = {Gate::comparator(0, 1)};

  for (TriValue p : {O, I, S})
    for (TriValue q : {O, I, S}) {
      TriToBoolResult red = trivalued_to_boolean({tri, {p, q}, 0});
      auto rails = evaluate_final(red.instance.circuit, red.instance.inputs);
      CHECK(decode_rails(rails[red.rail1(0)], rails[red.rail2(0)]) == tri_and(p, q));
      CHECK(decode_rails(rails[red.rail1(1)], rails[red.rail2(1)]) == tri_or(p, q));
      bool designated = evaluate_designated(red.instance) == I;
      CHECK(designated == (tri_and(p, q) == I));
    }
}

TEST_CASE("rail pairs embed plain Boolean circuits") {
  CcvInstance inst = staircase_example();
  CcvInstance tri = inst;
  tri.circuit.domain = Domain::ThreeValued;
  TriToBoolResult red = trivalued_to_boolean(tri);
  auto rails = evaluate_final(red.instance.circuit, red.instance.inputs);
  auto expected = evaluate_final(inst.circuit, inst.inputs);
  for (int w = 0; w < 3; ++w) {
    CHECK(rails[red.rail1(w)] == expected[w]);
    CHECK(rails[red.rail2(w)] == expected[w]);
  }
}

TEST_CASE("reachability circuit: worked five-vertex graph") {
  DiGraph g;
  g.num_vertices = 5;
  for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {2, 3}, {2, 4}}) g.add_edge(u, v);

  ReachabilityCircuit red = reachability_to_ccv(g);
  CHECK(red.circuit.num_wires == 10);
  CHECK(red.circuit.gates.size() == 5 * (1 + 10));

  auto outputs = evaluate_final(red.circuit, red.inputs);
  for (int k = 0; k < 5; ++k) CHECK(outputs[red.feeder_wire(k)] == O);
  for (int v = 0; v < 5; ++v) CHECK(outputs[red.vertex_wire(v)] == I);
}

TEST_CASE("reachability circuit: edgeless pair reaches only the source") {
  DiGraph g{2, {}};
  ReachabilityCircuit red = reachability_to_ccv(g);
  auto outputs = evaluate_final(red.circuit, red.inputs);
  CHECK(outputs[red.vertex_wire(0)] == I);
  CHECK(outputs[red.vertex_wire(1)] == O);

  DiGraph back{2, {}};
  back.add_edge(1, 0);
  CHECK_THROWS_AS(reachability_to_ccv(back), std::invalid_argument);
}

TEST_CASE("distance matrix: two-vertex path") {
  DiGraph g{2, {}};
  g.add_edge(0, 1);
  ConnMatrix u = conn_matrix_via_ccv(g);
  CHECK(u.at(0, 0));
  CHECK_FALSE(u.at(0, 1));
  CHECK(u.at(1, 0));
  CHECK(u.at(1, 1));
}

TEST_CASE("distance matrix: five-vertex graph rows") {
  DiGraph g;
  g.num_vertices = 5;
  for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {2, 3}, {2, 4}}) g.add_edge(u, v);
  ConnMatrix u = conn_matrix_via_ccv(g);

  auto row = [&](int d) {
    std::vector<bool> r;
    for (int i = 0; i < 5; ++i) r.push_back(u.at(d, i));
    return r;
  };
  CHECK(row(0) == std::vector<bool>{true, false, false, false, false});
  CHECK(row(1) == std::vector<bool>{true, true, true, false, false});
  for (int d = 2; d < 5; ++d)
    CHECK(row(d) == std::vector<bool>{true, true, true, true, true});
}

TEST_CASE("cross-check sweeps at reduced scale") {
  for (const char* suite : {"ccv3vlfmm", "vlfmmccv", "ccv3lfmm", "ccvneg",
                            "lfmmccvneg", "tri2bool", "reach", "conn"}) {
    SuiteResult r = run_suite(suite, 40, 424242);
    INFO(suite, ": ", r.failures.empty() ? "" : r.failures.front());
    CHECK(r.ok());
  }
}
