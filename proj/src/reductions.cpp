#include "cct/reductions.hpp"

#include <stdexcept>

namespace cct {

namespace {

void require_boolean_no_negation(const CcvInstance& inst, const char* who) {
  require_valid(inst.circuit);
  if (inst.circuit.domain != Domain::Boolean)
    throw std::invalid_argument(std::string(who) + ": Boolean circuit required");
  for (const Gate& g : inst.circuit.gates)
    if (g.kind == GateKind::Negation)
      throw std::invalid_argument(std::string(who) + ": negation gates not supported");
  if (inst.designated_wire < 0 || inst.designated_wire >= inst.circuit.num_wires)
    throw std::invalid_argument(std::string(who) + ": designated wire out of range");
  if (static_cast<int>(inst.inputs.size()) != inst.circuit.num_wires)
    throw std::invalid_argument(std::string(who) + ": input length mismatch");
}

CcvToVlfmmResult build_vlfmm_graph(const CcvInstance& inst) {
  const Circuit& c = inst.circuit;
  const int m = c.num_wires;
  const int n = static_cast<int>(c.gates.size());

  CcvToVlfmmResult out;
  out.layers = n + 1;
  out.graph.num_top = (n + 1) * m;
  out.graph.num_bottom = (n + 1) * m;
  auto node = [m](int layer, int wire) { return layer * m + wire; };

  for (int x = 0; x < m; ++x)
    if (inst.inputs[x] == TriValue::One) out.graph.add_edge(node(0, x), node(0, x));

  for (int t = 0; t < n; ++t) {
    const Gate& g = c.gates[t];
    const int layer = t + 1;
    if (g.kind == GateKind::Comparator) {
      const int hi = g.max_wire, lo = g.min_wire;  // hi < lo, gates point one way
      // Max-wire bottom scans (previous hi, new hi); min-wire bottom scans
      // (previous lo, new hi, new lo). Node order makes the max-wire bottom
      // act first, which is what the four matched/unmatched cases need.
      out.graph.add_edge(node(layer, hi), node(layer - 1, hi));
      out.graph.add_edge(node(layer, hi), node(layer, hi));
      out.graph.add_edge(node(layer, lo), node(layer - 1, lo));
      out.graph.add_edge(node(layer, lo), node(layer, hi));
      out.graph.add_edge(node(layer, lo), node(layer, lo));
      for (int x = 0; x < m; ++x) {
        if (x == lo || x == hi) continue;
        out.graph.add_edge(node(layer, x), node(layer - 1, x));
        out.graph.add_edge(node(layer, x), node(layer, x));
      }
    } else {  // dummy layer forwards everything
      for (int x = 0; x < m; ++x) {
        out.graph.add_edge(node(layer, x), node(layer - 1, x));
        out.graph.add_edge(node(layer, x), node(layer, x));
      }
    }
  }

  for (int x = 0; x < m; ++x) out.output_top.push_back(node(n, x));
  out.designated_top = node(n, inst.designated_wire);
  return out;
}

}  // namespace

CcvToVlfmmResult ccv_to_3vlfmm(const CcvInstance& inst) {
  require_boolean_no_negation(inst, "ccv_to_3vlfmm");
  if (all_gates_upward(inst.circuit)) return build_vlfmm_graph(inst);

  NormalizedCircuit norm = normalize_directions(inst.circuit);
  CcvInstance flat;
  flat.circuit = std::move(norm.circuit);
  flat.inputs = norm.embed_inputs(inst.inputs);
  flat.designated_wire = norm.output_wire[inst.designated_wire];
  CcvToVlfmmResult out = build_vlfmm_graph(flat);
  out.pre_normalized = true;
  std::vector<int> remapped(inst.circuit.num_wires);
  for (int x = 0; x < inst.circuit.num_wires; ++x)
    remapped[x] = out.output_top[norm.output_wire[x]];
  out.output_top = std::move(remapped);
  out.designated_top = out.output_top[inst.designated_wire];
  return out;
}

CcvToLfmmResult ccv_to_3lfmm(const CcvInstance& inst) {
  CcvToLfmmResult out;
  out.inner = ccv_to_3vlfmm(inst);
  out.graph = out.inner.graph;

  int top_degree = 0;
  for (auto [b, t] : out.graph.edges)
    if (t == out.inner.designated_top) ++top_degree;
  if (top_degree >= 3)
    throw std::invalid_argument("ccv_to_3lfmm: designated top vertex already has degree 3");

  const int extra_top = out.graph.num_top++;
  const int extra_bottom = out.graph.num_bottom++;
  // The fresh bottom scans the designated top first (smaller index), then
  // the fresh top, so it claims the fresh top exactly when the designated
  // top was taken by the simulation.
  out.graph.add_edge(extra_bottom, out.inner.designated_top);
  out.graph.add_edge(extra_bottom, extra_top);
  out.designated_edge = {extra_bottom, extra_top};
  return out;
}

VlfmmToCcvResult vlfmm_to_ccv(const BipartiteGraph& g, int designated_top) {
  if (designated_top < 0 || designated_top >= g.num_top)
    throw std::invalid_argument("vlfmm_to_ccv: designated vertex out of range");
  VlfmmToCcvResult out;
  out.num_tops = g.num_top;
  Circuit& c = out.instance.circuit;
  c.num_wires = g.num_top + g.num_bottom;
  c.domain = Domain::Boolean;
  for (int b = 0; b < g.num_bottom; ++b)
    for (int t = 0; t < g.num_top; ++t)
      c.gates.push_back(g.has_edge(b, t)
                            ? Gate::comparator(out.bottom_wire(b), out.top_wire(t))
                            : Gate::dummy(out.bottom_wire(b)));
  out.instance.inputs.assign(c.num_wires, TriValue::Zero);
  for (int b = 0; b < g.num_bottom; ++b)
    out.instance.inputs[out.bottom_wire(b)] = TriValue::One;
  out.instance.designated_wire = out.top_wire(designated_top);
  return out;
}

CcvnegToCcvResult ccvneg_to_ccv(const CcvInstance& inst) {
  require_valid(inst.circuit);
  if (inst.circuit.domain != Domain::Boolean)
    throw std::invalid_argument("ccvneg_to_ccv: Boolean circuit required");
  if (static_cast<int>(inst.inputs.size()) != inst.circuit.num_wires)
    throw std::invalid_argument("ccvneg_to_ccv: input length mismatch");

  const int m = inst.circuit.num_wires;
  CcvnegToCcvResult out;
  out.helper_wire = 2 * m;
  Circuit& c = out.instance.circuit;
  c.num_wires = 2 * m + 1;
  c.domain = Domain::Boolean;

  int row = 0;
  for (const Gate& g : inst.circuit.gates) {
    switch (g.kind) {
      case GateKind::Comparator:
        c.gates.push_back(Gate::comparator(out.value_wire(g.min_wire),
                                           out.value_wire(g.max_wire)));
        c.gates.push_back(Gate::comparator(out.complement_wire(g.max_wire),
                                           out.complement_wire(g.min_wire)));
        row += 2;
        break;
      case GateKind::Negation: {
        const int z = out.value_wire(g.wire());
        const int zbar = out.complement_wire(g.wire());
        c.gates.push_back(Gate::comparator(z, out.helper_wire));
        c.gates.push_back(Gate::comparator(zbar, z));
        c.gates.push_back(Gate::comparator(out.helper_wire, zbar));
        row += 3;
        break;
      }
      case GateKind::Dummy:
        c.gates.push_back(Gate::dummy(out.value_wire(g.wire())));
        c.gates.push_back(Gate::dummy(out.complement_wire(g.wire())));
        row += 2;
        break;
    }
    out.group_end_row.push_back(row);
  }

  out.instance.inputs.assign(c.num_wires, TriValue::Zero);
  for (int w = 0; w < m; ++w) {
    out.instance.inputs[out.value_wire(w)] = inst.inputs[w];
    out.instance.inputs[out.complement_wire(w)] = tri_not(inst.inputs[w]);
  }
  out.instance.designated_wire = out.value_wire(inst.designated_wire);
  return out;
}

LfmmToCcvnegResult lfmm_to_ccvneg(const BipartiteGraph& g, int bottom, int top) {
  if (!g.has_edge(bottom, top))
    throw std::invalid_argument("lfmm_to_ccvneg: designated edge absent");

  // Bottoms after `bottom` and tops after `top` cannot affect the answer.
  const int nb = bottom + 1, nt = top + 1;
  LfmmToCcvnegResult out;
  out.truncated_bottoms = nb;
  out.truncated_tops = nt;

  Circuit& c = out.instance.circuit;
  const int copy = nt + nb;  // wires per simulation copy, tops first
  c.num_wires = 2 * copy;
  c.domain = Domain::Boolean;

  auto emit_copy = [&](int base, bool omit_designated) {
    for (int b = 0; b < nb; ++b)
      for (int t = 0; t < nt; ++t) {
        if (omit_designated && b == bottom && t == top) continue;
        c.gates.push_back(g.has_edge(b, t)
                              ? Gate::comparator(base + nt + b, base + t)
                              : Gate::dummy(base + nt + b));
      }
  };
  emit_copy(0, false);
  emit_copy(copy, true);

  const int c_wire = top;
  const int c_twin = copy + top;
  c.gates.push_back(Gate::negation(c_twin));
  // AND of (matched with the edge) and (unmatched without it) lands on the
  // designated top's wire.
  c.gates.push_back(Gate::comparator(c_wire, c_twin));

  out.instance.inputs.assign(c.num_wires, TriValue::Zero);
  for (int b = 0; b < nb; ++b) {
    out.instance.inputs[nt + b] = TriValue::One;
    out.instance.inputs[copy + nt + b] = TriValue::One;
  }
  out.instance.designated_wire = c_wire;
  return out;
}

TriValue decode_rails(TriValue first, TriValue second) {
  if (first == TriValue::Zero && second == TriValue::Zero) return TriValue::Zero;
  if (first == TriValue::One && second == TriValue::One) return TriValue::One;
  if (first == TriValue::Zero && second == TriValue::One) return TriValue::Star;
  throw std::logic_error("rail pair (1,0) cannot arise");
}

std::vector<TriValue> encode_rails(const std::vector<TriValue>& tri_inputs) {
  std::vector<TriValue> rails;
  rails.reserve(2 * tri_inputs.size());
  for (TriValue v : tri_inputs) {
    rails.push_back(v == TriValue::One ? TriValue::One : TriValue::Zero);
    rails.push_back(v == TriValue::Zero ? TriValue::Zero : TriValue::One);
  }
  return rails;
}

Circuit to_double_rail(const Circuit& tri) {
  require_valid(tri);
  for (const Gate& g : tri.gates)
    if (g.kind == GateKind::Negation)
      throw std::invalid_argument("to_double_rail: negation gates not supported");
  Circuit out;
  out.num_wires = 2 * tri.num_wires;
  out.domain = Domain::Boolean;
  for (const Gate& g : tri.gates) {
    if (g.kind == GateKind::Comparator) {
      out.gates.push_back(Gate::comparator(2 * g.min_wire, 2 * g.max_wire));
      out.gates.push_back(Gate::comparator(2 * g.min_wire + 1, 2 * g.max_wire + 1));
    } else {
      out.gates.push_back(Gate::dummy(2 * g.wire()));
      out.gates.push_back(Gate::dummy(2 * g.wire() + 1));
    }
  }
  return out;
}

TriToBoolResult trivalued_to_boolean(const CcvInstance& tri) {
  require_valid(tri.circuit);
  if (tri.designated_wire < 0 || tri.designated_wire >= tri.circuit.num_wires)
    throw std::invalid_argument("trivalued_to_boolean: designated wire out of range");
  if (static_cast<int>(tri.inputs.size()) != tri.circuit.num_wires)
    throw std::invalid_argument("trivalued_to_boolean: input length mismatch");

  TriToBoolResult out;
  out.instance.circuit = to_double_rail(tri.circuit);
  out.instance.inputs = encode_rails(tri.inputs);
  // A rail pair reads 1 exactly when both rails do; fold that onto rail 1.
  out.instance.circuit.gates.push_back(Gate::comparator(
      out.rail1(tri.designated_wire), out.rail2(tri.designated_wire)));
  out.instance.designated_wire = out.rail1(tri.designated_wire);
  return out;
}

ReachabilityCircuit reachability_to_ccv(const DiGraph& g) {
  if (!check_topological(g))
    throw std::invalid_argument("reachability_to_ccv: edges must be index-upward");
  const int n = g.num_vertices;
  if (n == 0) throw std::invalid_argument("reachability_to_ccv: empty graph");

  ReachabilityCircuit out;
  out.n = n;
  out.circuit.num_wires = 2 * n;
  out.circuit.domain = Domain::Boolean;
  for (int k = 0; k < n; ++k) {
    out.circuit.gates.push_back(Gate::comparator(out.feeder_wire(k), out.vertex_wire(0)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        out.circuit.gates.push_back(
            g.has_edge(i, j)
                ? Gate::comparator(out.vertex_wire(i), out.vertex_wire(j))
                : Gate::dummy(out.vertex_wire(i)));
  }
  out.inputs.assign(2 * n, TriValue::Zero);
  for (int k = 0; k < n; ++k) out.inputs[out.feeder_wire(k)] = TriValue::One;
  return out;
}

ConnMatrix conn_matrix_via_ccv(const DiGraph& g) {
  const int n = g.num_vertices;
  if (n == 0) throw std::invalid_argument("conn_matrix_via_ccv: empty graph");
  LayeredGraph layered = layered_expansion(g);
  ReachabilityCircuit rc = reachability_to_ccv(layered.graph);
  std::vector<TriValue> final_row = evaluate_final(rc.circuit, rc.inputs);

  ConnMatrix u;
  u.n = n;
  u.cells.assign(static_cast<std::size_t>(n) * n, false);
  for (int d = 0; d < n; ++d)
    for (int i = 0; i < n; ++i)
      u.set(d, i,
            final_row[rc.vertex_wire(layered.vertex_at(d, i))] == TriValue::One);
  return u;
}

}  // namespace cct
