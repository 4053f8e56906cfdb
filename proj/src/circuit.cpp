#include "cct/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace cct {

std::vector<std::string> validate_circuit(const Circuit& c) {
  std::vector<std::string> errors;
  if (c.num_wires < 0) errors.push_back("negative wire count");
  if (!c.wire_names.empty() &&
      static_cast<int>(c.wire_names.size()) != c.num_wires)
    errors.push_back("wire name list does not match wire count");
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const std::string where = "gate " + std::to_string(i) + ": ";
    if (g.min_wire < 0 || g.min_wire >= c.num_wires ||
        g.max_wire < 0 || g.max_wire >= c.num_wires) {
      errors.push_back(where + "wire index out of range");
      continue;
    }
    switch (g.kind) {
      case GateKind::Comparator:
        if (g.min_wire == g.max_wire)
          errors.push_back(where + "comparator on a single wire (use a dummy gate)");
        break;
      case GateKind::Negation:
        if (c.domain == Domain::ThreeValued)
          errors.push_back(where + "negation not allowed in three-valued domain");
        if (g.min_wire != g.max_wire)
          errors.push_back(where + "negation names two distinct wires");
        break;
      case GateKind::Dummy:
        if (g.min_wire != g.max_wire)
          errors.push_back(where + "dummy names two distinct wires");
        break;
    }
  }
  return errors;
}

void require_valid(const Circuit& c) {
  auto errors = validate_circuit(c);
  if (!errors.empty()) throw std::invalid_argument("invalid circuit: " + errors.front());
}

namespace {

void check_inputs(const Circuit& c, const std::vector<TriValue>& inputs) {
  if (static_cast<int>(inputs.size()) != c.num_wires)
    throw std::invalid_argument("input length does not match wire count");
  if (c.domain == Domain::Boolean)
    for (TriValue v : inputs)
      if (!is_boolean(v))
        throw std::invalid_argument("star input fed to a Boolean circuit");
}

void apply_gate(const Gate& g, std::vector<TriValue>& row) {
  switch (g.kind) {
    case GateKind::Comparator: {
      TriValue a = row[g.min_wire], b = row[g.max_wire];
      row[g.min_wire] = tri_and(a, b);
      row[g.max_wire] = tri_or(a, b);
      break;
    }
    case GateKind::Negation:
      row[g.wire()] = tri_not(row[g.wire()]);
      break;
    case GateKind::Dummy:
      break;
  }
}

}  // namespace

LayerTrace evaluate(const CcvInstance& inst) {
  require_valid(inst.circuit);
  check_inputs(inst.circuit, inst.inputs);
  const int n = static_cast<int>(inst.circuit.gates.size());
  const int m = inst.circuit.num_wires;
  LayerTrace trace(n + 1, m);
  for (int j = 0; j < m; ++j) trace.at(0, j) = inst.inputs[j];
  std::vector<TriValue> row = inst.inputs;
  for (int t = 0; t < n; ++t) {
    apply_gate(inst.circuit.gates[t], row);
    for (int j = 0; j < m; ++j) trace.at(t + 1, j) = row[j];
  }
  return trace;
}

std::vector<TriValue> evaluate_final(const Circuit& c,
                                     const std::vector<TriValue>& inputs) {
  require_valid(c);
  check_inputs(c, inputs);
  std::vector<TriValue> row = inputs;
  for (const Gate& g : c.gates) apply_gate(g, row);
  return row;
}

TriValue evaluate_designated(const CcvInstance& inst) {
  if (inst.designated_wire < 0 || inst.designated_wire >= inst.circuit.num_wires)
    throw std::invalid_argument("designated wire out of range");
  return evaluate_final(inst.circuit, inst.inputs)[inst.designated_wire];
}

std::vector<int> ones_per_layer(const LayerTrace& t) {
  std::vector<int> counts(t.layers(), 0);
  for (int i = 0; i < t.layers(); ++i)
    for (int j = 0; j < t.wires(); ++j) {
      TriValue v = t.at(i, j);
      if (v == TriValue::Star)
        throw std::invalid_argument("ones_per_layer on a three-valued trace");
      if (v == TriValue::One) ++counts[i];
    }
  return counts;
}

bool all_gates_upward(const Circuit& c) {
  return std::all_of(c.gates.begin(), c.gates.end(), [](const Gate& g) {
    return g.kind != GateKind::Comparator || g.max_wire < g.min_wire;
  });
}

std::vector<TriValue> NormalizedCircuit::embed_inputs(
    const std::vector<TriValue>& original) const {
  if (original.size() != input_wire.size())
    throw std::invalid_argument("input length does not match original wire count");
  std::vector<TriValue> full(circuit.num_wires, TriValue::Zero);
  for (std::size_t x = 0; x < original.size(); ++x)
    full[input_wire[x]] = original[x];
  return full;
}

NormalizedCircuit normalize_directions(const Circuit& c) {
  require_valid(c);
  for (const Gate& g : c.gates)
    if (g.kind == GateKind::Negation)
      throw std::invalid_argument("normalize_directions: negation gates present");

  const int m = c.num_wires;
  std::vector<const Gate*> comparators;
  for (const Gate& g : c.gates)
    if (g.kind == GateKind::Comparator) comparators.push_back(&g);
  const int layers = static_cast<int>(comparators.size()) + 1;

  // Copy (layer l, wire x) lives at (layers-1-l)*m + x: the output layer
  // occupies indices 0..m-1, so forwarding a value into the next layer's
  // copy always moves the max toward the smaller index.
  auto wire_at = [&](int layer, int x) { return (layers - 1 - layer) * m + x; };

  NormalizedCircuit result;
  result.circuit.num_wires = layers * m;
  result.circuit.domain = c.domain;
  for (int x = 0; x < m; ++x) {
    result.input_wire.push_back(wire_at(0, x));
    result.output_wire.push_back(wire_at(layers - 1, x));
  }

  for (int t = 0; t < static_cast<int>(comparators.size()); ++t) {
    const Gate& g = *comparators[t];
    const int lo = g.min_wire, hi = g.max_wire;
    // Three-gate gadget: forward the max wire, compare against it, then
    // forward the min result. Fresh copies start at Zero, so each value
    // enters its next-layer copy through the comparator's max side.
    result.circuit.gates.push_back(Gate::comparator(wire_at(t, hi), wire_at(t + 1, hi)));
    result.circuit.gates.push_back(Gate::comparator(wire_at(t, lo), wire_at(t + 1, hi)));
    result.circuit.gates.push_back(Gate::comparator(wire_at(t, lo), wire_at(t + 1, lo)));
    for (int x = 0; x < m; ++x)
      if (x != lo && x != hi)
        result.circuit.gates.push_back(Gate::comparator(wire_at(t, x), wire_at(t + 1, x)));
  }
  return result;
}

std::vector<TriValue> ChainedCircuit::assemble_inputs(
    const std::vector<std::vector<TriValue>>& per_block) const {
  if (per_block.size() != block_wire.size())
    throw std::invalid_argument("one input vector per block expected");
  std::vector<TriValue> inputs(circuit.num_wires, TriValue::Zero);
  std::vector<bool> assigned(circuit.num_wires, false);
  for (std::size_t b = 0; b < block_wire.size(); ++b) {
    if (per_block[b].size() != block_wire[b].size())
      throw std::invalid_argument("block input length mismatch");
    for (std::size_t w = 0; w < block_wire[b].size(); ++w) {
      int global = block_wire[b][w];
      if (!assigned[global]) {
        inputs[global] = per_block[b][w];
        assigned[global] = true;
      }
    }
  }
  return inputs;
}

ChainedCircuit chain(const std::vector<Circuit>& blocks,
                     const std::vector<std::vector<std::pair<int, int>>>& wiring) {
  if (blocks.empty()) throw std::invalid_argument("chain of zero blocks");
  if (wiring.size() + 1 != blocks.size())
    throw std::invalid_argument("need one wiring map per adjacent block pair");
  for (const Circuit& b : blocks) {
    require_valid(b);
    if (b.domain != blocks.front().domain)
      throw std::invalid_argument("chain: domain mismatch between blocks");
  }

  ChainedCircuit result;
  result.circuit.domain = blocks.front().domain;
  result.block_wire.resize(blocks.size());

  int next_global = 0;
  result.block_wire[0].resize(blocks[0].num_wires);
  for (int w = 0; w < blocks[0].num_wires; ++w) result.block_wire[0][w] = next_global++;

  for (std::size_t b = 1; b < blocks.size(); ++b) {
    std::vector<int> incoming(blocks[b].num_wires, -1);
    std::vector<bool> source_used(blocks[b - 1].num_wires, false);
    for (auto [from, to] : wiring[b - 1]) {
      if (from < 0 || from >= blocks[b - 1].num_wires ||
          to < 0 || to >= blocks[b].num_wires)
        throw std::invalid_argument("chain: wiring index out of range");
      if (source_used[from] || incoming[to] != -1)
        throw std::invalid_argument("chain: wiring collision");
      source_used[from] = true;
      incoming[to] = result.block_wire[b - 1][from];
    }
    result.block_wire[b].resize(blocks[b].num_wires);
    for (int w = 0; w < blocks[b].num_wires; ++w)
      result.block_wire[b][w] = incoming[w] != -1 ? incoming[w] : next_global++;
  }

  result.circuit.num_wires = next_global;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (const Gate& g : blocks[b].gates) {
      Gate mapped = g;
      mapped.min_wire = result.block_wire[b][g.min_wire];
      mapped.max_wire = result.block_wire[b][g.max_wire];
      result.circuit.gates.push_back(mapped);
    }
  return result;
}

}  // namespace cct
