#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cct/trivalue.hpp"

namespace cct {

enum class GateKind : std::uint8_t { Comparator, Negation, Dummy };

/// A comparator gate routes the smaller of two wire values to `min_wire` and
/// the larger to `max_wire` (on Booleans: AND / OR). Negation flips a single
/// wire; Dummy occupies a gate position without touching values. Unary kinds
/// store their wire in both fields.
struct Gate {
  GateKind kind;
  int min_wire;
  int max_wire;

  static Gate comparator(int min_wire, int max_wire) {
    return {GateKind::Comparator, min_wire, max_wire};
  }
  static Gate negation(int wire) { return {GateKind::Negation, wire, wire}; }
  static Gate dummy(int wire) { return {GateKind::Dummy, wire, wire}; }

  int wire() const { return min_wire; }  // unary kinds

  friend bool operator==(const Gate&, const Gate&) = default;
};

enum class Domain : std::uint8_t { Boolean, ThreeValued };

/// An ordered gate list over `num_wires` parallel wires. Every gate output
/// has fan-out one by construction: a gate rewrites wire values in place.
struct Circuit {
  int num_wires = 0;
  std::vector<Gate> gates;
  Domain domain = Domain::Boolean;
  std::vector<std::string> wire_names;  // optional display labels

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Circuit plus an input assignment and the wire whose output is asked for.
struct CcvInstance {
  Circuit circuit;
  std::vector<TriValue> inputs;
  int designated_wire = 0;
};

/// Wire values after each gate; row 0 is the input assignment, row t+1 the
/// values right after gate t.
class LayerTrace {
 public:
  LayerTrace(int layers, int wires)
      : layers_(layers), wires_(wires),
        cells_(static_cast<std::size_t>(layers) * wires, TriValue::Zero) {}

  int layers() const { return layers_; }
  int wires() const { return wires_; }

  TriValue at(int layer, int wire) const {
    return cells_[static_cast<std::size_t>(layer) * wires_ + wire];
  }
  TriValue& at(int layer, int wire) {
    return cells_[static_cast<std::size_t>(layer) * wires_ + wire];
  }

  std::vector<TriValue> row(int layer) const {
    auto first = cells_.begin() + static_cast<std::ptrdiff_t>(layer) * wires_;
    return std::vector<TriValue>(first, first + wires_);
  }
  std::vector<TriValue> outputs() const { return row(layers_ - 1); }

 private:
  int layers_;
  int wires_;
  std::vector<TriValue> cells_;
};

/// Collects every violated structural invariant; empty result means valid.
std::vector<std::string> validate_circuit(const Circuit& c);

/// Throws std::invalid_argument when validate_circuit reports anything.
void require_valid(const Circuit& c);

/// Full evaluation per the layer semantics; requires a valid circuit and an
/// input vector matching the wire count and domain.
LayerTrace evaluate(const CcvInstance& inst);

/// Evaluation keeping only the current row; used for large circuits.
std::vector<TriValue> evaluate_final(const Circuit& c,
                                     const std::vector<TriValue>& inputs);

TriValue evaluate_designated(const CcvInstance& inst);

/// Per-layer count of One entries. Rejects traces containing Star. For any
/// negation-free Boolean circuit the counts are constant across layers.
std::vector<int> ones_per_layer(const LayerTrace& t);

/// true when every comparator routes its max to the smaller wire index,
/// the one orientation accepted by the matching-gadget reduction.
bool all_gates_upward(const Circuit& c);

/// Result of rebuilding a circuit so all comparators point one way.
/// `input_wire[x]` is where wire x's input value must be fed
/// (everything else takes Zero); `output_wire[x]` carries x's final value.
struct NormalizedCircuit {
  Circuit circuit;
  std::vector<int> input_wire;
  std::vector<int> output_wire;
  std::vector<TriValue> embed_inputs(const std::vector<TriValue>& original) const;
};

/// Layer-copy construction: one wire per (layer, original wire), with each
/// comparator simulated by a three-gate gadget and untouched wires forwarded.
/// Copies are enumerated output-layer-first, so every emitted comparator has
/// max_wire < min_wire and `output_wire` is the identity. Rejects circuits
/// containing negation gates. Dummy gates produce no layer.
NormalizedCircuit normalize_directions(const Circuit& c);

/// Blocks merged into one circuit. `block_wire[b][w]` is the global index of
/// block b's local wire w; wires named as forward targets are shared with
/// their source, everything else is fresh.
struct ChainedCircuit {
  Circuit circuit;
  std::vector<std::vector<int>> block_wire;

  /// Per-block input vectors merged into one global vector. Entries for
  /// forwarded (shared) wires of later blocks are ignored.
  std::vector<TriValue> assemble_inputs(
      const std::vector<std::vector<TriValue>>& per_block) const;
};

/// `wiring[i]` lists (wire in block i) -> (wire in block i+1) forwards.
/// Maps must be injective on both sides; domains must agree.
ChainedCircuit chain(const std::vector<Circuit>& blocks,
                     const std::vector<std::vector<std::pair<int, int>>>& wiring);

}  // namespace cct
