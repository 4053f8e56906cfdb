#pragma once

#include <utility>
#include <vector>

#include "cct/circuit.hpp"
#include "cct/graph.hpp"

namespace cct {

/// Circuit-to-matching compilation. The graph has one top and one bottom
/// node per (layer, wire): indices layer*m + wire on both sides. Layer 0
/// holds an input edge per 1-wire; each comparator layer contributes the
/// 5-edge gadget, each untouched wire a 2-edge forwarding pair. A top node
/// ends up matched exactly when its wire carries 1 at that layer.
struct CcvToVlfmmResult {
  BipartiteGraph graph;
  int designated_top = 0;
  std::vector<int> output_top;  // original wire -> output-layer top node
  int layers = 0;               // gate layers + 1
  bool pre_normalized = false;  // direction normalization was applied first
};

/// Requires a Boolean, negation-free instance. Inputs whose comparators do
/// not all point max-to-smaller-index are normalized first.
CcvToVlfmmResult ccv_to_3vlfmm(const CcvInstance& inst);

/// The vertex question turned into an edge question: two fresh nodes w_t
/// (top) and w_b (bottom) hang off the designated top, and {w_t, w_b} joins
/// the greedy matching exactly when the designated top was matched.
struct CcvToLfmmResult {
  BipartiteGraph graph;
  std::pair<int, int> designated_edge;  // (bottom w_b, top w_t)
  CcvToVlfmmResult inner;
};

CcvToLfmmResult ccv_to_3lfmm(const CcvInstance& inst);

/// Matching-to-circuit compilation over the complete bipartite slot grid:
/// one wire per top (input 0) then one per bottom (input 1); each bottom
/// scans all tops in order with a comparator where an edge exists and a
/// dummy where not. A top wire outputs 1 exactly when the top is matched.
struct VlfmmToCcvResult {
  CcvInstance instance;
  int num_tops = 0;
  int top_wire(int top) const { return top; }
  int bottom_wire(int bottom) const { return num_tops + bottom; }
};

VlfmmToCcvResult vlfmm_to_ccv(const BipartiteGraph& g, int designated_top);

/// Double-rail elimination of negation gates: wire w becomes the pair
/// (2w, 2w+1) with the complement on 2w+1 and one helper wire at the end.
/// Comparators are mirrored onto the complement rails; a negation becomes a
/// three-comparator swap through the helper, which returns to 0.
struct CcvnegToCcvResult {
  CcvInstance instance;
  int value_wire(int w) const { return 2 * w; }
  int complement_wire(int w) const { return 2 * w + 1; }
  int helper_wire = 0;
  /// Trace row index right after each original gate's emitted group.
  std::vector<int> group_end_row;
};

CcvnegToCcvResult ccvneg_to_ccv(const CcvInstance& inst);

/// Edge membership in the greedy matching as a negation circuit: the
/// instance is truncated at the designated edge, simulated twice (the second
/// copy without the designated edge's gate), and the designated top's wire
/// is ANDed with the negation of its twin.
struct LfmmToCcvnegResult {
  CcvInstance instance;
  int truncated_bottoms = 0;
  int truncated_tops = 0;
};

LfmmToCcvnegResult lfmm_to_ccvneg(const BipartiteGraph& g, int bottom, int top);

/// Encodes 0 as (0,0), 1 as (1,1) and unknown as (0,1) on a rail pair.
TriValue decode_rails(TriValue first, TriValue second);
std::vector<TriValue> encode_rails(const std::vector<TriValue>& tri_inputs);

/// Boolean circuit simulating a three-valued one on rail pairs: wire w maps
/// to rails (2w, 2w+1) and every comparator is doubled, one per rail.
Circuit to_double_rail(const Circuit& tri);

struct TriToBoolResult {
  CcvInstance instance;
  int rail1(int w) const { return 2 * w; }
  int rail2(int w) const { return 2 * w + 1; }
};

/// Full reduction including the final AND gate that folds the designated
/// rail pair onto a single designated wire.
TriToBoolResult trivalued_to_boolean(const CcvInstance& tri);

/// Reachability over an index-upward digraph as a comparator circuit:
/// feeder wires 0..n-1 (input 1) and vertex wires n..2n-1 (input 0), with n
/// identical gadgets that push a fresh 1 into vertex 0 and then sweep all
/// vertex pairs in lexicographic order. After the last gadget a vertex wire
/// carries 1 exactly when the vertex is reachable from vertex 0.
struct ReachabilityCircuit {
  Circuit circuit;
  std::vector<TriValue> inputs;
  int n = 0;
  int feeder_wire(int k) const { return k; }
  int vertex_wire(int v) const { return n + v; }
};

ReachabilityCircuit reachability_to_ccv(const DiGraph& g);

/// Distance-bounded reachability matrix computed by running the circuit
/// construction on the layered expansion: row d, column i reads the wire of
/// vertex copy (d, i).
ConnMatrix conn_matrix_via_ccv(const DiGraph& g);

}  // namespace cct
