#pragma once

#include <utility>
#include <vector>

#include "cct/circuit.hpp"
#include "cct/graph.hpp"

namespace cct {

/// n men and n women, each ranking all members of the other side.
/// prefs[p] is a permutation of 0..n-1, most preferred first.
struct SmInstance {
  int n = 0;
  std::vector<std::vector<int>> men_prefs;
  std::vector<std::vector<int>> women_prefs;

  friend bool operator==(const SmInstance&, const SmInstance&) = default;
};

std::vector<std::string> validate_sm(const SmInstance& sm);
void require_valid(const SmInstance& sm);

/// The slot bijection: (m, j) <-> (w, k) exactly when woman w sits at rank j
/// of m's list and man m at rank k of w's list. Slots are enumerated as
/// pairs t = k*n + w (woman-rank major), which fixes the circuit wire order.
class PairTable {
 public:
  explicit PairTable(const SmInstance& sm);

  int n() const { return n_; }
  int pairs() const { return n_ * n_; }

  int pair_of_woman_slot(int w, int k) const { return k * n_ + w; }
  int pair_of_man_slot(int m, int j) const { return pair_of_man_slot_[m * n_ + j]; }

  int man_of_pair(int t) const { return man_of_pair_[t]; }
  int man_rank_of_pair(int t) const { return man_rank_of_pair_[t]; }
  int woman_of_pair(int t) const { return t % n_; }
  int woman_rank_of_pair(int t) const { return t / n_; }

 private:
  int n_;
  std::vector<int> man_of_pair_;
  std::vector<int> man_rank_of_pair_;
  std::vector<int> pair_of_man_slot_;
};

PairTable pair_table(const SmInstance& sm);

/// Three-valued assignment to the 2n^2 person-rank slots.
struct MarriageState {
  int n = 0;
  std::vector<TriValue> man_vals;    // index m*n + j
  std::vector<TriValue> woman_vals;  // index w*n + k

  static MarriageState filled(int n, TriValue v);

  TriValue man(int m, int j) const { return man_vals[m * n + j]; }
  TriValue& man(int m, int j) { return man_vals[m * n + j]; }
  TriValue woman(int w, int k) const { return woman_vals[w * n + k]; }
  TriValue& woman(int w, int k) { return woman_vals[w * n + k]; }

  bool is_boolean() const;
  int star_count() const;

  friend bool operator==(const MarriageState&, const MarriageState&) = default;
};

/// true when `later` agrees with `earlier` on every Boolean slot of `earlier`.
bool extends(const MarriageState& later, const MarriageState& earlier);

/// One round of the marriage circuit as a three-valued circuit block:
/// 2n^2 input-port wires (pair slots, interleaved man/woman) followed by
/// 2n^2 constant-fed output-port wires in the same order.
struct MarriageBlock {
  Circuit circuit;
  int n = 0;

  int in_wire_of_pair_man(int t) const { return 2 * t; }
  int in_wire_of_pair_woman(int t) const { return 2 * t + 1; }
  int out_wire_of_pair_man(int t) const { return 2 * n * n + 2 * t; }
  int out_wire_of_pair_woman(int t) const { return 2 * n * n + 2 * t + 1; }

  /// Constant inputs on the output ports: 1 on every man's rank-0 slot,
  /// 0 elsewhere.
  std::vector<TriValue> port_constants(const PairTable& table) const;
  /// Input-port values from a state, output ports filled with constants.
  std::vector<TriValue> pack_inputs(const PairTable& table,
                                    const MarriageState& state) const;
  /// Output-port values of an evaluation, read back as a state.
  MarriageState unpack_outputs(const PairTable& table,
                               const std::vector<TriValue>& final_row) const;
};

MarriageBlock build_marriage_block(const SmInstance& sm);

/// Rank-0 man slots take 1, rank-0 woman slots 0, everything else unknown.
MarriageState initial_state(const SmInstance& sm);

/// Number of unknowns in the initial state, 2n^2 - 2n; iteration reaches a
/// fixed point within this many rounds.
int iteration_budget(int n);

/// One application of the round function, computed slot-wise: each pair gate
/// leaves AND on the man slot and OR on the woman slot, and each person's
/// rank j+1 output picks up rank j's post-gate value.
MarriageState marriage_step(const SmInstance& sm, const PairTable& table,
                            const MarriageState& state);

/// Iterates from the initial state until the state repeats (at most the
/// budget); the result is a fixed point, possibly still three-valued.
MarriageState iterate_to_fixed_point(const SmInstance& sm);

/// Replaces every unknown by `v`; requires a fixed point, returns one.
MarriageState substitute_stars(const SmInstance& sm, const MarriageState& fixed,
                               TriValue v);

/// Reads the marriage out of a Boolean fixed point extending the initial
/// state: (m, w) married when the paired slots hold (1, 0).
Matching extract_marriage(const SmInstance& sm, const MarriageState& fixed);

/// Step-pattern embedding of a stable marriage as a Boolean fixed point:
/// man rows are 1..1 0..0 switching after his partner's rank, woman rows
/// 0..0 1..1. Left inverse of extract_marriage.
MarriageState embed_marriage(const SmInstance& sm, const Matching& m);

enum class OptimalSide { Man, Woman };

/// Man- or woman-optimal stable marriage from the iterated fixed point,
/// resolving unknowns downward (man) or upward (woman).
Matching solve(const SmInstance& sm, OptimalSide side);

/// Boolean circuit with negation gates whose designated wire outputs 1
/// exactly when (man, woman) belongs to the man-optimal marriage. The round
/// block is materialized and chained budget-many times, converted to
/// double-rail form, and a 3-gate check is appended.
CcvInstance mosm_to_ccvneg(const SmInstance& sm, int man, int woman);

/// Dual decision circuit for the woman-optimal marriage.
CcvInstance wosm_to_ccvneg(const SmInstance& sm, int man, int woman);

/// Degree-at-most-3 greedy matching embedded into stable marriage: parts are
/// padded to a common size n and doubled; bottoms become men 0..n-1, tops
/// women 0..n-1, and any stable marriage restricted to those indices is the
/// greedy matching.
struct LfmmSmReduction {
  SmInstance sm;
  int original_bottoms = 0;
  int original_tops = 0;
  int base_n = 0;  // padded per-side size before doubling
};

LfmmSmReduction lfmm_to_sm(const BipartiteGraph& g);

}  // namespace cct
