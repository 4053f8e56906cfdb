#include "cct/marriage.hpp"

#include <algorithm>
#include <stdexcept>

#include "cct/oracles.hpp"
#include "cct/reductions.hpp"

namespace cct {

std::vector<std::string> validate_sm(const SmInstance& sm) {
  std::vector<std::string> errors;
  if (sm.n < 1) errors.push_back("instance needs at least one man and one woman");
  auto check_side = [&](const std::vector<std::vector<int>>& prefs, const char* side) {
    if (static_cast<int>(prefs.size()) != sm.n) {
      errors.push_back(std::string(side) + ": wrong number of preference lists");
      return;
    }
    for (int p = 0; p < sm.n; ++p) {
      std::vector<bool> seen(sm.n, false);
      bool ok = static_cast<int>(prefs[p].size()) == sm.n;
      for (int r = 0; ok && r < sm.n; ++r) {
        int q = prefs[p][r];
        if (q < 0 || q >= sm.n || seen[q]) ok = false;
        else seen[q] = true;
      }
      if (!ok)
        errors.push_back(std::string(side) + " " + std::to_string(p) +
                         ": preference list is not a permutation");
    }
  };
  check_side(sm.men_prefs, "man");
  check_side(sm.women_prefs, "woman");
  return errors;
}

void require_valid(const SmInstance& sm) {
  auto errors = validate_sm(sm);
  if (!errors.empty())
    throw std::invalid_argument("invalid marriage instance: " + errors.front());
}

PairTable::PairTable(const SmInstance& sm) : n_(sm.n) {
  require_valid(sm);
  man_of_pair_.assign(n_ * n_, -1);
  man_rank_of_pair_.assign(n_ * n_, -1);
  pair_of_man_slot_.assign(n_ * n_, -1);
  std::vector<std::vector<int>> man_rank_of(n_, std::vector<int>(n_));
  for (int m = 0; m < n_; ++m)
    for (int j = 0; j < n_; ++j) man_rank_of[m][sm.men_prefs[m][j]] = j;
  for (int w = 0; w < n_; ++w)
    for (int k = 0; k < n_; ++k) {
      const int m = sm.women_prefs[w][k];
      const int j = man_rank_of[m][w];
      const int t = k * n_ + w;
      man_of_pair_[t] = m;
      man_rank_of_pair_[t] = j;
      pair_of_man_slot_[m * n_ + j] = t;
    }
}

PairTable pair_table(const SmInstance& sm) { return PairTable(sm); }

MarriageState MarriageState::filled(int n, TriValue v) {
  MarriageState s;
  s.n = n;
  s.man_vals.assign(static_cast<std::size_t>(n) * n, v);
  s.woman_vals.assign(static_cast<std::size_t>(n) * n, v);
  return s;
}

bool MarriageState::is_boolean() const {
  auto ok = [](TriValue v) { return v != TriValue::Star; };
  return std::all_of(man_vals.begin(), man_vals.end(), ok) &&
         std::all_of(woman_vals.begin(), woman_vals.end(), ok);
}

int MarriageState::star_count() const {
  auto count = [](const std::vector<TriValue>& vs) {
    return static_cast<int>(std::count(vs.begin(), vs.end(), TriValue::Star));
  };
  return count(man_vals) + count(woman_vals);
}

bool extends(const MarriageState& later, const MarriageState& earlier) {
  if (later.n != earlier.n) return false;
  for (std::size_t i = 0; i < earlier.man_vals.size(); ++i)
    if (!refines(later.man_vals[i], earlier.man_vals[i])) return false;
  for (std::size_t i = 0; i < earlier.woman_vals.size(); ++i)
    if (!refines(later.woman_vals[i], earlier.woman_vals[i])) return false;
  return true;
}

std::vector<TriValue> MarriageBlock::port_constants(const PairTable& table) const {
  std::vector<TriValue> consts(2 * n * n, TriValue::Zero);
  for (int t = 0; t < table.pairs(); ++t)
    if (table.man_rank_of_pair(t) == 0) consts[2 * t] = TriValue::One;
  return consts;
}

std::vector<TriValue> MarriageBlock::pack_inputs(const PairTable& table,
                                                 const MarriageState& state) const {
  std::vector<TriValue> inputs(4 * n * n, TriValue::Zero);
  for (int t = 0; t < table.pairs(); ++t) {
    inputs[in_wire_of_pair_man(t)] =
        state.man(table.man_of_pair(t), table.man_rank_of_pair(t));
    inputs[in_wire_of_pair_woman(t)] =
        state.woman(table.woman_of_pair(t), table.woman_rank_of_pair(t));
  }
  std::vector<TriValue> consts = port_constants(table);
  std::copy(consts.begin(), consts.end(), inputs.begin() + 2 * n * n);
  return inputs;
}

MarriageState MarriageBlock::unpack_outputs(const PairTable& table,
                                            const std::vector<TriValue>& final_row) const {
  MarriageState s = MarriageState::filled(n, TriValue::Zero);
  for (int t = 0; t < table.pairs(); ++t) {
    s.man(table.man_of_pair(t), table.man_rank_of_pair(t)) =
        final_row[out_wire_of_pair_man(t)];
    s.woman(table.woman_of_pair(t), table.woman_rank_of_pair(t)) =
        final_row[out_wire_of_pair_woman(t)];
  }
  return s;
}

MarriageBlock build_marriage_block(const SmInstance& sm) {
  PairTable table(sm);
  const int n = sm.n;
  MarriageBlock block;
  block.n = n;
  block.circuit.num_wires = 4 * n * n;
  block.circuit.domain = Domain::ThreeValued;

  for (int t = 0; t < table.pairs(); ++t)
    block.circuit.gates.push_back(Gate::comparator(block.in_wire_of_pair_man(t),
                                                   block.in_wire_of_pair_woman(t)));
  // Forwarding: rank j's post-gate value moves onto rank j+1's output port.
  for (int m = 0; m < n; ++m)
    for (int j = 0; j + 1 < n; ++j)
      block.circuit.gates.push_back(Gate::comparator(
          block.in_wire_of_pair_man(table.pair_of_man_slot(m, j)),
          block.out_wire_of_pair_man(table.pair_of_man_slot(m, j + 1))));
  for (int w = 0; w < n; ++w)
    for (int k = 0; k + 1 < n; ++k)
      block.circuit.gates.push_back(Gate::comparator(
          block.in_wire_of_pair_woman(table.pair_of_woman_slot(w, k)),
          block.out_wire_of_pair_woman(table.pair_of_woman_slot(w, k + 1))));
  return block;
}

MarriageState initial_state(const SmInstance& sm) {
  require_valid(sm);
  MarriageState s = MarriageState::filled(sm.n, TriValue::Star);
  for (int m = 0; m < sm.n; ++m) s.man(m, 0) = TriValue::One;
  for (int w = 0; w < sm.n; ++w) s.woman(w, 0) = TriValue::Zero;
  return s;
}

int iteration_budget(int n) { return 2 * n * n - 2 * n; }

MarriageState marriage_step(const SmInstance& sm, const PairTable& table,
                            const MarriageState& state) {
  const int n = sm.n;
  MarriageState next = MarriageState::filled(n, TriValue::Zero);
  for (int m = 0; m < n; ++m) next.man(m, 0) = TriValue::One;
  for (int w = 0; w < n; ++w) next.woman(w, 0) = TriValue::Zero;
  for (int t = 0; t < table.pairs(); ++t) {
    const int m = table.man_of_pair(t), j = table.man_rank_of_pair(t);
    const int w = table.woman_of_pair(t), k = table.woman_rank_of_pair(t);
    const TriValue a = state.man(m, j), b = state.woman(w, k);
    if (j + 1 < n) next.man(m, j + 1) = tri_and(a, b);
    if (k + 1 < n) next.woman(w, k + 1) = tri_or(a, b);
  }
  return next;
}

MarriageState iterate_to_fixed_point(const SmInstance& sm) {
  PairTable table(sm);
  MarriageState state = initial_state(sm);
  const int budget = iteration_budget(sm.n);
  for (int round = 0; round < budget; ++round) {
    MarriageState next = marriage_step(sm, table, state);
    if (next == state) return state;
    state = std::move(next);
  }
  if (marriage_step(sm, table, state) != state)
    throw std::logic_error("round function did not reach a fixed point in budget");
  return state;
}

namespace {

MarriageState substituted(const MarriageState& s, TriValue v) {
  MarriageState out = s;
  for (TriValue& x : out.man_vals)
    if (x == TriValue::Star) x = v;
  for (TriValue& x : out.woman_vals)
    if (x == TriValue::Star) x = v;
  return out;
}

}  // namespace

MarriageState substitute_stars(const SmInstance& sm, const MarriageState& fixed,
                               TriValue v) {
  if (v == TriValue::Star)
    throw std::invalid_argument("substitute_stars: substitute a Boolean value");
  PairTable table(sm);
  if (marriage_step(sm, table, fixed) != fixed)
    throw std::invalid_argument("substitute_stars: state is not a fixed point");
  MarriageState out = substituted(fixed, v);
  if (marriage_step(sm, table, out) != out)
    throw std::logic_error("substitution broke the fixed point");
  return out;
}

Matching extract_marriage(const SmInstance& sm, const MarriageState& fixed) {
  PairTable table(sm);
  if (!fixed.is_boolean())
    throw std::invalid_argument("extract_marriage: state still has unknowns");
  if (marriage_step(sm, table, fixed) != fixed)
    throw std::invalid_argument("extract_marriage: state is not a fixed point");
  if (!extends(fixed, initial_state(sm)))
    throw std::invalid_argument("extract_marriage: state does not extend the initial state");

  Matching out;
  std::vector<int> man_partner(sm.n, -1), woman_partner(sm.n, -1);
  for (int t = 0; t < table.pairs(); ++t) {
    const int m = table.man_of_pair(t), j = table.man_rank_of_pair(t);
    const int w = table.woman_of_pair(t), k = table.woman_rank_of_pair(t);
    if (fixed.man(m, j) == TriValue::One && fixed.woman(w, k) == TriValue::Zero) {
      if (man_partner[m] != -1 || woman_partner[w] != -1)
        throw std::logic_error("extraction produced a non-matching");
      man_partner[m] = w;
      woman_partner[w] = m;
      out.pairs.emplace_back(m, w);
    }
  }
  if (static_cast<int>(out.pairs.size()) != sm.n)
    throw std::logic_error("extraction is not a perfect matching");
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

MarriageState embed_marriage(const SmInstance& sm, const Matching& m) {
  require_valid(sm);
  if (static_cast<int>(m.pairs.size()) != sm.n)
    throw std::invalid_argument("embed_marriage: matching is not perfect");
  if (!is_stable(sm, m))
    throw std::invalid_argument("embed_marriage: matching is not stable");

  std::vector<std::vector<int>> man_rank_of(sm.n, std::vector<int>(sm.n));
  std::vector<std::vector<int>> woman_rank_of(sm.n, std::vector<int>(sm.n));
  for (int p = 0; p < sm.n; ++p)
    for (int r = 0; r < sm.n; ++r) {
      man_rank_of[p][sm.men_prefs[p][r]] = r;
      woman_rank_of[p][sm.women_prefs[p][r]] = r;
    }

  MarriageState s = MarriageState::filled(sm.n, TriValue::Zero);
  for (auto [man, woman] : m.pairs) {
    const int j = man_rank_of[man][woman];
    const int k = woman_rank_of[woman][man];
    for (int r = 0; r < sm.n; ++r) {
      s.man(man, r) = r <= j ? TriValue::One : TriValue::Zero;
      s.woman(woman, r) = r <= k ? TriValue::Zero : TriValue::One;
    }
  }

  PairTable table(sm);
  if (marriage_step(sm, table, s) != s)
    throw std::logic_error("embedded marriage is not a fixed point");
  if (extract_marriage(sm, s) != m)
    throw std::logic_error("embedding does not invert extraction");
  return s;
}

Matching solve(const SmInstance& sm, OptimalSide side) {
  MarriageState fixed = iterate_to_fixed_point(sm);
  TriValue v = side == OptimalSide::Man ? TriValue::Zero : TriValue::One;
  return extract_marriage(sm, substitute_stars(sm, fixed, v));
}

namespace {

CcvInstance optimal_pair_circuit(const SmInstance& sm, int man, int woman,
                                 OptimalSide side) {
  require_valid(sm);
  if (man < 0 || man >= sm.n || woman < 0 || woman >= sm.n)
    throw std::invalid_argument("designated pair out of range");

  PairTable table(sm);
  MarriageBlock block = build_marriage_block(sm);
  const int ports = 2 * sm.n * sm.n;
  // The budget can be zero (n = 1); one round is still needed so the check
  // below has output ports to read, and extra rounds preserve fixed points.
  const int rounds = std::max(1, iteration_budget(sm.n));

  std::vector<Circuit> blocks(rounds, block.circuit);
  std::vector<std::vector<std::pair<int, int>>> wiring(rounds - 1);
  for (int b = 0; b + 1 < rounds; ++b)
    for (int s = 0; s < ports; ++s) wiring[b].push_back({ports + s, s});
  ChainedCircuit chained = chain(blocks, wiring);

  std::vector<std::vector<TriValue>> per_block(rounds);
  per_block[0] = block.pack_inputs(table, initial_state(sm));
  std::vector<TriValue> later(4 * sm.n * sm.n, TriValue::Zero);
  std::vector<TriValue> consts = block.port_constants(table);
  std::copy(consts.begin(), consts.end(), later.begin() + ports);
  for (int b = 1; b < rounds; ++b) per_block[b] = later;

  CcvInstance tri;
  tri.circuit = chained.circuit;
  tri.circuit.domain = Domain::ThreeValued;
  tri.inputs = chained.assemble_inputs(per_block);

  const int man_rank = [&] {
    for (int j = 0; j < sm.n; ++j)
      if (sm.men_prefs[man][j] == woman) return j;
    return -1;
  }();
  const int woman_rank = [&] {
    for (int k = 0; k < sm.n; ++k)
      if (sm.women_prefs[woman][k] == man) return k;
    return -1;
  }();
  const int t = table.pair_of_woman_slot(woman, woman_rank);
  if (table.man_of_pair(t) != man || table.man_rank_of_pair(t) != man_rank)
    throw std::logic_error("pair table inconsistent with preference lists");

  const int man_wire =
      chained.block_wire[rounds - 1][block.out_wire_of_pair_man(t)];
  const int woman_wire =
      chained.block_wire[rounds - 1][block.out_wire_of_pair_woman(t)];

  CcvInstance out;
  out.circuit = to_double_rail(tri.circuit);
  out.inputs = encode_rails(tri.inputs);

  const int man_r1 = 2 * man_wire, man_r2 = 2 * man_wire + 1;
  const int woman_r1 = 2 * woman_wire, woman_r2 = 2 * woman_wire + 1;
  if (side == OptimalSide::Man) {
    // Married man-optimally iff the man slot reads 1 and the woman slot 0
    // after downward substitution: both man rails 1, first woman rail 0.
    out.circuit.gates.push_back(Gate::comparator(man_r2, man_r1));
    out.circuit.gates.push_back(Gate::negation(woman_r1));
    out.circuit.gates.push_back(Gate::comparator(man_r2, woman_r1));
  } else {
    // Upward substitution: second man rail 1 and both woman rails 0.
    out.circuit.gates.push_back(Gate::comparator(woman_r1, woman_r2));
    out.circuit.gates.push_back(Gate::negation(woman_r2));
    out.circuit.gates.push_back(Gate::comparator(man_r2, woman_r2));
  }
  out.designated_wire = man_r2;
  return out;
}

}  // namespace

CcvInstance mosm_to_ccvneg(const SmInstance& sm, int man, int woman) {
  return optimal_pair_circuit(sm, man, woman, OptimalSide::Man);
}

CcvInstance wosm_to_ccvneg(const SmInstance& sm, int man, int woman) {
  return optimal_pair_circuit(sm, man, woman, OptimalSide::Woman);
}

LfmmSmReduction lfmm_to_sm(const BipartiteGraph& g) {
  if (g.max_degree() > 3)
    throw std::invalid_argument("lfmm_to_sm: graph degree exceeds 3");

  LfmmSmReduction out;
  out.original_bottoms = g.num_bottom;
  out.original_tops = g.num_top;
  out.base_n = std::max(1, std::max(g.num_bottom, g.num_top));
  const int n0 = out.base_n;
  const int n = 2 * n0;

  out.sm.n = n;
  out.sm.men_prefs.assign(n, {});
  out.sm.women_prefs.assign(n, {});

  // Original bottoms: adjacent tops in order, then the fresh women, then the
  // remaining original tops in order. Padding vertices have no edges and
  // fall into the same scheme.
  for (int m = 0; m < n0; ++m) {
    std::vector<int>& prefs = out.sm.men_prefs[m];
    for (int w = 0; w < n0; ++w)
      if (m < g.num_bottom && w < g.num_top && g.has_edge(m, w)) prefs.push_back(w);
    for (int w = n0; w < n; ++w) prefs.push_back(w);
    for (int w = 0; w < n0; ++w)
      if (!(m < g.num_bottom && w < g.num_top && g.has_edge(m, w))) prefs.push_back(w);
  }
  for (int m = n0; m < n; ++m)
    for (int w = 0; w < n; ++w) out.sm.men_prefs[m].push_back(w);

  for (int w = 0; w < n0; ++w) {
    std::vector<int>& prefs = out.sm.women_prefs[w];
    for (int m = 0; m < n0; ++m)
      if (m < g.num_bottom && w < g.num_top && g.has_edge(m, w)) prefs.push_back(m);
    for (int m = n0; m < n; ++m) prefs.push_back(m);
    for (int m = 0; m < n0; ++m)
      if (!(m < g.num_bottom && w < g.num_top && g.has_edge(m, w))) prefs.push_back(m);
  }
  for (int w = n0; w < n; ++w)
    for (int m = 0; m < n; ++m) out.sm.women_prefs[w].push_back(m);

  return out;
}

}  // namespace cct
