#include "cct/verify.hpp"

#include <algorithm>
#include <optional>

#include "cct/circuit.hpp"
#include "cct/graph.hpp"
#include "cct/marriage.hpp"
#include "cct/oracles.hpp"
#include "cct/reductions.hpp"

namespace cct {

namespace {

// Suite -> instance compiler it exercises. The table below must mention
// every compiler; the build fails otherwise.
struct Coverage {
  std::string_view suite;
  std::string_view op;
};

constexpr Coverage kCoverage[] = {
    {"ccv3vlfmm", "ccv_to_3vlfmm"},
    {"vlfmmccv", "vlfmm_to_ccv"},
    {"ccv3lfmm", "ccv_to_3lfmm"},
    {"ccvneg", "ccvneg_to_ccv"},
    {"lfmmccvneg", "lfmm_to_ccvneg"},
    {"tri2bool", "trivalued_to_boolean"},
    {"reach", "reachability_to_ccv"},
    {"conn", "conn_matrix_via_ccv"},
    {"smfix", "iterate_to_fixed_point"},
    {"smfix", "substitute_stars"},
    {"smfix", "extract_marriage"},
    {"smfix", "embed_marriage"},
    {"smfix", "solve"},
    {"smfix", "build_marriage_block"},
    {"lfmmsm", "lfmm_to_sm"},
    {"mosm", "mosm_to_ccvneg"},
    {"mosm", "wosm_to_ccvneg"},
};

constexpr std::string_view kInstanceCompilers[] = {
    "ccv_to_3vlfmm",  "vlfmm_to_ccv",   "ccv_to_3lfmm",
    "ccvneg_to_ccv",  "lfmm_to_ccvneg", "trivalued_to_boolean",
    "reachability_to_ccv", "conn_matrix_via_ccv",
    "lfmm_to_sm",     "mosm_to_ccvneg", "wosm_to_ccvneg",
};

constexpr std::string_view kSuiteNames[] = {
    "ccv3vlfmm", "vlfmmccv", "ccv3lfmm", "ccvneg",  "lfmmccvneg",
    "tri2bool",  "reach",    "conn",     "smfix",   "lfmmsm",
    "mosm",
};

constexpr bool every_compiler_covered() {
  for (std::string_view op : kInstanceCompilers) {
    bool found = false;
    for (const Coverage& c : kCoverage)
      if (c.op == op) found = true;
    if (!found) return false;
  }
  return true;
}

constexpr bool every_coverage_suite_exists() {
  for (const Coverage& c : kCoverage) {
    bool found = false;
    for (std::string_view s : kSuiteNames)
      if (s == c.suite) found = true;
    if (!found) return false;
  }
  return true;
}

static_assert(every_compiler_covered(),
              "an instance compiler has no verification suite");
static_assert(every_coverage_suite_exists(),
              "coverage table names a suite that does not exist");

using TrialFn = std::optional<std::string> (*)(std::uint64_t trial_seed, int trial);

std::string show(bool v) { return v ? "1" : "0"; }

// --- circuit <-> matching -------------------------------------------------

CcvInstance random_ccv_instance(std::uint64_t seed, bool upward_only,
                                bool with_negation) {
  SplitMix64 rng(seed);
  const int wires = 2 + rng.below(7);       // 2..8
  const int gates = rng.below(21);          // 0..20
  CcvInstance inst;
  inst.circuit = random_circuit(seed * 3 + 1, wires, gates, Domain::Boolean,
                                with_negation);
  if (upward_only)
    for (Gate& g : inst.circuit.gates)
      if (g.kind == GateKind::Comparator && g.max_wire > g.min_wire)
        std::swap(g.min_wire, g.max_wire);
  inst.inputs = random_inputs(seed * 3 + 2, wires, Domain::Boolean);
  inst.designated_wire = rng.below(wires);
  return inst;
}

std::optional<std::string> trial_ccv3vlfmm(std::uint64_t seed, int trial) {
  const bool upward_only = trial % 2 == 0;
  CcvInstance inst = random_ccv_instance(seed, upward_only, false);
  CcvToVlfmmResult red = ccv_to_3vlfmm(inst);

  if (red.graph.max_degree() > 3) return "graph degree exceeds 3";

  Matching lfm = lfm_matching(red.graph);
  std::vector<TriValue> outputs = evaluate_final(inst.circuit, inst.inputs);
  for (int w = 0; w < inst.circuit.num_wires; ++w) {
    bool matched = lfm.covers_top(red.output_top[w]);
    bool one = outputs[w] == TriValue::One;
    if (matched != one)
      return "wire " + std::to_string(w) + ": matched=" + show(matched) +
             " output=" + show(one);
  }
  bool matched = lfm.covers_top(red.designated_top);
  if (matched != (outputs[inst.designated_wire] == TriValue::One))
    return "designated decode mismatch";

  if (upward_only) {
    // Direct construction: input edges plus a fixed edge budget per layer.
    std::size_t expected = 0;
    for (TriValue v : inst.inputs) expected += v == TriValue::One;
    const int m = inst.circuit.num_wires;
    for (const Gate& g : inst.circuit.gates)
      expected += g.kind == GateKind::Comparator ? 5 + 2 * (m - 2) : 2 * m;
    if (red.graph.edges.size() != expected)
      return "edge count " + std::to_string(red.graph.edges.size()) +
             " != " + std::to_string(expected);
    if (red.pre_normalized) return "upward circuit was normalized";
  }
  return std::nullopt;
}

std::optional<std::string> trial_vlfmmccv(std::uint64_t seed, int) {
  SplitMix64 rng(seed);
  const int bottoms = 1 + rng.below(8), tops = 1 + rng.below(8);
  BipartiteGraph g = random_bipartite(seed * 5 + 3, bottoms, tops);
  VlfmmToCcvResult red = vlfmm_to_ccv(g, rng.below(tops));
  std::vector<TriValue> outputs =
      evaluate_final(red.instance.circuit, red.instance.inputs);
  Matching lfm = lfm_matching(g);
  for (int t = 0; t < tops; ++t)
    if ((outputs[red.top_wire(t)] == TriValue::One) != lfm.covers_top(t))
      return "top " + std::to_string(t) + " decode mismatch";
  if ((evaluate_designated(red.instance) == TriValue::One) !=
      vlfmm_decide_vertex(g, red.instance.designated_wire))
    return "designated decode mismatch";
  return std::nullopt;
}

std::optional<std::string> trial_ccv3lfmm(std::uint64_t seed, int trial) {
  CcvInstance inst = random_ccv_instance(seed, trial % 2 == 0, false);
  CcvToLfmmResult red = ccv_to_3lfmm(inst);
  if (red.graph.max_degree() > 3) return "graph degree exceeds 3";
  bool in_lfm = lfmm_decide_edge(red.graph, red.designated_edge.first,
                                 red.designated_edge.second);
  bool one = evaluate_designated(inst) == TriValue::One;
  if (in_lfm != one)
    return "edge decode " + show(in_lfm) + " but wire outputs " + show(one);
  return std::nullopt;
}

std::optional<std::string> trial_ccvneg(std::uint64_t seed, int) {
  CcvInstance inst = random_ccv_instance(seed, false, true);
  CcvnegToCcvResult red = ccvneg_to_ccv(inst);

  if (evaluate_designated(red.instance) != evaluate_designated(inst))
    return "designated decode mismatch";

  LayerTrace trace = evaluate(red.instance);
  std::vector<TriValue> reference = inst.inputs;
  std::size_t group = 0;
  auto check_boundary = [&](int row) -> std::optional<std::string> {
    for (int w = 0; w < inst.circuit.num_wires; ++w) {
      if (trace.at(row, red.value_wire(w)) != reference[w])
        return "value rail diverges at group " + std::to_string(group);
      if (trace.at(row, red.complement_wire(w)) != tri_not(reference[w]))
        return "complement rail diverges at group " + std::to_string(group);
    }
    if (trace.at(row, red.helper_wire) != TriValue::Zero)
      return "helper wire not restored at group " + std::to_string(group);
    return std::nullopt;
  };
  if (auto err = check_boundary(0)) return err;
  for (; group < inst.circuit.gates.size(); ++group) {
    // Track the source circuit gate by gate and compare at each boundary.
    const Gate& g = inst.circuit.gates[group];
    if (g.kind == GateKind::Comparator) {
      TriValue a = reference[g.min_wire], b = reference[g.max_wire];
      reference[g.min_wire] = tri_and(a, b);
      reference[g.max_wire] = tri_or(a, b);
    } else if (g.kind == GateKind::Negation) {
      reference[g.wire()] = tri_not(reference[g.wire()]);
    }
    if (auto err = check_boundary(red.group_end_row[group])) return err;
  }
  return std::nullopt;
}

std::optional<std::string> trial_lfmmccvneg(std::uint64_t seed, int) {
  SplitMix64 rng(seed);
  const int bottoms = 1 + rng.below(7), tops = 1 + rng.below(7);
  BipartiteGraph g = random_bipartite(seed * 7 + 5, bottoms, tops);
  if (g.edges.empty()) g.add_edge(0, 0);
  int pick = rng.below(static_cast<int>(g.edges.size()));
  auto it = g.edges.begin();
  std::advance(it, pick);
  auto [b, t] = *it;

  LfmmToCcvnegResult red = lfmm_to_ccvneg(g, b, t);
  bool one = evaluate_designated(red.instance) == TriValue::One;
  bool in_lfm = lfmm_decide_edge(g, b, t);
  if (one != in_lfm)
    return "edge (" + std::to_string(b) + "," + std::to_string(t) +
           "): oracle=" + show(in_lfm) + " circuit=" + show(one);
  return std::nullopt;
}

// --- three-valued simulation ----------------------------------------------

std::optional<std::string> trial_tri2bool(std::uint64_t seed, int) {
  SplitMix64 rng(seed);
  const int wires = 2 + rng.below(7);
  const int gates = rng.below(21);
  CcvInstance tri;
  tri.circuit = random_circuit(seed * 3 + 1, wires, gates, Domain::ThreeValued, false);
  tri.inputs = random_inputs(seed * 3 + 2, wires, Domain::ThreeValued);
  tri.designated_wire = rng.below(wires);

  TriToBoolResult red = trivalued_to_boolean(tri);
  std::vector<TriValue> rails =
      evaluate_final(red.instance.circuit, red.instance.inputs);
  std::vector<TriValue> expected = evaluate_final(tri.circuit, tri.inputs);
  for (int w = 0; w < wires; ++w)
    if (decode_rails(rails[red.rail1(w)], rails[red.rail2(w)]) != expected[w])
      return "rail decode mismatch on wire " + std::to_string(w);
  if ((rails[red.instance.designated_wire] == TriValue::One) !=
      (expected[tri.designated_wire] == TriValue::One))
    return "designated decode mismatch";
  return std::nullopt;
}

// --- reachability -----------------------------------------------------------

std::optional<std::string> trial_reach(std::uint64_t seed, int trial) {
  SplitMix64 rng(seed);
  const int n = 1 + rng.below(10);
  const double density = 0.15 + 0.2 * (trial % 5);
  DiGraph g = random_topological_dag(seed * 11 + 7, n, density);

  ReachabilityCircuit red = reachability_to_ccv(g);
  LayerTrace trace = evaluate({red.circuit, red.inputs, 0});
  std::vector<TriValue> outputs = trace.outputs();

  std::vector<int> reached = reachable_set(g, 0);
  std::vector<bool> expected(n, false);
  for (int v : reached) expected[v] = true;
  for (int v = 0; v < n; ++v)
    if ((outputs[red.vertex_wire(v)] == TriValue::One) != expected[v])
      return "vertex " + std::to_string(v) + " decode mismatch";
  if (outputs[red.vertex_wire(0)] != TriValue::One)
    return "vertex wire 0 does not end at 1";

  // Gadget-boundary behaviour: vertex wires move at most once per gadget,
  // only upward, and never once wire 0 enters the gadget carrying 1.
  const int gadget = static_cast<int>(red.circuit.gates.size()) / n;
  std::vector<TriValue> prev(n), cur(n);
  for (int k = 0; k < n; ++k) {
    const int in_row = k * gadget, out_row = (k + 1) * gadget;
    for (int v = 0; v < n; ++v) {
      prev[v] = trace.at(in_row, red.vertex_wire(v));
      cur[v] = trace.at(out_row, red.vertex_wire(v));
    }
    int changes = 0;
    for (int v = 0; v < n; ++v)
      if (prev[v] != cur[v]) {
        ++changes;
        if (prev[v] != TriValue::Zero) return "vertex wire dropped from 1 to 0";
      }
    if (prev[0] == TriValue::One && changes != 0)
      return "gadget changed wires although wire 0 carried 1";
    if (prev[0] == TriValue::Zero && changes != 1)
      return "gadget changed " + std::to_string(changes) + " wires, expected 1";
  }
  return std::nullopt;
}

DiGraph random_digraph(std::uint64_t seed, int n, double density) {
  SplitMix64 rng(seed);
  DiGraph g;
  g.num_vertices = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rng.coin(density)) g.add_edge(i, j);
  return g;
}

std::optional<std::string> trial_conn(std::uint64_t seed, int trial) {
  SplitMix64 rng(seed);
  const int n = 1 + rng.below(8);
  DiGraph g = random_digraph(seed * 13 + 11, n, 0.1 + 0.2 * (trial % 4));

  ConnMatrix u = conn_matrix_via_ccv(g);
  std::vector<int> dist = bfs_distances(g, 0);
  for (int d = 0; d < n; ++d)
    for (int i = 0; i < n; ++i) {
      bool expected = dist[i] >= 0 && dist[i] <= d;
      if (u.at(d, i) != expected)
        return "U(" + std::to_string(d) + "," + std::to_string(i) + ") wrong";
    }
  for (int i = 0; i < n; ++i)
    if (u.at(0, i) != (i == 0)) return "row 0 is not {0}";
  for (int d = 0; d + 1 < n; ++d)
    for (int i = 0; i < n; ++i) {
      bool step = u.at(d, i);
      for (int j = 0; j < n && !step; ++j)
        if (u.at(d, j) && g.has_edge(j, i)) step = true;
      if (u.at(d + 1, i) != step) return "recurrence violated";
    }
  return std::nullopt;
}

// --- stable marriage --------------------------------------------------------

std::optional<std::string> check_sm_instance(const SmInstance& sm) {
  PairTable table(sm);
  MarriageBlock block = build_marriage_block(sm);
  MarriageState state = initial_state(sm);
  const int budget = iteration_budget(sm.n);

  int rounds = 0;
  int stars = state.star_count();
  while (true) {
    MarriageState next = marriage_step(sm, table, state);
    if (rounds == 0) {
      // The slot recurrence and the materialized block must agree.
      MarriageState via_block = block.unpack_outputs(
          table, evaluate_final(block.circuit, block.pack_inputs(table, state)));
      if (via_block != next) return "block circuit disagrees with slot recurrence";
    }
    if (!extends(next, state)) return "round flipped a Boolean slot";
    if (next.star_count() > stars) return "unknown count increased";
    stars = next.star_count();
    if (next == state) break;
    state = std::move(next);
    if (++rounds > budget) return "no fixed point within budget";
  }

  MarriageState fixed = iterate_to_fixed_point(sm);
  if (fixed != state) return "iterate_to_fixed_point disagrees with manual loop";

  for (TriValue v : {TriValue::Zero, TriValue::One}) {
    MarriageState sub = substitute_stars(sm, fixed, v);
    if (!sub.is_boolean()) return "substitution left unknowns";
    if (marriage_step(sm, table, sub) != sub) return "substitution not a fixed point";
    if (!extends(sub, fixed)) return "substitution does not extend the fixed point";
    // Every Boolean fixed point we can produce lies in the embedding's range.
    if (embed_marriage(sm, extract_marriage(sm, sub)) != sub)
      return "Boolean fixed point outside the embedding range";
    // Boolean fixed points have the step-shaped rows.
    for (int m = 0; m < sm.n; ++m)
      for (int j = 0; j + 1 < sm.n; ++j)
        if (sub.man(m, j) == TriValue::Zero && sub.man(m, j + 1) == TriValue::One)
          return "man row is not a descending step";
    for (int w = 0; w < sm.n; ++w)
      for (int k = 0; k + 1 < sm.n; ++k)
        if (sub.woman(w, k) == TriValue::One && sub.woman(w, k + 1) == TriValue::Zero)
          return "woman row is not an ascending step";
  }

  // Random resolutions of the leftover unknowns that happen to be fixed
  // points must be embeddings of stable marriages too.
  SplitMix64 rng(0xabcdef ^ static_cast<std::uint64_t>(sm.n));
  for (int attempt = 0; attempt < 4 && fixed.star_count() > 0; ++attempt) {
    MarriageState candidate = fixed;
    for (auto* vals : {&candidate.man_vals, &candidate.woman_vals})
      for (TriValue& v : *vals)
        if (v == TriValue::Star) v = rng.coin(0.5) ? TriValue::One : TriValue::Zero;
    if (marriage_step(sm, table, candidate) != candidate) continue;
    if (embed_marriage(sm, extract_marriage(sm, candidate)) != candidate)
      return "resolved fixed point outside the embedding range";
  }

  Matching man_opt = solve(sm, OptimalSide::Man);
  Matching woman_opt = solve(sm, OptimalSide::Woman);
  if (man_opt != gale_shapley(sm, ProposingSide::Men))
    return "man-optimal solution disagrees with deferred acceptance";
  if (woman_opt != gale_shapley(sm, ProposingSide::Women))
    return "woman-optimal solution disagrees with deferred acceptance";
  if (!is_stable(sm, man_opt) || !is_stable(sm, woman_opt))
    return "solver output not stable";

  MarriageState embedded = embed_marriage(sm, man_opt);
  if (extract_marriage(sm, embedded) != man_opt) return "embed/extract mismatch";
  if (!extends(embedded, fixed)) return "Boolean fixed point does not extend the iterate";
  return std::nullopt;
}

std::optional<std::string> trial_smfix(std::uint64_t seed, int) {
  SplitMix64 rng(seed);
  return check_sm_instance(random_sm(seed * 17 + 13, 1 + rng.below(8)));
}

std::optional<std::string> trial_lfmmsm(std::uint64_t seed, int) {
  SplitMix64 rng(seed);
  const int bottoms = 1 + rng.below(6), tops = 1 + rng.below(6);
  BipartiteGraph g = random_bipartite(seed * 19 + 17, bottoms, tops, 3);

  LfmmSmReduction red = lfmm_to_sm(g);
  Matching man_opt = solve(red.sm, OptimalSide::Man);
  Matching woman_opt = solve(red.sm, OptimalSide::Woman);
  if (man_opt != woman_opt) return "reduced instance has two optimal solutions";

  Matching restricted;
  for (auto [m, w] : man_opt.pairs)
    if (m < red.original_bottoms && w < red.original_tops) restricted.add(m, w);
  if (restricted != lfm_matching(g))
    return "restriction disagrees with the greedy matching";
  return std::nullopt;
}

std::optional<std::string> trial_mosm(std::uint64_t seed, int) {
  SplitMix64 rng(seed);
  SmInstance sm = random_sm(seed * 23 + 19, 1 + rng.below(5));
  Matching man_opt = solve(sm, OptimalSide::Man);
  Matching woman_opt = solve(sm, OptimalSide::Woman);
  for (int m = 0; m < sm.n; ++m)
    for (int w = 0; w < sm.n; ++w) {
      bool man_answer =
          evaluate_designated(mosm_to_ccvneg(sm, m, w)) == TriValue::One;
      if (man_answer != man_opt.contains(m, w))
        return "man-optimal decision wrong for pair (" + std::to_string(m) +
               "," + std::to_string(w) + ")";
      bool woman_answer =
          evaluate_designated(wosm_to_ccvneg(sm, m, w)) == TriValue::One;
      if (woman_answer != woman_opt.contains(m, w))
        return "woman-optimal decision wrong for pair (" + std::to_string(m) +
               "," + std::to_string(w) + ")";
    }
  return std::nullopt;
}

struct SuiteEntry {
  SuiteInfo info;
  TrialFn trial;
};

const SuiteEntry kSuites[] = {
    {{"ccv3vlfmm", "circuit evaluation vs greedy matching on the gate-gadget graph", 500},
     trial_ccv3vlfmm},
    {{"vlfmmccv", "matched-vertex question vs compiled comparator circuit", 500},
     trial_vlfmmccv},
    {{"ccv3lfmm", "circuit evaluation vs designated-edge question", 500}, trial_ccv3lfmm},
    {{"ccvneg", "double-rail elimination of negations vs direct evaluation", 500},
     trial_ccvneg},
    {{"lfmmccvneg", "edge membership circuit vs greedy matching", 500}, trial_lfmmccvneg},
    {{"tri2bool", "rail-pair simulation vs three-valued evaluation", 500}, trial_tri2bool},
    {{"reach", "reachability circuit vs breadth-first search", 500}, trial_reach},
    {{"conn", "distance matrix via layered circuit vs BFS distances", 200}, trial_conn},
    {{"smfix", "fixed-point marriage solver vs deferred acceptance", 200}, trial_smfix},
    {{"lfmmsm", "greedy matching embedded into stable marriage", 300}, trial_lfmmsm},
    {{"mosm", "optimal-pair decision circuits vs solver", 100}, trial_mosm},
};

static_assert(std::size(kSuites) == std::size(kSuiteNames));

}  // namespace

const std::vector<SuiteInfo>& verification_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> v;
    for (const SuiteEntry& e : kSuites) v.push_back(e.info);
    return v;
  }();
  return infos;
}

SuiteResult run_suite(std::string_view name, int trials, std::uint64_t seed) {
  const SuiteEntry* entry = nullptr;
  for (const SuiteEntry& e : kSuites)
    if (e.info.name == name) entry = &e;
  if (!entry) {
    std::string known;
    for (const SuiteEntry& e : kSuites) known += " " + std::string(e.info.name);
    throw std::invalid_argument("unknown suite '" + std::string(name) +
                                "'; suites:" + known);
  }

  SuiteResult result;
  result.suite = std::string(name);
  result.trials = trials;
  for (int i = 0; i < trials; ++i) {
    std::optional<std::string> failure;
    try {
      failure = entry->trial(seed + static_cast<std::uint64_t>(i), i);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure) {
      ++result.passed;
    } else if (result.failures.size() < 5) {
      result.failures.push_back("trial " + std::to_string(i) + ": " + *failure);
    }
  }
  return result;
}

}  // namespace cct
