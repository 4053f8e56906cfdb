// Acceptance suite: one numbered criterion per section, each printed as a
// single PASS/FAIL line with its runtime. Exits nonzero if any fail.
// argv[1] (optional) is the path of the command-line binary for the
// end-to-end checks; those are skipped with a FAIL if it is missing.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cct/circuit.hpp"
#include "cct/graph.hpp"
#include "cct/io.hpp"
#include "cct/marriage.hpp"
#include "cct/oracles.hpp"
#include "cct/reductions.hpp"
#include "cct/verify.hpp"

using namespace cct;

namespace {

const TriValue O = TriValue::Zero;
const TriValue I = TriValue::One;
const TriValue S = TriValue::Star;

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<std::string()> run;  // empty string = pass
};

// --- shared fixtures --------------------------------------------------------

CcvInstance six_wire_example() {
  Circuit c;
  c.num_wires = 6;
  c.gates = {Gate::comparator(0, 3), Gate::comparator(1, 4),
             Gate::comparator(0, 5), Gate::comparator(3, 1)};
  return {c, {I, I, I, O, O, O}, 1};
}

CcvInstance staircase_example() {
  Circuit c;
  c.num_wires = 3;
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

DiGraph five_vertex_dag() {
  DiGraph g;
  g.num_vertices = 5;
  for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {2, 3}, {2, 4}}) g.add_edge(u, v);
  return g;
}

SmInstance two_by_two_unique() {
  return SmInstance{2, {{0, 1}, {1, 0}}, {{0, 1}, {0, 1}}};
}

std::vector<TriValue> in_wire_order(const SmInstance& sm, const MarriageState& s) {
  PairTable table(sm);
  std::vector<TriValue> out;
  for (int t = 0; t < table.pairs(); ++t) {
    out.push_back(s.man(table.man_of_pair(t), table.man_rank_of_pair(t)));
    out.push_back(s.woman(table.woman_of_pair(t), table.woman_rank_of_pair(t)));
  }
  return out;
}

// --- criterion bodies ---------------------------------------------------------

std::string worked_examples() {
  {
    auto outputs = evaluate(six_wire_example()).outputs();
    if (outputs != std::vector<TriValue>{O, I, I, O, I, O})
      return "six-wire outputs " + tri_string(outputs);
  }
  {
    auto outputs = evaluate(staircase_example()).outputs();
    if (outputs != std::vector<TriValue>{I, I, O})
      return "staircase outputs " + tri_string(outputs);
  }
  {
    VlfmmToCcvResult red = vlfmm_to_ccv(seven_vertex_graph(), 3);
    auto outputs = evaluate_final(red.instance.circuit, red.instance.inputs);
    if (outputs != std::vector<TriValue>{I, I, I, O, O, O, O})
      return "matching circuit outputs " + tri_string(outputs);
  }
  {
    Circuit c;
    c.num_wires = 3;
    c.gates = {Gate::comparator(1, 0), Gate::comparator(2, 1), Gate::negation(2)};
    CcvnegToCcvResult red = ccvneg_to_ccv({c, {O, I, I}, 0});
    auto outputs = evaluate_final(red.instance.circuit, red.instance.inputs);
    if (outputs != std::vector<TriValue>{I, O, I, O, I, O, O})
      return "double-rail outputs " + tri_string(outputs);
  }
  {
    ReachabilityCircuit red = reachability_to_ccv(five_vertex_dag());
    auto outputs = evaluate_final(red.circuit, red.inputs);
    for (int k = 0; k < 5; ++k)
      if (outputs[red.feeder_wire(k)] != O) return "feeder wire not drained";
    for (int v = 0; v < 5; ++v)
      if (outputs[red.vertex_wire(v)] != I) return "vertex wire not reached";
  }
  {
    SmInstance sm = two_by_two_unique();
    PairTable table(sm);
    MarriageState one_round = marriage_step(sm, table, initial_state(sm));
    if (in_wire_order(sm, one_round) != std::vector<TriValue>{I, O, O, O, S, I, I, S})
      return "one round gives " + tri_string(in_wire_order(sm, one_round));
    MarriageState fixed = iterate_to_fixed_point(sm);
    if (in_wire_order(sm, fixed) != std::vector<TriValue>{I, O, O, O, O, I, I, O})
      return "fixed point is " + tri_string(in_wire_order(sm, fixed));
    Matching m = extract_marriage(sm, fixed);
    if (m.pairs != std::vector<std::pair<int, int>>{{0, 0}, {1, 1}})
      return "extracted marriage wrong";
  }
  return {};
}

std::string ones_conservation() {
  for (int trial = 0; trial < 1000; ++trial) {
    std::uint64_t seed = 100000 + trial;
    SplitMix64 rng(seed);
    const int wires = 2 + rng.below(19);  // up to 20
    const int gates = rng.below(61);      // up to 60
    Circuit c = random_circuit(seed * 3 + 1, wires, gates, Domain::Boolean, false);
    LayerTrace trace =
        evaluate({c, random_inputs(seed * 3 + 2, wires, Domain::Boolean), 0});
    auto counts = ones_per_layer(trace);
    for (int row = 1; row < trace.layers(); ++row)
      if (counts[row] != counts[0])
        return "trial " + std::to_string(trial) + ": layer " + std::to_string(row);
  }
  return {};
}

std::string reduction_sweeps() {
  const std::array<std::pair<const char*, int>, 8> plan{{
      {"ccv3vlfmm", 500},
      {"vlfmmccv", 500},
      {"ccv3lfmm", 500},
      {"ccvneg", 500},
      {"lfmmccvneg", 500},
      {"tri2bool", 500},
      {"reach", 500},
      {"conn", 200},
  }};
  for (auto [name, trials] : plan) {
    SuiteResult r = run_suite(name, trials, 20240001);
    if (!r.ok())
      return std::string(name) + " " + std::to_string(r.passed) + "/" +
             std::to_string(r.trials) +
             (r.failures.empty() ? "" : " (" + r.failures.front() + ")");
  }
  // All nine rail encodings of a single gate, pinned directly.
  Circuit tri;
  tri.num_wires = 2;
  tri.domain = Domain::ThreeValued;
  tri.gates = {Gate::comparator(0, 1)};
  for (TriValue p : {O, I, S})
    for (TriValue q : {O, I, S}) {
      TriToBoolResult red = trivalued_to_boolean({tri, {p, q}, 0});
      auto rails = evaluate_final(red.instance.circuit, red.instance.inputs);
      if (decode_rails(rails[0], rails[1]) != tri_and(p, q) ||
          decode_rails(rails[2], rails[3]) != tri_or(p, q))
        return "rail table row failed";
    }
  return {};
}

std::string reachability_gadget_invariants() {
  SuiteResult r = run_suite("reach", 200, 20240777);
  if (!r.ok()) return r.failures.empty() ? "sweep failed" : r.failures.front();
  return {};
}

std::string marriage_fixed_point_suite() {
  // Exhaustive n = 1, 2, 3 over all preference profiles.
  auto permutations = [](int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do
      out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  };

  auto check_instance = [](const SmInstance& sm) -> std::string {
    PairTable table(sm);
    MarriageState state = initial_state(sm);
    const int budget = iteration_budget(sm.n);
    int rounds = 0;
    while (true) {
      MarriageState next = marriage_step(sm, table, state);
      if (!extends(next, state)) return "extension monotonicity violated";
      if (next == state) break;
      state = std::move(next);
      if (++rounds > budget) return "fixed point not reached within budget";
    }

    MarriageState down = substitute_stars(sm, state, O);
    MarriageState up = substitute_stars(sm, state, I);
    if (marriage_step(sm, table, down) != down) return "downward substitution unstable";
    if (marriage_step(sm, table, up) != up) return "upward substitution unstable";
    if (embed_marriage(sm, extract_marriage(sm, down)) != down ||
        embed_marriage(sm, extract_marriage(sm, up)) != up)
      return "Boolean fixed point outside the embedding range";

    if (solve(sm, OptimalSide::Man) != gale_shapley(sm, ProposingSide::Men))
      return "man-optimal mismatch";
    if (solve(sm, OptimalSide::Woman) != gale_shapley(sm, ProposingSide::Women))
      return "woman-optimal mismatch";
    return {};
  };

  for (int n = 1; n <= 3; ++n) {
    auto perms = permutations(n);
    const int p = static_cast<int>(perms.size());
    // every assignment of one permutation per person
    std::vector<int> choice(2 * n, 0);
    while (true) {
      SmInstance sm;
      sm.n = n;
      for (int i = 0; i < n; ++i) sm.men_prefs.push_back(perms[choice[i]]);
      for (int i = 0; i < n; ++i) sm.women_prefs.push_back(perms[choice[n + i]]);
      std::string err = check_instance(sm);
      if (!err.empty()) return "exhaustive n=" + std::to_string(n) + ": " + err;

      int pos = 0;
      while (pos < 2 * n && choice[pos] == p - 1) choice[pos++] = 0;
      if (pos == 2 * n) break;
      ++choice[pos];
    }
  }

  // 200 random instances up to n = 8.
  for (int trial = 0; trial < 200; ++trial) {
    SplitMix64 rng(400000 + trial);
    SmInstance sm = random_sm(500000 + trial, 1 + rng.below(8));
    std::string err = check_instance(sm);
    if (!err.empty()) return "random trial " + std::to_string(trial) + ": " + err;
  }

  // Embedding is injective into fixed points and inverts extraction (n <= 4),
  // and the man-optimal answer is weakly best for every man.
  for (int trial = 0; trial < 80; ++trial) {
    SplitMix64 rng(600000 + trial);
    SmInstance sm = random_sm(700000 + trial, 1 + rng.below(4));
    std::vector<std::vector<int>> rank(sm.n, std::vector<int>(sm.n));
    for (int m = 0; m < sm.n; ++m)
      for (int r = 0; r < sm.n; ++r) rank[m][sm.men_prefs[m][r]] = r;

    Matching man_opt = solve(sm, OptimalSide::Man);
    std::vector<int> best_wife(sm.n);
    for (auto [m, w] : man_opt.pairs) best_wife[m] = w;

    std::vector<MarriageState> seen;
    for (const Matching& stable : enumerate_stable(sm)) {
      MarriageState embedded = embed_marriage(sm, stable);
      if (extract_marriage(sm, embedded) != stable) return "embedding round trip failed";
      for (const MarriageState& other : seen)
        if (embedded == other) return "embedding not injective";
      seen.push_back(embedded);
      for (auto [m, w] : stable.pairs)
        if (rank[m][best_wife[m]] > rank[m][w]) return "man-optimality violated";
    }
  }
  return {};
}

std::string lfmm_sm_uniqueness() {
  SuiteResult r = run_suite("lfmmsm", 300, 20240003);
  if (!r.ok()) return r.failures.empty() ? "sweep failed" : r.failures.front();
  return {};
}

std::string optimal_pair_gadget() {
  SuiteResult r = run_suite("mosm", 100, 20240004);
  if (!r.ok()) return r.failures.empty() ? "sweep failed" : r.failures.front();
  return {};
}

// --- CLI round trip ----------------------------------------------------------

std::string g_cli_path;

struct CommandResult {
  int exit_code;
  std::string output;
};

CommandResult run_command(const std::string& args) {
  std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string output;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string cli_round_trip() {
  if (g_cli_path.empty()) return "command-line binary path not supplied";

  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t seed = 800000 + trial;
    SplitMix64 rng(seed);
    Domain domain = trial % 2 ? Domain::ThreeValued : Domain::Boolean;
    Circuit c = random_circuit(seed, 2 + rng.below(6), rng.below(10), domain,
                               domain == Domain::Boolean);
    auto inputs = random_inputs(seed + 1, c.num_wires, domain);
    CircuitFile parsed = parse_circuit(serialize_circuit(c, &inputs));
    if (parsed.circuit != c || *parsed.inputs != inputs)
      return "circuit round trip failed";
    BipartiteGraph g = random_bipartite(seed, 1 + rng.below(6), 1 + rng.below(6));
    if (parse_bipartite(serialize_bipartite(g)) != g) return "graph round trip failed";
    DiGraph d = random_topological_dag(seed, 1 + rng.below(6), 0.4);
    if (parse_digraph(serialize_digraph(d)) != d) return "digraph round trip failed";
    SmInstance sm = random_sm(seed, 1 + rng.below(6));
    if (parse_sm(serialize_sm(sm)) != sm) return "marriage round trip failed";
  }

  const std::string dir =
      (std::filesystem::temp_directory_path() / "cct_acceptance").string();
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return "cannot create scratch dir";

  CcvInstance six = six_wire_example();
  write_file(dir + "/six.ccv", serialize_circuit(six.circuit, &six.inputs));
  CommandResult eval = run_command("eval --circuit " + dir + "/six.ccv --wire 1");
  if (eval.exit_code != 0) return "eval exited " + std::to_string(eval.exit_code);
  if (eval.output != "1\n") return "eval printed '" + eval.output + "'";

  write_file(dir + "/couples.sm", serialize_sm(two_by_two_unique()));
  CommandResult sol = run_command("sm-solve --in " + dir + "/couples.sm --side man");
  if (sol.exit_code != 0) return "sm-solve exited " + std::to_string(sol.exit_code);
  if (sol.output != "0 0\n1 1\n") return "sm-solve printed '" + sol.output + "'";
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  std::vector<Criterion> criteria = {
      {"1 worked-example reproductions", 1.0, worked_examples},
      {"2 ones conservation, 1000 random circuits", 5.0, ones_conservation},
      {"3 reduction soundness sweeps", 60.0, reduction_sweeps},
      {"4 reachability gadget invariants, 200 dags", 60.0, reachability_gadget_invariants},
      {"5 marriage fixed-point suite", 120.0, marriage_fixed_point_suite},
      {"6 greedy-matching embedding uniqueness, 300 graphs", 120.0, lfmm_sm_uniqueness},
      {"7 optimal-pair decision circuits, 100 instances", 120.0, optimal_pair_gadget},
      {"8 text format round trips and command output", 30.0, cli_round_trip},
  };

  int failures = 0;
  for (Criterion& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = criterion.run();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (err.empty() && secs > criterion.limit_seconds)
      err = "exceeded " + std::to_string(criterion.limit_seconds) + "s";
    std::printf("[%s] criterion %s (%.2fs%s)\n", err.empty() ? "PASS" : "FAIL",
                criterion.name.c_str(), secs,
                err.empty() ? "" : (", " + err).c_str());
    if (!err.empty()) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
