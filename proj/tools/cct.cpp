#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cct/circuit.hpp"
#include "cct/io.hpp"
#include "cct/marriage.hpp"
#include "cct/reductions.hpp"
#include "cct/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitParseError = 2;
constexpr int kExitVerifyFailure = 3;

cct::CcvInstance load_instance(const std::string& path, int wire) {
  cct::CircuitFile file = cct::parse_circuit(cct::read_file(path));
  if (!file.inputs)
    throw std::invalid_argument(path + ": circuit file has no input line");
  if (wire < 0 || wire >= file.circuit.num_wires)
    throw std::invalid_argument("designated wire out of range");
  return {file.circuit, *file.inputs, wire};
}

int cmd_eval(const std::string& path, int wire, bool show_trace) {
  cct::CcvInstance inst = load_instance(path, wire);
  cct::LayerTrace trace = cct::evaluate(inst);
  if (show_trace)
    for (int row = 0; row < trace.layers(); ++row)
      std::cout << cct::tri_string(trace.row(row)) << '\n';
  std::cout << cct::tri_char(trace.at(trace.layers() - 1, wire)) << '\n';
  return kExitOk;
}

int cmd_conn(const std::string& path) {
  cct::DiGraph g = cct::parse_digraph(cct::read_file(path));
  cct::ConnMatrix u = cct::conn_matrix_via_ccv(g);
  for (int d = 0; d < u.n; ++d) {
    for (int i = 0; i < u.n; ++i) std::cout << (i ? " " : "") << (u.at(d, i) ? 1 : 0);
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_sm_solve(const std::string& path, const std::string& side) {
  cct::SmInstance sm = cct::parse_sm(cct::read_file(path));
  cct::Matching m = cct::solve(
      sm, side == "man" ? cct::OptimalSide::Man : cct::OptimalSide::Woman);
  for (auto [man, woman] : m.pairs) std::cout << man << ' ' << woman << '\n';
  return kExitOk;
}

int cmd_sm_decide(const std::string& path, int man, int woman,
                  const std::string& side) {
  cct::SmInstance sm = cct::parse_sm(cct::read_file(path));
  cct::CcvInstance circuit = side == "man" ? cct::mosm_to_ccvneg(sm, man, woman)
                                           : cct::wosm_to_ccvneg(sm, man, woman);
  std::cout << cct::tri_char(cct::evaluate_designated(circuit)) << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed) {
  std::vector<std::string> names;
  if (suite == "all")
    for (const cct::SuiteInfo& info : cct::verification_suites())
      names.emplace_back(info.name);
  else
    names.push_back(suite);

  bool all_ok = true;
  for (const std::string& name : names) {
    int n = trials;
    if (n <= 0) {
      for (const cct::SuiteInfo& info : cct::verification_suites())
        if (info.name == name) n = info.default_trials;
      if (const char* env = std::getenv("CCT_VERIFY_TRIALS")) n = std::atoi(env);
    }
    cct::SuiteResult result = cct::run_suite(name, n, seed);
    std::cout << name << ": " << result.passed << "/" << result.trials
              << (result.ok() ? " pass" : " FAIL") << '\n';
    for (const std::string& f : result.failures) std::cout << "  " << f << '\n';
    all_ok = all_ok && result.ok();
  }
  return all_ok ? kExitOk : kExitVerifyFailure;
}

struct ReduceArgs {
  std::string from, to, in, out;
  int wire = -1;
  int top = -1;
  int bottom = -1;
  int man = -1;
  int woman = -1;
};

int require_set(int value, const char* flag) {
  if (value < 0)
    throw std::invalid_argument(std::string("missing required flag ") + flag);
  return value;
}

int cmd_reduce(const ReduceArgs& a) {
  using namespace cct;
  const std::string kind = a.from + ">" + a.to;
  std::string target, decode;

  if (kind == "ccv>3vlfmm") {
    CcvToVlfmmResult r = ccv_to_3vlfmm(load_instance(a.in, require_set(a.wire, "--wire")));
    target = serialize_bipartite(r.graph);
    decode += "decode top " + std::to_string(r.designated_top) + "\n";
    for (std::size_t w = 0; w < r.output_top.size(); ++w)
      decode += "decode wire-top " + std::to_string(w) + " " +
                std::to_string(r.output_top[w]) + "\n";
  } else if (kind == "ccv>3lfmm") {
    CcvToLfmmResult r = ccv_to_3lfmm(load_instance(a.in, require_set(a.wire, "--wire")));
    target = serialize_bipartite(r.graph);
    decode += "decode edge " + std::to_string(r.designated_edge.first) + " " +
              std::to_string(r.designated_edge.second) + "\n";
  } else if (kind == "vlfmm>ccv") {
    BipartiteGraph g = parse_bipartite(read_file(a.in));
    VlfmmToCcvResult r = vlfmm_to_ccv(g, require_set(a.top, "--top"));
    target = serialize_circuit(r.instance.circuit, &r.instance.inputs);
    decode += "decode wire " + std::to_string(r.instance.designated_wire) + "\n";
    for (int t = 0; t < g.num_top; ++t)
      decode += "decode top-wire " + std::to_string(t) + " " +
                std::to_string(r.top_wire(t)) + "\n";
  } else if (kind == "ccvneg>ccv") {
    CcvnegToCcvResult r = ccvneg_to_ccv(load_instance(a.in, require_set(a.wire, "--wire")));
    target = serialize_circuit(r.instance.circuit, &r.instance.inputs);
    decode += "decode wire " + std::to_string(r.instance.designated_wire) + "\n";
  } else if (kind == "lfmm>ccvneg") {
    BipartiteGraph g = parse_bipartite(read_file(a.in));
    LfmmToCcvnegResult r = lfmm_to_ccvneg(g, require_set(a.bottom, "--bottom"),
                                          require_set(a.top, "--top"));
    target = serialize_circuit(r.instance.circuit, &r.instance.inputs);
    decode += "decode wire " + std::to_string(r.instance.designated_wire) + "\n";
  } else if (kind == "tri>ccv") {
    TriToBoolResult r = trivalued_to_boolean(load_instance(a.in, require_set(a.wire, "--wire")));
    target = serialize_circuit(r.instance.circuit, &r.instance.inputs);
    decode += "decode wire " + std::to_string(r.instance.designated_wire) + "\n";
    for (int w = 0; w * 2 < r.instance.circuit.num_wires; ++w)
      decode += "decode rails " + std::to_string(w) + " " +
                std::to_string(r.rail1(w)) + " " + std::to_string(r.rail2(w)) + "\n";
  } else if (kind == "reach>ccv") {
    DiGraph g = parse_digraph(read_file(a.in));
    ReachabilityCircuit r = reachability_to_ccv(g);
    target = serialize_circuit(r.circuit, &r.inputs);
    for (int v = 0; v < r.n; ++v)
      decode += "decode vertex-wire " + std::to_string(v) + " " +
                std::to_string(r.vertex_wire(v)) + "\n";
  } else if (kind == "lfmm>sm") {
    BipartiteGraph g = parse_bipartite(read_file(a.in));
    LfmmSmReduction r = lfmm_to_sm(g);
    target = serialize_sm(r.sm);
    decode += "decode original " + std::to_string(r.original_bottoms) + " " +
              std::to_string(r.original_tops) + "\n";
  } else if (kind == "mosm>ccvneg" || kind == "wosm>ccvneg") {
    SmInstance sm = parse_sm(read_file(a.in));
    int man = require_set(a.man, "--man"), woman = require_set(a.woman, "--woman");
    CcvInstance inst = kind == "mosm>ccvneg" ? mosm_to_ccvneg(sm, man, woman)
                                             : wosm_to_ccvneg(sm, man, woman);
    target = serialize_circuit(inst.circuit, &inst.inputs);
    decode += "decode wire " + std::to_string(inst.designated_wire) + "\n";
  } else {
    throw std::invalid_argument("unsupported reduction " + a.from + " -> " + a.to);
  }

  write_file(a.out, target);
  write_file(a.out + ".decode", decode);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"comparator circuit toolkit"};
  app.require_subcommand(1);

  std::string circuit_path;
  int wire = 0;
  bool show_trace = false;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a circuit file");
  eval->add_option("--circuit", circuit_path, "circuit file with an input line")->required();
  eval->add_option("--wire", wire, "designated wire")->required();
  eval->add_flag("--trace", show_trace, "print every layer");

  ReduceArgs reduce_args;
  CLI::App* reduce = app.add_subcommand("reduce", "compile one instance into another");
  reduce->add_option("--from", reduce_args.from, "source kind")->required();
  reduce->add_option("--to", reduce_args.to, "target kind")->required();
  reduce->add_option("--in", reduce_args.in, "source file")->required();
  reduce->add_option("--out", reduce_args.out, "target file (plus .decode sidecar)")->required();
  reduce->add_option("--wire", reduce_args.wire, "designated wire (circuit sources)");
  reduce->add_option("--top", reduce_args.top, "designated top vertex");
  reduce->add_option("--bottom", reduce_args.bottom, "designated bottom vertex");
  reduce->add_option("--man", reduce_args.man, "designated man");
  reduce->add_option("--woman", reduce_args.woman, "designated woman");

  std::string sm_path, side = "man";
  CLI::App* sm_solve = app.add_subcommand("sm-solve", "solve a stable marriage instance");
  sm_solve->add_option("--in", sm_path, "marriage file")->required();
  sm_solve->add_option("--side", side, "man|woman")->check(CLI::IsMember({"man", "woman"}));

  std::string decide_path, decide_side = "man";
  int man = 0, woman = 0;
  CLI::App* sm_decide =
      app.add_subcommand("sm-decide", "is the pair married in the optimal solution");
  sm_decide->add_option("--in", decide_path, "marriage file")->required();
  sm_decide->add_option("--man", man, "man index")->required();
  sm_decide->add_option("--woman", woman, "woman index")->required();
  sm_decide->add_option("--side", decide_side, "man|woman")
      ->check(CLI::IsMember({"man", "woman"}));

  std::string suite = "all";
  int trials = 0;
  std::uint64_t seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "run a cross-check sweep");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--trials", trials, "trial count (default per suite)");
  verify->add_option("--seed", seed, "base seed; trial i uses seed+i");

  std::string conn_path;
  CLI::App* conn = app.add_subcommand("conn", "distance-bounded reachability matrix");
  conn->add_option("--in", conn_path, "digraph file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return cmd_eval(circuit_path, wire, show_trace);
    if (reduce->parsed()) return cmd_reduce(reduce_args);
    if (sm_solve->parsed()) return cmd_sm_solve(sm_path, side);
    if (sm_decide->parsed()) return cmd_sm_decide(decide_path, man, woman, decide_side);
    if (verify->parsed()) return cmd_verify(suite, trials, seed);
    if (conn->parsed()) return cmd_conn(conn_path);
  } catch (const cct::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}
