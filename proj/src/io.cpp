#include "cct/io.hpp"

#include <fstream>
#include <sstream>

namespace cct {

namespace {

struct Lines {
  explicit Lines(const std::string& text) : in(text) {}

  /// Next semantic line, split into tokens; comments and blanks skipped.
  bool next(std::vector<std::string>& tokens, int& line_no) {
    std::string line;
    while (std::getline(in, line)) {
      ++current;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      tokens.clear();
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) {
        line_no = current;
        return true;
      }
    }
    return false;
  }

  std::istringstream in;
  int current = 0;
};

int parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

CircuitFile parse_circuit(const std::string& text) {
  Lines lines(text);
  std::vector<std::string> tok;
  int ln = 0;
  if (!lines.next(tok, ln)) throw ParseError(1, "empty circuit file");
  if (tok.size() != 3 || tok[0] != "circuit")
    throw ParseError(ln, "expected 'circuit <wires> <bool|tri>'");

  CircuitFile out;
  out.circuit.num_wires = parse_int(tok[1], ln);
  if (out.circuit.num_wires < 0) throw ParseError(ln, "negative wire count");
  if (tok[2] == "bool") out.circuit.domain = Domain::Boolean;
  else if (tok[2] == "tri") out.circuit.domain = Domain::ThreeValued;
  else throw ParseError(ln, "domain must be 'bool' or 'tri'");

  const int m = out.circuit.num_wires;
  auto check_wire = [&](int w) {
    if (w < 0 || w >= m) throw ParseError(ln, "wire index out of range");
  };
  while (lines.next(tok, ln)) {
    if (tok[0] == "c" && tok.size() == 3) {
      int a = parse_int(tok[1], ln), b = parse_int(tok[2], ln);
      check_wire(a);
      check_wire(b);
      if (a == b) throw ParseError(ln, "comparator on a single wire");
      out.circuit.gates.push_back(Gate::comparator(a, b));
    } else if (tok[0] == "n" && tok.size() == 2) {
      if (out.circuit.domain == Domain::ThreeValued)
        throw ParseError(ln, "negation not allowed in three-valued domain");
      int w = parse_int(tok[1], ln);
      check_wire(w);
      out.circuit.gates.push_back(Gate::negation(w));
    } else if (tok[0] == "d" && tok.size() == 2) {
      int w = parse_int(tok[1], ln);
      check_wire(w);
      out.circuit.gates.push_back(Gate::dummy(w));
    } else if (tok[0] == "in") {
      if (out.inputs) throw ParseError(ln, "duplicate input line");
      if (static_cast<int>(tok.size()) != m + 1)
        throw ParseError(ln, "expected one value per wire");
      std::vector<TriValue> vals;
      for (int i = 1; i <= m; ++i) {
        if (tok[i].size() != 1) throw ParseError(ln, "bad value symbol '" + tok[i] + "'");
        TriValue v;
        try {
          v = tri_from_char(tok[i][0]);
        } catch (const std::invalid_argument& e) {
          throw ParseError(ln, e.what());
        }
        if (v == TriValue::Star && out.circuit.domain == Domain::Boolean)
          throw ParseError(ln, "star input in a Boolean circuit");
        vals.push_back(v);
      }
      out.inputs = std::move(vals);
    } else {
      throw ParseError(ln, "unrecognized item '" + tok[0] + "'");
    }
  }
  return out;
}

std::string serialize_circuit(const Circuit& c, const std::vector<TriValue>* inputs) {
  std::ostringstream os;
  os << "circuit " << c.num_wires << ' '
     << (c.domain == Domain::Boolean ? "bool" : "tri") << '\n';
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Comparator: os << "c " << g.min_wire << ' ' << g.max_wire; break;
      case GateKind::Negation: os << "n " << g.wire(); break;
      case GateKind::Dummy: os << "d " << g.wire(); break;
    }
    os << '\n';
  }
  if (inputs) os << "in " << tri_string(*inputs) << '\n';
  return os.str();
}

namespace {

template <typename G>
G parse_graph(const std::string& text, const char* header, int arity) {
  Lines lines(text);
  std::vector<std::string> tok;
  int ln = 0;
  if (!lines.next(tok, ln)) throw ParseError(1, "empty graph file");
  if (static_cast<int>(tok.size()) != arity + 1 || tok[0] != header)
    throw ParseError(ln, std::string("expected '") + header + "' header");

  G g;
  if constexpr (std::is_same_v<G, BipartiteGraph>) {
    g.num_bottom = parse_int(tok[1], ln);
    g.num_top = parse_int(tok[2], ln);
    if (g.num_bottom < 0 || g.num_top < 0) throw ParseError(ln, "negative size");
  } else {
    g.num_vertices = parse_int(tok[1], ln);
    if (g.num_vertices < 1) throw ParseError(ln, "graph needs at least one vertex");
  }

  while (lines.next(tok, ln)) {
    if (tok[0] != "e" || tok.size() != 3)
      throw ParseError(ln, "expected 'e <i> <j>'");
    int a = parse_int(tok[1], ln), b = parse_int(tok[2], ln);
    if constexpr (std::is_same_v<G, BipartiteGraph>) {
      if (a < 0 || a >= g.num_bottom) throw ParseError(ln, "bottom index out of range");
      if (b < 0 || b >= g.num_top) throw ParseError(ln, "top index out of range");
    } else {
      if (a < 0 || a >= g.num_vertices || b < 0 || b >= g.num_vertices)
        throw ParseError(ln, "vertex index out of range");
    }
    g.edges.insert({a, b});
  }
  return g;
}

}  // namespace

BipartiteGraph parse_bipartite(const std::string& text) {
  return parse_graph<BipartiteGraph>(text, "bipartite", 2);
}

std::string serialize_bipartite(const BipartiteGraph& g) {
  std::ostringstream os;
  os << "bipartite " << g.num_bottom << ' ' << g.num_top << '\n';
  for (auto [b, t] : g.edges) os << "e " << b << ' ' << t << '\n';
  return os.str();
}

DiGraph parse_digraph(const std::string& text) {
  return parse_graph<DiGraph>(text, "digraph", 1);
}

std::string serialize_digraph(const DiGraph& g) {
  std::ostringstream os;
  os << "digraph " << g.num_vertices << '\n';
  for (auto [a, b] : g.edges) os << "e " << a << ' ' << b << '\n';
  return os.str();
}

SmInstance parse_sm(const std::string& text) {
  Lines lines(text);
  std::vector<std::string> tok;
  int ln = 0;
  if (!lines.next(tok, ln)) throw ParseError(1, "empty marriage file");
  if (tok.size() != 2 || tok[0] != "sm") throw ParseError(ln, "expected 'sm <n>'");

  SmInstance sm;
  sm.n = parse_int(tok[1], ln);
  if (sm.n < 1) throw ParseError(ln, "instance needs at least one pair");

  auto read_lists = [&](std::vector<std::vector<int>>& prefs, const char* side) {
    for (int p = 0; p < sm.n; ++p) {
      if (!lines.next(tok, ln))
        throw ParseError(lines.current + 1,
                         std::string("missing ") + side + " preference list");
      if (static_cast<int>(tok.size()) != sm.n)
        throw ParseError(ln, "expected a permutation of length " + std::to_string(sm.n));
      std::vector<int> list;
      std::vector<bool> seen(sm.n, false);
      for (const std::string& t : tok) {
        int v = parse_int(t, ln);
        if (v < 0 || v >= sm.n) throw ParseError(ln, "index out of range");
        if (seen[v]) throw ParseError(ln, "repeated index in preference list");
        seen[v] = true;
        list.push_back(v);
      }
      prefs.push_back(std::move(list));
    }
  };
  read_lists(sm.men_prefs, "man");
  read_lists(sm.women_prefs, "woman");
  if (lines.next(tok, ln)) throw ParseError(ln, "trailing content");
  return sm;
}

std::string serialize_sm(const SmInstance& sm) {
  std::ostringstream os;
  os << "sm " << sm.n << '\n';
  auto emit = [&](const std::vector<std::vector<int>>& prefs) {
    for (const auto& list : prefs) {
      for (std::size_t i = 0; i < list.size(); ++i)
        os << (i ? " " : "") << list[i];
      os << '\n';
    }
  };
  emit(sm.men_prefs);
  emit(sm.women_prefs);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace cct
