#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "cct/circuit.hpp"
#include "cct/graph.hpp"
#include "cct/marriage.hpp"

namespace cct {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line(line) {}
  int line;
};

/// Circuit text: `circuit <wires> <bool|tri>` header, then one item per
/// line: `c <min> <max>`, `n <wire>`, `d <wire>`, and optionally one
/// `in <v0 v1 ...>` line with symbols 0/1/*. `#` starts a comment.
struct CircuitFile {
  Circuit circuit;
  std::optional<std::vector<TriValue>> inputs;
};

CircuitFile parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c,
                              const std::vector<TriValue>* inputs = nullptr);

/// Graph text: `bipartite <bottoms> <tops>` or `digraph <vertices>` header,
/// then `e <i> <j>` lines.
BipartiteGraph parse_bipartite(const std::string& text);
std::string serialize_bipartite(const BipartiteGraph& g);

DiGraph parse_digraph(const std::string& text);
std::string serialize_digraph(const DiGraph& g);

/// Marriage text: `sm <n>`, then n men's preference lines, then n women's,
/// each a space-separated permutation of 0..n-1.
SmInstance parse_sm(const std::string& text);
std::string serialize_sm(const SmInstance& sm);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cct
