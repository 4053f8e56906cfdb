#pragma once

#include <cstdint>
#include <vector>

#include "cct/circuit.hpp"
#include "cct/graph.hpp"
#include "cct/marriage.hpp"

namespace cct {

/// splitmix64; small, well known, and reproducible across platforms.
/// Cross-check sweeps derive per-trial seeds as base + trial_index.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [0, bound); bound must be positive.
  int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

  bool coin(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

 private:
  std::uint64_t state_;
};

enum class ProposingSide { Men, Women };

/// Classical deferred acceptance; reference oracle for the fixed-point
/// solver, never on its production path.
Matching gale_shapley(const SmInstance& sm, ProposingSide side);

/// M must be a perfect matching; true when no man/woman pair prefers each
/// other to their partners.
bool is_stable(const SmInstance& sm, const Matching& m);

/// All stable matchings by brute-force enumeration; n <= 6.
std::vector<Matching> enumerate_stable(const SmInstance& sm);

Circuit random_circuit(std::uint64_t seed, int wires, int gates, Domain domain,
                       bool with_negation);
std::vector<TriValue> random_inputs(std::uint64_t seed, int wires, Domain domain);
BipartiteGraph random_bipartite(std::uint64_t seed, int bottoms, int tops,
                                int degree_bound = 0);
DiGraph random_topological_dag(std::uint64_t seed, int vertices, double density);
SmInstance random_sm(std::uint64_t seed, int n);

}  // namespace cct
