#include "cct/oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace cct {

namespace {

SmInstance transposed(const SmInstance& sm) {
  return SmInstance{sm.n, sm.women_prefs, sm.men_prefs};
}

Matching flipped(const Matching& m) {
  Matching out;
  for (auto [a, b] : m.pairs) out.pairs.emplace_back(b, a);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

Matching deferred_acceptance(const SmInstance& sm) {
  const int n = sm.n;
  std::vector<std::vector<int>> rank(n, std::vector<int>(n));
  for (int w = 0; w < n; ++w)
    for (int k = 0; k < n; ++k) rank[w][sm.women_prefs[w][k]] = k;

  std::vector<int> next_proposal(n, 0);
  std::vector<int> fiance(n, -1);  // per woman
  std::deque<int> free_men(n);
  std::iota(free_men.begin(), free_men.end(), 0);

  while (!free_men.empty()) {
    int m = free_men.front();
    free_men.pop_front();
    int w = sm.men_prefs[m][next_proposal[m]++];
    if (fiance[w] == -1) {
      fiance[w] = m;
    } else if (rank[w][m] < rank[w][fiance[w]]) {
      free_men.push_back(fiance[w]);
      fiance[w] = m;
    } else {
      free_men.push_back(m);
    }
  }

  Matching out;
  for (int w = 0; w < n; ++w) out.pairs.emplace_back(fiance[w], w);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

}  // namespace

Matching gale_shapley(const SmInstance& sm, ProposingSide side) {
  require_valid(sm);
  if (side == ProposingSide::Men) return deferred_acceptance(sm);
  return flipped(deferred_acceptance(transposed(sm)));
}

bool is_stable(const SmInstance& sm, const Matching& m) {
  require_valid(sm);
  const int n = sm.n;
  std::vector<int> wife(n, -1), husband(n, -1);
  for (auto [man, woman] : m.pairs) {
    if (man < 0 || man >= n || woman < 0 || woman >= n || wife[man] != -1 ||
        husband[woman] != -1)
      throw std::invalid_argument("is_stable: not a perfect matching");
    wife[man] = woman;
    husband[woman] = man;
  }
  if (std::count(wife.begin(), wife.end(), -1) != 0)
    throw std::invalid_argument("is_stable: not a perfect matching");

  std::vector<std::vector<int>> man_rank(n, std::vector<int>(n)),
      woman_rank(n, std::vector<int>(n));
  for (int p = 0; p < n; ++p)
    for (int r = 0; r < n; ++r) {
      man_rank[p][sm.men_prefs[p][r]] = r;
      woman_rank[p][sm.women_prefs[p][r]] = r;
    }
  for (int man = 0; man < n; ++man)
    for (int woman = 0; woman < n; ++woman) {
      if (wife[man] == woman) continue;
      if (man_rank[man][woman] < man_rank[man][wife[man]] &&
          woman_rank[woman][man] < woman_rank[woman][husband[woman]])
        return false;  // blocking pair
    }
  return true;
}

std::vector<Matching> enumerate_stable(const SmInstance& sm) {
  require_valid(sm);
  if (sm.n > 6)
    throw std::invalid_argument("enumerate_stable: instance too large to enumerate");
  std::vector<int> wife(sm.n);
  std::iota(wife.begin(), wife.end(), 0);
  std::vector<Matching> out;
  do {
    Matching m;
    for (int man = 0; man < sm.n; ++man) m.pairs.emplace_back(man, wife[man]);
    if (is_stable(sm, m)) out.push_back(std::move(m));
  } while (std::next_permutation(wife.begin(), wife.end()));
  return out;
}

Circuit random_circuit(std::uint64_t seed, int wires, int gates, Domain domain,
                       bool with_negation) {
  if (wires < 2 || gates < 0) throw std::invalid_argument("random_circuit: bad size");
  if (with_negation && domain == Domain::ThreeValued)
    throw std::invalid_argument("random_circuit: negation needs the Boolean domain");
  SplitMix64 rng(seed);
  Circuit c;
  c.num_wires = wires;
  c.domain = domain;
  for (int t = 0; t < gates; ++t) {
    int roll = rng.below(10);
    if (with_negation && roll < 2) {
      c.gates.push_back(Gate::negation(rng.below(wires)));
    } else if (roll < 3) {
      c.gates.push_back(Gate::dummy(rng.below(wires)));
    } else {
      int a = rng.below(wires);
      int b = rng.below(wires - 1);
      if (b >= a) ++b;
      c.gates.push_back(Gate::comparator(a, b));
    }
  }
  return c;
}

std::vector<TriValue> random_inputs(std::uint64_t seed, int wires, Domain domain) {
  SplitMix64 rng(seed);
  std::vector<TriValue> inputs(wires);
  for (TriValue& v : inputs) {
    int roll = rng.below(domain == Domain::ThreeValued ? 3 : 2);
    v = roll == 0 ? TriValue::Zero : roll == 1 ? TriValue::One : TriValue::Star;
  }
  return inputs;
}

BipartiteGraph random_bipartite(std::uint64_t seed, int bottoms, int tops,
                                int degree_bound) {
  if (bottoms < 0 || tops < 0) throw std::invalid_argument("random_bipartite: bad size");
  SplitMix64 rng(seed);
  BipartiteGraph g;
  g.num_bottom = bottoms;
  g.num_top = tops;
  std::vector<int> bottom_deg(bottoms, 0), top_deg(tops, 0);
  for (int b = 0; b < bottoms; ++b)
    for (int t = 0; t < tops; ++t) {
      if (!rng.coin(0.4)) continue;
      if (degree_bound > 0 &&
          (bottom_deg[b] >= degree_bound || top_deg[t] >= degree_bound))
        continue;
      g.add_edge(b, t);
      ++bottom_deg[b];
      ++top_deg[t];
    }
  return g;
}

DiGraph random_topological_dag(std::uint64_t seed, int vertices, double density) {
  if (vertices < 1) throw std::invalid_argument("random_topological_dag: bad size");
  SplitMix64 rng(seed);
  DiGraph g;
  g.num_vertices = vertices;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j)
      if (rng.coin(density)) g.add_edge(i, j);
  return g;
}

SmInstance random_sm(std::uint64_t seed, int n) {
  if (n < 1) throw std::invalid_argument("random_sm: bad size");
  SplitMix64 rng(seed);
  auto shuffled = [&] {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    return perm;
  };
  SmInstance sm;
  sm.n = n;
  for (int p = 0; p < n; ++p) sm.men_prefs.push_back(shuffled());
  for (int p = 0; p < n; ++p) sm.women_prefs.push_back(shuffled());
  return sm;
}

}  // namespace cct
