#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "outerdom/mop.hpp"

namespace outerdom {

// Plain undirected simple graph on vertices 1..n.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // canonical (min,max), sorted
  std::vector<std::vector<int>> adj;       // 1-indexed, sorted

  bool has_edge(int a, int b) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

SimpleGraph build_graph(int n, std::vector<std::pair<int, int>> edges);
SimpleGraph to_simple(const MopGraph& g);

// Stable fingerprint of (n, edge set); lets a set certify which graph it
// was checked against.
std::uint64_t graph_fingerprint(const SimpleGraph& g);

struct DominatingSet {
  std::vector<int> vertices;  // sorted
  int size = 0;
  std::uint64_t graph_id = 0;
};

bool is_dominating(const SimpleGraph& g, const std::vector<int>& vertices);

// Lowest vertex adjacent to all others, if any.
std::optional<int> dominating_vertex(const SimpleGraph& g);

// Exact minimum dominating set by branch and bound: branch over the
// dominators of an uncovered vertex chosen to have the fewest uncovered
// candidates; prune with a greedy upper bound and the coverage lower
// bound ceil(uncovered / (maxdeg + 1)). Deterministic for a fixed input.
// limit guards runtime; n > limit raises SolverTooLarge (hard cap 64).
DominatingSet gamma_exact_bb(const SimpleGraph& g, int limit = 32);

// Exact minimum dominating set by dynamic programming over the inner
// dual tree, three states per face vertex. Independent of the branch
// and bound path by construction; the two must agree everywhere.
// Tie-break prefers lexicographically smaller vertex sets cell by cell,
// so the output is deterministic.
DominatingSet gamma_mop_dp(const MopGraph& g);

}  // namespace outerdom
