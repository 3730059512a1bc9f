#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outerdom/domination.hpp"
#include "outerdom/mop.hpp"
#include "outerdom/reductions.hpp"

namespace outerdom {

// Hamiltonian plane triangulation presented by its Hamilton cycle
// 1..n clockwise and the chord sets drawn inside and outside it. Each
// side must be a valid maximal outerplane graph and the sides may not
// share a chord, so the whole graph has 3n - 6 edges.
struct HamTriangulation {
  int n = 0;
  std::vector<Chord> inner;  // canonical, sorted
  std::vector<Chord> outer;
};

HamTriangulation build_ht(int n, std::vector<Chord> inner, std::vector<Chord> outer);

enum class Side { Inner, Outer };
const char* side_name(Side s);

MopGraph side_graph(const HamTriangulation& t, Side side);
SimpleGraph to_simple(const HamTriangulation& t);

// A 2-chord joins vertices at cycle distance 2; its middle vertex has
// side degree 2. The two notions biject per side for n >= 5.
std::vector<Chord> two_chords(const HamTriangulation& t, Side side);
std::vector<int> two_vertices_side(const HamTriangulation& t, Side side);
// Vertices of side degree 2 on either side.
std::vector<int> two_vertices(const HamTriangulation& t);

struct SideReport {
  Side side = Side::Inner;
  std::vector<Chord> chords2;
  std::vector<int> vertices2;
  bool bijection = false;  // chords2 middles == vertices2 (checked for n >= 5)
};
SideReport side_report(const HamTriangulation& t, Side side);

// Spanning subgraph: cycle plus every 2-chord of both sides. Dominating
// it dominates the full triangulation.
struct HaboGraph {
  SimpleGraph graph;
  int c_int = 0;
  int c_ext = 0;
  int c() const { return c_int + c_ext; }
};
HaboGraph habo_graph(const HamTriangulation& t);

// True iff no three cyclically consecutive vertices are all 2-vertices.
bool good_cycle_check(const HamTriangulation& t);

// Reconstructs the side split for a triangulation given by an edge list
// and one of its Hamilton cycles: relabels along the cycle and 2-colors
// the chord conflict graph (crossing chords take opposite sides).
// Deterministic: the lowest chord of each conflict component goes inner.
HamTriangulation embed_with_cycle(int n, const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<int>& cycle);

// First Hamilton cycle in deterministic backtracking order, started at
// vertex 1 with ascending neighbor choice; the cycle's second vertex is
// kept below its last to skip reflections.
std::vector<int> find_hamilton_cycle(const SimpleGraph& g, int limit = 16);

struct GoodCycleResult {
  HamTriangulation ht;
  std::vector<int> cycle;   // original labels, starting at 1
  int cycles_tried = 0;
};

// Searches Hamilton cycles until one has no three consecutive
// 2-vertices; NotFound carries the number of cycles examined.
GoodCycleResult find_good_cycle(const SimpleGraph& g, int limit = 16);

enum class PipelineBranch { DominatingVertex, HaboExact, SideEngine };
const char* pipeline_branch_name(PipelineBranch b);

struct PipelineReport {
  int n = 0;
  int c = 0;
  int c_int = 0;
  int c_ext = 0;
  PipelineBranch branch = PipelineBranch::SideEngine;
  Side side = Side::Inner;            // SideEngine branch: side used
  DominatingSet set;                  // verified against the full graph
  int bound_5n16 = 0;                 // floor(5n / 16)
  bool within_bound = false;
  bool enforced = false;              // n >= 23
  std::optional<int> habo_bound;      // ceil(2n / 7), HaboExact branch
  std::vector<std::string> warnings;
  std::vector<std::string> mitigations;
  std::optional<ReductionTrace> trace;  // SideEngine branch
};

// Domination pipeline: dominating vertex; else if c >= (n+1)/2 solve the
// 2-chord spanning graph exactly (its size must fit ceil(2n/7)); else
// run the constructive engine on a side with at most n/4 2-chords.
// For n >= 23 the result must fit floor(5n/16); misses walk the
// mitigation chain (other qualifying side, exact side solve) and only a
// genuine failure raises BoundViolated.
PipelineReport dominate_triangulation(const HamTriangulation& t, int limit_bb = 64);

}  // namespace outerdom
