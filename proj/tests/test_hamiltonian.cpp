// Two-sided triangulations: construction, 2-chord structure, the
// cycle-plus-2-chords spanning graph, cycle search and re-embedding, and
// the full domination pipeline.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "outerdom/domination.hpp"
#include "outerdom/generators.hpp"
#include "outerdom/hamiltonian.hpp"
#include "outerdom/reductions.hpp"

using namespace outerdom;

namespace {

using Chords = std::vector<Chord>;

Errc thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Ok;
}

std::set<std::pair<int, int>> edge_set(const SimpleGraph& g) {
  std::set<std::pair<int, int>> out;
  for (const auto& e : g.edges)
    out.insert({std::min(e.first, e.second), std::max(e.first, e.second)});
  return out;
}

// Edges of t relabeled through a cycle (position i carries label
// cycle[i-1]) — for checking that re-embeddings describe the same graph.
std::set<std::pair<int, int>> relabeled_edges(const HamTriangulation& t,
                                              const std::vector<int>& cycle) {
  std::set<std::pair<int, int>> out;
  for (const auto& e : to_simple(t).edges) {
    int u = cycle[e.first - 1], v = cycle[e.second - 1];
    out.insert({std::min(u, v), std::max(u, v)});
  }
  return out;
}

}  // namespace

TEST_CASE("construction validates both sides and their disjointness") {
  auto oct = build_ht(6, {{1, 3}, {1, 5}, {3, 5}}, {{2, 4}, {2, 6}, {4, 6}});
  CHECK(oct.n == 6);
  CHECK(to_simple(oct).edges.size() == 12);

  CHECK(thrown_code([] {
          build_ht(6, {{1, 3}, {1, 5}, {3, 5}}, {{1, 3}, {1, 4}, {1, 5}});
        }) == Errc::SharedChord);
  CHECK(thrown_code([] {
          build_ht(6, {{1, 3}, {1, 4}, {2, 6}}, {{2, 4}, {2, 5}, {4, 6}});
        }) == Errc::CrossingChords);
  CHECK(thrown_code([] {
          build_ht(6, {{1, 3}, {1, 5}}, {{2, 4}, {2, 6}, {4, 6}});
        }) == Errc::CountMismatch);
  // Side errors say which side broke.
  try {
    build_ht(6, {{1, 3}, {1, 5}}, {{2, 4}, {2, 6}, {4, 6}});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("inner side invalid") != std::string::npos);
  }
  CHECK(std::string(side_name(Side::Inner)) == "inner");
  CHECK(std::string(side_name(Side::Outer)) == "outer");
}

TEST_CASE("each side is the expected outerplane graph") {
  auto oct = named_ht("octahedron");
  auto inner = side_graph(oct, Side::Inner);
  CHECK(inner.n == 6);
  CHECK(inner.chords == named_mop("hexagon_fan3").chords);
  auto outer = side_graph(oct, Side::Outer);
  CHECK(outer.chords == Chords{{2, 4}, {2, 6}, {4, 6}});
}

TEST_CASE("2-chords and side 2-vertices biject, middles matching") {
  auto oct = named_ht("octahedron");
  auto ri = side_report(oct, Side::Inner);
  CHECK(ri.chords2.size() == 3);
  CHECK(ri.vertices2 == std::vector<int>{2, 4, 6});
  CHECK(ri.bijection);
  auto ro = side_report(oct, Side::Outer);
  CHECK(ro.chords2.size() == 3);
  CHECK(ro.vertices2 == std::vector<int>{1, 3, 5});
  CHECK(ro.bijection);
  CHECK(two_vertices(oct) == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK_FALSE(good_cycle_check(oct));

  for (int n = 5; n <= 6; ++n) {
    enumerate_hts(n, [](const HamTriangulation& t) {
      for (Side side : {Side::Inner, Side::Outer}) {
        auto rep = side_report(t, side);
        CHECK(rep.bijection);
        CHECK(rep.chords2 == two_chords(t, side));
        CHECK(rep.vertices2 == two_vertices_side(t, side));
      }
    });
  }
}

TEST_CASE("the 2-chord spanning graph is dominated into the full graph") {
  auto oct = named_ht("octahedron");
  auto hab = habo_graph(oct);
  CHECK(hab.c_int == 3);
  CHECK(hab.c_ext == 3);
  CHECK(hab.c() == 6);
  CHECK(hab.graph.edges.size() == 12);  // here every edge is cycle or 2-chord

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto t = random_ht(10 + (int)seed, seed);
    auto h = habo_graph(t);
    CHECK(h.c_int == (int)two_chords(t, Side::Inner).size());
    CHECK(h.c_ext == (int)two_chords(t, Side::Outer).size());
    auto full = to_simple(t);
    auto full_edges = edge_set(full);
    for (const auto& e : h.graph.edges) {
      CHECK(full_edges.count({std::min(e.first, e.second), std::max(e.first, e.second)}) ==
            1);
    }
    auto set = gamma_exact_bb(h.graph, 32);
    CHECK(is_dominating(h.graph, set.vertices));
    CHECK(is_dominating(full, set.vertices));
  }
}

TEST_CASE("re-embedding reconstructs the split deterministically") {
  auto oct = named_ht("octahedron");
  auto e = embed_with_cycle(6, to_simple(oct).edges, {1, 2, 3, 4, 5, 6});
  CHECK(e.inner == oct.inner);
  CHECK(e.outer == oct.outer);

  auto seven = named_ht("seven_vertex_fig1");
  auto e7 = embed_with_cycle(7, to_simple(seven).edges, {1, 2, 3, 4, 5, 6, 7});
  CHECK(e7.inner == seven.inner);
  CHECK(e7.outer == seven.outer);

  // A different genuine Hamilton cycle of the same graph re-embeds to
  // the same underlying edges.
  std::vector<int> alt = {1, 3, 2, 4, 5, 6, 7};
  auto ealt = embed_with_cycle(7, to_simple(seven).edges, alt);
  CHECK(relabeled_edges(ealt, alt) == edge_set(to_simple(seven)));
}

TEST_CASE("re-embedding rejects wrong inputs") {
  auto seven = named_ht("seven_vertex_fig1");
  auto edges = to_simple(seven).edges;

  auto short_edges = edges;
  short_edges.pop_back();
  CHECK(thrown_code([&] { embed_with_cycle(7, short_edges, {1, 2, 3, 4, 5, 6, 7}); }) ==
        Errc::NotTriangulation);

  CHECK(thrown_code([&] { embed_with_cycle(7, edges, {1, 4, 2, 3, 5, 6, 7}); }) ==
        Errc::NotHamiltonCycle);  // 3-5 is not an edge
  CHECK(thrown_code([&] { embed_with_cycle(7, edges, {1, 2, 3, 4, 5, 6}); }) ==
        Errc::NotHamiltonCycle);
  CHECK(thrown_code([&] { embed_with_cycle(7, edges, {1, 2, 3, 4, 5, 6, 6}); }) ==
        Errc::NotHamiltonCycle);

  // Three pairwise-crossing chords cannot keep the cycle plane.
  std::vector<std::pair<int, int>> tangled = {{1, 2}, {2, 3}, {3, 4}, {4, 5},
                                              {5, 6}, {1, 6}, {1, 4}, {2, 5},
                                              {3, 6}, {1, 3}, {3, 5}, {1, 5}};
  CHECK(thrown_code([&] { embed_with_cycle(6, tangled, {1, 2, 3, 4, 5, 6}); }) ==
        Errc::ConflictGraphNotBipartite);
}

TEST_CASE("hamilton cycle search is deterministic and bounded") {
  auto oct = to_simple(named_ht("octahedron"));
  CHECK(find_hamilton_cycle(oct) == std::vector<int>{1, 2, 3, 4, 5, 6});

  auto cyc = find_hamilton_cycle(to_simple(named_ht("seven_vertex_fig1")));
  REQUIRE(cyc.size() == 7);
  CHECK(cyc[0] == 1);
  CHECK(cyc[1] < cyc.back());  // reflections skipped

  CHECK(thrown_code([] {
          (void)find_hamilton_cycle(build_graph(4, {{1, 2}, {1, 3}, {1, 4}}));
        }) == Errc::NoHamiltonCycle);
  CHECK(thrown_code([] {
          (void)find_hamilton_cycle(to_simple(random_mop(20, 3u)), 16);
        }) == Errc::TooLarge);
}

TEST_CASE("good-cycle search walks cycles until the 2-vertex test passes") {
  auto seven = named_ht("seven_vertex_fig1");
  auto gc = find_good_cycle(to_simple(seven));
  CHECK(gc.cycles_tried == 3);
  CHECK(gc.cycle == std::vector<int>{1, 2, 3, 4, 6, 7, 5});
  CHECK(gc.ht.inner == Chords{{1, 3}, {1, 4}, {4, 7}, {5, 7}});
  CHECK(gc.ht.outer == Chords{{1, 6}, {2, 4}, {2, 5}, {2, 6}});
  CHECK(good_cycle_check(gc.ht));
  CHECK(relabeled_edges(gc.ht, gc.cycle) == edge_set(to_simple(seven)));

  auto oct = find_good_cycle(to_simple(named_ht("octahedron")));
  CHECK(oct.cycles_tried == 2);
  CHECK(oct.cycle == std::vector<int>{1, 2, 3, 4, 6, 5});
  CHECK(good_cycle_check(oct.ht));

  // The tetrahedron makes every vertex a 2-vertex on every cycle.
  CHECK(thrown_code([] {
          (void)find_good_cycle(to_simple(build_ht(4, {{1, 3}}, {{2, 4}})));
        }) == Errc::NotFound);
}

TEST_CASE("pipeline: few-chord instances solve the spanning graph exactly") {
  auto rep = dominate_triangulation(named_ht("octahedron"));
  CHECK(rep.n == 6);
  CHECK(rep.branch == PipelineBranch::HaboExact);
  CHECK(std::string(pipeline_branch_name(rep.branch)) == "habo-exact");
  CHECK(rep.set.size == 2);
  CHECK(rep.c == 6);
  CHECK(rep.c_int == 3);
  CHECK(rep.c_ext == 3);
  REQUIRE(rep.habo_bound.has_value());
  CHECK(*rep.habo_bound == 2);
  CHECK(rep.bound_5n16 == 1);
  CHECK_FALSE(rep.within_bound);  // tiny n: reported, not enforced
  CHECK_FALSE(rep.enforced);
  CHECK(rep.warnings.empty());
  CHECK(rep.mitigations.empty());
  CHECK(is_dominating(to_simple(named_ht("octahedron")), rep.set.vertices));

  auto rep7 = dominate_triangulation(named_ht("seven_vertex_fig1"));
  CHECK(rep7.branch == PipelineBranch::HaboExact);
  CHECK(rep7.set.size == 2);
  CHECK(rep7.c == 5);
  CHECK(rep7.c_int == 2);
  CHECK(rep7.c_ext == 3);
  CHECK(*rep7.habo_bound == 2);
  CHECK(rep7.bound_5n16 == 2);
  CHECK(rep7.within_bound);
  CHECK_FALSE(rep7.enforced);
  CHECK(is_dominating(to_simple(named_ht("seven_vertex_fig1")), rep7.set.vertices));
}

TEST_CASE("pipeline: chord-rich instances run the side engine with a trace") {
  auto t = random_ht(32, 6u);
  REQUIRE(good_cycle_check(t));
  REQUIRE(2 * habo_graph(t).c() < t.n + 1);
  auto rep = dominate_triangulation(t);
  CHECK(rep.branch == PipelineBranch::SideEngine);
  CHECK(rep.side == Side::Inner);
  CHECK(rep.set.size == 8);
  CHECK(rep.c == 14);
  CHECK(rep.bound_5n16 == 10);
  CHECK(rep.within_bound);
  CHECK(rep.enforced);
  REQUIRE(rep.trace.has_value());
  CHECK(verify_trace(*rep.trace).ok);
  CHECK(is_dominating(to_simple(t), rep.set.vertices));
}

TEST_CASE("pipeline: branch names cover the dominating-vertex shortcut") {
  CHECK(std::string(pipeline_branch_name(PipelineBranch::DominatingVertex)) ==
        "dominating-vertex");
  CHECK(std::string(pipeline_branch_name(PipelineBranch::SideEngine)) == "side-engine");
  // A wheel-like triangulation: vertex 1 sees everything.
  auto t = build_ht(6, {{1, 3}, {1, 4}, {1, 5}}, {{2, 4}, {2, 6}, {4, 6}});
  auto rep = dominate_triangulation(t);
  CHECK(rep.branch == PipelineBranch::DominatingVertex);
  CHECK(rep.set.size == 1);
  CHECK(rep.set.vertices == std::vector<int>{1});
  CHECK(is_dominating(to_simple(t), rep.set.vertices));
}
