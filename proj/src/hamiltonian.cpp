#include "outerdom/hamiltonian.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace outerdom {

const char* side_name(Side s) { return s == Side::Inner ? "inner" : "outer"; }

HamTriangulation build_ht(int n, std::vector<Chord> inner, std::vector<Chord> outer) {
  MopGraph gi, go;
  try {
    gi = build_mop(n, std::move(inner));
  } catch (const Error& e) {
    fail(e.code(), std::string("inner side invalid: ") + e.what(), e.detail());
  }
  try {
    go = build_mop(n, std::move(outer));
  } catch (const Error& e) {
    fail(e.code(), std::string("outer side invalid: ") + e.what(), e.detail());
  }
  for (const auto& c : gi.chords)
    if (go.has_chord(c.first, c.second))
      fail(Errc::SharedChord, "chord {" + std::to_string(c.first) + "," +
                                  std::to_string(c.second) + "} is drawn on both sides");
  HamTriangulation t;
  t.n = n;
  t.inner = gi.chords;
  t.outer = go.chords;
  return t;
}

MopGraph side_graph(const HamTriangulation& t, Side side) {
  return build_mop(t.n, side == Side::Inner ? t.inner : t.outer);
}

SimpleGraph to_simple(const HamTriangulation& t) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= t.n; ++v) edges.push_back({v, next_pos(t.n, v)});
  for (const auto& c : t.inner) edges.push_back(c);
  for (const auto& c : t.outer) edges.push_back(c);
  return build_graph(t.n, edges);
}

std::vector<Chord> two_chords(const HamTriangulation& t, Side side) {
  std::vector<Chord> out;
  for (const auto& c : side == Side::Inner ? t.inner : t.outer)
    if (seg_len(t.n, c.first, c.second) == 2 || seg_len(t.n, c.second, c.first) == 2)
      out.push_back(c);
  return out;
}

std::vector<int> two_vertices_side(const HamTriangulation& t, Side side) {
  return degree_two_vertices(side_graph(t, side));
}

std::vector<int> two_vertices(const HamTriangulation& t) {
  std::vector<int> out = two_vertices_side(t, Side::Inner);
  for (int v : two_vertices_side(t, Side::Outer)) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SideReport side_report(const HamTriangulation& t, Side side) {
  SideReport rep;
  rep.side = side;
  rep.chords2 = two_chords(t, side);
  rep.vertices2 = two_vertices_side(t, side);
  if (t.n >= 5) {
    std::vector<int> middles;
    for (const auto& c : rep.chords2)
      middles.push_back(seg_len(t.n, c.first, c.second) == 2 ? pos_add(t.n, c.first, 1)
                                                             : pos_add(t.n, c.second, 1));
    std::sort(middles.begin(), middles.end());
    rep.bijection = middles == rep.vertices2;
  } else {
    rep.bijection = true;  // two middles per chord at n <= 4; exempt
  }
  return rep;
}

HaboGraph habo_graph(const HamTriangulation& t) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= t.n; ++v) edges.push_back({v, next_pos(t.n, v)});
  HaboGraph k;
  for (const auto& c : two_chords(t, Side::Inner)) {
    edges.push_back(c);
    ++k.c_int;
  }
  for (const auto& c : two_chords(t, Side::Outer)) {
    edges.push_back(c);
    ++k.c_ext;
  }
  k.graph = build_graph(t.n, edges);
  return k;
}

bool good_cycle_check(const HamTriangulation& t) {
  std::vector<char> is2(t.n + 1, 0);
  for (int v : two_vertices(t)) is2[v] = 1;
  for (int v = 1; v <= t.n; ++v)
    if (is2[v] && is2[next_pos(t.n, v)] && is2[pos_add(t.n, v, 2)]) return false;
  return true;
}

HamTriangulation embed_with_cycle(int n, const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<int>& cycle) {
  SimpleGraph g = build_graph(n, edges);
  if (static_cast<int>(g.edges.size()) != 3 * n - 6)
    fail(Errc::NotTriangulation, "expected " + std::to_string(3 * n - 6) + " edges, got " +
                                     std::to_string(g.edges.size()));
  if (static_cast<int>(cycle.size()) != n)
    fail(Errc::NotHamiltonCycle, "cycle must list all " + std::to_string(n) + " vertices");
  std::vector<int> pos(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    int v = cycle[i];
    if (v < 1 || v > n || pos[v]) fail(Errc::NotHamiltonCycle, "cycle is not a permutation");
    pos[v] = i + 1;
  }
  for (int i = 0; i < n; ++i) {
    int a = cycle[i], b = cycle[(i + 1) % n];
    bool found = std::binary_search(g.adj[a].begin(), g.adj[a].end(), b);
    if (!found)
      fail(Errc::NotHamiltonCycle,
           "cycle edge {" + std::to_string(a) + "," + std::to_string(b) + "} is not in the graph");
  }

  std::vector<Chord> chords;
  for (const auto& e : g.edges) {
    int pu = pos[e.first], pv = pos[e.second];
    if (pu > pv) std::swap(pu, pv);
    if (pv - pu == 1 || (pu == 1 && pv == n)) continue;
    chords.push_back({pu, pv});
  }
  std::sort(chords.begin(), chords.end());

  // 2-color the crossing graph; the least chord of each component goes
  // inner so the split is deterministic.
  int m = static_cast<int>(chords.size());
  std::vector<int> color(m, -1);
  for (int i = 0; i < m; ++i) {
    if (color[i] != -1) continue;
    color[i] = 0;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < m; ++v) {
        if (v == u || !chords_cross(n, chords[u].first, chords[u].second, chords[v].first,
                                    chords[v].second))
          continue;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          fail(Errc::ConflictGraphNotBipartite,
               "no plane embedding keeps this cycle as a closed curve");
        }
      }
    }
  }
  std::vector<Chord> inner, outer;
  for (int i = 0; i < m; ++i) (color[i] == 0 ? inner : outer).push_back(chords[i]);
  return build_ht(n, std::move(inner), std::move(outer));
}

namespace {

// Calls cb for each Hamilton cycle (as a vertex list starting at 1,
// second vertex below the last to skip reflections) in backtracking
// order with ascending neighbor choice; cb returns false to stop.
void enumerate_hamilton_cycles(const SimpleGraph& g,
                               const std::function<bool(const std::vector<int>&)>& cb) {
  int n = g.n;
  std::vector<int> path{1};
  std::vector<char> used(n + 1, 0);
  used[1] = 1;
  bool stop = false;
  std::function<void()> rec = [&]() {
    if (stop) return;
    if (static_cast<int>(path.size()) == n) {
      if (path[1] < path[n - 1] &&
          std::binary_search(g.adj[path.back()].begin(), g.adj[path.back()].end(), 1))
        stop = !cb(path);
      return;
    }
    for (int w : g.adj[path.back()]) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      rec();
      path.pop_back();
      used[w] = 0;
      if (stop) return;
    }
  };
  if (n >= 3) rec();
}

}  // namespace

std::vector<int> find_hamilton_cycle(const SimpleGraph& g, int limit) {
  if (g.n > limit)
    fail(Errc::TooLarge, "hamilton cycle search capped at n = " + std::to_string(limit));
  std::vector<int> found;
  enumerate_hamilton_cycles(g, [&](const std::vector<int>& cyc) {
    found = cyc;
    return false;
  });
  if (found.empty()) fail(Errc::NoHamiltonCycle, "graph has no Hamilton cycle");
  return found;
}

GoodCycleResult find_good_cycle(const SimpleGraph& g, int limit) {
  if (g.n > limit)
    fail(Errc::TooLarge, "good cycle search capped at n = " + std::to_string(limit));
  GoodCycleResult res;
  bool any_cycle = false, found = false;
  std::vector<std::pair<int, int>> edges = g.edges;
  enumerate_hamilton_cycles(g, [&](const std::vector<int>& cyc) {
    any_cycle = true;
    ++res.cycles_tried;
    try {
      HamTriangulation ht = embed_with_cycle(g.n, edges, cyc);
      if (good_cycle_check(ht)) {
        res.ht = std::move(ht);
        res.cycle = cyc;
        found = true;
        return false;
      }
    } catch (const Error&) {
      // cycle admits no planar split; keep searching
    }
    return true;
  });
  if (found) return res;
  if (!any_cycle) fail(Errc::NoHamiltonCycle, "graph has no Hamilton cycle");
  fail(Errc::NotFound, "no Hamilton cycle avoids three consecutive 2-vertices (" +
                           std::to_string(res.cycles_tried) + " cycles examined)");
}

const char* pipeline_branch_name(PipelineBranch b) {
  switch (b) {
    case PipelineBranch::DominatingVertex: return "dominating-vertex";
    case PipelineBranch::HaboExact: return "habo-exact";
    case PipelineBranch::SideEngine: return "side-engine";
  }
  return "unknown";
}

PipelineReport dominate_triangulation(const HamTriangulation& t, int limit_bb) {
  PipelineReport rep;
  rep.n = t.n;
  HaboGraph habo = habo_graph(t);
  rep.c_int = habo.c_int;
  rep.c_ext = habo.c_ext;
  rep.c = habo.c();
  rep.bound_5n16 = 5 * t.n / 16;
  rep.enforced = t.n >= 23;

  SimpleGraph full = to_simple(t);
  std::uint64_t fp = graph_fingerprint(full);

  if (2 * rep.c <= t.n && 4 * std::min(rep.c_int, rep.c_ext) > t.n)
    rep.warnings.push_back("pigeonhole miss: c <= n/2 yet neither side has <= n/4 2-chords");

  auto accept = [&](std::vector<int> verts, PipelineBranch br) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (!is_dominating(full, verts))
      fail(Errc::Internal, "pipeline produced a non-dominating set");
    rep.branch = br;
    rep.set = DominatingSet{verts, static_cast<int>(verts.size()), fp};
    rep.within_bound = rep.set.size <= rep.bound_5n16;
  };

  if (auto dv = dominating_vertex(full)) {
    accept({*dv}, PipelineBranch::DominatingVertex);
    return rep;
  }

  bool exact_branch = 2 * rep.c >= t.n + 1;
  auto side_qualifies = [&](Side s) {
    return 4 * (s == Side::Inner ? rep.c_int : rep.c_ext) <= t.n;
  };

  if (exact_branch) {
    if (t.n <= limit_bb) {
      DominatingSet ks = gamma_exact_bb(habo.graph, limit_bb);
      rep.habo_bound = static_cast<int>(ceil_div(2 * t.n, 7));
      if (ks.size > *rep.habo_bound)
        rep.warnings.push_back("2-chord spanning graph needs " + std::to_string(ks.size) +
                               " > ceil(2n/7) = " + std::to_string(*rep.habo_bound));
      accept(ks.vertices, PipelineBranch::HaboExact);
      if (!rep.enforced || rep.within_bound) return rep;
      rep.warnings.push_back("exact 2-chord branch missed floor(5n/16); trying side fallbacks");
    } else if (side_qualifies(Side::Inner) || side_qualifies(Side::Outer)) {
      rep.warnings.push_back(
          "2-chord count qualifies for the exact branch but n exceeds the solver limit; "
          "using the side engine");
    } else {
      fail(Errc::SolverTooLarge,
           "exact branch needed (c = " + std::to_string(rep.c) + " >= (n+1)/2) but n = " +
               std::to_string(t.n) + " exceeds the solver limit " + std::to_string(limit_bb));
    }
  }

  Side chosen = rep.c_int <= rep.c_ext ? Side::Inner : Side::Outer;
  Side other = chosen == Side::Inner ? Side::Outer : Side::Inner;
  MopGraph chosen_mop = side_graph(t, chosen);

  auto engine_attempt = [&](Side s, bool as_mitigation, const char* label) {
    MopGraph m = s == chosen ? chosen_mop : side_graph(t, s);
    try {
      MopResult mr = dominate_mop(m);
      if (as_mitigation) rep.mitigations.push_back(label);
      accept(mr.set.vertices, PipelineBranch::SideEngine);
      rep.side = s;
      rep.trace = std::move(mr.trace);
      return true;
    } catch (const Error& e) {
      rep.warnings.push_back(std::string(label) + " failed: " + e.what());
      return false;
    }
  };
  auto exact_side_attempt = [&](Side s, const char* label) {
    MopGraph m = s == chosen ? chosen_mop : side_graph(t, s);
    try {
      DominatingSet ds = gamma_mop_dp(m);
      rep.mitigations.push_back(label);
      accept(ds.vertices, PipelineBranch::SideEngine);
      rep.side = s;
      rep.trace.reset();
      return true;
    } catch (const Error& e) {
      rep.warnings.push_back(std::string(label) + " failed: " + e.what());
      return false;
    }
  };

  bool have = engine_attempt(chosen, false, "engine on the chosen side");
  if (have && (!rep.enforced || rep.within_bound)) return rep;

  if (rep.enforced || !have) {
    if (side_qualifies(other) && engine_attempt(other, true, "engine on the other side") &&
        rep.within_bound)
      return rep;
    if (exact_side_attempt(chosen, "exact solve of the chosen side") &&
        (!rep.enforced || rep.within_bound))
      return rep;
    if (exact_side_attempt(other, "exact solve of the other side") &&
        (!rep.enforced || rep.within_bound))
      return rep;
    if (t.n <= limit_bb) {
      try {
        DominatingSet ds = gamma_exact_bb(full, limit_bb);
        rep.mitigations.push_back("exact solve of the full graph");
        accept(ds.vertices, PipelineBranch::SideEngine);
        rep.trace.reset();
        if (!rep.enforced || rep.within_bound) return rep;
      } catch (const Error& e) {
        rep.warnings.push_back(std::string("exact solve of the full graph failed: ") + e.what());
      }
    }
  }

  if (rep.enforced && !rep.within_bound) {
    nlohmann::json detail;
    detail["n"] = rep.n;
    detail["c_int"] = rep.c_int;
    detail["c_ext"] = rep.c_ext;
    detail["bound"] = rep.bound_5n16;
    detail["size"] = rep.set.size;
    detail["set"] = rep.set.vertices;
    detail["warnings"] = rep.warnings;
    detail["mitigations"] = rep.mitigations;
    nlohmann::json inner = nlohmann::json::array(), outer = nlohmann::json::array();
    for (const auto& c : t.inner) inner.push_back({c.first, c.second});
    for (const auto& c : t.outer) outer.push_back({c.first, c.second});
    detail["inner"] = inner;
    detail["outer"] = outer;
    fail(Errc::BoundViolated, "no pipeline branch achieves floor(5n/16)", detail.dump());
  }
  if (rep.set.vertices.empty()) fail(Errc::Internal, "pipeline produced no result");
  return rep;
}

}  // namespace outerdom
