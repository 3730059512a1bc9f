#include "outerdom/domination.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <string>

namespace outerdom {

bool SimpleGraph::has_edge(int a, int b) const {
  if (a < 1 || a > n || b < 1 || b > n || a == b) return false;
  return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

SimpleGraph build_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) fail(Errc::BadIndex, "graph needs n >= 1");
  for (auto& e : edges) {
    if (e.first < 1 || e.first > n || e.second < 1 || e.second > n)
      fail(Errc::BadIndex, "edge endpoint out of 1.." + std::to_string(n));
    if (e.first == e.second) fail(Errc::NotSimple, "loop edge");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(Errc::NotSimple, "duplicate edge");
  SimpleGraph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj.assign(n + 1, {});
  for (const auto& e : g.edges) {
    g.adj[e.first].push_back(e.second);
    g.adj[e.second].push_back(e.first);
  }
  for (int v = 1; v <= n; ++v) std::sort(g.adj[v].begin(), g.adj[v].end());
  return g;
}

SimpleGraph to_simple(const MopGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= g.n; ++v) {
    int w = next_pos(g.n, v);
    edges.emplace_back(std::min(v, w), std::max(v, w));
  }
  for (const auto& c : g.chords) edges.emplace_back(c.first, c.second);
  return build_graph(g.n, std::move(edges));
}

std::uint64_t graph_fingerprint(const SimpleGraph& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(g.n));
  for (const auto& e : g.edges) {
    mix(static_cast<std::uint64_t>(e.first));
    mix(static_cast<std::uint64_t>(e.second));
  }
  return h;
}

bool is_dominating(const SimpleGraph& g, const std::vector<int>& vertices) {
  std::vector<char> covered(g.n + 1, 0);
  for (int v : vertices) {
    if (v < 1 || v > g.n) return false;
    covered[v] = 1;
    for (int w : g.adj[v]) covered[w] = 1;
  }
  for (int v = 1; v <= g.n; ++v)
    if (!covered[v]) return false;
  return true;
}

std::optional<int> dominating_vertex(const SimpleGraph& g) {
  for (int v = 1; v <= g.n; ++v)
    if (g.degree(v) == g.n - 1) return v;
  return std::nullopt;
}

namespace {

struct BbSearch {
  int n = 0;
  std::uint64_t all = 0;
  int maxdeg1 = 1;  // max closed-neighborhood size
  std::vector<std::uint64_t> closed;
  std::vector<int> best;
  std::vector<int> cur;

  int lower_bound(std::uint64_t covered) const {
    std::uint64_t uncov = all & ~covered;
    int lb1 = (std::popcount(uncov) + maxdeg1 - 1) / maxdeg1;
    // Uncovered vertices with pairwise disjoint closed neighborhoods need
    // pairwise distinct dominators.
    int lb2 = 0;
    std::uint64_t used = 0;
    for (int v = 1; v <= n; ++v)
      if ((uncov >> (v - 1)) & 1) {
        if ((closed[v] & used) == 0) {
          ++lb2;
          used |= closed[v];
        }
      }
    return std::max(lb1, lb2);
  }

  void rec(std::uint64_t covered) {
    if (covered == all) {
      if (cur.size() < best.size()) best = cur;
      return;
    }
    if (static_cast<int>(cur.size()) + lower_bound(covered) >=
        static_cast<int>(best.size()))
      return;
    // Most constrained uncovered vertex: fewest dominator candidates.
    std::uint64_t uncov = all & ~covered;
    int pick = 0, pick_cands = INT_MAX;
    for (int v = 1; v <= n; ++v)
      if ((uncov >> (v - 1)) & 1) {
        int c = std::popcount(closed[v]);
        if (c < pick_cands) {
          pick_cands = c;
          pick = v;
        }
      }
    // Candidates by fresh coverage descending, index ascending on ties.
    std::array<std::pair<int, int>, 64> cands;
    int m = 0;
    for (int u = 1; u <= n; ++u)
      if ((closed[pick] >> (u - 1)) & 1)
        cands[m++] = {-std::popcount(closed[u] & ~covered), u};
    std::sort(cands.begin(), cands.begin() + m);
    for (int i = 0; i < m; ++i) {
      int u = cands[i].second;
      cur.push_back(u);
      rec(covered | closed[u]);
      cur.pop_back();
    }
  }
};

}  // namespace

DominatingSet gamma_exact_bb(const SimpleGraph& g, int limit) {
  if (limit > 64) limit = 64;
  if (g.n > limit)
    fail(Errc::SolverTooLarge, "exact solver limited to n <= " + std::to_string(limit) +
                                   ", got n=" + std::to_string(g.n));
  BbSearch s;
  s.n = g.n;
  s.all = g.n == 64 ? ~0ull : ((1ull << g.n) - 1);
  s.closed.assign(g.n + 1, 0);
  for (int v = 1; v <= g.n; ++v) {
    std::uint64_t m = 1ull << (v - 1);
    for (int w : g.adj[v]) m |= 1ull << (w - 1);
    s.closed[v] = m;
    s.maxdeg1 = std::max(s.maxdeg1, std::popcount(m));
  }
  // Greedy gives the initial incumbent.
  {
    std::uint64_t covered = 0;
    while (covered != s.all) {
      int pick = 0, gain = -1;
      for (int v = 1; v <= g.n; ++v) {
        int fresh = std::popcount(s.closed[v] & ~covered);
        if (fresh > gain) {
          gain = fresh;
          pick = v;
        }
      }
      s.best.push_back(pick);
      covered |= s.closed[pick];
    }
  }
  s.rec(0);
  std::sort(s.best.begin(), s.best.end());
  if (!is_dominating(g, s.best)) fail(Errc::Internal, "solver produced a non-dominating set");
  DominatingSet out;
  out.vertices = std::move(s.best);
  out.size = static_cast<int>(out.vertices.size());
  out.graph_id = graph_fingerprint(g);
  return out;
}

namespace {

// Vertex states in the tree DP: chosen, or outside with/without a chosen
// neighbor strictly inside the already-processed part.
constexpr int kIn = 0;
constexpr int kOutDom = 1;
constexpr int kOutPend = 2;

constexpr int kInf = INT_MAX / 4;

struct Cell {
  int cost = kInf;
  std::vector<int> set;
};

// Table over an oriented dual edge {u,v} with u < v: entry [su*3+sv]
// covers the subtree strictly below the edge. Costs and sets count only
// vertices private to that subtree (never u, v themselves).
using Table = std::array<Cell, 9>;

void relax(Cell& c, int cost, std::vector<int> set) {
  std::sort(set.begin(), set.end());
  if (cost < c.cost || (cost == c.cost && set < c.set)) {
    c.cost = cost;
    c.set = std::move(set);
  }
}

Table empty_table() {
  Table t;
  for (int su : {kIn, kOutPend})
    for (int sv : {kIn, kOutPend}) t[su * 3 + sv].cost = 0;
  return t;
}

bool vertex_in(int s) { return s == kIn; }
bool priv_dom(int s) { return s == kOutDom; }
bool same_side(int a, int b) { return vertex_in(a) == vertex_in(b); }

struct DpRun {
  const InnerDual* dual = nullptr;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;

  // Third vertex of face f outside pair {x,y}.
  static int third(const std::array<int, 3>& f, int x, int y) {
    for (int v : f)
      if (v != x && v != y) return v;
    fail(Errc::Internal, "face does not contain its parent edge");
  }

  static std::pair<int, int> shared_pair(const std::array<int, 3>& a,
                                         const std::array<int, 3>& b) {
    std::array<int, 2> out{};
    int m = 0;
    for (int x : a)
      for (int y : b)
        if (x == y && m < 2) out[m++] = x;
    if (m != 2) fail(Errc::Internal, "dual neighbors share != 2 vertices");
    return {std::min(out[0], out[1]), std::max(out[0], out[1])};
  }

  // Table of the child subtree hanging below face f on edge (u,v), u < v;
  // empty when no child face shares that edge.
  Table edge_table(int f, int u, int v) {
    for (int ch : children[f]) {
      auto p = shared_pair(dual->faces[f], dual->faces[ch]);
      if (p == std::make_pair(u, v)) return subtree_table(ch, u, v);
    }
    return empty_table();
  }

  // Message over the parent edge (u,v) of face f.
  Table subtree_table(int f, int u, int v) {
    const auto& face = dual->faces[f];
    int z = third(face, u, v);
    int a1 = std::min(u, z), b1 = std::max(u, z);
    int a2 = std::min(v, z), b2 = std::max(v, z);
    Table tu = edge_table(f, a1, b1);
    Table tv = edge_table(f, a2, b2);
    Table out;
    for (int i1 = 0; i1 < 9; ++i1) {
      if (tu[i1].cost >= kInf) continue;
      int s1a = i1 / 3, s1b = i1 % 3;
      int s_u = (u == a1) ? s1a : s1b;
      int s1z = (z == a1) ? s1a : s1b;
      for (int i2 = 0; i2 < 9; ++i2) {
        if (tv[i2].cost >= kInf) continue;
        int s2a = i2 / 3, s2b = i2 % 3;
        int s_v = (v == a2) ? s2a : s2b;
        int s2z = (z == a2) ? s2a : s2b;
        if (!same_side(s1z, s2z)) continue;
        bool z_in = vertex_in(s1z);
        // z is forgotten here: it must be chosen or dominated. Both u and
        // v are face neighbors of z, and every other neighbor of z is
        // private to one of the two subtrees.
        bool z_dom = z_in || priv_dom(s1z) || priv_dom(s2z) || vertex_in(s_u) ||
                     vertex_in(s_v);
        if (!z_dom) continue;
        int cost = tu[i1].cost + tv[i2].cost + (z_in ? 1 : 0);
        int su_up = vertex_in(s_u) ? kIn : ((priv_dom(s_u) || z_in) ? kOutDom : kOutPend);
        int sv_up = vertex_in(s_v) ? kIn : ((priv_dom(s_v) || z_in) ? kOutDom : kOutPend);
        std::vector<int> set = tu[i1].set;
        set.insert(set.end(), tv[i2].set.begin(), tv[i2].set.end());
        if (z_in) set.push_back(z);
        relax(out[su_up * 3 + sv_up], cost, std::move(set));
      }
    }
    return out;
  }
};

}  // namespace

DominatingSet gamma_mop_dp(const MopGraph& g) {
  InnerDual dual = inner_dual(g);
  if (!dual.is_tree) fail(Errc::Internal, "inner dual is not a tree");
  int m = static_cast<int>(dual.faces.size());
  DpRun run;
  run.dual = &dual;
  run.parent.assign(m, -1);
  run.children.assign(m, {});
  std::vector<int> order{0};
  std::vector<char> seen(m, 0);
  seen[0] = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    int f = order[i];
    for (int ch : dual.adj[f])
      if (!seen[ch]) {
        seen[ch] = 1;
        run.parent[ch] = f;
        run.children[f].push_back(ch);
        order.push_back(ch);
      }
  }

  const auto& root = dual.faces[0];
  int a = root[0], b = root[1], c = root[2];
  Table tab = run.edge_table(0, a, b);
  Table tbc = run.edge_table(0, b, c);
  Table tac = run.edge_table(0, a, c);
  Cell best;
  for (int i1 = 0; i1 < 9; ++i1) {
    if (tab[i1].cost >= kInf) continue;
    int sa1 = i1 / 3, sb1 = i1 % 3;
    for (int i2 = 0; i2 < 9; ++i2) {
      if (tbc[i2].cost >= kInf) continue;
      int sb2 = i2 / 3, sc2 = i2 % 3;
      if (!same_side(sb1, sb2)) continue;
      for (int i3 = 0; i3 < 9; ++i3) {
        if (tac[i3].cost >= kInf) continue;
        int sa3 = i3 / 3, sc3 = i3 % 3;
        if (!same_side(sa1, sa3) || !same_side(sc2, sc3)) continue;
        bool a_in = vertex_in(sa1), b_in = vertex_in(sb1), c_in = vertex_in(sc2);
        bool a_ok = a_in || priv_dom(sa1) || priv_dom(sa3) || b_in || c_in;
        bool b_ok = b_in || priv_dom(sb1) || priv_dom(sb2) || a_in || c_in;
        bool c_ok = c_in || priv_dom(sc2) || priv_dom(sc3) || a_in || b_in;
        if (!a_ok || !b_ok || !c_ok) continue;
        int cost = tab[i1].cost + tbc[i2].cost + tac[i3].cost + (a_in ? 1 : 0) +
                   (b_in ? 1 : 0) + (c_in ? 1 : 0);
        std::vector<int> set = tab[i1].set;
        set.insert(set.end(), tbc[i2].set.begin(), tbc[i2].set.end());
        set.insert(set.end(), tac[i3].set.begin(), tac[i3].set.end());
        if (a_in) set.push_back(a);
        if (b_in) set.push_back(b);
        if (c_in) set.push_back(c);
        relax(best, cost, std::move(set));
      }
    }
  }
  if (best.cost >= kInf) fail(Errc::Internal, "tree DP found no feasible state");
  SimpleGraph sg = to_simple(g);
  if (!is_dominating(sg, best.set)) fail(Errc::Internal, "tree DP produced a non-dominating set");
  DominatingSet out;
  out.vertices = std::move(best.set);
  out.size = best.cost;
  out.graph_id = graph_fingerprint(sg);
  return out;
}

}  // namespace outerdom
