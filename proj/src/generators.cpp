#include "outerdom/generators.hpp"

#include <algorithm>
#include <array>
#include <climits>

#include "outerdom/bounds.hpp"

namespace outerdom {

namespace {

using u128 = unsigned __int128;
constexpr int kCatalanMax = 67;  // C(67) < 2^128; C(n-2) caps random_mop at n = 69

const std::array<u128, kCatalanMax + 1>& catalan_table() {
  static const auto table = [] {
    std::array<u128, kCatalanMax + 1> t{};
    t[0] = 1;
    for (int i = 1; i <= kCatalanMax; ++i) {
      u128 s = 0;
      for (int j = 0; j < i; ++j) s += t[j] * t[i - 1 - j];
      t[i] = s;
    }
    return t;
  }();
  return table;
}

u128 uniform_u128(std::mt19937_64& rng, u128 bound) {
  if (bound <= 1) return 0;
  u128 threshold = (u128(0) - bound) % bound;  // 2^128 mod bound
  for (;;) {
    u128 r = (u128(rng()) << 64) | rng();
    if (r >= threshold) return r % bound;
  }
}

// Segments use virtual labels 2..n+1 (n+1 is vertex 1): segment (a, b)
// is the sub-polygon a..b with base edge {a, b}; the root segment
// (2, n+1) has the boundary edge {1, 2} as its base.
Chord canon_chord(int n, int a, int b) {
  int x = a > n ? a - n : a;
  int y = b > n ? b - n : b;
  if (x > y) std::swap(x, y);
  return {x, y};
}

void enumerate_rec(int n, std::vector<std::pair<int, int>>& todo, std::size_t idx,
                   std::vector<Chord>& chords,
                   const std::function<void(const std::vector<Chord>&)>& cb) {
  while (idx < todo.size() && todo[idx].second - todo[idx].first < 2) ++idx;
  if (idx == todo.size()) {
    cb(chords);
    return;
  }
  auto [a, b] = todo[idx];
  for (int w = a + 1; w < b; ++w) {
    std::size_t nc = chords.size(), nt = todo.size();
    if (w > a + 1) chords.push_back(canon_chord(n, a, w));
    if (b > w + 1) chords.push_back(canon_chord(n, w, b));
    todo.push_back({a, w});
    todo.push_back({w, b});
    enumerate_rec(n, todo, idx + 1, chords, cb);
    todo.resize(nt);
    chords.resize(nc);
  }
}

}  // namespace

unsigned __int128 catalan(int m) {
  if (m < 0) fail(Errc::BadIndex, "catalan index must be nonnegative");
  if (m > kCatalanMax)
    fail(Errc::TooLarge, "catalan numbers computed up to C(" + std::to_string(kCatalanMax) + ")");
  return catalan_table()[m];
}

std::uint64_t catalan_u64(int m) {
  u128 v = catalan(m);
  if (v > u128(UINT64_MAX))
    fail(Errc::TooLarge, "C(" + std::to_string(m) + ") exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

std::uint64_t count_mops(int n) {
  if (n < 3) fail(Errc::BadIndex, "need n >= 3");
  return catalan_u64(n - 2);
}

void enumerate_mop_chords(int n, const std::function<void(const std::vector<Chord>&)>& cb) {
  if (n < 3) fail(Errc::BadIndex, "need n >= 3");
  if (n > 16) fail(Errc::TooLarge, "exhaustive enumeration capped at n = 16");
  std::vector<std::pair<int, int>> todo{{2, n + 1}};
  std::vector<Chord> chords;
  enumerate_rec(n, todo, 0, chords, cb);
}

void enumerate_mops(int n, const std::function<void(const MopGraph&)>& cb) {
  enumerate_mop_chords(n, [&](const std::vector<Chord>& chords) { cb(build_mop(n, chords)); });
}

MopGraph random_mop(int n, std::mt19937_64& rng) {
  if (n < 3) fail(Errc::BadIndex, "need n >= 3");
  if (n - 2 > kCatalanMax)
    fail(Errc::TooLarge, "random generation capped at n = " + std::to_string(kCatalanMax + 2));
  const auto& cat = catalan_table();
  std::vector<Chord> chords;
  std::vector<std::pair<int, int>> todo{{2, n + 1}};
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    int s = b - a - 1;
    if (s < 1) continue;
    u128 r = uniform_u128(rng, cat[s]);
    int w = 0;
    for (int cand = a + 1; cand < b; ++cand) {
      u128 weight = cat[cand - a - 1] * cat[b - cand - 1];
      if (r < weight) {
        w = cand;
        break;
      }
      r -= weight;
    }
    if (!w) fail(Errc::Internal, "apex weights did not cover the draw");
    if (w > a + 1) chords.push_back(canon_chord(n, a, w));
    if (b > w + 1) chords.push_back(canon_chord(n, w, b));
    todo.push_back({a, w});
    todo.push_back({w, b});
  }
  return build_mop(n, std::move(chords));
}

MopGraph random_mop(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_mop(n, rng);
}

namespace {

bool chords_disjoint(const std::vector<Chord>& a, const std::vector<Chord>& b) {
  for (const auto& c : a)
    if (std::binary_search(b.begin(), b.end(), c)) return false;
  return true;
}

}  // namespace

void enumerate_hts(int n, const std::function<void(const HamTriangulation&)>& cb) {
  if (n < 4) fail(Errc::BadIndex, "need n >= 4");
  if (n > 9) fail(Errc::TooLarge, "exhaustive triangulation enumeration capped at n = 9");
  std::vector<std::vector<Chord>> sides;
  enumerate_mop_chords(n, [&](const std::vector<Chord>& chords) {
    std::vector<Chord> c = chords;
    std::sort(c.begin(), c.end());
    sides.push_back(std::move(c));
  });
  for (const auto& inner : sides)
    for (const auto& outer : sides) {
      if (!chords_disjoint(inner, outer)) continue;
      cb(build_ht(n, inner, outer));
    }
}

HamTriangulation random_ht(int n, std::mt19937_64& rng) {
  if (n < 4) fail(Errc::BadIndex, "need n >= 4");
  for (;;) {
    MopGraph inner = random_mop(n, rng);
    MopGraph outer = random_mop(n, rng);
    if (chords_disjoint(inner.chords, outer.chords))
      return build_ht(n, inner.chords, outer.chords);
  }
}

HamTriangulation random_ht(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_ht(n, rng);
}

namespace {

// Pinned by figure2_search(): lexicographically least chord set among
// the n=14 graphs with one essential pair and domination number 4.
const std::vector<Chord> kFigure2Chords = {{1, 3}, {1, 5},  {1, 6},  {1, 7},   {1, 9}, {1, 11},
                                           {1, 13}, {3, 5}, {7, 9}, {9, 11}, {11, 13}};

// Pinned by seven_vertex_search(): lexicographically least (inner,
// outer) pair among the n=7 triangulations with domination number 2.
const std::vector<Chord> kSevenVertexInner = {{1, 3}, {1, 4}, {1, 5}, {5, 7}};
const std::vector<Chord> kSevenVertexOuter = {{2, 4}, {2, 6}, {2, 7}, {4, 6}};

}  // namespace

std::vector<std::string> named_graph_names() {
  return {"figure2", "hexagon_fan3", "octahedron", "seven_vertex_fig1"};
}

std::string named_graph_kind(const std::string& name) {
  if (name == "figure2" || name == "hexagon_fan3") return "mop";
  if (name == "octahedron" || name == "seven_vertex_fig1") return "ham-triangulation";
  fail(Errc::UnknownName, "unknown named graph: " + name);
}

MopGraph named_mop(const std::string& name) {
  if (name == "hexagon_fan3") return build_mop(6, {{1, 3}, {1, 5}, {3, 5}});
  if (name == "figure2") return build_mop(14, kFigure2Chords);
  if (name == "octahedron" || name == "seven_vertex_fig1")
    fail(Errc::UnknownName, name + " is a triangulation; use the triangulation accessor");
  fail(Errc::UnknownName, "unknown named graph: " + name);
}

HamTriangulation named_ht(const std::string& name) {
  if (name == "octahedron") return build_ht(6, {{1, 3}, {1, 5}, {3, 5}}, {{2, 4}, {2, 6}, {4, 6}});
  if (name == "seven_vertex_fig1") return build_ht(7, kSevenVertexInner, kSevenVertexOuter);
  if (name == "figure2" || name == "hexagon_fan3")
    fail(Errc::UnknownName, name + " is an outerplane graph; use the outerplane accessor");
  fail(Errc::UnknownName, "unknown named graph: " + name);
}

MopGraph figure2_search() {
  std::vector<Chord> best;
  enumerate_mop_chords(14, [&](const std::vector<Chord>& raw) {
    MopGraph g = build_mop(14, raw);
    if (essential_pair_count(g) != 1) return;
    if (!best.empty() && !(g.chords < best)) return;
    if (gamma_mop_dp(g).size != 4) return;
    best = g.chords;
  });
  if (best.empty())
    fail(Errc::NotFound, "no n=14 graph with one essential pair and domination number 4");
  return build_mop(14, best);
}

HamTriangulation seven_vertex_search() {
  HamTriangulation best;
  bool found = false;
  enumerate_hts(7, [&](const HamTriangulation& t) {
    if (found && !(std::tie(t.inner, t.outer) < std::tie(best.inner, best.outer))) return;
    if (gamma_exact_bb(to_simple(t)).size != 2) return;
    best = t;
    found = true;
  });
  if (!found) fail(Errc::NotFound, "no n=7 triangulation with domination number 2");
  return best;
}

namespace {

// Replace vertex vstar of base by a path of 4m + 1 vertices carrying
// 2m ear triangles, completed to a maximal graph by a fan from the
// path's first vertex, which also inherits the replaced vertex's
// chords. Old vertex v keeps its label below vstar and shifts by
// path_len - 1 above it; the path occupies vstar .. vstar + 4m.
MopGraph family_at(const MopGraph& base, int vstar, int m) {
  int path_len = 4 * m + 1;
  int n2 = base.n + path_len - 1;
  auto relab = [&](int v) { return v < vstar ? v : v + path_len - 1; };
  std::vector<Chord> chords;
  for (const auto& c : base.chords) {
    int a = c.first == vstar ? vstar : relab(c.first);
    int b = c.second == vstar ? vstar : relab(c.second);
    if (a > b) std::swap(a, b);
    chords.push_back({a, b});
  }
  auto p = [&](int i) { return vstar + i - 1; };
  for (int i = 1; i <= 2 * m; ++i) chords.push_back({p(2 * i - 1), p(2 * i + 1)});
  for (int i = 2; i <= 2 * m; ++i) chords.push_back({p(1), p(2 * i + 1)});
  int w = relab(next_pos(base.n, vstar));
  chords.push_back(p(1) < w ? Chord{p(1), w} : Chord{w, p(1)});
  return build_mop(n2, std::move(chords));
}

}  // namespace

MopGraph figure2_family(int m) {
  if (m < 1) fail(Errc::PreconditionViolated, "family index must be at least 1");
  MopGraph base = named_mop("figure2");
  // The replaced vertex is the least-index non-degree-2 vertex whose
  // replacement preserves the bound violation; replacing the hub vertex
  // collapses the structure, so a one-step probe screens candidates.
  static const int vstar = [&]() {
    for (int v = 1; v <= base.n; ++v) {
      if (base.is_deg2[v]) continue;
      if (check_li_counterexample(family_at(base, v, 1))) return v;
    }
    fail(Errc::Internal, "no replacement vertex preserves the violation");
  }();
  MopGraph g = family_at(base, vstar, m);
  if (!check_li_counterexample(g))
    fail(Errc::Internal, "family instance does not exceed (n+k)/4");
  return g;
}

}  // namespace outerdom
