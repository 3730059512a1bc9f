#include "outerdom/mop.hpp"

#include <algorithm>
#include <string>

namespace outerdom {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Ok: return "Ok";
    case Errc::BadIndex: return "BadIndex";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::DuplicateChord: return "DuplicateChord";
    case Errc::ChordIsBoundary: return "ChordIsBoundary";
    case Errc::CrossingChords: return "CrossingChords";
    case Errc::NotAChord: return "NotAChord";
    case Errc::NotSimple: return "NotSimple";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownName: return "UnknownName";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ResultNotMaximalOuterplane: return "ResultNotMaximalOuterplane";
    case Errc::NotDominating: return "NotDominating";
    case Errc::CertificateViolated: return "CertificateViolated";
    case Errc::BoundViolated: return "BoundViolated";
    case Errc::SolverTooLarge: return "SolverTooLarge";
    case Errc::NotTriangulation: return "NotTriangulation";
    case Errc::NotHamiltonCycle: return "NotHamiltonCycle";
    case Errc::ConflictGraphNotBipartite: return "ConflictGraphNotBipartite";
    case Errc::SharedChord: return "SharedChord";
    case Errc::NoHamiltonCycle: return "NoHamiltonCycle";
    case Errc::NotFound: return "NotFound";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool MopGraph::has_edge(int a, int b) const {
  if (a < 1 || a > n || b < 1 || b > n || a == b) return false;
  return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

bool MopGraph::has_chord(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(chords.begin(), chords.end(), Chord{a, b});
}

MopGraph build_mop(int n, std::vector<Chord> chords) {
  if (n < 3) fail(Errc::BadIndex, "a maximal outerplane graph needs n >= 3, got n=" + std::to_string(n));
  for (auto& c : chords) {
    if (c.first < 1 || c.first > n || c.second < 1 || c.second > n)
      fail(Errc::BadIndex, "chord endpoint out of 1.." + std::to_string(n));
    if (c.first == c.second) fail(Errc::NotSimple, "chord is a loop");
    if (c.first > c.second) std::swap(c.first, c.second);
    if (seg_len(n, c.first, c.second) == 1 || seg_len(n, c.second, c.first) == 1)
      fail(Errc::ChordIsBoundary,
           "chord {" + std::to_string(c.first) + "," + std::to_string(c.second) +
               "} is a boundary edge");
  }
  std::sort(chords.begin(), chords.end());
  if (std::adjacent_find(chords.begin(), chords.end()) != chords.end())
    fail(Errc::DuplicateChord, "duplicate chord");
  if (static_cast<int>(chords.size()) != n - 3)
    fail(Errc::CountMismatch, "expected " + std::to_string(n - 3) + " chords, got " +
                                  std::to_string(chords.size()));
  for (size_t i = 0; i < chords.size(); ++i)
    for (size_t j = i + 1; j < chords.size(); ++j)
      if (chords_cross(n, chords[i].first, chords[i].second, chords[j].first, chords[j].second))
        fail(Errc::CrossingChords,
             "chords {" + std::to_string(chords[i].first) + "," + std::to_string(chords[i].second) +
                 "} and {" + std::to_string(chords[j].first) + "," +
                 std::to_string(chords[j].second) + "} cross");

  MopGraph g;
  g.n = n;
  g.chords = std::move(chords);
  g.adj.assign(n + 1, {});
  for (int v = 1; v <= n; ++v) {
    g.adj[v].push_back(prev_pos(n, v));
    g.adj[v].push_back(next_pos(n, v));
  }
  for (const auto& c : g.chords) {
    g.adj[c.first].push_back(c.second);
    g.adj[c.second].push_back(c.first);
  }
  for (int v = 1; v <= n; ++v) std::sort(g.adj[v].begin(), g.adj[v].end());
  g.is_deg2.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v)
    if (g.adj[v].size() == 2) g.is_deg2[v] = 1;
  return g;
}

std::vector<int> degree_two_vertices(const MopGraph& g) {
  std::vector<int> out;
  for (int v = 1; v <= g.n; ++v)
    if (g.is_deg2[v]) out.push_back(v);
  return out;
}

Section section_of(const MopGraph& g, int r, int s) {
  if (r < 1 || r > g.n || s < 1 || s > g.n || r == s)
    fail(Errc::BadIndex, "section endpoints out of range");
  Section sec;
  sec.r = r;
  sec.s = s;
  sec.chord_base = g.has_chord(r, s);
  if (!sec.chord_base && seg_len(g.n, r, s) != 1 && seg_len(g.n, s, r) != 1)
    fail(Errc::NotAChord, "{" + std::to_string(r) + "," + std::to_string(s) +
                              "} is neither a chord nor a boundary edge");
  for (int v = next_pos(g.n, r); v != s; v = next_pos(g.n, v)) {
    sec.internal.push_back(v);
    if (g.is_deg2[v]) sec.deg2_internal.push_back(v);
  }
  return sec;
}

std::vector<Section> all_sections(const MopGraph& g) {
  std::vector<Section> out;
  for (const auto& c : g.chords) {
    out.push_back(section_of(g, c.first, c.second));
    out.push_back(section_of(g, c.second, c.first));
  }
  return out;
}

std::vector<Section> elementary_sections(const MopGraph& g) {
  std::vector<Section> out;
  for (auto& sec : all_sections(g))
    if (sec.elementary()) out.push_back(std::move(sec));
  return out;
}

std::vector<Section> maximal_elementary_sections(const MopGraph& g) {
  std::vector<Section> elem = elementary_sections(g);
  std::vector<Section> out;
  for (const auto& a : elem) {
    bool contained = false;
    for (const auto& b : elem) {
      if (a.r == b.r && a.s == b.s) continue;
      // span of a inside span of b, as clockwise walks
      int lb = seg_len(g.n, b.r, b.s);
      if (seg_len(g.n, b.r, a.r) + seg_len(g.n, a.r, a.s) + seg_len(g.n, a.s, b.s) == lb) {
        contained = true;
        break;
      }
    }
    if (!contained) out.push_back(a);
  }
  return out;
}

std::optional<int> section_dominating_vertex(const MopGraph& g, const Section& sec) {
  std::vector<int> members = sec.internal;
  members.push_back(sec.r);
  members.push_back(sec.s);
  std::sort(members.begin(), members.end());
  for (int v : members) {
    bool all = true;
    for (int w : members) {
      if (w == v) continue;
      if (!g.has_edge(v, w)) {
        all = false;
        break;
      }
    }
    if (all) return v;
  }
  return std::nullopt;
}

namespace {

// Triangle on the inner side of the chord or boundary edge {a,b} that
// closes the clockwise walk a -> b: the unique internal vertex adjacent
// to both ends.
int apex_of(const MopGraph& g, int a, int b) {
  for (int w : g.adj[a])
    if (in_open_segment(g.n, a, b, w) && g.has_edge(w, b)) return w;
  fail(Errc::Internal, "no apex for segment (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

void collect_faces(const MopGraph& g, int a, int b, std::vector<std::array<int, 3>>& out) {
  if (seg_len(g.n, a, b) < 2) return;
  int w = apex_of(g, a, b);
  std::array<int, 3> f{a, w, b};
  std::sort(f.begin(), f.end());
  out.push_back(f);
  collect_faces(g, a, w, out);
  collect_faces(g, w, b, out);
}

}  // namespace

std::vector<std::array<int, 3>> inner_faces(const MopGraph& g) {
  std::vector<std::array<int, 3>> out;
  // Root the recursion at the boundary edge {n,1}; the clockwise walk
  // 1 -> n spans the whole interior.
  collect_faces(g, 1, g.n, out);
  std::sort(out.begin(), out.end());
  if (static_cast<int>(out.size()) != g.n - 2)
    fail(Errc::Internal, "face count mismatch");
  return out;
}

std::vector<std::array<int, 3>> internal_triangles(const MopGraph& g) {
  // Face vertices are sorted ascending, so a side is a boundary edge iff
  // the positions differ by 1 or the side is {1,n}.
  auto boundary = [&](int a, int b) { return b - a == 1 || (a == 1 && b == g.n); };
  std::vector<std::array<int, 3>> out;
  for (const auto& f : inner_faces(g))
    if (!boundary(f[0], f[1]) && !boundary(f[1], f[2]) && !boundary(f[0], f[2]))
      out.push_back(f);
  return out;
}

bool is_striped(const MopGraph& g) { return internal_triangles(g).empty(); }

InnerDual inner_dual(const MopGraph& g) {
  InnerDual d;
  d.faces = inner_faces(g);
  int m = static_cast<int>(d.faces.size());
  d.adj.assign(m, {});
  int edges = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int shared = 0;
      for (int x : d.faces[i])
        for (int y : d.faces[j])
          if (x == y) ++shared;
      if (shared == 2) {
        d.adj[i].push_back(j);
        d.adj[j].push_back(i);
        ++edges;
      }
    }
  // connectivity
  std::vector<char> seen(m, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : d.adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  d.is_tree = (edges == m - 1) && (reached == m);
  d.is_path = d.is_tree;
  for (int i = 0; i < m && d.is_path; ++i)
    if (d.adj[i].size() > 2) d.is_path = false;
  return d;
}

}  // namespace outerdom
