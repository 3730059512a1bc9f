#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "outerdom/common.hpp"

namespace outerdom {

using Chord = std::pair<int, int>;  // canonical: first < second

// Maximal outerplane graph: boundary cycle 1..n clockwise plus n-3
// pairwise noncrossing chords. Instances are values; never mutate one,
// derive new graphs through the reduction operations instead.
struct MopGraph {
  int n = 0;
  std::vector<Chord> chords;             // canonical, sorted
  std::vector<std::vector<int>> adj;     // 1-indexed, sorted neighbor lists
  std::vector<char> is_deg2;             // 1-indexed flags

  bool has_edge(int a, int b) const;
  bool has_chord(int a, int b) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

// Validates vertex range, simplicity, the n-3 count, and pairwise
// noncrossing; accepts chords in any order/orientation.
MopGraph build_mop(int n, std::vector<Chord> chords);

std::vector<int> degree_two_vertices(const MopGraph& g);

// Clockwise piece of the graph between two chord endpoints. A section
// over a boundary edge is degenerate: (r, next(r)) spans nothing and
// (next(s), s) spans the whole graph; both are permitted because the
// whole-graph form participates in dominating-vertex candidate reporting.
struct Section {
  int r = 0;
  int s = 0;
  bool chord_base = false;               // {r,s} is a chord (not boundary)
  std::vector<int> internal;             // clockwise, strictly between r and s
  std::vector<int> deg2_internal;        // degree-2 vertices of g among internal
  int vertex_count() const { return static_cast<int>(internal.size()) + 2; }
  bool elementary() const { return deg2_internal.size() == 1; }
};

Section section_of(const MopGraph& g, int r, int s);

// Every chord in both orientations, deterministic order.
std::vector<Section> all_sections(const MopGraph& g);
std::vector<Section> elementary_sections(const MopGraph& g);
// Elementary sections whose clockwise span is not contained in the span
// of another elementary section.
std::vector<Section> maximal_elementary_sections(const MopGraph& g);

// Vertex adjacent to every other vertex of the section (within the
// section's vertex set), lowest if several.
std::optional<int> section_dominating_vertex(const MopGraph& g, const Section& sec);

// Inner faces as position triples sorted ascending; deterministic order.
std::vector<std::array<int, 3>> inner_faces(const MopGraph& g);

// Faces all of whose sides are chords.
std::vector<std::array<int, 3>> internal_triangles(const MopGraph& g);

bool is_striped(const MopGraph& g);

// Dual of the inner faces; adjacency = shared chord. Always a tree, a
// path exactly when the graph is striped.
struct InnerDual {
  std::vector<std::array<int, 3>> faces;
  std::vector<std::vector<int>> adj;     // indices into faces
  bool is_tree = false;
  bool is_path = false;
};

InnerDual inner_dual(const MopGraph& g);

}  // namespace outerdom
