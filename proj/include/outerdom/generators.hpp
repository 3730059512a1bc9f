#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "outerdom/hamiltonian.hpp"
#include "outerdom/mop.hpp"

namespace outerdom {

// C(m), exact; m <= 67.
unsigned __int128 catalan(int m);
// C(m) as uint64, TooLarge past C(36).
std::uint64_t catalan_u64(int m);

// Number of labeled maximal outerplane graphs on n vertices: C(n - 2).
std::uint64_t count_mops(int n);

// Every triangulation of the labeled n-gon exactly once, deterministic
// order (recursive apex choice for the boundary edge {1,2}, ascending).
// Runs the callback on each; cap n <= 16.
void enumerate_mops(int n, const std::function<void(const MopGraph&)>& cb);

// Same order, chord sets only (no validation cost on the hot path).
void enumerate_mop_chords(int n, const std::function<void(const std::vector<Chord>&)>& cb);

// Uniform over the C(n - 2) triangulations: apex sampled with exact
// Catalan weights (128-bit integers), deterministic per seed. n <= 69.
MopGraph random_mop(int n, std::mt19937_64& rng);
MopGraph random_mop(int n, std::uint64_t seed);

// Ordered pairs of disjoint side chord sets, deterministic order; cap
// 4 <= n <= 9.
void enumerate_hts(int n, const std::function<void(const HamTriangulation&)>& cb);

// Two independent uniform sides, redrawn until chord-disjoint.
HamTriangulation random_ht(int n, std::mt19937_64& rng);
HamTriangulation random_ht(int n, std::uint64_t seed);

// Named instances. Kinds: "mop" or "ham-triangulation".
std::vector<std::string> named_graph_names();
std::string named_graph_kind(const std::string& name);
MopGraph named_mop(const std::string& name);            // hexagon_fan3, figure2
HamTriangulation named_ht(const std::string& name);     // octahedron, seven_vertex_fig1

// Scan that pins the figure2 instance: lexicographically least chord set
// among all n = 14 graphs with k = 1 and domination number 4.
MopGraph figure2_search();

// Scan that pins seven_vertex_fig1: lexicographically least (inner,
// outer) pair among n = 7 triangulations with domination number 2.
HamTriangulation seven_vertex_search();

// Family that keeps beating the linear (n + k) / 4 bound: the figure2
// graph with its lowest non-degree-2 vertex replaced by a fan strip of
// 4m + 1 path vertices carrying 2m ear triangles; n = 14 + 4m.
MopGraph figure2_family(int m);

}  // namespace outerdom
