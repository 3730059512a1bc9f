#pragma once

#include <optional>
#include <vector>

#include "outerdom/domination.hpp"
#include "outerdom/mop.hpp"

namespace outerdom {

// Clockwise-consecutive pair of degree-2 vertices. gap is the number of
// boundary edges on the clockwise walk r -> s; the pair is essential
// when gap >= 3, and r is then called a bad vertex.
struct ConsecutivePair {
  int r = 0;
  int s = 0;
  int gap = 0;
  bool essential = false;
};

// One pair per degree-2 vertex, in clockwise order of the first element
// starting from the lowest. Empty for n == 3 (all three vertices have
// degree 2 but no chord separates them).
std::vector<ConsecutivePair> consecutive_pairs(const MopGraph& g);

int essential_pair_count(const MopGraph& g);
std::vector<int> bad_vertices(const MopGraph& g);

struct BoundsReport {
  int n = 0;
  int t = 0;                      // degree-2 vertex count
  int k = 0;                      // essential pair count
  std::vector<int> degree_two;
  std::vector<int> bad;
  std::vector<ConsecutivePair> pairs;
  Rational bound_nt4;             // (n + t) / 4
  int bound_nk4_ceil = 0;         // ceil((n + k) / 4)
  Rational bound_nk4;             // (n + k) / 4, the refuted linear bound
  std::optional<int> gamma;       // exact, when requested
  bool within_nt4 = true;         // gamma <= (n + t) / 4
  bool within_nk4_ceil = true;    // gamma <= ceil((n + k) / 4)
  bool exceeds_nk4 = false;       // gamma > (n + k) / 4
};

// with_gamma computes the exact domination number (DP) and evaluates the
// three comparisons exactly in integer arithmetic.
BoundsReport bounds_report(const MopGraph& g, bool with_gamma = true);

// True iff gamma(g) > (n + k) / 4.
bool check_li_counterexample(const MopGraph& g);

}  // namespace outerdom
