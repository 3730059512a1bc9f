#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "outerdom/bounds.hpp"
#include "outerdom/generators.hpp"
#include "outerdom/mop.hpp"

using namespace outerdom;

namespace {

// Independent pair oracle: list degree-2 vertices by degree scan, then
// pair each with the next one clockwise and measure the walk length.
struct OraclePair {
  int r, s, gap;
};

std::vector<OraclePair> pair_oracle(const MopGraph& g) {
  std::vector<int> d2;
  for (int v = 1; v <= g.n; ++v)
    if (g.degree(v) == 2) d2.push_back(v);
  std::vector<OraclePair> out;
  if (d2.size() < 2) return out;
  for (std::size_t i = 0; i < d2.size(); ++i) {
    const int r = d2[i];
    const int s = d2[(i + 1) % d2.size()];
    int gap = s - r;
    if (gap <= 0) gap += g.n;
    out.push_back({r, s, gap});
  }
  return out;
}

}  // namespace

TEST_CASE("rational helpers reduce and compare exactly") {
  const auto r = Rational::make(6, 4);
  CHECK(r.num == 3);
  CHECK(r.den == 2);
  CHECK(r.as_double() == doctest::Approx(1.5));
  CHECK(Rational::make(15, 4) < Rational::make(16, 4));
  CHECK(Rational::make(8, 4) == Rational::make(2, 1));
  CHECK(ceil_div(7, 4) == 2);
  CHECK(ceil_div(8, 4) == 2);
  CHECK(ceil_div(9, 4) == 3);
}

TEST_CASE("consecutive pairs match the oracle on every graph up to n=9") {
  for (int n = 4; n <= 9; ++n) {
    enumerate_mop_chords(n, [&](const std::vector<Chord>& chords) {
      const auto g = build_mop(n, chords);
      const auto oracle = pair_oracle(g);
      const auto pairs = consecutive_pairs(g);
      REQUIRE(pairs.size() == oracle.size());
      int gap_sum = 0;
      int essential = 0;
      // Reported pairs start from the lowest degree-2 vertex, as does
      // the oracle; compare elementwise.
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        REQUIRE(pairs[i].r == oracle[i].r);
        REQUIRE(pairs[i].s == oracle[i].s);
        REQUIRE(pairs[i].gap == oracle[i].gap);
        REQUIRE(pairs[i].essential == (oracle[i].gap >= 3));
        gap_sum += pairs[i].gap;
        essential += pairs[i].essential ? 1 : 0;
      }
      REQUIRE(gap_sum == n);
      REQUIRE(essential_pair_count(g) == essential);
      REQUIRE(static_cast<int>(bad_vertices(g).size()) == essential);
    });
  }
}

TEST_CASE("bad vertices are the first elements of essential pairs") {
  const auto g = build_mop(6, {{1, 3}, {1, 4}, {1, 5}});  // fan
  const auto pairs = consecutive_pairs(g);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].r == 2);
  CHECK(pairs[0].s == 6);
  CHECK(pairs[0].gap == 4);
  CHECK(pairs[0].essential);
  CHECK(pairs[1].r == 6);
  CHECK(pairs[1].s == 2);
  CHECK(pairs[1].gap == 2);
  CHECK_FALSE(pairs[1].essential);
  CHECK(bad_vertices(g) == std::vector<int>{2});
  CHECK(essential_pair_count(g) == 1);
}

TEST_CASE("the triangle has three degree-2 vertices but no pairs") {
  const auto g = build_mop(3, {});
  const auto rep = bounds_report(g, true);
  CHECK(rep.t == 3);
  CHECK(rep.k == 0);
  CHECK(rep.pairs.empty());
  CHECK(rep.gamma.has_value());
  CHECK(*rep.gamma == 1);
  // Degenerate: 4*gamma = 4 > n + k = 3. The linear comparison is
  // reported honestly even here; corpus scans therefore start at n=4.
  CHECK(rep.exceeds_nk4);
}

TEST_CASE("frozen report for the fan") {
  const auto rep = bounds_report(build_mop(6, {{1, 3}, {1, 4}, {1, 5}}), true);
  CHECK(rep.n == 6);
  CHECK(rep.t == 2);
  CHECK(rep.k == 1);
  CHECK(rep.degree_two == std::vector<int>{2, 6});
  CHECK(rep.bad == std::vector<int>{2});
  CHECK(rep.bound_nt4 == Rational::make(8, 4));
  CHECK(rep.bound_nk4_ceil == 2);
  CHECK(rep.bound_nk4 == Rational::make(7, 4));
  CHECK(*rep.gamma == 1);
  CHECK(rep.within_nt4);
  CHECK(rep.within_nk4_ceil);
  CHECK_FALSE(rep.exceeds_nk4);
}

TEST_CASE("frozen report for the six-vertex refuting instance") {
  const auto g = build_mop(6, {{1, 3}, {3, 5}, {1, 5}});
  const auto rep = bounds_report(g, true);
  CHECK(rep.t == 3);
  CHECK(rep.k == 0);
  CHECK(*rep.gamma == 2);
  CHECK(rep.bound_nk4 == Rational::make(6, 4));
  CHECK(rep.exceeds_nk4);       // 2 > 1.5: refutes the linear claim
  CHECK(rep.within_nk4_ceil);   // 2 <= ceil(6/4) = 2: the corrected bound holds
  CHECK(rep.within_nt4);        // 8 <= 9
  CHECK(check_li_counterexample(g));
}

TEST_CASE("frozen report for the fourteen-vertex refuting instance") {
  const auto g = named_mop("figure2");
  const auto rep = bounds_report(g, true);
  CHECK(rep.n == 14);
  CHECK(rep.t == 6);
  CHECK(rep.k == 1);
  CHECK(*rep.gamma == 4);
  CHECK(rep.bound_nk4 == Rational::make(15, 4));
  CHECK(rep.exceeds_nk4);      // 4 > 3.75
  CHECK(rep.bound_nk4_ceil == 4);
  CHECK(rep.within_nk4_ceil);  // the ceiling version absorbs it
  CHECK(check_li_counterexample(g));
}

TEST_CASE("report without gamma skips the comparisons") {
  const auto rep = bounds_report(build_mop(6, {{1, 3}, {3, 5}, {1, 5}}), false);
  CHECK_FALSE(rep.gamma.has_value());
  CHECK(rep.t == 3);
  CHECK(rep.k == 0);
}

TEST_CASE("ceiling bound holds exactly on every graph up to n=10") {
  for (int n = 4; n <= 10; ++n) {
    enumerate_mop_chords(n, [&](const std::vector<Chord>& chords) {
      const auto rep = bounds_report(build_mop(n, chords), true);
      REQUIRE(rep.within_nk4_ceil);
      REQUIRE(rep.within_nt4);
    });
  }
}
