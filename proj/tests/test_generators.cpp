// Counting, exhaustive and random generation, named instances, and the
// counterexample-family constructions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "outerdom/bounds.hpp"
#include "outerdom/domination.hpp"
#include "outerdom/generators.hpp"
#include "outerdom/hamiltonian.hpp"

using namespace outerdom;

namespace {

using Chords = std::vector<Chord>;

// Independent oracle: limb arithmetic in base 10^9 driven by the exact
// integer recurrence C(i+1) = C(i) * (4i + 2) / (i + 2), so no
// intermediate value ever outgrows the representation.
std::vector<std::uint32_t> catalan_limbs(int m) {
  std::vector<std::uint32_t> limbs = {1};
  constexpr std::uint64_t kBase = 1000000000;
  for (int i = 0; i < m; ++i) {
    std::uint64_t mul = 4ull * i + 2, carry = 0;
    for (auto& limb : limbs) {
      std::uint64_t v = limb * mul + carry;
      limb = (std::uint32_t)(v % kBase);
      carry = v / kBase;
    }
    while (carry) {
      limbs.push_back((std::uint32_t)(carry % kBase));
      carry /= kBase;
    }
    std::uint64_t div = (std::uint64_t)i + 2, rem = 0;
    for (auto it = limbs.rbegin(); it != limbs.rend(); ++it) {
      std::uint64_t v = rem * kBase + *it;
      *it = (std::uint32_t)(v / div);
      rem = v % div;
    }
    REQUIRE(rem == 0);  // the recurrence divides exactly
    while (limbs.size() > 1 && limbs.back() == 0) limbs.pop_back();
  }
  return limbs;
}

std::vector<std::uint32_t> to_limbs(unsigned __int128 v) {
  std::vector<std::uint32_t> limbs;
  do {
    limbs.push_back((std::uint32_t)(v % 1000000000u));
    v /= 1000000000u;
  } while (v);
  return limbs;
}

Errc thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Ok;
}

}  // namespace

TEST_CASE("catalan numbers match the closed form and saturate cleanly") {
  const std::vector<std::uint64_t> first = {1,    1,    2,    5,     14,   42,
                                            132,  429,  1430, 4862,  16796};
  for (size_t m = 0; m < first.size(); ++m) {
    CHECK(catalan_u64((int)m) == first[m]);
    CHECK(to_limbs(catalan((int)m)) == catalan_limbs((int)m));
  }
  for (int m = 11; m <= 67; ++m) CHECK(to_limbs(catalan(m)) == catalan_limbs(m));
  CHECK(catalan_u64(36) == 11959798385860453492ULL);
  CHECK(thrown_code([] { (void)catalan(68); }) == Errc::TooLarge);
  CHECK(thrown_code([] { (void)catalan_u64(37); }) == Errc::TooLarge);
  for (int n = 3; n <= 12; ++n) CHECK(count_mops(n) == catalan_u64(n - 2));
}

TEST_CASE("exhaustive generation hits every triangulation exactly once") {
  for (int n = 3; n <= 11; ++n) {
    std::set<Chords> seen;
    std::uint64_t total = 0;
    enumerate_mops(n, [&](const MopGraph& g) {
      CHECK(g.n == n);
      CHECK(g.chords.size() == (size_t)(n - 3));
      seen.insert(g.chords);
      ++total;
    });
    CHECK(total == count_mops(n));
    CHECK(seen.size() == total);  // all distinct
  }
  // Every emitted graph survives revalidation from scratch.
  for (int n : {6, 9, 10}) {
    enumerate_mops(n, [&](const MopGraph& g) {
      auto rebuilt = build_mop(g.n, g.chords);
      CHECK(rebuilt.chords == g.chords);
    });
  }
  // The chords-only enumeration walks the same sequence; it skips
  // normalization, so compare canonical forms.
  std::vector<Chords> graphs, chords;
  enumerate_mops(8, [&](const MopGraph& g) { graphs.push_back(g.chords); });
  enumerate_mop_chords(8, [&](const Chords& c) {
    Chords canon;
    for (const auto& [a, b] : c) canon.push_back({std::min(a, b), std::max(a, b)});
    std::sort(canon.begin(), canon.end());
    chords.push_back(canon);
  });
  CHECK(graphs == chords);
}

TEST_CASE("generation caps report the right errors") {
  CHECK(thrown_code([] { enumerate_mops(17, [](const MopGraph&) {}); }) == Errc::TooLarge);
  CHECK(thrown_code([] { enumerate_mops(2, [](const MopGraph&) {}); }) == Errc::BadIndex);
  CHECK(thrown_code([] { enumerate_hts(3, [](const HamTriangulation&) {}); }) ==
        Errc::BadIndex);
  CHECK(thrown_code([] { enumerate_hts(10, [](const HamTriangulation&) {}); }) ==
        Errc::TooLarge);
  CHECK(thrown_code([] { (void)random_mop(70, 1u); }) == Errc::TooLarge);
  CHECK(thrown_code([] { (void)random_mop(2, 1u); }) == Errc::BadIndex);
  CHECK(thrown_code([] { (void)random_ht(3, 1u); }) == Errc::BadIndex);
}

TEST_CASE("random triangulations are deterministic per seed and valid") {
  auto a = random_mop(12, 42u);
  auto b = random_mop(12, 42u);
  auto c = random_mop(12, 43u);
  CHECK(a.chords == b.chords);
  CHECK(a.chords != c.chords);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_mop(30, seed);
    auto rebuilt = build_mop(g.n, g.chords);
    CHECK(rebuilt.chords == g.chords);
  }
  auto t1 = random_ht(9, 5u);
  auto t2 = random_ht(9, 5u);
  CHECK(t1.inner == t2.inner);
  CHECK(t1.outer == t2.outer);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t = random_ht(10 + (int)seed, seed);
    auto rebuilt = build_ht(t.n, t.inner, t.outer);
    CHECK(rebuilt.inner == t.inner);
    CHECK(rebuilt.outer == t.outer);
    CHECK(to_simple(t).edges.size() == (size_t)(3 * t.n - 6));
  }
}

TEST_CASE("random triangulations are uniform across all classes") {
  std::mt19937_64 rng(2026);
  std::map<Chords, int> counts;
  const int draws = 14000;
  for (int i = 0; i < draws; ++i) counts[random_mop(6, rng).chords]++;
  CHECK(counts.size() == 14);  // every hexagon triangulation appears
  double chi = 0.0, expected = draws / 14.0;
  for (const auto& [chords, count] : counts) {
    double d = count - expected;
    chi += d * d / expected;
  }
  CHECK(chi < 29.82);  // chi-square .995 quantile, 13 dof

  std::map<Chords, int> square;
  for (int i = 0; i < 2000; ++i) square[random_mop(4, rng).chords]++;
  CHECK(square.size() == 2);
  double chi4 = 0.0;
  for (const auto& [chords, count] : square) {
    double d = count - 1000.0;
    chi4 += d * d / 1000.0;
  }
  CHECK(chi4 < 7.88);  // .995 quantile, 1 dof
}

TEST_CASE("triangulation-pair enumeration counts and disjointness") {
  const std::map<int, long long> frozen = {{4, 2},    {5, 10},    {6, 68},
                                           {7, 546},  {8, 4872},  {9, 46782}};
  for (const auto& [n, expected] : frozen) {
    long long total = 0;
    enumerate_hts(n, [&](const HamTriangulation& t) {
      CHECK(t.n == n);
      ++total;
    });
    CHECK(total == expected);
  }
  // Independent recount for small n: ordered pairs of chord-disjoint
  // polygon triangulations.
  for (int n = 4; n <= 6; ++n) {
    std::vector<Chords> sides;
    enumerate_mop_chords(n, [&](const Chords& c) { sides.push_back(c); });
    long long pairs = 0;
    for (const auto& in : sides) {
      for (const auto& out : sides) {
        bool disjoint = true;
        for (const auto& c : in)
          if (std::find(out.begin(), out.end(), c) != out.end()) disjoint = false;
        if (disjoint) ++pairs;
      }
    }
    CHECK(pairs == frozen.at(n));
  }
}

TEST_CASE("named instances carry the pinned literals") {
  auto names = named_graph_names();
  REQUIRE(names.size() == 4);
  CHECK(names[0] == "figure2");
  CHECK(names[1] == "hexagon_fan3");
  CHECK(names[2] == "octahedron");
  CHECK(names[3] == "seven_vertex_fig1");
  CHECK(named_graph_kind("figure2") == "mop");
  CHECK(named_graph_kind("hexagon_fan3") == "mop");
  CHECK(named_graph_kind("octahedron") == "ham-triangulation");
  CHECK(named_graph_kind("seven_vertex_fig1") == "ham-triangulation");

  auto hex = named_mop("hexagon_fan3");
  CHECK(hex.n == 6);
  CHECK(hex.chords == Chords{{1, 3}, {1, 5}, {3, 5}});
  CHECK(gamma_mop_dp(hex).size == 2);

  auto fig2 = named_mop("figure2");
  CHECK(fig2.n == 14);
  CHECK(fig2.chords == Chords{{1, 3},
                              {1, 5},
                              {1, 6},
                              {1, 7},
                              {1, 9},
                              {1, 11},
                              {1, 13},
                              {3, 5},
                              {7, 9},
                              {9, 11},
                              {11, 13}});

  auto oct = named_ht("octahedron");
  CHECK(oct.n == 6);
  CHECK(oct.inner == Chords{{1, 3}, {1, 5}, {3, 5}});
  CHECK(oct.outer == Chords{{2, 4}, {2, 6}, {4, 6}});

  auto seven = named_ht("seven_vertex_fig1");
  CHECK(seven.n == 7);
  CHECK(seven.inner == Chords{{1, 3}, {1, 4}, {1, 5}, {5, 7}});
  CHECK(seven.outer == Chords{{2, 4}, {2, 6}, {2, 7}, {4, 6}});

  CHECK(thrown_code([] { (void)named_mop("octahedron"); }) == Errc::UnknownName);
  CHECK(thrown_code([] { (void)named_ht("figure2"); }) == Errc::UnknownName);
  CHECK(thrown_code([] { (void)named_mop("no_such_graph"); }) == Errc::UnknownName);
  CHECK(thrown_code([] { (void)named_graph_kind("no_such_graph"); }) == Errc::UnknownName);
}

TEST_CASE("pinning scans reproduce the named instances") {
  auto fig2 = figure2_search();
  auto named = named_mop("figure2");
  CHECK(fig2.n == named.n);
  CHECK(fig2.chords == named.chords);

  auto seven = seven_vertex_search();
  auto named7 = named_ht("seven_vertex_fig1");
  CHECK(seven.n == named7.n);
  CHECK(seven.inner == named7.inner);
  CHECK(seven.outer == named7.outer);
}

TEST_CASE("the strip family keeps beating the linear bound") {
  const std::vector<int> gammas = {5, 6, 7, 8};
  for (int m = 1; m <= 4; ++m) {
    auto g = figure2_family(m);
    CHECK(g.n == 14 + 4 * m);
    auto rep = bounds_report(g);
    CHECK(rep.k == 1);
    REQUIRE(rep.gamma.has_value());
    CHECK(*rep.gamma == gammas[m - 1]);
    CHECK(rep.exceeds_nk4);
    CHECK(check_li_counterexample(g));
  }
  CHECK(thrown_code([] { (void)figure2_family(0); }) == Errc::PreconditionViolated);
  CHECK(thrown_code([] { (void)figure2_family(-1); }) == Errc::PreconditionViolated);
}
