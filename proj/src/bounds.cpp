#include "outerdom/bounds.hpp"

#include <algorithm>

namespace outerdom {

std::vector<ConsecutivePair> consecutive_pairs(const MopGraph& g) {
  std::vector<int> deg2 = degree_two_vertices(g);
  std::vector<ConsecutivePair> out;
  if (g.n == 3) return out;
  int m = static_cast<int>(deg2.size());
  for (int i = 0; i < m; ++i) {
    ConsecutivePair p;
    p.r = deg2[i];
    p.s = deg2[(i + 1) % m];
    p.gap = m == 1 ? g.n : seg_len(g.n, p.r, p.s);
    p.essential = p.gap >= 3;
    out.push_back(p);
  }
  return out;
}

int essential_pair_count(const MopGraph& g) {
  int k = 0;
  for (const auto& p : consecutive_pairs(g))
    if (p.essential) ++k;
  return k;
}

std::vector<int> bad_vertices(const MopGraph& g) {
  std::vector<int> out;
  for (const auto& p : consecutive_pairs(g))
    if (p.essential) out.push_back(p.r);
  std::sort(out.begin(), out.end());
  return out;
}

BoundsReport bounds_report(const MopGraph& g, bool with_gamma) {
  BoundsReport rep;
  rep.n = g.n;
  rep.degree_two = degree_two_vertices(g);
  rep.t = static_cast<int>(rep.degree_two.size());
  rep.pairs = consecutive_pairs(g);
  rep.bad = bad_vertices(g);
  rep.k = static_cast<int>(rep.bad.size());
  rep.bound_nt4 = Rational::make(rep.n + rep.t, 4);
  rep.bound_nk4 = Rational::make(rep.n + rep.k, 4);
  rep.bound_nk4_ceil = static_cast<int>(ceil_div(rep.n + rep.k, 4));
  if (with_gamma) {
    DominatingSet ds = gamma_mop_dp(g);
    rep.gamma = ds.size;
    // gamma <= (n+t)/4  <=>  4*gamma <= n+t, and likewise for the rest.
    rep.within_nt4 = 4 * ds.size <= rep.n + rep.t;
    rep.within_nk4_ceil = ds.size <= rep.bound_nk4_ceil;
    rep.exceeds_nk4 = 4 * ds.size > rep.n + rep.k;
  }
  return rep;
}

bool check_li_counterexample(const MopGraph& g) {
  BoundsReport rep = bounds_report(g, true);
  return rep.exceeds_nk4;
}

}  // namespace outerdom
