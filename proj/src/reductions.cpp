#include "outerdom/reductions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace outerdom {

const char* reduction_kind_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::R1: return "R1";
    case ReductionKind::R2: return "R2";
    case ReductionKind::R3: return "R3";
    case ReductionKind::R4: return "R4";
    case ReductionKind::Claim1Delete: return "claim1-delete";
    case ReductionKind::Claim2ContractBoth: return "claim2-contract-both";
    case ReductionKind::Claim2ContractOne: return "claim2-contract-one";
    case ReductionKind::FinalContract: return "final-contract";
  }
  return "unknown";
}

std::optional<ReductionKind> reduction_kind_from_name(const std::string& s) {
  for (ReductionKind k :
       {ReductionKind::R1, ReductionKind::R2, ReductionKind::R3, ReductionKind::R4,
        ReductionKind::Claim1Delete, ReductionKind::Claim2ContractBoth,
        ReductionKind::Claim2ContractOne, ReductionKind::FinalContract})
    if (s == reduction_kind_name(k)) return k;
  return std::nullopt;
}

const char* base_kind_name(BaseKind k) {
  switch (k) {
    case BaseKind::ExactSmall: return "exact-small";
    case BaseKind::DominatingVertex: return "dominating-vertex";
    case BaseKind::StripedExact: return "striped-exact";
    case BaseKind::AnomalyExact: return "anomaly-exact";
  }
  return "unknown";
}

namespace {

struct RunResult {
  MopGraph post;
  std::vector<std::vector<int>> vmap;
  int contracted_post = 0;
};

// Delete the internal vertices of section (r, s); the post boundary
// starts at v_s, so the old base chord {r,s} becomes the boundary edge
// {n', 1} and drops out of the chord list.
RunResult delete_internals(const MopGraph& g, int r, int s) {
  int removed = seg_len(g.n, r, s) - 1;
  int n2 = g.n - removed;
  std::vector<int> pre_of(n2 + 1, 0);
  std::vector<int> post_of(g.n + 1, 0);
  int v = s;
  for (int i = 1; i <= n2; ++i) {
    pre_of[i] = v;
    post_of[v] = i;
    v = next_pos(g.n, v);
  }
  std::vector<Chord> chords;
  for (const auto& c : g.chords) {
    int pu = post_of[c.first], pv = post_of[c.second];
    if (!pu || !pv) continue;  // touches a deleted vertex
    if (pu > pv) std::swap(pu, pv);
    if (pv - pu == 1 || (pu == 1 && pv == n2)) continue;  // boundary edge now
    chords.push_back({pu, pv});
  }
  RunResult out;
  out.post = build_mop(n2, std::move(chords));
  out.vmap.assign(n2 + 1, {});
  for (int i = 1; i <= n2; ++i) out.vmap[i] = {pre_of[i]};
  return out;
}

// Contract the closed clockwise run [a, b] to x, placed at post
// position 1 with the survivors following clockwise.
RunResult contract_run(const MopGraph& g, int a, int b) {
  int m = seg_len(g.n, a, b) + 1;
  int n2 = g.n - m + 1;
  std::vector<int> pre_of(n2 + 1, 0);
  std::vector<int> post_of(g.n + 1, 0);  // 0 = contracted into x
  std::vector<int> run;
  for (int v = a;; v = next_pos(g.n, v)) {
    run.push_back(v);
    if (v == b) break;
  }
  int v = next_pos(g.n, b);
  for (int i = 2; i <= n2; ++i) {
    pre_of[i] = v;
    post_of[v] = i;
    v = next_pos(g.n, v);
  }
  std::set<Chord> chords;
  for (const auto& c : g.chords) {
    int pu = post_of[c.first], pv = post_of[c.second];
    if (!pu && !pv) continue;  // chord inside the run
    int qu = pu ? pu : 1, qv = pv ? pv : 1;
    if (qu > qv) std::swap(qu, qv);
    if (qv - qu == 1 || (qu == 1 && qv == n2)) continue;  // merged into the boundary
    chords.insert({qu, qv});
  }
  RunResult out;
  out.post = build_mop(n2, std::vector<Chord>(chords.begin(), chords.end()));
  out.vmap.assign(n2 + 1, {});
  out.vmap[1] = std::move(run);
  for (int i = 2; i <= n2; ++i) out.vmap[i] = {pre_of[i]};
  out.contracted_post = 1;
  return out;
}

std::string step_str(const ReductionStep& st) {
  std::ostringstream os;
  os << reduction_kind_name(st.kind) << "(r=" << st.r << ",s=" << st.s;
  if (st.t) os << ",t=" << st.t;
  if (st.aux) os << ",aux=" << st.aux;
  if (st.whole_graph) os << ",whole";
  os << ")";
  return os.str();
}

bool section_dominated_by(const MopGraph& g, const Section& sec, int v) {
  std::vector<int> members = sec.internal;
  members.push_back(sec.r);
  members.push_back(sec.s);
  if (std::find(members.begin(), members.end(), v) == members.end()) return false;
  for (int w : members)
    if (w != v && !g.has_edge(v, w)) return false;
  return true;
}

}  // namespace

std::vector<ReductionStep> find_applicable(const MopGraph& g) {
  std::vector<ReductionStep> out;
  // R1: 6-vertex elementary sections.
  for (int r = 1; r <= g.n; ++r) {
    int s = pos_add(g.n, r, 5);
    if (!g.has_chord(r, s)) continue;
    if (section_of(g, r, s).elementary()) {
      ReductionStep st;
      st.kind = ReductionKind::R1;
      st.r = r;
      st.s = s;
      out.push_back(st);
    }
  }
  // R2 degenerate whole-graph candidate: base is a boundary edge, so it
  // is reported for visibility but refused by apply_step (the engine
  // handles a dominating vertex as a base case).
  if (g.n >= 6) {
    if (auto dv = dominating_vertex(to_simple(g))) {
      ReductionStep st;
      st.kind = ReductionKind::R2;
      st.r = 1;
      st.s = g.n;
      st.whole_graph = true;
      st.aux = *dv;
      out.push_back(st);
    }
  }
  // R2: sections with >= 6 vertices and a section-dominating vertex.
  for (int r = 1; r <= g.n; ++r)
    for (int span = 5; span <= g.n - 2; ++span) {
      int s = pos_add(g.n, r, span);
      if (!g.has_chord(r, s)) continue;
      Section sec = section_of(g, r, s);
      if (auto dom = section_dominating_vertex(g, sec)) {
        ReductionStep st;
        st.kind = ReductionKind::R2;
        st.r = r;
        st.s = s;
        st.aux = *dom;
        out.push_back(st);
      }
    }
  if (g.n >= 7) {
    // R3: 5-vertex elementary sections, middle internal not degree-2.
    for (int r = 1; r <= g.n; ++r) {
      int s = pos_add(g.n, r, 4);
      if (!g.has_chord(r, s)) continue;
      if (section_of(g, r, s).elementary() && !g.is_deg2[pos_add(g.n, r, 2)]) {
        ReductionStep st;
        st.kind = ReductionKind::R3;
        st.r = r;
        st.s = s;
        out.push_back(st);
      }
    }
    // R4: internal triangle with 1+1 internal vertices.
    for (int r = 1; r <= g.n; ++r) {
      int s = pos_add(g.n, r, 2), t = pos_add(g.n, r, 4);
      if (g.has_chord(r, s) && g.has_chord(s, t) && g.has_chord(r, t)) {
        ReductionStep st;
        st.kind = ReductionKind::R4;
        st.r = r;
        st.s = s;
        st.t = t;
        out.push_back(st);
      }
    }
  }
  return out;
}

std::vector<ReductionStep> find_claim1_steps(const MopGraph& g) {
  std::vector<ReductionStep> out;
  if (g.n < 6) return out;
  for (int r = 1; r <= g.n; ++r) {
    int s = pos_add(g.n, r, 4);
    if (!g.has_chord(r, s)) continue;
    if (section_of(g, r, s).elementary() && g.is_deg2[pos_add(g.n, r, 2)]) {
      ReductionStep st;
      st.kind = ReductionKind::Claim1Delete;
      st.r = r;
      st.s = s;
      out.push_back(st);
    }
  }
  return out;
}

std::vector<ReductionStep> find_triangle_steps(const MopGraph& g) {
  std::vector<ReductionStep> out;
  for (const auto& f : internal_triangles(g)) {
    const std::array<std::array<int, 3>, 3> orients{
        {{f[0], f[1], f[2]}, {f[1], f[2], f[0]}, {f[2], f[0], f[1]}}};
    for (const auto& o : orients) {
      int r = o[0], s = o[1], t = o[2];
      int span1 = seg_len(g.n, r, s), span2 = seg_len(g.n, s, t);
      bool near_r = g.is_deg2[next_pos(g.n, r)];
      bool near_t = g.is_deg2[prev_pos(g.n, t)];
      if (span1 == 3 && span2 == 3) {
        if (near_r && near_t) {
          ReductionStep st;
          st.kind = ReductionKind::Claim2ContractBoth;
          st.r = r;
          st.s = s;
          st.t = t;
          out.push_back(st);
        } else if (near_r != near_t) {
          ReductionStep st;
          st.kind = ReductionKind::Claim2ContractOne;
          st.r = r;
          st.s = s;
          st.t = t;
          st.aux = near_r ? s : r;  // first vertex of the contracted section
          out.push_back(st);
        }
      } else if ((span1 == 2 && span2 == 3) || (span1 == 3 && span2 == 2)) {
        if (near_r && near_t) {
          ReductionStep st;
          st.kind = ReductionKind::FinalContract;
          st.r = r;
          st.s = s;
          st.t = t;
          out.push_back(st);
        }
      }
    }
  }
  return out;
}

StepContract step_contract(ReductionKind k) {
  switch (k) {
    case ReductionKind::R1: return {4, true, false};
    case ReductionKind::R2: return {4, false, false};
    case ReductionKind::R3: return {4, true, false};
    case ReductionKind::R4: return {4, true, false};
    case ReductionKind::Claim1Delete: return {3, true, true};
    case ReductionKind::Claim2ContractBoth: return {4, true, true};
    case ReductionKind::Claim2ContractOne: return {3, true, true};
    case ReductionKind::FinalContract: return {3, true, true};
  }
  return {};
}

bool step_certificate_ok(const AppliedStep& ap) {
  StepContract sc = step_contract(ap.step.kind);
  int drop = ap.n_pre - ap.n_post;
  if (sc.n_drop_exact ? drop != sc.n_drop_min : drop < sc.n_drop_min) return false;
  return ap.k_post <= (sc.k_must_drop ? ap.k_pre - 1 : ap.k_pre);
}

AppliedStep apply_step(const MopGraph& g, const ReductionStep& step) {
  auto need = [&](bool cond, const std::string& what) {
    if (!cond) fail(Errc::PreconditionViolated, step_str(step) + ": " + what);
  };
  int r = step.r, s = step.s, t = step.t;
  need(r >= 1 && r <= g.n && s >= 1 && s <= g.n, "anchor out of range");

  AppliedStep ap;
  ap.step = step;
  ap.pre = g;
  ap.n_pre = g.n;
  ap.k_pre = essential_pair_count(g);

  RunResult rr;
  try {
    switch (step.kind) {
      case ReductionKind::R1: {
        need(seg_len(g.n, r, s) == 5, "section must have six vertices");
        need(g.has_chord(r, s), "base is not a chord");
        need(section_of(g, r, s).elementary(), "section is not elementary");
        rr = delete_internals(g, r, s);
        break;
      }
      case ReductionKind::R2: {
        need(!step.whole_graph, "whole-graph candidate is a base case, not a reduction");
        need(g.has_chord(r, s), "base is not a chord");
        Section sec = section_of(g, r, s);
        need(sec.vertex_count() >= 6, "section must have at least six vertices");
        need(step.aux >= 1 && step.aux <= g.n && section_dominated_by(g, sec, step.aux),
             "aux vertex does not dominate the section");
        rr = delete_internals(g, r, s);
        break;
      }
      case ReductionKind::R3: {
        need(g.n >= 7, "result would fall below three vertices");
        need(seg_len(g.n, r, s) == 4, "section must have five vertices");
        need(g.has_chord(r, s), "base is not a chord");
        need(section_of(g, r, s).elementary(), "section is not elementary");
        need(!g.is_deg2[pos_add(g.n, r, 2)], "middle internal vertex must not have degree 2");
        rr = contract_run(g, r, s);
        break;
      }
      case ReductionKind::R4: {
        need(g.n >= 7, "result would fall below three vertices");
        need(s == pos_add(g.n, r, 2) && t == pos_add(g.n, r, 4), "triangle must span 1+1 internal vertices");
        need(g.has_chord(r, s) && g.has_chord(s, t) && g.has_chord(r, t),
             "triangle sides must be chords");
        rr = contract_run(g, r, t);
        break;
      }
      case ReductionKind::Claim1Delete: {
        need(g.n >= 6, "result would fall below three vertices");
        need(seg_len(g.n, r, s) == 4, "section must have five vertices");
        need(g.has_chord(r, s), "base is not a chord");
        need(section_of(g, r, s).elementary(), "section is not elementary");
        need(g.is_deg2[pos_add(g.n, r, 2)], "middle internal vertex must have degree 2");
        rr = delete_internals(g, r, s);
        break;
      }
      case ReductionKind::Claim2ContractBoth: {
        need(s == pos_add(g.n, r, 3) && t == pos_add(g.n, r, 6), "triangle must span 2+2 internal vertices");
        need(g.has_chord(r, s) && g.has_chord(s, t) && g.has_chord(r, t),
             "triangle sides must be chords");
        need(g.is_deg2[next_pos(g.n, r)] && g.is_deg2[prev_pos(g.n, t)],
             "both near-corner vertices must have degree 2");
        rr = contract_run(g, next_pos(g.n, r), prev_pos(g.n, t));
        break;
      }
      case ReductionKind::Claim2ContractOne: {
        need(s == pos_add(g.n, r, 3) && t == pos_add(g.n, r, 6), "triangle must span 2+2 internal vertices");
        need(g.has_chord(r, s) && g.has_chord(s, t) && g.has_chord(r, t),
             "triangle sides must be chords");
        bool near_r = g.is_deg2[next_pos(g.n, r)];
        bool near_t = g.is_deg2[prev_pos(g.n, t)];
        need(near_r != near_t, "exactly one near-corner vertex must have degree 2");
        need(step.aux == (near_r ? s : r), "aux must name the contracted section");
        rr = near_r ? contract_run(g, s, t) : contract_run(g, r, s);
        break;
      }
      case ReductionKind::FinalContract: {
        int span1 = seg_len(g.n, r, s), span2 = seg_len(g.n, s, t);
        need((span1 == 2 && span2 == 3) || (span1 == 3 && span2 == 2),
             "triangle must span 1+2 internal vertices");
        need(g.has_chord(r, s) && g.has_chord(s, t) && g.has_chord(r, t),
             "triangle sides must be chords");
        need(g.is_deg2[next_pos(g.n, r)] && g.is_deg2[prev_pos(g.n, t)],
             "both near-corner vertices must have degree 2");
        rr = contract_run(g, next_pos(g.n, r), prev_pos(g.n, t));
        break;
      }
    }
  } catch (const Error& e) {
    if (e.code() == Errc::PreconditionViolated) throw;
    fail(Errc::ResultNotMaximalOuterplane,
         step_str(step) + ": reduced graph failed validation: " + e.what());
  }

  ap.post = std::move(rr.post);
  ap.vertex_map = std::move(rr.vmap);
  ap.contracted_post = rr.contracted_post;
  ap.n_post = ap.post.n;
  ap.k_post = essential_pair_count(ap.post);
  return ap;
}

std::vector<int> lift(const AppliedStep& ap, const std::vector<int>& post_set) {
  const MopGraph& pre = ap.pre;
  const MopGraph& post = ap.post;
  if (!is_dominating(to_simple(post), post_set))
    fail(Errc::NotDominating, "set to lift does not dominate the reduced graph");

  bool has_x = false;
  std::vector<int> out;
  for (int v : post_set) {
    if (v < 1 || v > post.n) fail(Errc::BadIndex, "lift set member out of range");
    if (ap.contracted_post && v == ap.contracted_post) {
      has_x = true;
      continue;
    }
    out.push_back(ap.vertex_map[v][0]);
  }

  int n = pre.n;
  int r = ap.step.r, s = ap.step.s, t = ap.step.t;
  switch (ap.step.kind) {
    case ReductionKind::R1: {
      int d = section_of(pre, r, s).deg2_internal[0];
      switch (seg_len(n, r, d)) {
        case 1: out.push_back(r); break;
        case 2: out.push_back(pos_add(n, r, 3)); break;
        case 3: out.push_back(pos_add(n, r, 2)); break;
        default: out.push_back(s); break;
      }
      break;
    }
    case ReductionKind::R2:
      out.push_back(ap.step.aux);
      break;
    case ReductionKind::R3: {
      if (has_x) {
        out.push_back(r);
        out.push_back(s);
      } else {
        int d = section_of(pre, r, s).deg2_internal[0];
        out.push_back(seg_len(n, r, d) == 1 ? r : s);
      }
      break;
    }
    case ReductionKind::R4:
      if (has_x) {
        out.push_back(r);
        out.push_back(t);
      } else {
        out.push_back(s);
      }
      break;
    case ReductionKind::Claim1Delete: {
      bool vr_in = std::find(out.begin(), out.end(), r) != out.end();
      out.push_back(pos_add(n, r, vr_in ? 3 : 1));
      break;
    }
    case ReductionKind::Claim2ContractBoth:
    case ReductionKind::FinalContract:
      out.push_back(r);
      out.push_back(t);
      break;
    case ReductionKind::Claim2ContractOne: {
      if (has_x) {
        int first = ap.step.aux;
        out.push_back(first);
        out.push_back(first == s ? t : s);
      } else {
        out.push_back(s);
      }
      break;
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!is_dominating(to_simple(pre), out))
    fail(Errc::CertificateViolated,
         step_str(ap.step) + ": lifted set does not dominate the original graph");
  if (out.size() > post_set.size() + 1)
    fail(Errc::CertificateViolated, step_str(ap.step) + ": lift exceeded the one-vertex budget");
  return out;
}

namespace {

nlohmann::json chords_json(const MopGraph& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : g.chords) arr.push_back({c.first, c.second});
  return arr;
}

}  // namespace

MopResult dominate_mop(const MopGraph& g) {
  ReductionTrace trace;
  trace.input = g;
  trace.n = g.n;
  trace.k = essential_pair_count(g);
  trace.bound = static_cast<int>(ceil_div(trace.n + trace.k, 4));

  MopGraph cur = g;
  bool based = false;
  while (!based) {
    SimpleGraph sg = to_simple(cur);
    if (auto dv = dominating_vertex(sg)) {
      BaseCase base;
      base.kind = BaseKind::DominatingVertex;
      base.graph = cur;
      base.set = DominatingSet{{*dv}, 1, graph_fingerprint(sg)};
      base.n = cur.n;
      base.k = essential_pair_count(cur);
      trace.base = std::move(base);
      based = true;
      break;
    }
    if (cur.n <= 6) {
      BaseCase base;
      base.kind = BaseKind::ExactSmall;
      base.graph = cur;
      base.set = gamma_mop_dp(cur);
      base.n = cur.n;
      base.k = essential_pair_count(cur);
      trace.base = std::move(base);
      based = true;
      break;
    }

    bool advanced = false;
    auto try_steps = [&](const std::vector<ReductionStep>& cands) {
      for (const auto& st : cands) {
        if (st.whole_graph) continue;
        try {
          AppliedStep ap = apply_step(cur, st);
          if (!step_certificate_ok(ap)) {
            trace.anomalies.push_back(step_str(st) + ": certificate failed (n " +
                                      std::to_string(ap.n_pre) + "->" + std::to_string(ap.n_post) +
                                      ", k " + std::to_string(ap.k_pre) + "->" +
                                      std::to_string(ap.k_post) + ")");
            continue;
          }
          cur = ap.post;
          trace.steps.push_back(std::move(ap));
          advanced = true;
          return;
        } catch (const Error& e) {
          trace.anomalies.push_back(step_str(st) + ": " + e.what());
        }
      }
    };

    try_steps(find_applicable(cur));
    if (advanced) continue;
    try_steps(find_claim1_steps(cur));
    if (advanced) continue;
    if (is_striped(cur)) {
      BaseCase base;
      base.kind = BaseKind::StripedExact;
      base.graph = cur;
      base.set = gamma_mop_dp(cur);
      base.n = cur.n;
      base.k = essential_pair_count(cur);
      if (4 * base.set.size > cur.n + 2)
        trace.anomalies.push_back("striped base exceeds (n+2)/4 at n=" + std::to_string(cur.n));
      trace.base = std::move(base);
      based = true;
      break;
    }
    try_steps(find_triangle_steps(cur));
    if (advanced) continue;

    trace.anomalies.push_back("no applicable step on an irreducible non-striped graph at n=" +
                              std::to_string(cur.n));
    BaseCase base;
    base.kind = BaseKind::AnomalyExact;
    base.graph = cur;
    base.set = gamma_mop_dp(cur);
    base.n = cur.n;
    base.k = essential_pair_count(cur);
    trace.base = std::move(base);
    based = true;
  }

  std::vector<int> d = trace.base.set.vertices;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) d = lift(*it, d);

  SimpleGraph in_sg = to_simple(g);
  if (!is_dominating(in_sg, d)) fail(Errc::Internal, "lift chain lost domination");
  if (static_cast<int>(d.size()) > trace.bound) {
    nlohmann::json detail;
    detail["n"] = trace.n;
    detail["k"] = trace.k;
    detail["bound"] = trace.bound;
    detail["size"] = d.size();
    detail["set"] = d;
    detail["chords"] = chords_json(g);
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& stp : trace.steps) {
      steps.push_back({{"kind", reduction_kind_name(stp.step.kind)},
                       {"r", stp.step.r},
                       {"s", stp.step.s},
                       {"t", stp.step.t},
                       {"n_post", stp.n_post},
                       {"k_post", stp.k_post}});
    }
    detail["steps"] = steps;
    detail["base"] = base_kind_name(trace.base.kind);
    detail["anomalies"] = trace.anomalies;
    fail(Errc::BoundViolated, "constructed set exceeds ceil((n+k)/4)", detail.dump());
  }

  trace.final_set = DominatingSet{d, static_cast<int>(d.size()), graph_fingerprint(in_sg)};
  MopResult res;
  res.set = trace.final_set;
  res.trace = std::move(trace);
  return res;
}

namespace {

bool same_mop(const MopGraph& a, const MopGraph& b) {
  return a.n == b.n && a.chords == b.chords;
}

}  // namespace

TraceCheck verify_trace(const ReductionTrace& trace) {
  TraceCheck tc;
  auto bad = [&](std::string m) {
    tc.ok = false;
    tc.messages.push_back(std::move(m));
  };
  try {
    if (trace.n != trace.input.n) bad("recorded n does not match the input graph");
    if (trace.k != essential_pair_count(trace.input)) bad("recorded k does not match the input graph");
    if (trace.bound != static_cast<int>(ceil_div(trace.n + trace.k, 4)))
      bad("recorded bound is not ceil((n+k)/4)");

    MopGraph cur = trace.input;
    for (size_t i = 0; i < trace.steps.size(); ++i) {
      const AppliedStep& st = trace.steps[i];
      std::string tag = "step " + std::to_string(i) + " " + step_str(st.step);
      if (!same_mop(st.pre, cur)) {
        bad(tag + ": recorded pre graph does not match the chain");
        break;
      }
      AppliedStep re = apply_step(cur, st.step);
      if (!same_mop(re.post, st.post)) bad(tag + ": recorded post graph does not match replay");
      if (re.vertex_map != st.vertex_map) bad(tag + ": recorded vertex map does not match replay");
      if (re.n_pre != st.n_pre || re.k_pre != st.k_pre || re.n_post != st.n_post ||
          re.k_post != st.k_post)
        bad(tag + ": recorded n/k ledger does not match replay");
      if (!step_certificate_ok(re)) bad(tag + ": certificate does not hold");
      cur = st.post;
    }

    if (!same_mop(trace.base.graph, cur)) bad("base graph does not match the reduction chain");
    if (trace.base.n != trace.base.graph.n) bad("base n mismatch");
    if (trace.base.k != essential_pair_count(trace.base.graph)) bad("base k mismatch");
    SimpleGraph base_sg = to_simple(trace.base.graph);
    if (!is_dominating(base_sg, trace.base.set.vertices)) bad("base set does not dominate the base graph");
    switch (trace.base.kind) {
      case BaseKind::DominatingVertex:
        if (trace.base.set.size != 1) bad("dominating-vertex base must have one vertex");
        break;
      case BaseKind::ExactSmall:
      case BaseKind::StripedExact:
      case BaseKind::AnomalyExact: {
        DominatingSet exact = gamma_mop_dp(trace.base.graph);
        if (exact.size != trace.base.set.size) bad("base set is not minimum");
        break;
      }
    }

    std::vector<int> d = trace.base.set.vertices;
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) d = lift(*it, d);
    if (d != trace.final_set.vertices) bad("lift replay does not reproduce the recorded final set");
    if (!is_dominating(to_simple(trace.input), trace.final_set.vertices))
      bad("recorded final set does not dominate the input graph");
    if (trace.final_set.size != static_cast<int>(trace.final_set.vertices.size()))
      bad("recorded final size does not match the vertex list");
    if (trace.final_set.size > trace.bound) bad("final set exceeds ceil((n+k)/4)");
  } catch (const Error& e) {
    bad(std::string("replay error: ") + e.what());
  }
  return tc;
}

IrreducibilityReport irreducibility_report(const MopGraph& g, Rational alpha) {
  if (g.n < 7) fail(Errc::PreconditionViolated, "irreducibility analysis needs n >= 7");
  if (alpha < Rational::make(1, 4))
    fail(Errc::PreconditionViolated, "irreducibility analysis needs alpha >= 1/4");
  IrreducibilityReport rep;
  rep.alpha = alpha;
  rep.candidates = find_applicable(g);
  rep.reducible = false;
  for (const auto& st : rep.candidates)
    if (!st.whole_graph) rep.reducible = true;

  for (const auto& sec : maximal_elementary_sections(g)) {
    int m = static_cast<int>(sec.internal.size());
    std::string tag = "section (" + std::to_string(sec.r) + "," + std::to_string(sec.s) + ")";
    if (m > 3)
      rep.clause1_violations.push_back(tag + " has " + std::to_string(m) + " internal vertices");
    else if (m == 3 && sec.deg2_internal[0] != pos_add(g.n, sec.r, 2))
      rep.clause1_violations.push_back(tag + " degree-2 vertex is not the middle internal vertex");
  }

  for (const auto& f : internal_triangles(g)) {
    const std::array<std::array<int, 3>, 3> orients{
        {{f[0], f[1], f[2]}, {f[1], f[2], f[0]}, {f[2], f[0], f[1]}}};
    for (const auto& o : orients) {
      int total = seg_len(g.n, o[0], o[1]) - 1 + seg_len(g.n, o[1], o[2]) - 1;
      if (total < 3)
        rep.clause2_violations.push_back(
            "triangle (" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
            std::to_string(f[2]) + ") sections around " + std::to_string(o[1]) + " hold " +
            std::to_string(total) + " internal vertices");
    }
  }

  for (int r = 1; r <= g.n; ++r)
    for (int span = 5; span <= g.n - 2; ++span) {
      int s = pos_add(g.n, r, span);
      if (!g.has_chord(r, s)) continue;
      Section sec = section_of(g, r, s);
      if (auto dom = section_dominating_vertex(g, sec))
        rep.clause3_violations.push_back("section (" + std::to_string(r) + "," + std::to_string(s) +
                                         ") is dominated by vertex " + std::to_string(*dom));
    }
  return rep;
}

}  // namespace outerdom
