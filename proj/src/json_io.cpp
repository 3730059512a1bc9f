#include "outerdom/json_io.hpp"

#include <cmath>
#include <sstream>

namespace outerdom {

namespace {

Json pairs_json(const std::vector<Chord>& cs) {
  Json arr = Json::array();
  for (const auto& c : cs) arr.push_back({c.first, c.second});
  return arr;
}

std::vector<std::pair<int, int>> pairs_from(const Json& j, const char* what) {
  if (!j.is_array()) fail(Errc::ParseError, std::string(what) + " must be an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail(Errc::ParseError, std::string(what) + " entries must be [a, b] integer pairs");
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(Errc::ParseError, std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

std::string type_tag(const Json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "expected a JSON object");
  if (!j.contains("type") || !j["type"].is_string())
    fail(Errc::ParseError, "missing \"type\" tag");
  return j["type"].get<std::string>();
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "malformed JSON");
  return j;
}

Json to_json(const MopGraph& g) {
  return Json{{"type", "mop"}, {"n", g.n}, {"chords", pairs_json(g.chords)}};
}

Json to_json(const SimpleGraph& g) {
  Json arr = Json::array();
  for (const auto& e : g.edges) arr.push_back({e.first, e.second});
  return Json{{"type", "graph"}, {"n", g.n}, {"edges", arr}};
}

Json to_json(const HamTriangulation& t) {
  return Json{{"type", "ham-triangulation"},
              {"n", t.n},
              {"inner", pairs_json(t.inner)},
              {"outer", pairs_json(t.outer)}};
}

Json to_json(const DominatingSet& s) {
  return Json{{"vertices", s.vertices}, {"size", s.size}, {"graph_id", s.graph_id}};
}

Json to_json(const Rational& r) {
  return Json{{"num", r.num}, {"den", r.den}, {"decimal", r.as_double()}};
}

Json to_json(const ConsecutivePair& p) {
  return Json{{"r", p.r}, {"s", p.s}, {"gap", p.gap}, {"essential", p.essential}};
}

Json to_json(const BoundsReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) pairs.push_back(to_json(p));
  Json j{{"type", "bounds"},
         {"n", r.n},
         {"t", r.t},
         {"k", r.k},
         {"degree_two", r.degree_two},
         {"bad", r.bad},
         {"pairs", pairs},
         {"bound_nt4", to_json(r.bound_nt4)},
         {"bound_nk4_ceil", r.bound_nk4_ceil},
         {"bound_nk4", to_json(r.bound_nk4)}};
  j["gamma"] = r.gamma ? Json(*r.gamma) : Json(nullptr);
  j["within_nt4"] = r.gamma ? Json(r.within_nt4) : Json(nullptr);
  j["within_nk4_ceil"] = r.gamma ? Json(r.within_nk4_ceil) : Json(nullptr);
  j["exceeds_nk4"] = r.gamma ? Json(r.exceeds_nk4) : Json(nullptr);
  return j;
}

Json to_json(const ReductionStep& s) {
  return Json{{"kind", reduction_kind_name(s.kind)}, {"r", s.r},     {"s", s.s},
              {"t", s.t},                            {"aux", s.aux}, {"whole_graph", s.whole_graph}};
}

Json to_json(const AppliedStep& s) {
  Json vmap = Json::array();
  for (int v = 1; v < static_cast<int>(s.vertex_map.size()); ++v)
    vmap.push_back({v, s.vertex_map[v]});
  return Json{{"step", to_json(s.step)},
              {"pre", to_json(s.pre)},
              {"post", to_json(s.post)},
              {"vertex_map", vmap},
              {"n_pre", s.n_pre},
              {"k_pre", s.k_pre},
              {"n_post", s.n_post},
              {"k_post", s.k_post},
              {"contracted_post", s.contracted_post}};
}

Json to_json(const BaseCase& b) {
  return Json{{"kind", base_kind_name(b.kind)},
              {"graph", to_json(b.graph)},
              {"set", to_json(b.set)},
              {"n", b.n},
              {"k", b.k}};
}

Json to_json(const ReductionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  return Json{{"type", "trace"},
              {"input", to_json(t.input)},
              {"n", t.n},
              {"k", t.k},
              {"bound", t.bound},
              {"steps", steps},
              {"base", to_json(t.base)},
              {"final_set", to_json(t.final_set)},
              {"anomalies", t.anomalies}};
}

Json to_json(const TraceCheck& c) {
  return Json{{"type", "trace-check"}, {"ok", c.ok}, {"messages", c.messages}};
}

Json to_json(const SideReport& r) {
  return Json{{"side", side_name(r.side)},
              {"two_chords", pairs_json(r.chords2)},
              {"two_vertices", r.vertices2},
              {"two_chord_count", static_cast<int>(r.chords2.size())},
              {"two_vertex_count", static_cast<int>(r.vertices2.size())},
              {"bijection", r.bijection}};
}

Json to_json(const PipelineReport& r) {
  Json j{{"type", "pipeline"},
         {"n", r.n},
         {"c", r.c},
         {"c_int", r.c_int},
         {"c_ext", r.c_ext},
         {"branch", pipeline_branch_name(r.branch)},
         {"set", to_json(r.set)},
         {"size", r.set.size},
         {"bound_5n16", r.bound_5n16},
         {"within_bound", r.within_bound},
         {"enforced", r.enforced},
         {"warnings", r.warnings},
         {"mitigations", r.mitigations}};
  j["side"] = r.branch == PipelineBranch::SideEngine ? Json(side_name(r.side)) : Json(nullptr);
  j["habo_bound"] = r.habo_bound ? Json(*r.habo_bound) : Json(nullptr);
  j["trace"] = r.trace ? to_json(*r.trace) : Json(nullptr);
  return j;
}

Json to_json(const IrreducibilityReport& r) {
  Json cands = Json::array();
  for (const auto& c : r.candidates) cands.push_back(to_json(c));
  return Json{{"type", "irreducibility"},
              {"alpha", to_json(r.alpha)},
              {"reducible", r.reducible},
              {"candidates", cands},
              {"clause1_violations", r.clause1_violations},
              {"clause2_violations", r.clause2_violations},
              {"clause3_violations", r.clause3_violations},
              {"clauses_hold", r.clauses_hold()}};
}

MopGraph mop_from_json(const Json& j) {
  if (type_tag(j) != "mop") fail(Errc::ParseError, "expected \"type\":\"mop\"");
  std::vector<Chord> chords;
  for (auto& p : pairs_from(j.contains("chords") ? j["chords"] : Json(), "chords"))
    chords.push_back(p);
  return build_mop(int_field(j, "n"), std::move(chords));
}

SimpleGraph graph_from_json(const Json& j) {
  if (type_tag(j) != "graph") fail(Errc::ParseError, "expected \"type\":\"graph\"");
  return build_graph(int_field(j, "n"), pairs_from(j.contains("edges") ? j["edges"] : Json(), "edges"));
}

HamTriangulation ht_from_json(const Json& j) {
  std::string tag = type_tag(j);
  if (tag == "ham-triangulation") {
    std::vector<Chord> inner, outer;
    for (auto& p : pairs_from(j.contains("inner") ? j["inner"] : Json(), "inner"))
      inner.push_back(p);
    for (auto& p : pairs_from(j.contains("outer") ? j["outer"] : Json(), "outer"))
      outer.push_back(p);
    // Side chords may arrive in drawing order; canonicalize like the builder.
    for (auto& c : inner)
      if (c.first > c.second) std::swap(c.first, c.second);
    for (auto& c : outer)
      if (c.first > c.second) std::swap(c.first, c.second);
    return build_ht(int_field(j, "n"), std::move(inner), std::move(outer));
  }
  if (tag == "graph" && j.contains("cycle")) {
    SimpleGraph g = graph_from_json(Json{{"type", "graph"},
                                         {"n", j.contains("n") ? j["n"] : Json()},
                                         {"edges", j.contains("edges") ? j["edges"] : Json()}});
    if (!j["cycle"].is_array()) fail(Errc::ParseError, "\"cycle\" must be an array");
    std::vector<int> cycle;
    for (const auto& v : j["cycle"]) {
      if (!v.is_number_integer()) fail(Errc::ParseError, "\"cycle\" entries must be integers");
      cycle.push_back(v.get<int>());
    }
    return embed_with_cycle(g.n, g.edges, cycle);
  }
  fail(Errc::ParseError, "expected \"ham-triangulation\" or \"graph\" with a \"cycle\"");
}

DominatingSet set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    fail(Errc::ParseError, "expected an object with a \"vertices\" array");
  DominatingSet s;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_integer()) fail(Errc::ParseError, "\"vertices\" entries must be integers");
    s.vertices.push_back(v.get<int>());
  }
  s.size = j.contains("size") && j["size"].is_number_integer() ? j["size"].get<int>()
                                                               : static_cast<int>(s.vertices.size());
  if (s.size != static_cast<int>(s.vertices.size()))
    fail(Errc::ParseError, "\"size\" does not match the vertex list");
  if (j.contains("graph_id") && j["graph_id"].is_number_unsigned())
    s.graph_id = j["graph_id"].get<std::uint64_t>();
  return s;
}

namespace {

// Body of trace_from_json; the wrapper turns any stray JSON access error
// (missing key, wrong value type) into ParseError.
ReductionTrace trace_from_json_checked(const Json& j) {
  ReductionTrace t;
  t.input = mop_from_json(j.at("input"));
  t.n = int_field(j, "n");
  t.k = int_field(j, "k");
  t.bound = int_field(j, "bound");
  if (!j.contains("steps") || !j["steps"].is_array())
    fail(Errc::ParseError, "missing \"steps\" array");
  for (const auto& sj : j["steps"]) {
    AppliedStep st;
    const Json& stepj = sj.at("step");
    auto kind = reduction_kind_from_name(stepj.at("kind").get<std::string>());
    if (!kind) fail(Errc::ParseError, "unknown reduction kind in trace");
    st.step.kind = *kind;
    st.step.r = int_field(stepj, "r");
    st.step.s = int_field(stepj, "s");
    st.step.t = int_field(stepj, "t");
    st.step.aux = int_field(stepj, "aux");
    st.step.whole_graph = stepj.contains("whole_graph") && stepj["whole_graph"].get<bool>();
    st.pre = mop_from_json(sj.at("pre"));
    st.post = mop_from_json(sj.at("post"));
    st.vertex_map.assign(st.post.n + 1, {});
    if (!sj.contains("vertex_map") || !sj["vertex_map"].is_array())
      fail(Errc::ParseError, "missing \"vertex_map\"");
    for (const auto& row : sj["vertex_map"]) {
      if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer() ||
          !row[1].is_array())
        fail(Errc::ParseError, "vertex_map rows must be [post, [pre...]]");
      int post = row[0].get<int>();
      if (post < 1 || post > st.post.n) fail(Errc::ParseError, "vertex_map index out of range");
      for (const auto& pv : row[1]) st.vertex_map[post].push_back(pv.get<int>());
    }
    st.n_pre = int_field(sj, "n_pre");
    st.k_pre = int_field(sj, "k_pre");
    st.n_post = int_field(sj, "n_post");
    st.k_post = int_field(sj, "k_post");
    st.contracted_post = int_field(sj, "contracted_post");
    t.steps.push_back(std::move(st));
  }
  const Json& bj = j.at("base");
  std::string bk = bj.at("kind").get<std::string>();
  bool known = false;
  for (BaseKind k : {BaseKind::ExactSmall, BaseKind::DominatingVertex, BaseKind::StripedExact,
                     BaseKind::AnomalyExact})
    if (bk == base_kind_name(k)) {
      t.base.kind = k;
      known = true;
    }
  if (!known) fail(Errc::ParseError, "unknown base kind in trace");
  t.base.graph = mop_from_json(bj.at("graph"));
  t.base.set = set_from_json(bj.at("set"));
  t.base.n = int_field(bj, "n");
  t.base.k = int_field(bj, "k");
  t.final_set = set_from_json(j.at("final_set"));
  if (j.contains("anomalies"))
    for (const auto& a : j["anomalies"]) t.anomalies.push_back(a.get<std::string>());
  return t;
}

}  // namespace

ReductionTrace trace_from_json(const Json& j) {
  if (type_tag(j) != "trace") fail(Errc::ParseError, "expected \"type\":\"trace\"");
  try {
    return trace_from_json_checked(j);
  } catch (const Json::exception& e) {
    fail(Errc::ParseError, std::string("malformed trace: ") + e.what());
  }
}

ParsedGraph parse_graph_json(const Json& j) {
  ParsedGraph out;
  std::string tag = type_tag(j);
  if (tag == "mop") {
    out.kind = ParsedGraph::Kind::Mop;
    out.mop = mop_from_json(j);
    out.graph = to_simple(out.mop);
  } else if (tag == "ham-triangulation" || (tag == "graph" && j.contains("cycle"))) {
    out.kind = ParsedGraph::Kind::Ht;
    out.ht = ht_from_json(j);
    out.graph = to_simple(out.ht);
  } else if (tag == "graph") {
    out.kind = ParsedGraph::Kind::Graph;
    out.graph = graph_from_json(j);
  } else {
    fail(Errc::ParseError, "unknown graph type \"" + tag + "\"");
  }
  return out;
}

namespace {

void dot_positions(std::ostringstream& os, int n) {
  for (int v = 1; v <= n; ++v) {
    double ang = 2.0 * 3.14159265358979323846 * (v - 1) / n;
    // clockwise from the top, matching the boundary orientation
    double x = 3.0 * std::sin(ang), y = 3.0 * std::cos(ang);
    os << "  " << v << " [pos=\"" << x << "," << y << "!\"];\n";
  }
}

}  // namespace

std::string mop_to_dot(const MopGraph& g) {
  std::vector<char> bad(g.n + 1, 0);
  for (int v : bad_vertices(g)) bad[v] = 1;
  std::ostringstream os;
  os << "graph mop {\n  layout=neato;\n  node [shape=circle, fontsize=10];\n";
  for (int v = 1; v <= g.n; ++v) {
    os << "  " << v << " [";
    if (bad[v])
      os << "style=filled, fillcolor=\"#f4a582\", peripheries=2, "
            "tooltip=\"bad vertex\"";
    else if (g.is_deg2[v])
      os << "style=filled, fillcolor=\"#92c5de\", tooltip=\"degree-2 vertex\"";
    else
      os << "style=solid";
    os << "];\n";
  }
  dot_positions(os, g.n);
  for (int v = 1; v <= g.n; ++v)
    os << "  " << v << " -- " << next_pos(g.n, v) << ";\n";
  for (const auto& c : g.chords)
    os << "  " << c.first << " -- " << c.second << " [style=dashed, color=\"#2166ac\"];\n";
  os << "}\n";
  return os.str();
}

std::string ht_to_dot(const HamTriangulation& t) {
  std::vector<char> is2(t.n + 1, 0);
  for (int v : two_vertices(t)) is2[v] = 1;
  std::ostringstream os;
  os << "graph triangulation {\n  layout=neato;\n  node [shape=circle, fontsize=10];\n";
  for (int v = 1; v <= t.n; ++v) {
    os << "  " << v << " [";
    if (is2[v])
      os << "style=filled, fillcolor=\"#92c5de\", tooltip=\"2-vertex\"";
    else
      os << "style=solid";
    os << "];\n";
  }
  dot_positions(os, t.n);
  for (int v = 1; v <= t.n; ++v)
    os << "  " << v << " -- " << next_pos(t.n, v) << ";\n";
  for (const auto& c : t.inner)
    os << "  " << c.first << " -- " << c.second << " [style=dashed, color=\"#2166ac\"];\n";
  for (const auto& c : t.outer)
    os << "  " << c.first << " -- " << c.second << " [style=dotted, color=\"#b2182b\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace outerdom
