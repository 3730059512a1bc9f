// Shared-library boundary: every exported entry point exercised through
// the C header only, including error reporting and callback streaming.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "outerdom.h"

namespace {

// RAII for strings handed out by the library.
struct CStr {
  char* p = nullptr;
  ~CStr() { od_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
  bool has(const std::string& needle) const { return str().find(needle) != std::string::npos; }
};

struct Graph {
  od_graph* g = nullptr;
  ~Graph() { od_graph_free(g); }
};

}  // namespace

TEST_CASE("version and error channel") {
  CHECK(std::string(od_version()) == "0.1.0");

  Graph g;
  CHECK(od_graph_from_json("{", &g.g) == OD_ERR_PARSE);
  CHECK(std::string(od_last_error()) != "");
  CHECK(g.g == nullptr);  // outputs untouched on failure

  CStr names;
  CHECK(od_named_list(&names.p) == OD_OK);
  CHECK(std::string(od_last_error()) == "");  // cleared by success
}

TEST_CASE("named instances round-trip through handles and JSON") {
  CStr names;
  REQUIRE(od_named_list(&names.p) == OD_OK);
  for (const char* name : {"figure2", "hexagon_fan3", "octahedron", "seven_vertex_fig1"})
    CHECK(names.has(name));

  Graph fig;
  REQUIRE(od_named("figure2", &fig.g) == OD_OK);
  CHECK(od_graph_kind(fig.g) == OD_GRAPH_MOP);
  CHECK(od_graph_n(fig.g) == 14);

  CStr json;
  REQUIRE(od_graph_to_json(fig.g, &json.p) == OD_OK);
  CHECK(json.has("\"type\":\"mop\""));
  Graph back;
  CHECK(od_graph_from_json(json.p, &back.g) == OD_OK);
  CHECK(od_graph_n(back.g) == 14);

  Graph oct;
  REQUIRE(od_named("octahedron", &oct.g) == OD_OK);
  CHECK(od_graph_kind(oct.g) == OD_GRAPH_TRIANGULATION);
  CHECK(od_graph_n(oct.g) == 6);

  Graph none;
  CHECK(od_named("no_such_graph", &none.g) == OD_ERR_UNKNOWN_NAME);
  CHECK(od_graph_kind(nullptr) == -1);
  CHECK(od_graph_n(nullptr) == -1);
}

TEST_CASE("exact domination through both solver routes") {
  Graph hex;
  REQUIRE(od_named("hexagon_fan3", &hex.g) == OD_OK);
  CStr rep;
  REQUIRE(od_gamma(hex.g, 64, &rep.p) == OD_OK);
  CHECK(rep.has("\"type\":\"gamma-report\""));
  CHECK(rep.has("\"gamma\":2"));
  CHECK(rep.has("\"method\":\"dp\""));

  Graph oct;
  REQUIRE(od_named("octahedron", &oct.g) == OD_OK);
  CStr rep2;
  REQUIRE(od_gamma(oct.g, 64, &rep2.p) == OD_OK);
  CHECK(rep2.has("\"gamma\":2"));
  CHECK(rep2.has("\"method\":\"bb\""));

  CStr rep3;
  CHECK(od_gamma(oct.g, 4, &rep3.p) == OD_ERR_SOLVER_TOO_LARGE);
}

TEST_CASE("bounds, dominate, and trace replay agree") {
  Graph hex;
  REQUIRE(od_named("hexagon_fan3", &hex.g) == OD_OK);
  CStr bounds;
  REQUIRE(od_bounds(hex.g, 1, &bounds.p) == OD_OK);
  CHECK(bounds.has("\"type\":\"bounds\""));
  CHECK(bounds.has("\"gamma\":2"));
  CHECK(bounds.has("\"exceeds_nk4\":true"));

  Graph fig;
  REQUIRE(od_named("figure2", &fig.g) == OD_OK);
  CStr trace;
  REQUIRE(od_dominate(fig.g, &trace.p) == OD_OK);
  CHECK(trace.has("\"type\":\"trace\""));

  int ok = -1;
  CStr check;
  REQUIRE(od_verify_trace(trace.p, &ok, &check.p) == OD_OK);
  CHECK(ok == 1);
  CHECK(check.has("\"type\":\"trace-check\""));
  CHECK(check.has("\"ok\":true"));

  // A one-character edit to the recorded bound must be caught.
  std::string tampered = trace.str();
  auto at = tampered.find("\"bound\":4");
  REQUIRE(at != std::string::npos);
  tampered.replace(at, 9, "\"bound\":5");
  int ok2 = -1;
  CStr check2;
  REQUIRE(od_verify_trace(tampered.c_str(), &ok2, &check2.p) == OD_OK);
  CHECK(ok2 == 0);
  CHECK(check2.has("\"ok\":false"));

  // Wrong-kind dispatch is refused, not silently rerouted.
  Graph oct;
  REQUIRE(od_named("octahedron", &oct.g) == OD_OK);
  CStr spill;
  CHECK(od_dominate(oct.g, &spill.p) == OD_ERR_PRECONDITION);
  CHECK(od_bounds(oct.g, 0, &spill.p) == OD_ERR_PRECONDITION);
  CHECK(od_pipeline(hex.g, 64, &spill.p) == OD_ERR_PRECONDITION);
}

TEST_CASE("pipeline reports the solved branch") {
  Graph oct;
  REQUIRE(od_named("octahedron", &oct.g) == OD_OK);
  CStr rep;
  REQUIRE(od_pipeline(oct.g, 64, &rep.p) == OD_OK);
  CHECK(rep.has("\"type\":\"pipeline\""));
  CHECK(rep.has("\"branch\":\"habo-exact\""));
  CHECK(rep.has("\"size\":2"));
}

TEST_CASE("enumeration streams JSON objects with early stop") {
  struct Tally {
    int count = 0;
    int stop_after = 0;
    bool all_tagged = true;
  };
  auto emit = [](const char* json_text, void* user) -> int {
    auto* t = static_cast<Tally*>(user);
    t->count++;
    if (std::string(json_text).find("\"type\":\"mop\"") == std::string::npos)
      t->all_tagged = false;
    return t->stop_after > 0 && t->count >= t->stop_after ? 1 : 0;
  };

  Tally all;
  REQUIRE(od_enumerate(5, emit, &all) == OD_OK);
  CHECK(all.count == 5);
  CHECK(all.all_tagged);

  Tally some;
  some.stop_after = 2;
  REQUIRE(od_enumerate(5, emit, &some) == OD_OK);
  CHECK(some.count == 2);

  CHECK(od_enumerate(17, emit, &all) == OD_ERR_TOO_LARGE);
}

TEST_CASE("counterexample scan finds the hexagon violations") {
  long long found = -1;
  CStr rep;
  REQUIRE(od_search_counterexamples(6, 6, &found, &rep.p) == OD_OK);
  CHECK(found >= 1);
  CHECK(rep.has("\"type\":\"counterexample-report\""));
  CHECK(rep.has("\"searched\":14"));

  CStr bad;
  CHECK(od_search_counterexamples(6, 5, nullptr, &bad.p) == OD_ERR_PRECONDITION);
}

TEST_CASE("verification suites run behind the boundary") {
  CStr names;
  REQUIRE(od_suite_names(&names.p) == OD_OK);
  for (const char* suite : {"thm11", "thm12", "reductions", "lemma31", "thm32", "pipeline"})
    CHECK(names.has(suite));

  long long failures = -1;
  CStr rep;
  REQUIRE(od_run_suite("invariants", 7, 0, 2026, 1, 64, &failures, &rep.p) == OD_OK);
  CHECK(failures == 0);
  CHECK(rep.has("\"suite\":\"invariants\""));
  CHECK(rep.has("\"failures\":0"));

  CStr bad;
  CHECK(od_run_suite("no_such_suite", 0, 0, 0, 1, 64, nullptr, &bad.p) ==
        OD_ERR_UNKNOWN_NAME);
}

TEST_CASE("null arguments are rejected at the boundary") {
  CStr out;
  Graph g;
  CHECK(od_graph_from_json(nullptr, &g.g) == OD_ERR_ARGUMENT);
  CHECK(od_graph_to_json(nullptr, &out.p) == OD_ERR_ARGUMENT);
  CHECK(od_gamma(nullptr, 64, &out.p) == OD_ERR_ARGUMENT);
  CHECK(od_dominate(nullptr, &out.p) == OD_ERR_ARGUMENT);
  CHECK(od_verify_trace(nullptr, nullptr, &out.p) == OD_ERR_ARGUMENT);
  CHECK(od_pipeline(nullptr, 64, &out.p) == OD_ERR_ARGUMENT);
  CHECK(od_export_dot(nullptr, &out.p) == OD_ERR_ARGUMENT);
  CHECK(od_enumerate(5, nullptr, nullptr) == OD_ERR_ARGUMENT);
  CHECK(od_named(nullptr, &g.g) == OD_ERR_ARGUMENT);
  CHECK(od_run_suite(nullptr, 0, 0, 0, 1, 64, nullptr, &out.p) == OD_ERR_ARGUMENT);
  od_graph_free(nullptr);  // must be a no-op
  od_string_free(nullptr);
}

TEST_CASE("DOT export covers both drawable kinds") {
  Graph hex;
  REQUIRE(od_named("hexagon_fan3", &hex.g) == OD_OK);
  CStr dot;
  REQUIRE(od_export_dot(hex.g, &dot.p) == OD_OK);
  CHECK(dot.has("graph mop {"));

  Graph oct;
  REQUIRE(od_named("octahedron", &oct.g) == OD_OK);
  CStr dot2;
  REQUIRE(od_export_dot(oct.g, &dot2.p) == OD_OK);
  CHECK(dot2.has("graph triangulation {"));
}
