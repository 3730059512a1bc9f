#include "outerdom.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "outerdom/bounds.hpp"
#include "outerdom/domination.hpp"
#include "outerdom/generators.hpp"
#include "outerdom/hamiltonian.hpp"
#include "outerdom/json_io.hpp"
#include "outerdom/mop.hpp"
#include "outerdom/reductions.hpp"
#include "outerdom/verify.hpp"

struct od_graph {
  outerdom::ParsedGraph pg;
};

namespace {

using namespace outerdom;

thread_local std::string tl_error;

od_status to_status(Errc c) {
  // The two enums mirror each other by value (see outerdom.h).
  return static_cast<od_status>(static_cast<int>(c));
}

od_status set_error(od_status s, std::string msg) {
  tl_error = std::move(msg);
  return s;
}

// Runs fn under the library's exception-to-status contract. fn performs
// all output-parameter writes itself, so failures leave outputs alone.
template <class Fn>
od_status guard(Fn&& fn) {
  try {
    tl_error.clear();
    fn();
    return OD_OK;
  } catch (const Error& e) {
    std::string msg = e.what();
    if (!e.detail().empty()) msg += "\n" + e.detail();
    return set_error(to_status(e.code()), std::move(msg));
  } catch (const std::bad_alloc&) {
    return set_error(OD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(OD_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

od_status need(bool ok, const char* what) {
  if (ok) return OD_OK;
  return set_error(OD_ERR_ARGUMENT, what);
}

Json graph_json(const ParsedGraph& pg) {
  switch (pg.kind) {
    case ParsedGraph::Kind::Mop:
      return to_json(pg.mop);
    case ParsedGraph::Kind::Ht:
      return to_json(pg.ht);
    case ParsedGraph::Kind::Graph:
      return to_json(pg.graph);
  }
  fail(Errc::Internal, "unreachable graph kind");
}

struct StopEnumeration {};

}  // namespace

extern "C" {

const char* od_version(void) { return "0.1.0"; }

const char* od_last_error(void) { return tl_error.c_str(); }

void od_string_free(char* s) { std::free(s); }

void od_graph_free(od_graph* g) { delete g; }

od_status od_graph_from_json(const char* json_text, od_graph** out) {
  if (od_status s = need(json_text && out, "od_graph_from_json: null argument"))
    return s;
  return guard([&] {
    auto h = new od_graph{parse_graph_json(parse_json_text(json_text))};
    *out = h;
  });
}

od_status od_graph_to_json(const od_graph* g, char** out_json) {
  if (od_status s = need(g && out_json, "od_graph_to_json: null argument")) return s;
  return guard([&] { *out_json = dup_string(graph_json(g->pg).dump()); });
}

int od_graph_kind(const od_graph* g) {
  if (!g) return -1;
  switch (g->pg.kind) {
    case ParsedGraph::Kind::Mop:
      return OD_GRAPH_MOP;
    case ParsedGraph::Kind::Ht:
      return OD_GRAPH_TRIANGULATION;
    case ParsedGraph::Kind::Graph:
      return OD_GRAPH_PLAIN;
  }
  return -1;
}

int od_graph_n(const od_graph* g) { return g ? g->pg.graph.n : -1; }

od_status od_named(const char* name, od_graph** out) {
  if (od_status s = need(name && out, "od_named: null argument")) return s;
  return guard([&] {
    ParsedGraph pg;
    const std::string kind = named_graph_kind(name);
    if (kind == "mop") {
      pg.kind = ParsedGraph::Kind::Mop;
      pg.mop = named_mop(name);
      pg.graph = to_simple(pg.mop);
    } else {
      pg.kind = ParsedGraph::Kind::Ht;
      pg.ht = named_ht(name);
      pg.graph = to_simple(pg.ht);
    }
    *out = new od_graph{std::move(pg)};
  });
}

od_status od_named_list(char** out_json) {
  if (od_status s = need(out_json != nullptr, "od_named_list: null argument"))
    return s;
  return guard([&] {
    Json j = Json::array();
    for (const auto& n : named_graph_names()) j.push_back(n);
    *out_json = dup_string(j.dump());
  });
}

od_status od_gamma(const od_graph* g, int limit_bb, char** out_json) {
  if (od_status s = need(g && out_json, "od_gamma: null argument")) return s;
  return guard([&] {
    DominatingSet set;
    const char* method = nullptr;
    if (g->pg.kind == ParsedGraph::Kind::Mop) {
      set = gamma_mop_dp(g->pg.mop);
      method = "dp";
    } else {
      set = gamma_exact_bb(g->pg.graph, limit_bb);
      method = "bb";
    }
    Json j{{"type", "gamma-report"},
           {"n", g->pg.graph.n},
           {"gamma", set.size},
           {"method", method},
           {"set", to_json(set)}};
    *out_json = dup_string(j.dump());
  });
}

od_status od_bounds(const od_graph* g, int with_gamma, char** out_json) {
  if (od_status s = need(g && out_json, "od_bounds: null argument")) return s;
  return guard([&] {
    if (g->pg.kind != ParsedGraph::Kind::Mop)
      fail(Errc::PreconditionViolated,
           "bounds requires a maximal outerplane graph");
    *out_json =
        dup_string(to_json(bounds_report(g->pg.mop, with_gamma != 0)).dump());
  });
}

od_status od_dominate(const od_graph* g, char** out_json) {
  if (od_status s = need(g && out_json, "od_dominate: null argument")) return s;
  return guard([&] {
    if (g->pg.kind != ParsedGraph::Kind::Mop)
      fail(Errc::PreconditionViolated,
           "dominate requires a maximal outerplane graph; use pipeline for "
           "triangulations");
    *out_json = dup_string(to_json(dominate_mop(g->pg.mop).trace).dump());
  });
}

od_status od_verify_trace(const char* trace_json, int* ok_out, char** out_json) {
  if (od_status s = need(trace_json && out_json, "od_verify_trace: null argument"))
    return s;
  return guard([&] {
    const auto trace = trace_from_json(parse_json_text(trace_json));
    const auto check = verify_trace(trace);
    if (ok_out) *ok_out = check.ok ? 1 : 0;
    *out_json = dup_string(to_json(check).dump());
  });
}

od_status od_pipeline(const od_graph* g, int limit_bb, char** out_json) {
  if (od_status s = need(g && out_json, "od_pipeline: null argument")) return s;
  return guard([&] {
    if (g->pg.kind == ParsedGraph::Kind::Mop)
      fail(Errc::PreconditionViolated,
           "pipeline requires a triangulation; use dominate for maximal "
           "outerplane graphs");
    PipelineReport rep;
    if (g->pg.kind == ParsedGraph::Kind::Ht) {
      rep = dominate_triangulation(g->pg.ht, limit_bb);
    } else {
      const auto found = find_good_cycle(g->pg.graph, 16);
      rep = dominate_triangulation(found.ht, limit_bb);
    }
    *out_json = dup_string(to_json(rep).dump());
  });
}

od_status od_export_dot(const od_graph* g, char** out_dot) {
  if (od_status s = need(g && out_dot, "od_export_dot: null argument")) return s;
  return guard([&] {
    if (g->pg.kind == ParsedGraph::Kind::Mop)
      *out_dot = dup_string(mop_to_dot(g->pg.mop));
    else if (g->pg.kind == ParsedGraph::Kind::Ht)
      *out_dot = dup_string(ht_to_dot(g->pg.ht));
    else
      fail(Errc::PreconditionViolated,
           "export-dot requires a maximal outerplane graph or a triangulation");
  });
}

od_status od_enumerate(int n, od_emit_fn emit, void* user) {
  if (od_status s = need(emit != nullptr, "od_enumerate: null emit callback"))
    return s;
  return guard([&] {
    try {
      enumerate_mops(n, [&](const MopGraph& g) {
        const std::string line = to_json(g).dump();
        if (emit(line.c_str(), user) != 0) throw StopEnumeration{};
      });
    } catch (const StopEnumeration&) {
      // caller asked to stop early; not an error
    }
  });
}

od_status od_search_counterexamples(int n_lo, int n_hi, long long* found_out,
                                    char** out_json) {
  if (od_status s =
          need(out_json != nullptr, "od_search_counterexamples: null argument"))
    return s;
  return guard([&] {
    if (n_lo < 3 || n_hi < n_lo)
      fail(Errc::PreconditionViolated,
           "search range must satisfy 3 <= n_lo <= n_hi");
    constexpr long long kMaxListed = 100;
    long long searched = 0, found = 0;
    Json instances = Json::array();
    for (int n = n_lo; n <= n_hi; ++n) {
      enumerate_mops(n, [&](const MopGraph& g) {
        ++searched;
        const auto rep = bounds_report(g, true);
        if (!rep.exceeds_nk4) return;
        ++found;
        if (found > kMaxListed) return;
        instances.push_back(Json{{"graph", to_json(g)},
                                 {"n", rep.n},
                                 {"k", rep.k},
                                 {"gamma", rep.gamma ? Json(*rep.gamma) : Json(nullptr)},
                                 {"bound_nk4", to_json(rep.bound_nk4)}});
      });
    }
    Json j{{"type", "counterexample-report"},
           {"n_min", n_lo},
           {"n_max", n_hi},
           {"searched", searched},
           {"found", found},
           {"truncated", found > kMaxListed},
           {"instances", instances}};
    if (found_out) *found_out = found;
    *out_json = dup_string(j.dump());
  });
}

od_status od_suite_names(char** out_json) {
  if (od_status s = need(out_json != nullptr, "od_suite_names: null argument"))
    return s;
  return guard([&] {
    Json j = Json::array();
    for (const auto& n : suite_names()) j.push_back(n);
    *out_json = dup_string(j.dump());
  });
}

od_status od_run_suite(const char* suite, int n_max, long long count,
                       unsigned long long seed, int workers, int limit_bb,
                       long long* failures_out, char** out_json) {
  if (od_status s = need(suite && out_json, "od_run_suite: null argument"))
    return s;
  return guard([&] {
    SuiteOptions opt;
    opt.n_max = n_max > 0 ? n_max : 0;
    opt.count = count > 0 ? count : 0;
    opt.seed = seed;
    opt.workers = workers > 0 ? workers : 1;
    opt.limit_bb = limit_bb > 0 ? limit_bb : 64;
    const auto rep = run_suite(suite, opt);
    if (failures_out) *failures_out = rep.failures;
    *out_json = dup_string(to_json(rep).dump());
  });
}

}  // extern "C"
