// outerdom command-line interface. Talks to the library exclusively
// through the C interface in outerdom.h; the vendored JSON header is
// used only to format reports for the table renderer.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "outerdom.h"

namespace {

using Json = nlohmann::json;

// Owns one string returned by the library.
struct CStr {
  char* p = nullptr;
  CStr() = default;
  CStr(const CStr&) = delete;
  CStr& operator=(const CStr&) = delete;
  ~CStr() { od_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

// Owns one graph handle.
struct GraphHandle {
  od_graph* g = nullptr;
  GraphHandle() = default;
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  ~GraphHandle() { od_graph_free(g); }
  od_graph** out() { return &g; }
};

// Exit contract: 0 all checks pass, 1 violation found, 2 usage or input
// error. Statuses that represent a completed run whose mathematical
// check failed map to 1; everything that prevented an answer maps to 2.
int exit_for(od_status s) {
  switch (s) {
    case OD_OK:
      return 0;
    case OD_ERR_BOUND:
    case OD_ERR_CERTIFICATE:
    case OD_ERR_NOT_DOMINATING:
    case OD_ERR_NOT_FOUND:
      return 1;
    default:
      return 2;
  }
}

int report_error(od_status s) {
  std::cerr << "error: " << od_last_error() << "\n";
  return exit_for(s);
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

bool read_input(const std::string& path, std::string& text) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
    return true;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  text = ss.str();
  return true;
}

int write_text(const std::string& path, std::string text) {
  if (text.empty() || text.back() != '\n') text += '\n';
  if (path.empty() || path == "-") {
    std::cout << text;
    return std::cout ? 0 : 2;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return 2;
  }
  f << text;
  if (!f) {
    std::cerr << "error: cannot write output file: " << path << "\n";
    return 2;
  }
  return 0;
}

std::string join_ints(const Json& arr, const char* sep = " ") {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += sep;
    s += std::to_string(v.get<long long>());
  }
  return s;
}

std::string pairs_inline(const Json& arr) {
  std::string s;
  for (const auto& p : arr) {
    if (!s.empty()) s += " ";
    s += std::to_string(p[0].get<int>()) + "-" + std::to_string(p[1].get<int>());
  }
  return s.empty() ? "(none)" : s;
}

std::string set_inline(const Json& set) {
  if (set.is_null()) return "(none)";
  return "{" + join_ints(set["vertices"], ", ") + "}";
}

std::string rational_inline(const Json& r) {
  std::ostringstream ss;
  ss << r["num"].get<long long>() << "/" << r["den"].get<long long>() << " = "
     << r["decimal"].get<double>();
  return ss.str();
}

void kv(std::ostringstream& out, const std::string& key, const std::string& val) {
  out << "  " << key;
  for (std::size_t i = key.size(); i < 18; ++i) out << ' ';
  out << val << "\n";
}

std::string yn(const Json& b) {
  if (b.is_null()) return "n/a";
  return b.get<bool>() ? "yes" : "no";
}

std::string render_table(const Json& j);

std::string table_graph(const Json& j) {
  std::ostringstream out;
  const std::string type = j["type"].get<std::string>();
  out << type << "\n";
  kv(out, "n", std::to_string(j["n"].get<int>()));
  if (type == "mop") kv(out, "chords", pairs_inline(j["chords"]));
  if (type == "ham-triangulation") {
    kv(out, "inner chords", pairs_inline(j["inner"]));
    kv(out, "outer chords", pairs_inline(j["outer"]));
  }
  if (type == "graph") kv(out, "edges", pairs_inline(j["edges"]));
  return out.str();
}

std::string table_gamma(const Json& j) {
  std::ostringstream out;
  out << "gamma report\n";
  kv(out, "n", std::to_string(j["n"].get<int>()));
  kv(out, "gamma", std::to_string(j["gamma"].get<int>()));
  kv(out, "method", j["method"].get<std::string>());
  kv(out, "set", set_inline(j["set"]));
  return out.str();
}

std::string table_bounds(const Json& j) {
  std::ostringstream out;
  out << "bounds report\n";
  kv(out, "n", std::to_string(j["n"].get<int>()));
  kv(out, "t (degree-2)", std::to_string(j["t"].get<int>()));
  kv(out, "k (essential)", std::to_string(j["k"].get<int>()));
  kv(out, "degree-2 set", "{" + join_ints(j["degree_two"], ", ") + "}");
  kv(out, "bad vertices", "{" + join_ints(j["bad"], ", ") + "}");
  out << "  pairs             r -> s   gap  essential\n";
  for (const auto& p : j["pairs"]) {
    std::ostringstream row;
    row << "                    " << p["r"].get<int>() << " -> " << p["s"].get<int>()
        << "   " << p["gap"].get<int>() << "    " << (p["essential"].get<bool>() ? "yes" : "no");
    out << row.str() << "\n";
  }
  kv(out, "(n+t)/4", rational_inline(j["bound_nt4"]));
  kv(out, "ceil((n+k)/4)", std::to_string(j["bound_nk4_ceil"].get<int>()));
  kv(out, "(n+k)/4", rational_inline(j["bound_nk4"]));
  kv(out, "gamma", j["gamma"].is_null() ? "n/a" : std::to_string(j["gamma"].get<int>()));
  kv(out, "within (n+t)/4", yn(j["within_nt4"]));
  kv(out, "within ceil", yn(j["within_nk4_ceil"]));
  kv(out, "exceeds (n+k)/4", yn(j["exceeds_nk4"]));
  return out.str();
}

std::string table_trace(const Json& j) {
  std::ostringstream out;
  out << "reduction trace\n";
  kv(out, "n", std::to_string(j["n"].get<int>()));
  kv(out, "k", std::to_string(j["k"].get<int>()));
  kv(out, "bound", std::to_string(j["bound"].get<int>()));
  out << "  steps\n";
  if (j["steps"].empty()) out << "    (none)\n";
  int idx = 0;
  for (const auto& s : j["steps"]) {
    const auto& st = s["step"];
    out << "    " << ++idx << ". " << st["kind"].get<std::string>() << " r=" << st["r"].get<int>()
        << " s=" << st["s"].get<int>();
    if (st["t"].get<int>() != 0) out << " t=" << st["t"].get<int>();
    if (st["aux"].get<int>() != 0) out << " aux=" << st["aux"].get<int>();
    out << "  n " << s["n_pre"].get<int>() << "->" << s["n_post"].get<int>() << "  k "
        << s["k_pre"].get<int>() << "->" << s["k_post"].get<int>() << "\n";
  }
  const auto& b = j["base"];
  kv(out, "base", b["kind"].get<std::string>() + " on n=" + std::to_string(b["n"].get<int>()) +
                      ", set " + set_inline(b["set"]));
  kv(out, "final set", set_inline(j["final_set"]));
  kv(out, "final size", std::to_string(j["final_set"]["size"].get<int>()));
  if (!j["anomalies"].empty()) {
    out << "  anomalies\n";
    for (const auto& a : j["anomalies"]) out << "    " << a.get<std::string>() << "\n";
  }
  return out.str();
}

std::string table_trace_check(const Json& j) {
  std::ostringstream out;
  out << "trace check\n";
  kv(out, "ok", j["ok"].get<bool>() ? "yes" : "no");
  for (const auto& m : j["messages"]) out << "    " << m.get<std::string>() << "\n";
  return out.str();
}

std::string table_pipeline(const Json& j) {
  std::ostringstream out;
  out << "pipeline report\n";
  kv(out, "n", std::to_string(j["n"].get<int>()));
  kv(out, "c (2-chords)", std::to_string(j["c"].get<int>()) + "  (inner " +
                              std::to_string(j["c_int"].get<int>()) + ", outer " +
                              std::to_string(j["c_ext"].get<int>()) + ")");
  kv(out, "branch", j["branch"].get<std::string>());
  if (!j["side"].is_null()) kv(out, "side", j["side"].get<std::string>());
  if (!j["habo_bound"].is_null())
    kv(out, "ceil(2n/7)", std::to_string(j["habo_bound"].get<int>()));
  kv(out, "set", set_inline(j["set"]));
  kv(out, "size", std::to_string(j["size"].get<int>()));
  kv(out, "floor(5n/16)", std::to_string(j["bound_5n16"].get<int>()));
  kv(out, "within bound", j["within_bound"].get<bool>() ? "yes" : "no");
  kv(out, "enforced", j["enforced"].get<bool>() ? "yes" : "no");
  for (const auto& w : j["warnings"]) out << "  warning: " << w.get<std::string>() << "\n";
  for (const auto& m : j["mitigations"]) out << "  mitigation: " << m.get<std::string>() << "\n";
  return out.str();
}

std::string table_suite(const Json& j) {
  std::ostringstream out;
  out << "suite report\n";
  kv(out, "suite", j["suite"].get<std::string>());
  kv(out, "total", std::to_string(j["total"].get<long long>()));
  kv(out, "failures", std::to_string(j["failures"].get<long long>()));
  kv(out, "passed", j["passed"].get<bool>() ? "yes" : "no");
  kv(out, "params", j["params"].dump());
  for (const auto& v : j["violations"])
    out << "  [" << v["index"].get<long long>() << "] " << v["id"].get<std::string>() << "\n"
        << "      " << v["message"].get<std::string>() << "\n";
  return out.str();
}

std::string table_counterexamples(const Json& j) {
  std::ostringstream out;
  out << "counterexample search\n";
  kv(out, "n range", std::to_string(j["n_min"].get<int>()) + ".." +
                         std::to_string(j["n_max"].get<int>()));
  kv(out, "searched", std::to_string(j["searched"].get<long long>()));
  kv(out, "found", std::to_string(j["found"].get<long long>()));
  if (j["truncated"].get<bool>()) kv(out, "listing", "truncated");
  for (const auto& inst : j["instances"]) {
    out << "  n=" << inst["n"].get<int>() << " k=" << inst["k"].get<int>()
        << " gamma=" << inst["gamma"].get<int>() << " > " << rational_inline(inst["bound_nk4"])
        << "\n    chords " << pairs_inline(inst["graph"]["chords"]) << "\n";
  }
  return out.str();
}

std::string render_table(const Json& j) {
  if (j.is_object() && j.contains("type") && j["type"].is_string()) {
    const std::string type = j["type"].get<std::string>();
    if (type == "mop" || type == "graph" || type == "ham-triangulation")
      return table_graph(j);
    if (type == "gamma-report") return table_gamma(j);
    if (type == "bounds") return table_bounds(j);
    if (type == "trace") return table_trace(j);
    if (type == "trace-check") return table_trace_check(j);
    if (type == "pipeline") return table_pipeline(j);
    if (type == "suite-report") return table_suite(j);
    if (type == "counterexample-report") return table_counterexamples(j);
  }
  return j.dump(2);
}

int emit_result(const std::string& json_text, const std::string& format,
                const std::string& out_path) {
  if (format == "json") return write_text(out_path, json_text);
  const Json j = Json::parse(json_text, nullptr, false);
  if (j.is_discarded()) return usage_error("internal: result is not valid JSON");
  return write_text(out_path, render_table(j));
}

struct CommonOpts {
  std::string in_path;
  std::string out_path;
  std::string format = "json";
  int workers = 1;
  std::uint64_t seed = 2026;
  int limit_bb = 64;
};

void add_io(CLI::App* cmd, CommonOpts& o, bool with_format = true) {
  cmd->add_option("--in", o.in_path, "Input file (default: stdin)");
  cmd->add_option("--out", o.out_path, "Output file (default: stdout)");
  if (with_format)
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
}

int load_graph(const CommonOpts& o, GraphHandle& h) {
  std::string text;
  if (!read_input(o.in_path, text))
    return usage_error("cannot read input file: " + o.in_path);
  const od_status s = od_graph_from_json(text.c_str(), h.out());
  if (s != OD_OK) return report_error(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"domination analysis for maximal outerplane graphs and "
               "Hamiltonian plane triangulations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(od_version()));

  CommonOpts o;
  int n = 0, n_max = 0;
  long long count = 0;
  std::string suite, name;

  auto* cmd_gamma = app.add_subcommand("gamma", "Exact domination number of a graph");
  add_io(cmd_gamma, o);
  cmd_gamma->add_option("--limit-bb", o.limit_bb, "Branch-and-bound size cap")
      ->capture_default_str();

  auto* cmd_bounds = app.add_subcommand(
      "bounds", "Degree-2/pair accounting with the domination bounds");
  add_io(cmd_bounds, o);

  auto* cmd_dom = app.add_subcommand(
      "dominate", "Constructive dominating set within ceil((n+k)/4), with trace");
  add_io(cmd_dom, o);

  auto* cmd_vt = app.add_subcommand("verify-trace",
                                    "Independently replay a reduction trace");
  add_io(cmd_vt, o);

  auto* cmd_pipe = app.add_subcommand(
      "pipeline", "Dominating set within floor(5n/16) for a triangulation");
  add_io(cmd_pipe, o);
  cmd_pipe->add_option("--limit-bb", o.limit_bb, "Branch-and-bound size cap")
      ->capture_default_str();

  auto* cmd_enum = app.add_subcommand(
      "enumerate", "Stream every labeled outerplane instance as JSONL");
  cmd_enum->add_option("--n", n, "Single boundary size");
  cmd_enum->add_option("--n-max", n_max, "Range 3..n-max");
  cmd_enum->add_option("--out", o.out_path, "Output file (default: stdout)");

  auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
  cmd_verify->add_option("--suite", suite, "Suite name")->required();
  cmd_verify->add_option("--n-max", n_max, "Corpus size cap (0 = suite default)");
  cmd_verify->add_option("--count", count, "Random corpus size (0 = suite default)");
  cmd_verify->add_option("--seed", o.seed, "Random corpus seed")->capture_default_str();
  cmd_verify
      ->add_option("--workers", o.workers, "Worker thread count")
      ->envname("OUTERDOM_WORKERS")
      ->capture_default_str();
  cmd_verify->add_option("--limit-bb", o.limit_bb, "Branch-and-bound size cap")
      ->capture_default_str();
  cmd_verify->add_option("--out", o.out_path, "Output file (default: stdout)");
  cmd_verify->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  auto* cmd_search = app.add_subcommand(
      "search-counterexamples",
      "Scan labeled outerplane instances for gamma > (n+k)/4");
  cmd_search->add_option("--n", n, "Single boundary size");
  cmd_search->add_option("--n-max", n_max, "Range 4..n-max");
  cmd_search->add_option("--out", o.out_path, "Output file (default: stdout)");
  cmd_search->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  auto* cmd_named = app.add_subcommand("named", "Emit a fixed instance by name");
  cmd_named->add_option("name", name, "Instance name (see --list)");
  bool list_named = false;
  cmd_named->add_flag("--list", list_named, "List the available names");
  cmd_named->add_option("--out", o.out_path, "Output file (default: stdout)");
  cmd_named->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "table", "dot"}))
      ->capture_default_str();

  auto* cmd_dot = app.add_subcommand("export-dot", "GraphViz diagram of a graph");
  cmd_dot->add_option("--in", o.in_path, "Input file (default: stdin)");
  cmd_dot->add_option("--out", o.out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error by the exit-code contract
  }

  if (cmd_gamma->parsed()) {
    GraphHandle h;
    if (int rc = load_graph(o, h)) return rc;
    CStr res;
    const od_status s = od_gamma(h.g, o.limit_bb, res.out());
    if (s != OD_OK) return report_error(s);
    return emit_result(res.str(), o.format, o.out_path);
  }

  if (cmd_bounds->parsed()) {
    GraphHandle h;
    if (int rc = load_graph(o, h)) return rc;
    CStr res;
    const od_status s = od_bounds(h.g, 1, res.out());
    if (s != OD_OK) return report_error(s);
    return emit_result(res.str(), o.format, o.out_path);
  }

  if (cmd_dom->parsed()) {
    GraphHandle h;
    if (int rc = load_graph(o, h)) return rc;
    CStr res;
    const od_status s = od_dominate(h.g, res.out());
    if (s != OD_OK) return report_error(s);
    return emit_result(res.str(), o.format, o.out_path);
  }

  if (cmd_vt->parsed()) {
    std::string text;
    if (!read_input(o.in_path, text))
      return usage_error("cannot read input file: " + o.in_path);
    int ok = 0;
    CStr res;
    const od_status s = od_verify_trace(text.c_str(), &ok, res.out());
    if (s != OD_OK) return report_error(s);
    if (int rc = emit_result(res.str(), o.format, o.out_path)) return rc;
    return ok ? 0 : 1;
  }

  if (cmd_pipe->parsed()) {
    GraphHandle h;
    if (int rc = load_graph(o, h)) return rc;
    CStr res;
    const od_status s = od_pipeline(h.g, o.limit_bb, res.out());
    if (s != OD_OK) return report_error(s);
    return emit_result(res.str(), o.format, o.out_path);
  }

  if (cmd_enum->parsed()) {
    if (n <= 0 && n_max <= 0)
      return usage_error("enumerate requires --n or --n-max");
    const int lo = n > 0 ? n : 3;
    const int hi = n > 0 ? n : n_max;
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!o.out_path.empty() && o.out_path != "-") {
      file.open(o.out_path, std::ios::binary);
      if (!file) return usage_error("cannot open output file: " + o.out_path);
      os = &file;
    }
    struct Ctx {
      std::ostream* os;
    } ctx{os};
    for (int i = lo; i <= hi; ++i) {
      const od_status s = od_enumerate(
          i,
          [](const char* line, void* user) -> int {
            auto* c = static_cast<Ctx*>(user);
            (*c->os) << line << "\n";
            return c->os->good() ? 0 : 1;
          },
          &ctx);
      if (s != OD_OK) return report_error(s);
      if (!os->good()) return usage_error("cannot write enumeration output");
    }
    return 0;
  }

  if (cmd_verify->parsed()) {
    long long failures = 0;
    CStr res;
    const od_status s =
        od_run_suite(suite.c_str(), n_max, count, o.seed, o.workers, o.limit_bb,
                     &failures, res.out());
    if (s != OD_OK) return report_error(s);
    if (int rc = emit_result(res.str(), o.format, o.out_path)) return rc;
    return failures == 0 ? 0 : 1;
  }

  if (cmd_search->parsed()) {
    if (n <= 0 && n_max <= 0)
      return usage_error("search-counterexamples requires --n or --n-max");
    const int lo = n > 0 ? n : 4;
    const int hi = n > 0 ? n : n_max;
    long long found = 0;
    CStr res;
    const od_status s = od_search_counterexamples(lo, hi, &found, res.out());
    if (s != OD_OK) return report_error(s);
    if (int rc = emit_result(res.str(), o.format, o.out_path)) return rc;
    return found > 0 ? 1 : 0;  // a falsifying instance is a violation
  }

  if (cmd_named->parsed()) {
    if (list_named || name.empty()) {
      CStr res;
      const od_status s = od_named_list(res.out());
      if (s != OD_OK) return report_error(s);
      if (list_named) return write_text(o.out_path, res.str());
      return usage_error("named requires an instance name; available: " + res.str());
    }
    GraphHandle h;
    const od_status s = od_named(name.c_str(), h.out());
    if (s != OD_OK) return report_error(s);
    CStr res;
    if (o.format == "dot") {
      const od_status s2 = od_export_dot(h.g, res.out());
      if (s2 != OD_OK) return report_error(s2);
      return write_text(o.out_path, res.str());
    }
    const od_status s2 = od_graph_to_json(h.g, res.out());
    if (s2 != OD_OK) return report_error(s2);
    return emit_result(res.str(), o.format, o.out_path);
  }

  if (cmd_dot->parsed()) {
    GraphHandle h;
    if (int rc = load_graph(o, h)) return rc;
    CStr res;
    const od_status s = od_export_dot(h.g, res.out());
    if (s != OD_OK) return report_error(s);
    return write_text(o.out_path, res.str());
  }

  return usage_error("unknown command");
}
