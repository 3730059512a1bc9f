#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "outerdom/json_io.hpp"

namespace outerdom {

struct SuiteViolation {
  long long index = -1;  // corpus index; -1 for fixed pre-checks
  std::string id;        // instance identifier
  std::string message;
};

struct SuiteReport {
  std::string suite;
  long long total = 0;     // instances checked
  long long failures = 0;  // true failure count (violations list is capped)
  std::vector<SuiteViolation> violations;
  double seconds = 0.0;  // informational; excluded from the JSON report
  Json params = Json::object();
  bool passed() const { return failures == 0; }
};

struct SuiteOptions {
  int n_max = 0;              // 0 = suite default
  long long count = 0;        // random-corpus size; 0 = suite default
  std::uint64_t seed = 2026;  // random-corpus seed
  int workers = 1;
  int limit_bb = 64;
  std::size_t max_violations = 32;  // recorded (failures still counts all)
};

// Suites runnable from the CLI: thm11 (gamma <= (n+t)/4, exhaustive),
// thm12 (engine + ceil((n+k)/4), exhaustive), reductions (per-step
// certificates and lifts, exhaustive), lemma31 (good-cycle existence,
// exhaustive triangulations), thm32 (2-chord graph bound, random),
// pipeline (floor(5n/16) at n >= 23, random + named). Two further
// library-only suites back the acceptance gate: oracle (DP vs
// branch-and-bound equality) and invariants (structural audits).
std::vector<std::string> suite_names();      // the six CLI suites
std::vector<std::string> all_suite_names();  // plus oracle, invariants

// Shards the corpus across opt.workers threads by instance index and
// merges violations deterministically; identical options (workers
// aside) give identical reports.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& opt);

Json to_json(const SuiteReport& r);  // timing omitted: content is reproducible

}  // namespace outerdom
