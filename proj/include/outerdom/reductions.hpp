#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outerdom/bounds.hpp"
#include "outerdom/domination.hpp"
#include "outerdom/mop.hpp"

namespace outerdom {

// The four certified reductions plus the in-proof steps used by the
// domination engine. Every step shrinks n + k by at least 4 and costs at
// most one extra vertex in the lifted set.
enum class ReductionKind {
  R1,                  // delete the 4 internal vertices of a 6-vertex elementary section
  R2,                  // delete the internal vertices of a >=6-vertex section with a dominating vertex
  R3,                  // contract a 5-vertex elementary section whose middle internal vertex is not degree-2
  R4,                  // contract the 5-vertex span of an internal triangle with 1+1 internal vertices
  Claim1Delete,        // delete the 3 internal vertices of a 5-vertex elementary section, middle degree-2
  Claim2ContractBoth,  // internal triangle, 2+2 internal, both near-corner vertices degree-2
  Claim2ContractOne,   // internal triangle, 2+2 internal, exactly one near-corner vertex degree-2
  FinalContract,       // internal triangle, 1+2 internal, both near-corner vertices degree-2
};

const char* reduction_kind_name(ReductionKind k);
std::optional<ReductionKind> reduction_kind_from_name(const std::string& s);

// Candidate step. r, s anchor a section for R1/R2/R3/Claim1Delete; the
// triangle kinds carry (r, s, t) clockwise with the acting sections
// G[r,s] and G[s,t]. whole_graph marks the degenerate R2 candidate whose
// base is a boundary edge; it is reported but cannot be applied.
struct ReductionStep {
  ReductionKind kind = ReductionKind::R1;
  int r = 0;
  int s = 0;
  int t = 0;               // 0 unless triangle-based
  bool whole_graph = false;
  int aux = 0;             // R2: dominating vertex; Claim2ContractOne: first vertex of the contracted section
};

// Candidates for the four certified reductions in engine priority order
// (all applicable anchors: R1 block, then R2, R3, R4; clockwise scans).
std::vector<ReductionStep> find_applicable(const MopGraph& g);

// In-proof step candidates, used by the engine after R1..R4 are exhausted.
std::vector<ReductionStep> find_claim1_steps(const MopGraph& g);
std::vector<ReductionStep> find_triangle_steps(const MopGraph& g);

// A step applied to a concrete graph, with everything needed to certify
// it: the relabeled result, the position map back, and the n/k ledger.
struct AppliedStep {
  ReductionStep step;
  MopGraph pre;
  MopGraph post;
  // post position -> pre positions (singleton except the contracted
  // vertex, which maps to its whole clockwise segment).
  std::vector<std::vector<int>> vertex_map;  // index 1..post.n (0 unused)
  int n_pre = 0, k_pre = 0;
  int n_post = 0, k_post = 0;
  int contracted_post = 0;  // post position of the contracted vertex, 0 for deletions
};

// Checks preconditions, derives the reduced graph, revalidates it as a
// maximal outerplane graph, and fills the certificate ledger.
AppliedStep apply_step(const MopGraph& g, const ReductionStep& step);

// Exact post-size relation and k guarantee for a step kind, checked on
// every application. delta_nk is the guaranteed drop of n + k.
struct StepContract {
  int n_drop_min = 0;       // n_pre - n_post >= n_drop_min
  bool n_drop_exact = false;
  bool k_must_drop = false; // k_post <= k_pre - 1; otherwise k_post <= k_pre
};
StepContract step_contract(ReductionKind k);

// n relation and k rule of the step's contract against the recorded
// ledger; every accepted engine step must pass.
bool step_certificate_ok(const AppliedStep& applied);

// Lifts a dominating set of post back to pre following the step's case
// rule; verifies domination and the |D| <= |D'| + 1 budget, raising
// CertificateViolated otherwise.
std::vector<int> lift(const AppliedStep& applied, const std::vector<int>& post_set);

enum class BaseKind { ExactSmall, DominatingVertex, StripedExact, AnomalyExact };
const char* base_kind_name(BaseKind k);

struct BaseCase {
  BaseKind kind = BaseKind::ExactSmall;
  MopGraph graph;
  DominatingSet set;
  int n = 0;
  int k = 0;
};

struct ReductionTrace {
  MopGraph input;
  int n = 0;
  int k = 0;
  int bound = 0;                   // ceil((n + k) / 4)
  std::vector<AppliedStep> steps;  // application order, input first
  BaseCase base;
  DominatingSet final_set;
  std::vector<std::string> anomalies;  // structure the engine should never meet
};

struct MopResult {
  DominatingSet set;
  ReductionTrace trace;
};

// Constructive engine: reduce with R1 > R2 > R3 > R4, then the in-proof
// steps, bottoming out in an exact base case; lift back up. The result
// is verified to dominate and to fit ceil((n + k) / 4); exceeding the
// bound raises BoundViolated with a full trace dump.
MopResult dominate_mop(const MopGraph& g);

// Independent replay of a trace: re-applies every recorded step, checks
// the recorded graphs and ledgers match, re-verifies the base case, and
// re-lifts to the recorded final set.
struct TraceCheck {
  bool ok = true;
  std::vector<std::string> messages;
};
TraceCheck verify_trace(const ReductionTrace& trace);

// Structural consequences of having no applicable reduction: (1) maximal
// elementary sections have at most 3 internal vertices, the degree-2 one
// in the middle when exactly 3; (2) the adjacent section pairs of every
// internal triangle hold at least 3 internal vertices; (3) no section
// with >= 6 vertices has a dominating vertex.
struct IrreducibilityReport {
  Rational alpha;
  bool reducible = false;
  std::vector<ReductionStep> candidates;
  std::vector<std::string> clause1_violations;
  std::vector<std::string> clause2_violations;
  std::vector<std::string> clause3_violations;
  bool clauses_hold() const {
    return clause1_violations.empty() && clause2_violations.empty() &&
           clause3_violations.empty();
  }
};

// Requires n >= 7 and alpha >= 1/4.
IrreducibilityReport irreducibility_report(const MopGraph& g, Rational alpha = Rational{1, 4});

}  // namespace outerdom
