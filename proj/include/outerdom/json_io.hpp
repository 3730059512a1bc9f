#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "outerdom/bounds.hpp"
#include "outerdom/hamiltonian.hpp"
#include "outerdom/mop.hpp"
#include "outerdom/reductions.hpp"

namespace outerdom {

using Json = nlohmann::json;

// Parse with ParseError instead of nlohmann exceptions.
Json parse_json_text(const std::string& text);

// Serializers. Graph payloads carry a "type" tag; chord and edge lists
// are arrays of [a, b] pairs, positions 1-indexed.
Json to_json(const MopGraph& g);            // {"type":"mop",...}
Json to_json(const SimpleGraph& g);         // {"type":"graph",...}
Json to_json(const HamTriangulation& t);    // {"type":"ham-triangulation",...}
Json to_json(const DominatingSet& s);
Json to_json(const Rational& r);            // {"num","den","decimal"}
Json to_json(const ConsecutivePair& p);
Json to_json(const BoundsReport& r);
Json to_json(const ReductionStep& s);
Json to_json(const AppliedStep& s);         // vertex_map as [[post,[pre...]],...]
Json to_json(const BaseCase& b);
Json to_json(const ReductionTrace& t);      // {"type":"trace",...}
Json to_json(const TraceCheck& c);
Json to_json(const SideReport& r);
Json to_json(const PipelineReport& r);
Json to_json(const IrreducibilityReport& r);

// Parsers; all raise ParseError on malformed input and propagate the
// constructors' structural validation errors.
MopGraph mop_from_json(const Json& j);
SimpleGraph graph_from_json(const Json& j);
HamTriangulation ht_from_json(const Json& j);  // "ham-triangulation", or "graph" + "cycle"
DominatingSet set_from_json(const Json& j);
ReductionTrace trace_from_json(const Json& j);

// Dispatch on the "type" tag for commands that accept any graph form.
// A "graph" with a "cycle" field is embedded into a HamTriangulation.
struct ParsedGraph {
  enum class Kind { Mop, Ht, Graph } kind = Kind::Graph;
  MopGraph mop;          // Kind::Mop
  HamTriangulation ht;   // Kind::Ht
  SimpleGraph graph;     // always the full simple graph
};
ParsedGraph parse_graph_json(const Json& j);

// DOT diagrams: vertices pinned to a circle in boundary order; chords
// drawn distinctly from cycle edges, degree-2 vertices filled, bad
// vertices double-ringed (MOP) / 2-vertices filled (triangulation).
std::string mop_to_dot(const MopGraph& g);
std::string ht_to_dot(const HamTriangulation& t);

}  // namespace outerdom
