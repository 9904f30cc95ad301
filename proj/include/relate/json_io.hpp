#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "relate/decide.hpp"
#include "relate/reductions.hpp"

namespace relate {

using Json = nlohmann::ordered_json;

/// Trace as an array of step objects tagged by "kind": "unit-prop",
/// "chain-split", "badpair-case1", "badpair-case2" or "pendant".
/// Literals use signed DIMACS integers.
Json trace_to_json(const ReductionTrace& trace);
ReductionTrace trace_from_json(const Json& j);

/// {"hub": v, "clauses": {"j": w_j}, "pos": {"i": u_i}, "neg": {"i": u_i'}}
Json map_to_json(const SatGraphMap& map);
SatGraphMap map_from_json(const Json& j);

struct WitnessFile {
  enum class Kind { kRelating, kNotShedding };
  Kind kind = Kind::kRelating;
  std::string graph;  ///< path of the graph file the witness refers to
  Edge edge;          ///< meaningful for kRelating
  Vertex vertex = 0;  ///< meaningful for kNotShedding
  VertexSet set;
};

Json witness_to_json(const WitnessFile& w);
WitnessFile witness_from_json(const Json& j);

/// Throws ParseError on malformed JSON.
Json parse_json(const std::string& text);

}  // namespace relate
