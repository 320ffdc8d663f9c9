#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cubespan/additive_spanner.hpp"
#include "cubespan/implicit_graph.hpp"
#include "cubespan/verify.hpp"

namespace cubespan {

// Stable key order, two-space indent, one trailing newline; identical input
// gives identical bytes.
std::string reportToJson(const VerificationReport& r);

// Header "n <dim> m <edges>", then one "u v" line per edge in the canonical
// text form with u < v, lines in ascending lexicographic order.
void writeEdgeList(std::ostream& os, const ImplicitGraph& g,
                   const Budgets& budgets = {});

struct EdgeList {
  uint32_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};
EdgeList readEdgeList(std::istream& is);

// Adjacency oracle over a parsed edge list (symmetric closure).
ImplicitGraph edgeListGraph(EdgeList list, std::string id);

// Array of {"n", "k", "q", "blockSizes", "s", "g"} objects, one recursion
// level each; all entries are treated as explicit overrides.
ParamSchedule parseParamSchedule(const std::string& jsonText);

}  // namespace cubespan
