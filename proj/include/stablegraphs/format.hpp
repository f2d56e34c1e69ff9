#pragma once

#include <string>

#include "stablegraphs/graph.hpp"

namespace stablegraphs {

enum class GraphFormat { text, json, dot };

/// text: the (K+3)xK block, rows space separated, the diagonal of a showing
/// the loop counts. json: object with genera/marks/loops/adjacency, the
/// adjacency full and symmetric. dot: an undirected multigraph with one edge
/// line per multiplicity unit.
std::string encode_graph(const StableGraphMatrix& m, GraphFormat format);

/// Inverse of the json encoding; validates symmetry and the loop diagonal.
StableGraphMatrix decode_graph_json(const std::string& text);

}  // namespace stablegraphs
