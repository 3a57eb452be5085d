#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "ktdist/graph.hpp"

namespace ktdist {

// graph6: size header N(n) followed by the upper triangle of the adjacency
// matrix, column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six
// bits per byte, most significant first, each byte offset by 63.
std::string to_graph6(const SimpleGraph& g);

// Accepts an optional ">>graph6<<" header and trailing newline. Throws
// std::invalid_argument on bytes outside 63..126, a wrong body length or
// nonzero padding bits.
SimpleGraph from_graph6(std::string_view text);

// {"n": int, "edges": [[u, v], ...]} with u < v and edges sorted.
nlohmann::json to_json(const SimpleGraph& g);
// Accepts edges in any order/orientation; validation as in SimpleGraph.
SimpleGraph graph_from_json(const nlohmann::json& j);

}  // namespace ktdist
