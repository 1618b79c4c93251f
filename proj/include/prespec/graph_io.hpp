#ifndef PRESPEC_GRAPH_IO_HPP
#define PRESPEC_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "prespec/graph.hpp"

namespace prespec {

/// graph6 interchange format. Exact bit-level compliance for orders up to 62
/// (single-byte size) and the 3-byte '~' extension up to order 258047.
/// Orders beyond that are rejected.
std::string emit_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and trailing whitespace; anything
/// else malformed throws std::invalid_argument.
Graph parse_graph6(std::string_view text);

/// Edge-list text format: first line "n m", then m lines "u v".
std::string emit_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

/// Reads a graph from file contents: edge list if the first line is "n m",
/// graph6 otherwise.
Graph parse_graph_auto(std::string_view text);

} // namespace prespec

#endif
