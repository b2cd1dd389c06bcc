#pragma once

#include <string>
#include <string_view>

#include "upo/graph.hpp"
#include "upo/order.hpp"

namespace upo {

// Graph files are line oriented: `v <id>` declares a vertex, `e <id> <src>
// <tgt>` an edge; ids are [A-Za-z0-9_]+; blank lines and `#` comments (full
// line or trailing) are ignored. Strict parsing requires every endpoint to be
// a declared vertex; lax auto-declares them. Errors carry 1-based line
// numbers. Errors: SyntaxError, InvalidId, DuplicateVertexId,
// DuplicateEdgeId, UnknownEndpoint.
Graph parse_graph(std::string_view text, bool lax = false);

// Vertices then edges, each sorted by id; parse(serialize(g)) == g.
std::string serialize_graph(const Graph& g);

// Order files are one `order` keyword followed by the edge ids in ascending
// rank, whitespace separated, wrapping onto further lines as needed. Same
// comment and blank-line rules as graph files. Errors: SyntaxError,
// ForeignEdge, DuplicateEdge, MissingEdge.
EdgeOrder parse_order(std::string_view text, const Graph& g);

std::string serialize_order(const EdgeOrder& ord);

// Graphviz digraph text, vertices and edges in sorted order. Edge labels are
// ids, or ranks when an order is supplied. Presentation only: the layout is
// not claimed to be an upward drawing.
std::string to_dot(const Graph& g);
std::string to_dot(const Graph& g, const EdgeOrder& ord);

}  // namespace upo
