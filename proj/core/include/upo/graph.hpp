#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "upo/error.hpp"

namespace upo {

// Directed multigraph with string-named vertices and edges. Parallel edges,
// isolated vertices and disconnected pieces are all first-class; the only
// structural requirements at build time are well-formed ids and resolvable
// endpoint references. Acyclicity is not required to build (so cyclic input
// can be reported cleanly), but every order-related operation guards on it.
//
// Graphs are immutable after build(). Vertices and edges are stored sorted
// by id and every set-valued query returns ascending id order, so equal
// graphs behave identically regardless of how their input was arranged.
// Immutable state is safe to share across concurrent readers.

struct Edge {
  std::string id;
  std::string src;
  std::string tgt;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;

  // Errors: DuplicateVertexId, DuplicateEdgeId, UnknownEndpoint, InvalidId.
  static Graph build(std::vector<std::string> vertex_ids, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(std::string_view id) const noexcept;
  bool has_edge(std::string_view id) const noexcept;

  // Dense indices follow ascending id order.
  std::size_t vertex_index(std::string_view id) const;  // UnknownVertex
  std::size_t edge_index(std::string_view id) const;    // UnknownEdge

  const std::string& vertex_id(std::size_t v) const { return vertex_ids_[v]; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  std::size_t edge_src(std::size_t e) const { return src_[e]; }
  std::size_t edge_tgt(std::size_t e) const { return tgt_[e]; }

  // Edge indices incident to vertex index v, ascending.
  std::span<const std::uint32_t> in_edges(std::size_t v) const { return in_[v]; }
  std::span<const std::uint32_t> out_edges(std::size_t v) const { return out_[v]; }

  const std::vector<std::string>& vertex_ids() const noexcept { return vertex_ids_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool acyclic() const noexcept { return acyclic_; }

  // Edge reachability: true iff some directed path has e1 as its first edge
  // and e2 as its last. Strict, so reaches(e, e) is false. The relation is
  // computed once at build time and cached. Errors: CyclicGraph.
  bool reaches(std::size_t e1, std::size_t e2) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_ids_ == b.vertex_ids_ && a.edges_ == b.edges_;
  }

 private:
  void compute_structure();

  std::vector<std::string> vertex_ids_;  // sorted
  std::vector<Edge> edges_;              // sorted by id
  std::vector<std::uint32_t> src_;       // per edge, vertex index
  std::vector<std::uint32_t> tgt_;
  std::vector<std::vector<std::uint32_t>> in_;  // per vertex, ascending edge indices
  std::vector<std::vector<std::uint32_t>> out_;
  bool acyclic_ = true;
  std::vector<std::uint64_t> reach_;  // m rows of ceil(m/64) words, row e1: bit e2
  std::size_t reach_words_ = 0;
};

enum class VertexKind { source, sink, processive, isolated };

const char* vertex_kind_name(VertexKind k) noexcept;

// Configurations in which two distinct edges can share a vertex. An ordered
// pair may realize several at once: a parallel pair is both ss and tt, and in
// cyclic input a 2-cycle is both ts and st.
enum class Adjacency { tt, ss, ts, st };

const char* adjacency_name(Adjacency a) noexcept;

struct AdjacencyCase {
  Adjacency kind;
  std::string vertex;

  friend bool operator==(const AdjacencyCase&, const AdjacencyCase&) = default;
};

bool is_acyclic(const Graph& g) noexcept;

// In-edges (edges with target v) / out-edges (edges with source v), as
// ascending edge ids. Errors: UnknownVertex.
std::vector<std::string> incoming(const Graph& g, std::string_view v);
std::vector<std::string> outgoing(const Graph& g, std::string_view v);

VertexKind classify_vertex(const Graph& g, std::string_view v);

// Errors: CyclicGraph, UnknownEdge.
bool edge_reaches(const Graph& g, std::string_view e1, std::string_view e2);

// All ordered pairs (e1, e2) with edge_reaches true, ascending. On acyclic
// graphs this is a strict partial order. Errors: CyclicGraph.
std::vector<std::pair<std::string, std::string>> reachability_closure(const Graph& g);

// Shared-vertex configurations of the ordered pair (e1, e2), in tt, ss, ts,
// st order; empty when not adjacent. Requires e1 != e2. Errors: UnknownEdge.
std::vector<AdjacencyCase> adjacency_cases(const Graph& g, std::string_view e1,
                                           std::string_view e2);

}  // namespace upo
