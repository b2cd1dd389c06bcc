#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "upo/graph.hpp"
#include "upo/order.hpp"

namespace upo {

struct GenParams {
  std::uint64_t steps = 1;    // vertex events before the closing sinks
  std::uint32_t max_in = 2;   // max frontier edges consumed per event
  std::uint32_t max_out = 2;  // max fresh edges emitted per event
  std::uint64_t seed = 0;
  bool allow_parallel = true;
};

// Acyclic by construction: edges are drawn only forward along a seeded random
// vertex permutation. Without parallel edges, n_edges is capped at
// n_vertices*(n_vertices-1)/2. Same arguments, same graph, byte for byte.
// Errors: InfeasibleParams.
Graph gen_random_dag(std::size_t n_vertices, std::size_t n_edges, std::uint64_t seed,
                     bool allow_parallel = false);

// Sweep construction of an upward-planar-by-construction graph. A frontier of
// open edges stands for a horizontal cut of an upward drawing, left to right.
// Each event either creates a source (inserting its out-edges at a seeded
// position) or creates a vertex consuming a contiguous nonempty frontier
// segment as its in-edges and splicing its out-edges in at that spot; closing
// sinks then consume what remains, one contiguous segment each. Contiguity is
// what keeps a crossing-free drawing possible. Errors: InfeasibleParams.
Graph gen_upward_planar(const GenParams& p);

struct Fixture {
  std::string name;
  Graph graph;
  // Named reference orders; empty for fixtures that carry none.
  std::vector<std::pair<std::string, EdgeOrder>> orders;
};

// Built-in graphs used across the tests and the CLI:
//   star        two 2-edge stars (one out, one in); orders "interleaved" and
//               "sequential", both valid
//   pathx       a 2-edge path plus one detached edge
//   triangle    a->b, a->c, b->c
//   interleave  two 2-in sinks fed by four sources
//   k5          the acyclic tournament on 5 vertices (not upward planar)
//   demo        17 vertices, 20 edges, 4 components, two parallel pairs,
//               with its valid "reference" order e01..e20
// Errors: UnknownFixture.
Fixture fixture(std::string_view name);

std::vector<std::string> fixture_names();

}  // namespace upo
