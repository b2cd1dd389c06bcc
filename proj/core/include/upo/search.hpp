#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "upo/graph.hpp"
#include "upo/order.hpp"
#include "upo/validate.hpp"

namespace upo {

struct SearchConfig {
  Definition definition = Definition::u_rules;
  std::optional<std::uint64_t> limit;        // max enumerated results
  std::optional<std::uint64_t> node_budget;  // max edge placements explored
};

enum class SearchStatus { found, none, budget_exhausted };

struct SolveResult {
  SearchStatus status = SearchStatus::none;
  std::optional<EdgeOrder> order;  // set iff status == found
  std::uint64_t nodes = 0;         // placements explored
};

struct EnumerateResult {
  std::vector<EdgeOrder> orders;   // lexicographic by edge-id sequence
  bool complete = true;            // false when limit or budget cut it short
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

// Depth-first construction of the order one rank at a time over edges whose
// reachability predecessors are all placed, candidates tried in ascending
// edge-id order, full validation at each complete candidate. Pruning is
// conservative: a subtree is cut only when no completion can be valid.
// Errors: CyclicGraph.

// Lexicographically least valid order, if any. Budget exhaustion is reported
// as its own status, never conflated with "none".
SolveResult find_upo(const Graph& g, const SearchConfig& cfg = {});

// All valid orders in lexicographic sequence order, truncated at cfg.limit.
EnumerateResult enumerate_upos(const Graph& g, const SearchConfig& cfg = {});

// Number of valid orders, without materializing them. Unbudgeted.
std::uint64_t count_upos(const Graph& g);

// True iff some upward planar order exists. Unbudgeted.
bool is_upward_planar(const Graph& g);

enum class DiffMode { exhaustive, sampled };

struct DiffOptions {
  DiffMode mode = DiffMode::exhaustive;
  std::uint64_t samples = 0;              // sampled mode: permutations to draw
  std::uint64_t seed = 0;                 // sampled mode
  std::size_t max_exhaustive_edges = 7;   // exhaustive mode guard
};

struct Disagreement {
  std::vector<std::string> order;
  Verdict u;  // U1 & U2 & U3
  Verdict q;  // U1 & Q2
};

struct DiffReport {
  std::uint64_t orders_tested = 0;
  std::vector<Disagreement> disagreements;  // sorted by order sequence
  DiffMode mode = DiffMode::exhaustive;
  std::uint64_t samples = 0, seed = 0;      // echoed for sampled mode
};

// Check the two rule families against each other: every permutation of the
// edges (exhaustive mode, |E| capped) or n seeded uniform random permutations
// (sampled mode). Disagreements are expected to be empty on every input.
// Errors: CyclicGraph, TooLargeForExhaustive.
DiffReport diff_definitions(const Graph& g, const DiffOptions& opt = {});

}  // namespace upo
