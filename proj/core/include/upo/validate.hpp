#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upo/graph.hpp"
#include "upo/order.hpp"

namespace upo {

enum class Rule { u1, u2, u3, q2 };

const char* rule_name(Rule r) noexcept;  // "U1", "U2", "U3", "Q2"

// One failed clause instance. Witnesses are chosen deterministically:
//   U1 ("u1-reach"):  edges [e1, e2] with e1 -> e2 but rank(e1) > rank(e2).
//   U2 ("u2-overlap"): vertex [v]; edges on the boundary of hull(I) n hull(O)
//                      (one edge if the overlap is a single rank).
//   U2 ("u2-gap"):    vertex [v]; edges [lo(E), first gap, hi(E)] where the
//                      gap rank lies in hull(E(v)) but in neither part hull.
//   U3 ("u3-in"/"u3-out"): vertices [v1, v2]; edges [meet, stray]: the
//                      least-rank edge of the v1 set inside the v2 hull and
//                      the least-rank one outside it.
//   Q2 ("q2-tt"/"q2-ss"/"q2-ts"): edges [e1, e, e2]; vertices [shared vertex]
//                      plus t(e) for TT or s(e) for SS.
// ranks[i] is the rank of edges[i].
struct Violation {
  Rule rule;
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
  std::vector<int> ranks;
  std::string note;
};

// Never expected to be set: the two rule families agree on every input.
struct DefinitionMismatch {
  bool u_valid;
  bool q_valid;
};

struct Verdict {
  bool valid = true;
  std::vector<Violation> violations;
  bool truncated = false;  // hit CheckOptions::max_violations
  std::optional<DefinitionMismatch> mismatch;
};

struct CheckOptions {
  std::size_t max_violations = 100;
};

enum class Definition { u_rules, q_rules, both };

// Scan order is frozen so witness lists are reproducible: edge pairs by
// ascending rank (outer earlier), vertices and vertex pairs by ascending id,
// within a vertex the overlap clause before the gap clause, within a pair
// the in-clause before the out-clause, within an adjacent edge pair the
// intermediate edges by ascending rank with cases in TT, SS, TS order.
// All checkers require an acyclic graph (CyclicGraph) and an order covering
// exactly its edges (MissingEdge, ForeignEdge).

// Linear extension of edge reachability.
Verdict check_u1(const Graph& g, const EdgeOrder& ord, const CheckOptions& opt = {});

// Per-vertex hull separation: hull(I(v)) and hull(O(v)) disjoint and their
// union exactly hull(E(v)). Vacuous where I(v) or O(v) is empty.
Verdict check_u2(const Graph& g, const EdgeOrder& ord, const CheckOptions& opt = {});

// Nesting: I(v1) meeting hull(I(v2)) forces I(v1) inside hull(I(v2)); same
// for out-sets. Pairs with v1 = v2 are vacuous.
Verdict check_u3(const Graph& g, const EdgeOrder& ord, const CheckOptions& opt = {});

// For adjacent e1 < e2 and every e strictly between: TT at v needs
// I(t(e)) inside hull(I(v)); SS at v needs O(s(e)) inside hull(O(v)); TS at v
// needs one of the two; ST imposes nothing. Parallel edges are adjacent as
// both TT and SS and must satisfy both clauses.
Verdict check_q2(const Graph& g, const EdgeOrder& ord, const CheckOptions& opt = {});

// u_rules = U1 & U2 & U3; q_rules = U1 & Q2 (the extension rule is shared);
// both runs all four checks once and flags a DefinitionMismatch if the two
// validity bits ever disagree.
Verdict validate(const Graph& g, const EdgeOrder& ord, Definition def,
                 const CheckOptions& opt = {});

}  // namespace upo
