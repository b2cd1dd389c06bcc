#include "upo/validate.hpp"

#include <algorithm>

#include "upo/error.hpp"

namespace upo {

const char* rule_name(Rule r) noexcept {
  switch (r) {
    case Rule::u1: return "U1";
    case Rule::u2: return "U2";
    case Rule::u3: return "U3";
    case Rule::q2: return "Q2";
  }
  return "?";
}

namespace {

// Rank-indexed view of one (graph, order) pair shared by all checkers.
struct Ctx {
  const Graph& g;
  std::vector<int> rank;           // edge index -> rank
  std::vector<std::uint32_t> at;   // rank-1 -> edge index
  std::vector<std::vector<int>> in_ranks, out_ranks;  // per vertex, ascending
  std::vector<Interval> in_hull, out_hull;

  explicit Ctx(const Graph& graph, const EdgeOrder& ord) : g(graph) {
    if (!g.acyclic()) fail(errc::cyclic_graph, "graph has a directed cycle");
    rank = ord.ranks_for(g);
    at.resize(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      at[static_cast<std::size_t>(rank[e] - 1)] = static_cast<std::uint32_t>(e);
    }
    in_ranks.resize(g.vertex_count());
    out_ranks.resize(g.vertex_count());
    in_hull.resize(g.vertex_count());
    out_hull.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      for (std::uint32_t e : g.in_edges(v)) in_ranks[v].push_back(rank[e]);
      for (std::uint32_t e : g.out_edges(v)) out_ranks[v].push_back(rank[e]);
      std::sort(in_ranks[v].begin(), in_ranks[v].end());
      std::sort(out_ranks[v].begin(), out_ranks[v].end());
      if (!in_ranks[v].empty()) in_hull[v] = Interval(in_ranks[v].front(), in_ranks[v].back());
      if (!out_ranks[v].empty()) out_hull[v] = Interval(out_ranks[v].front(), out_ranks[v].back());
    }
  }

  const std::string& edge_at(int r) const { return g.edge(at[static_cast<std::size_t>(r - 1)]).id; }
};

struct Collector {
  std::size_t cap;
  Verdict verdict;

  // False once the cap is exceeded; callers stop scanning then.
  bool add(Violation v) {
    verdict.valid = false;
    if (verdict.violations.size() >= cap) {
      verdict.truncated = true;
      return false;
    }
    verdict.violations.push_back(std::move(v));
    return true;
  }
};

bool set_in(const std::vector<int>& ranks, const Interval& hull) {
  for (int r : ranks) {
    if (!hull.contains(r)) return false;
  }
  return true;
}

}  // namespace

Verdict check_u1(const Graph& g, const EdgeOrder& ord, const CheckOptions& opt) {
  Ctx c(g, ord);
  Collector out{opt.max_violations, {}};
  const int m = static_cast<int>(g.edge_count());
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      std::uint32_t ei = c.at[static_cast<std::size_t>(i - 1)];
      std::uint32_t ej = c.at[static_cast<std::size_t>(j - 1)];
      if (g.reaches(ej, ei)) {
        if (!out.add({Rule::u1, {}, {g.edge(ej).id, g.edge(ei).id}, {j, i}, "u1-reach"})) {
          return std::move(out.verdict);
        }
      }
    }
  }
  return std::move(out.verdict);
}

Verdict check_u2(const Graph& g, const EdgeOrder& ord, const CheckOptions& opt) {
  Ctx c(g, ord);
  Collector out{opt.max_violations, {}};
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (c.in_ranks[v].empty() || c.out_ranks[v].empty()) continue;
    const Interval& hi = c.in_hull[v];
    const Interval& ho = c.out_hull[v];
    if (!disjoint(hi, ho)) {
      int lo = std::max(hi.lo(), ho.lo());
      int hh = std::min(hi.hi(), ho.hi());
      Violation viol{Rule::u2, {g.vertex_id(v)}, {c.edge_at(lo)}, {lo}, "u2-overlap"};
      if (hh != lo) {
        viol.edges.push_back(c.edge_at(hh));
        viol.ranks.push_back(hh);
      }
      if (!out.add(std::move(viol))) return std::move(out.verdict);
    } else if (!union_exact(hi, ho)) {
      // Disjoint with a hole between the two hulls, so hull(E) exceeds their
      // union; the first missing rank sits right after the lower hull.
      int elo = std::min(hi.lo(), ho.lo());
      int ehi = std::max(hi.hi(), ho.hi());
      int gap = std::min(hi.hi(), ho.hi()) + 1;
      if (!out.add({Rule::u2,
                    {g.vertex_id(v)},
                    {c.edge_at(elo), c.edge_at(gap), c.edge_at(ehi)},
                    {elo, gap, ehi},
                    "u2-gap"})) {
        return std::move(out.verdict);
      }
    }
  }
  return std::move(out.verdict);
}

Verdict check_u3(const Graph& g, const EdgeOrder& ord, const CheckOptions& opt) {
  Ctx c(g, ord);
  Collector out{opt.max_violations, {}};
  auto clause = [&](std::size_t v1, std::size_t v2, const std::vector<int>& set,
                    const Interval& hull, const char* note) -> bool {
    if (set.empty() || hull.is_empty()) return true;
    int meet = 0, stray = 0;
    for (int r : set) {
      if (meet == 0 && hull.contains(r)) meet = r;
      if (stray == 0 && !hull.contains(r)) stray = r;
    }
    if (meet == 0 || stray == 0) return true;
    return out.add({Rule::u3,
                    {g.vertex_id(v1), g.vertex_id(v2)},
                    {c.edge_at(meet), c.edge_at(stray)},
                    {meet, stray},
                    note});
  };
  for (std::size_t v1 = 0; v1 < g.vertex_count(); ++v1) {
    for (std::size_t v2 = 0; v2 < g.vertex_count(); ++v2) {
      if (v1 == v2) continue;
      if (!clause(v1, v2, c.in_ranks[v1], c.in_hull[v2], "u3-in")) return std::move(out.verdict);
      if (!clause(v1, v2, c.out_ranks[v1], c.out_hull[v2], "u3-out")) return std::move(out.verdict);
    }
  }
  return std::move(out.verdict);
}

Verdict check_q2(const Graph& g, const EdgeOrder& ord, const CheckOptions& opt) {
  Ctx c(g, ord);
  Collector out{opt.max_violations, {}};
  const int m = static_cast<int>(g.edge_count());
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 2; j <= m; ++j) {
      std::uint32_t a = c.at[static_cast<std::size_t>(i - 1)];
      std::uint32_t b = c.at[static_cast<std::size_t>(j - 1)];
      const bool tt = c.g.edge_tgt(a) == c.g.edge_tgt(b);
      const bool ss = c.g.edge_src(a) == c.g.edge_src(b);
      const bool ts = c.g.edge_tgt(a) == c.g.edge_src(b);
      if (!tt && !ss && !ts) continue;
      for (int r = i + 1; r < j; ++r) {
        std::uint32_t e = c.at[static_cast<std::size_t>(r - 1)];
        std::size_t te = c.g.edge_tgt(e);
        std::size_t se = c.g.edge_src(e);
        auto cite = [&](std::vector<std::string> vs, const char* note) {
          return out.add({Rule::q2, std::move(vs),
                          {g.edge(a).id, g.edge(e).id, g.edge(b).id},
                          {i, r, j},
                          note});
        };
        if (tt) {
          std::size_t v = c.g.edge_tgt(a);
          if (!set_in(c.in_ranks[te], c.in_hull[v])) {
            if (!cite({g.vertex_id(v), g.vertex_id(te)}, "q2-tt")) return std::move(out.verdict);
          }
        }
        if (ss) {
          std::size_t v = c.g.edge_src(a);
          if (!set_in(c.out_ranks[se], c.out_hull[v])) {
            if (!cite({g.vertex_id(v), g.vertex_id(se)}, "q2-ss")) return std::move(out.verdict);
          }
        }
        if (ts) {
          std::size_t v = c.g.edge_tgt(a);
          if (!set_in(c.in_ranks[te], c.in_hull[v]) && !set_in(c.out_ranks[se], c.out_hull[v])) {
            if (!cite({g.vertex_id(v)}, "q2-ts")) return std::move(out.verdict);
          }
        }
      }
    }
  }
  return std::move(out.verdict);
}

namespace {

void append(Verdict& acc, Verdict part, std::size_t cap) {
  acc.valid = acc.valid && part.valid;
  acc.truncated = acc.truncated || part.truncated;
  for (Violation& v : part.violations) {
    if (acc.violations.size() >= cap) {
      acc.truncated = true;
      break;
    }
    acc.violations.push_back(std::move(v));
  }
}

}  // namespace

Verdict validate(const Graph& g, const EdgeOrder& ord, Definition def, const CheckOptions& opt) {
  Verdict acc;
  if (def == Definition::u_rules) {
    append(acc, check_u1(g, ord, opt), opt.max_violations);
    append(acc, check_u2(g, ord, opt), opt.max_violations);
    append(acc, check_u3(g, ord, opt), opt.max_violations);
    return acc;
  }
  if (def == Definition::q_rules) {
    append(acc, check_u1(g, ord, opt), opt.max_violations);
    append(acc, check_q2(g, ord, opt), opt.max_violations);
    return acc;
  }
  Verdict v1 = check_u1(g, ord, opt);
  Verdict v2 = check_u2(g, ord, opt);
  Verdict v3 = check_u3(g, ord, opt);
  Verdict vq = check_q2(g, ord, opt);
  const bool u_valid = v1.valid && v2.valid && v3.valid;
  const bool q_valid = v1.valid && vq.valid;
  append(acc, std::move(v1), opt.max_violations);
  append(acc, std::move(v2), opt.max_violations);
  append(acc, std::move(v3), opt.max_violations);
  append(acc, std::move(vq), opt.max_violations);
  acc.valid = u_valid && q_valid;
  if (u_valid != q_valid) acc.mismatch = DefinitionMismatch{u_valid, q_valid};
  return acc;
}

}  // namespace upo
