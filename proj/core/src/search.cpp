#include "upo/search.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "rng.hpp"
#include "upo/error.hpp"

namespace upo {

namespace {

// Depth-first linear-extension search. Candidates at each rank are the edges
// whose reachability predecessors are all placed, in ascending edge-id order
// (edge indices are id-sorted), so complete candidates appear in lexicographic
// sequence order and the first valid one is the lexicographic minimum.
//
// Two conservative prunes, both validated against brute force by the tests:
//   forcing: when the edge at rank r completes the in-set of a processive
//     vertex w, every valid completion has an out-edge of w at rank r+1
//     (hull(O(w)) must start at hull(I(w)).hi + 1), so only O(w) is tried.
//   decided nesting: a placed rank is in the final hull(I(v2)) exactly when
//     it is >= the first placed in-rank of v2 and, once I(v2) is complete,
//     <= the last one; ranks never shrink, so once some member of I(v1) is
//     decidedly inside and another decidedly outside, no completion can
//     satisfy the nesting rule. Same for out-sets. Both rule families accept
//     the same orders, so the prunes are safe for either definition.
class Searcher {
 public:
  Searcher(const Graph& g, Definition def, std::optional<std::uint64_t> budget)
      : g_(g), def_(def), budget_(budget) {
    if (!g.acyclic()) fail(errc::cyclic_graph, "graph has a directed cycle");
    const std::size_t m = g.edge_count();
    succ_.resize(m);
    pred_remaining_.assign(m, 0);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (a != b && g.reaches(a, b)) {
          succ_[a].push_back(static_cast<std::uint32_t>(b));
          ++pred_remaining_[b];
        }
      }
    }
    placed_.assign(m, false);
    seq_.reserve(m);
    in_placed_.resize(g.vertex_count());
    out_placed_.resize(g.vertex_count());
  }

  // emit is called on every valid complete order; return false to stop early.
  void run(const std::function<bool(const std::vector<std::uint32_t>&)>& emit) {
    emit_ = &emit;
    extend(-1);
  }

  std::uint64_t nodes() const { return nodes_; }
  bool budget_hit() const { return budget_hit_; }

  EdgeOrder to_order(const std::vector<std::uint32_t>& seq) const {
    std::vector<std::string> ids;
    ids.reserve(seq.size());
    for (std::uint32_t e : seq) ids.push_back(g_.edge(e).id);
    return make_order(g_, std::move(ids));
  }

 private:
  // forced < 0: any available edge; otherwise only out-edges of that vertex.
  bool extend(int forced) {
    const std::size_t m = g_.edge_count();
    if (seq_.size() == m) {
      Verdict v = validate(g_, to_order(seq_), def_);
      return !v.valid || (*emit_)(seq_);
    }
    auto try_edge = [&](std::uint32_t e) -> bool {
      if (placed_[e] || pred_remaining_[e] != 0) return true;
      if (budget_ && nodes_ >= *budget_) {
        budget_hit_ = true;
        return false;
      }
      ++nodes_;
      place(e);
      bool keep_going = true;
      if (!decided_nesting_violation(e)) keep_going = extend(forced_after(e));
      unplace(e);
      return keep_going;
    };
    if (forced >= 0) {
      for (std::uint32_t e : g_.out_edges(static_cast<std::size_t>(forced))) {
        if (!try_edge(e)) return false;
      }
      return true;
    }
    for (std::uint32_t e = 0; e < m; ++e) {
      if (!try_edge(e)) return false;
    }
    return true;
  }

  void place(std::uint32_t e) {
    placed_[e] = true;
    seq_.push_back(e);
    const int rank = static_cast<int>(seq_.size());
    in_placed_[g_.edge_tgt(e)].push_back(rank);
    out_placed_[g_.edge_src(e)].push_back(rank);
    for (std::uint32_t f : succ_[e]) --pred_remaining_[f];
  }

  void unplace(std::uint32_t e) {
    for (std::uint32_t f : succ_[e]) ++pred_remaining_[f];
    in_placed_[g_.edge_tgt(e)].pop_back();
    out_placed_[g_.edge_src(e)].pop_back();
    seq_.pop_back();
    placed_[e] = false;
  }

  int forced_after(std::uint32_t e) const {
    const std::size_t w = g_.edge_tgt(e);
    if (!g_.out_edges(w).empty() && out_placed_[w].empty() &&
        in_placed_[w].size() == g_.in_edges(w).size()) {
      return static_cast<int>(w);
    }
    return -1;
  }

  // Decided violation of the nesting rule for the pair (v1, v2) on the given
  // placed-rank sets. Only facts that can no longer change are used.
  bool decided_pair(const std::vector<int>& set1, bool set1_complete,
                    const std::vector<int>& set2, bool set2_complete,
                    bool set2_total_empty) const {
    if (set2_total_empty || set2.empty()) return false;
    const int min2 = set2.front();
    const int max2 = set2.back();
    bool has_in = false, has_out = false;
    for (int x : set1) {
      const bool inside = x >= min2 && (!set2_complete || x <= max2);
      has_in = has_in || inside;
      has_out = has_out || !inside;
    }
    if (set2_complete && !set1_complete) has_out = true;
    return has_in && has_out;
  }

  bool decided_nesting_violation(std::uint32_t e) const {
    const std::size_t vt = g_.edge_tgt(e);
    const std::size_t vs = g_.edge_src(e);
    const std::size_t n = g_.vertex_count();
    auto in_complete = [&](std::size_t v) {
      return in_placed_[v].size() == g_.in_edges(v).size();
    };
    auto out_complete = [&](std::size_t v) {
      return out_placed_[v].size() == g_.out_edges(v).size();
    };
    for (std::size_t u = 0; u < n; ++u) {
      if (u != vt) {
        if (decided_pair(in_placed_[vt], in_complete(vt), in_placed_[u], in_complete(u),
                         g_.in_edges(u).empty()) ||
            decided_pair(in_placed_[u], in_complete(u), in_placed_[vt], in_complete(vt),
                         g_.in_edges(vt).empty())) {
          return true;
        }
      }
      if (u != vs) {
        if (decided_pair(out_placed_[vs], out_complete(vs), out_placed_[u], out_complete(u),
                         g_.out_edges(u).empty()) ||
            decided_pair(out_placed_[u], out_complete(u), out_placed_[vs], out_complete(vs),
                         g_.out_edges(vs).empty())) {
          return true;
        }
      }
    }
    return false;
  }

  const Graph& g_;
  Definition def_;
  std::optional<std::uint64_t> budget_;
  std::vector<std::vector<std::uint32_t>> succ_;
  std::vector<int> pred_remaining_;
  std::vector<bool> placed_;
  std::vector<std::uint32_t> seq_;
  std::vector<std::vector<int>> in_placed_, out_placed_;  // ascending ranks
  const std::function<bool(const std::vector<std::uint32_t>&)>* emit_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

SolveResult find_upo(const Graph& g, const SearchConfig& cfg) {
  Searcher s(g, cfg.definition, cfg.node_budget);
  SolveResult res;
  s.run([&](const std::vector<std::uint32_t>& seq) {
    res.order = s.to_order(seq);
    return false;
  });
  res.nodes = s.nodes();
  if (res.order) {
    res.status = SearchStatus::found;
  } else {
    res.status = s.budget_hit() ? SearchStatus::budget_exhausted : SearchStatus::none;
  }
  return res;
}

EnumerateResult enumerate_upos(const Graph& g, const SearchConfig& cfg) {
  Searcher s(g, cfg.definition, cfg.node_budget);
  EnumerateResult res;
  bool limited = false;
  s.run([&](const std::vector<std::uint32_t>& seq) {
    res.orders.push_back(s.to_order(seq));
    if (cfg.limit && res.orders.size() >= *cfg.limit) {
      limited = true;
      return false;
    }
    return true;
  });
  res.nodes = s.nodes();
  res.budget_exhausted = s.budget_hit();
  res.complete = !limited && !s.budget_hit();
  return res;
}

std::uint64_t count_upos(const Graph& g) {
  Searcher s(g, Definition::u_rules, std::nullopt);
  std::uint64_t n = 0;
  s.run([&](const std::vector<std::uint32_t>&) {
    ++n;
    return true;
  });
  return n;
}

bool is_upward_planar(const Graph& g) {
  return find_upo(g).status == SearchStatus::found;
}

DiffReport diff_definitions(const Graph& g, const DiffOptions& opt) {
  if (!g.acyclic()) fail(errc::cyclic_graph, "graph has a directed cycle");
  DiffReport rep;
  rep.mode = opt.mode;
  std::vector<std::string> ids;
  ids.reserve(g.edge_count());
  for (const Edge& e : g.edges()) ids.push_back(e.id);
  auto test_one = [&](const std::vector<std::string>& seq) {
    EdgeOrder ord = make_order(g, seq);
    Verdict vu = validate(g, ord, Definition::u_rules);
    Verdict vq = validate(g, ord, Definition::q_rules);
    ++rep.orders_tested;
    if (vu.valid != vq.valid) rep.disagreements.push_back({seq, std::move(vu), std::move(vq)});
  };
  if (opt.mode == DiffMode::exhaustive) {
    if (g.edge_count() > opt.max_exhaustive_edges) {
      fail(errc::too_large_for_exhaustive,
           std::to_string(g.edge_count()) + " edges exceeds the exhaustive cap of " +
               std::to_string(opt.max_exhaustive_edges));
    }
    // ids start sorted, so this walks all |E|! permutations in lex order.
    do {
      test_one(ids);
    } while (std::next_permutation(ids.begin(), ids.end()));
  } else {
    rep.samples = opt.samples;
    rep.seed = opt.seed;
    detail::Rng rng(opt.seed);
    for (std::uint64_t k = 0; k < opt.samples; ++k) {
      std::vector<std::string> draw = ids;
      rng.shuffle(draw);
      test_one(draw);
    }
  }
  std::sort(rep.disagreements.begin(), rep.disagreements.end(),
            [](const Disagreement& a, const Disagreement& b) { return a.order < b.order; });
  return rep;
}

}  // namespace upo
