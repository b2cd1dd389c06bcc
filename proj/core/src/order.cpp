#include "upo/order.hpp"

#include <algorithm>
#include <unordered_set>

#include "upo/error.hpp"

namespace upo {

Interval::Interval(int lo, int hi) : lo_(lo), hi_(hi) {
  if (lo < 1 || hi < lo) {
    fail(errc::rank_out_of_range,
         "interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is not valid");
  }
}

int Interval::lo() const {
  if (is_empty()) fail(errc::rank_out_of_range, "lo() on empty interval");
  return lo_;
}

int Interval::hi() const {
  if (is_empty()) fail(errc::rank_out_of_range, "hi() on empty interval");
  return hi_;
}

bool disjoint(const Interval& a, const Interval& b) noexcept {
  if (a.is_empty() || b.is_empty()) return true;
  return a.hi() < b.lo() || b.hi() < a.lo();
}

std::optional<Interval> union_exact(const Interval& a, const Interval& b) noexcept {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  // Contiguous union: the intervals overlap or abut.
  if (a.hi() + 1 < b.lo() || b.hi() + 1 < a.lo()) return std::nullopt;
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

int EdgeOrder::rank_of(std::string_view id) const {
  auto it = rank_.find(id);
  if (it == rank_.end()) fail(errc::foreign_edge, "edge '" + std::string(id) + "' not in order");
  return it->second;
}

std::vector<int> EdgeOrder::ranks_for(const Graph& g) const {
  if (g.edge_count() != seq_.size()) {
    // Name a concrete discrepancy: some edge of g is unordered, or some
    // ordered id is foreign. Whichever exists, report the lex-least.
    for (const Edge& e : g.edges()) {
      if (!has(e.id)) fail(errc::missing_edge, "edge '" + e.id + "' missing from order");
    }
    for (const std::string& id : seq_) {
      if (!g.has_edge(id)) fail(errc::foreign_edge, "edge '" + id + "' not in graph");
    }
  }
  std::vector<int> ranks(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const std::string& id = g.edge(i).id;
    auto it = rank_.find(std::string_view(id));
    if (it == rank_.end()) fail(errc::missing_edge, "edge '" + id + "' missing from order");
    ranks[i] = it->second;
  }
  return ranks;
}

EdgeOrder make_order(const Graph& g, std::vector<std::string> sequence) {
  EdgeOrder ord;
  ord.rank_.reserve(sequence.size());
  int next = 1;
  for (const std::string& id : sequence) {
    if (!g.has_edge(id)) fail(errc::foreign_edge, "edge '" + id + "' not in graph");
    if (!ord.rank_.emplace(id, next).second) {
      fail(errc::duplicate_edge, "edge '" + id + "' appears twice");
    }
    ++next;
  }
  if (sequence.size() != g.edge_count()) {
    // g.edges() is id-sorted, so the first unordered edge is lex-least.
    for (const Edge& e : g.edges()) {
      if (!ord.has(e.id)) fail(errc::missing_edge, "edge '" + e.id + "' missing from order");
    }
  }
  ord.seq_ = std::move(sequence);
  return ord;
}

Interval hull(const EdgeOrder& ord, const std::vector<std::string>& xs) {
  if (xs.empty()) return Interval::empty();
  int lo = 0, hi = 0;
  bool first = true;
  for (const std::string& id : xs) {
    int r = ord.rank_of(id);
    if (first) {
      lo = hi = r;
      first = false;
    } else {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  return Interval(lo, hi);
}

std::vector<std::string> hull_members(const EdgeOrder& ord, const Interval& iv) {
  std::vector<std::string> out;
  if (iv.is_empty()) return out;
  if (iv.lo() < 1 || iv.hi() > static_cast<int>(ord.size())) {
    fail(errc::rank_out_of_range, "interval [" + std::to_string(iv.lo()) + ", " +
                                      std::to_string(iv.hi()) + "] exceeds order of size " +
                                      std::to_string(ord.size()));
  }
  out.reserve(static_cast<std::size_t>(iv.length()));
  for (int r = iv.lo(); r <= iv.hi(); ++r) {
    out.push_back(ord.sequence()[static_cast<std::size_t>(r - 1)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace upo
