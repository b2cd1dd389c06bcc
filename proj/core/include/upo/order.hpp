#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "upo/graph.hpp"

namespace upo {

// Closed interval of 1-based ranks, or the distinguished empty interval.
// Empty is its own value, never [0,0]; lo()/hi() on it is a logic error.
class Interval {
 public:
  Interval() = default;  // empty
  Interval(int lo, int hi);

  static Interval empty() { return {}; }

  bool is_empty() const noexcept { return hi_ < lo_; }
  int lo() const;
  int hi() const;
  int length() const noexcept { return is_empty() ? 0 : hi_ - lo_ + 1; }

  bool contains(int rank) const noexcept { return !is_empty() && lo_ <= rank && rank <= hi_; }
  // Subset: the empty interval is contained in everything.
  bool contains(const Interval& other) const noexcept {
    return other.is_empty() || (!is_empty() && lo_ <= other.lo_ && other.hi_ <= hi_);
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  int lo_ = 1;
  int hi_ = 0;
};

bool disjoint(const Interval& a, const Interval& b) noexcept;

// The covering interval when the set union of a and b is itself contiguous;
// nullopt otherwise ("not an interval").
std::optional<Interval> union_exact(const Interval& a, const Interval& b) noexcept;

namespace detail {
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};
}  // namespace detail

// A linear order on the edge set of one graph: a bijection edge id -> rank
// 1..m, held as the rank-ascending id sequence.
class EdgeOrder {
 public:
  EdgeOrder() = default;  // the empty order (orders the empty graph)

  std::size_t size() const noexcept { return seq_.size(); }
  const std::vector<std::string>& sequence() const noexcept { return seq_; }

  bool has(std::string_view id) const noexcept { return rank_.find(id) != rank_.end(); }
  int rank_of(std::string_view id) const;  // ForeignEdge

  // Ranks aligned to g's edge indices, verifying this order covers exactly
  // g's edge set. Errors: ForeignEdge, MissingEdge.
  std::vector<int> ranks_for(const Graph& g) const;

  friend bool operator==(const EdgeOrder& a, const EdgeOrder& b) { return a.seq_ == b.seq_; }

  friend EdgeOrder make_order(const Graph& g, std::vector<std::string> sequence);

 private:
  std::vector<std::string> seq_;
  std::unordered_map<std::string, int, detail::StringHash, std::equal_to<>> rank_;
};

// Errors: ForeignEdge, DuplicateEdge, MissingEdge.
EdgeOrder make_order(const Graph& g, std::vector<std::string> sequence);

// Convex hull of xs: the rank interval [min xs, max xs], empty for empty xs.
// Errors: ForeignEdge.
Interval hull(const EdgeOrder& ord, const std::vector<std::string>& xs);

// Edges whose rank lies in iv, ascending by id. Exists for witnesses and
// tests; rule checks compare intervals directly. Errors: RankOutOfRange.
std::vector<std::string> hull_members(const EdgeOrder& ord, const Interval& iv);

}  // namespace upo
