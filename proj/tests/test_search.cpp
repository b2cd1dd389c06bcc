#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "upo/generate.hpp"
#include "upo/search.hpp"
#include "upo/validate.hpp"

using upo::Definition;
using upo::EnumerateResult;
using upo::Graph;
using upo::SearchConfig;
using upo::SearchStatus;
using upo::SolveResult;

TEST_CASE("find_upo returns the lexicographically least valid order") {
  Graph tri = upo::fixture("triangle").graph;
  SolveResult r = upo::find_upo(tri);
  REQUIRE(r.status == SearchStatus::found);
  REQUIRE(r.order.has_value());
  CHECK(r.order->sequence() == std::vector<std::string>{"ab", "bc", "ac"});
  CHECK(upo::validate(tri, *r.order, Definition::both).valid);

  Graph star = upo::fixture("star").graph;
  SolveResult s = upo::find_upo(star);
  REQUIRE(s.status == SearchStatus::found);
  CHECK(s.order->sequence() == std::vector<std::string>{"x1", "x2", "x3", "x4"});

  Graph demo = upo::fixture("demo").graph;
  SolveResult d = upo::find_upo(demo);
  REQUIRE(d.status == SearchStatus::found);
  CHECK(upo::validate(demo, *d.order, Definition::both).valid);
}

TEST_CASE("find_upo reports none when no valid order exists") {
  Graph k5 = upo::fixture("k5").graph;
  SolveResult r = upo::find_upo(k5);
  CHECK(r.status == SearchStatus::none);
  CHECK(!r.order.has_value());
  CHECK(!upo::is_upward_planar(k5));
  CHECK(upo::count_upos(k5) == 0);
  CHECK(upo::enumerate_upos(k5).orders.empty());
}

TEST_CASE("enumerate_upos lists all valid orders in lexicographic sequence order") {
  Graph tri = upo::fixture("triangle").graph;
  EnumerateResult r = upo::enumerate_upos(tri);
  CHECK(r.complete);
  REQUIRE(r.orders.size() == 2);
  CHECK(r.orders[0].sequence() == std::vector<std::string>{"ab", "bc", "ac"});
  CHECK(r.orders[1].sequence() == std::vector<std::string>{"ac", "ab", "bc"});
  CHECK(upo::count_upos(tri) == 2);

  // Two independent 2-edge stars impose nothing, so every permutation works.
  Graph star = upo::fixture("star").graph;
  EnumerateResult s = upo::enumerate_upos(star);
  CHECK(s.complete);
  CHECK(s.orders.size() == 24);
  CHECK(std::is_sorted(s.orders.begin(), s.orders.end(),
                       [](const upo::EdgeOrder& a, const upo::EdgeOrder& b) {
                         return a.sequence() < b.sequence();
                       }));
  CHECK(upo::count_upos(star) == 24);
}

TEST_CASE("enumeration limit truncates and says so") {
  Graph star = upo::fixture("star").graph;
  SearchConfig cfg;
  cfg.limit = 5;
  EnumerateResult r = upo::enumerate_upos(star, cfg);
  CHECK(r.orders.size() == 5);
  CHECK(!r.complete);
  CHECK(!r.budget_exhausted);
  CHECK(r.orders[0].sequence() == std::vector<std::string>{"x1", "x2", "x3", "x4"});

  cfg.limit = 100;
  EnumerateResult all = upo::enumerate_upos(star, cfg);
  CHECK(all.complete);
  CHECK(all.orders.size() == 24);
}

TEST_CASE("node budget exhaustion is its own outcome") {
  Graph demo = upo::fixture("demo").graph;
  SearchConfig tiny;
  tiny.node_budget = 3;
  SolveResult r = upo::find_upo(demo, tiny);
  CHECK(r.status == SearchStatus::budget_exhausted);
  CHECK(!r.order.has_value());
  CHECK(r.nodes <= 3);

  EnumerateResult e = upo::enumerate_upos(demo, tiny);
  CHECK(e.budget_exhausted);
  CHECK(!e.complete);

  // A budget large enough never fires.
  SearchConfig big;
  big.node_budget = 1000000;
  CHECK(upo::find_upo(demo, big).status == SearchStatus::found);

  // "none" still wins over the budget when the space is exhausted first.
  Graph tri = upo::fixture("triangle").graph;
  Graph k5 = upo::fixture("k5").graph;
  SearchConfig k5budget;
  k5budget.node_budget = 1000000;
  CHECK(upo::find_upo(k5, k5budget).status == SearchStatus::none);
  CHECK(upo::find_upo(tri, big).status == SearchStatus::found);
}

TEST_CASE("search is complete and sound against brute force") {
  for (std::uint64_t seed = 300; seed < 340; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const bool parallel = seed % 5 == 0;
    const std::size_t cap = parallel ? 8 : n * (n - 1) / 2;
    const std::size_t m = std::min<std::size_t>(2 + seed % 5, cap);
    Graph g = upo::gen_random_dag(n, m, seed, parallel);

    std::vector<std::vector<std::string>> expect = oracle::brute_orders(g);
    EnumerateResult got = upo::enumerate_upos(g);
    REQUIRE(got.complete);
    std::vector<std::vector<std::string>> seqs;
    for (const upo::EdgeOrder& o : got.orders) seqs.push_back(o.sequence());
    CHECK(seqs == expect);
    CHECK(upo::count_upos(g) == expect.size());
    CHECK(upo::is_upward_planar(g) == !expect.empty());

    SolveResult first = upo::find_upo(g);
    if (expect.empty()) {
      CHECK(first.status == SearchStatus::none);
    } else {
      REQUIRE(first.status == SearchStatus::found);
      CHECK(first.order->sequence() == expect.front());
    }
  }
}

TEST_CASE("both rule families drive the search to the same answers") {
  for (std::uint64_t seed = 400; seed < 420; ++seed) {
    const std::size_t n = 2 + seed % 4;
    const std::size_t m = std::min<std::size_t>(2 + seed % 4, n * (n - 1) / 2);
    Graph g = upo::gen_random_dag(n, m, seed);
    SearchConfig u, q;
    u.definition = Definition::u_rules;
    q.definition = Definition::q_rules;
    EnumerateResult eu = upo::enumerate_upos(g, u);
    EnumerateResult eq = upo::enumerate_upos(g, q);
    REQUIRE(eu.complete);
    REQUIRE(eq.complete);
    REQUIRE(eu.orders.size() == eq.orders.size());
    for (std::size_t i = 0; i < eu.orders.size(); ++i) {
      CHECK(eu.orders[i] == eq.orders[i]);
    }
  }
}

TEST_CASE("search results are reproducible") {
  Graph demo = upo::fixture("demo").graph;
  SolveResult a = upo::find_upo(demo);
  SolveResult b = upo::find_upo(demo);
  REQUIRE(a.order.has_value());
  CHECK(*a.order == *b.order);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("degenerate searches") {
  Graph empty = Graph::build({}, {});
  SolveResult r = upo::find_upo(empty);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(r.order->size() == 0);
  CHECK(upo::count_upos(empty) == 1);  // the empty order

  Graph lone = Graph::build({"a", "b"}, {{"e", "a", "b"}});
  CHECK(upo::count_upos(lone) == 1);

  Graph cyc = Graph::build({"a", "b"}, {{"f", "a", "b"}, {"g", "b", "a"}});
  CHECK_THROWS_AS(upo::find_upo(cyc), upo::Error);
}

TEST_CASE("differential check finds no disagreements exhaustively") {
  for (const char* name : {"star", "pathx", "triangle", "interleave"}) {
    Graph g = upo::fixture(name).graph;
    upo::DiffReport r = upo::diff_definitions(g);
    CHECK(r.mode == upo::DiffMode::exhaustive);
    CHECK(r.disagreements.empty());
    std::uint64_t fact = 1;
    for (std::size_t i = 2; i <= g.edge_count(); ++i) fact *= i;
    CHECK(r.orders_tested == fact);
  }
}

TEST_CASE("differential check refuses oversized exhaustive runs") {
  Graph k5 = upo::fixture("k5").graph;
  CHECK_THROWS_AS(upo::diff_definitions(k5), upo::Error);

  upo::DiffOptions sampled;
  sampled.mode = upo::DiffMode::sampled;
  sampled.samples = 500;
  sampled.seed = 7;
  upo::DiffReport r = upo::diff_definitions(k5, sampled);
  CHECK(r.mode == upo::DiffMode::sampled);
  CHECK(r.orders_tested == 500);
  CHECK(r.samples == 500);
  CHECK(r.seed == 7);
  CHECK(r.disagreements.empty());
}

TEST_CASE("sampled differential check is seed-deterministic") {
  Graph demo = upo::fixture("demo").graph;
  upo::DiffOptions opt;
  opt.mode = upo::DiffMode::sampled;
  opt.samples = 200;
  opt.seed = 42;
  upo::DiffReport a = upo::diff_definitions(demo, opt);
  upo::DiffReport b = upo::diff_definitions(demo, opt);
  CHECK(a.orders_tested == b.orders_tested);
  CHECK(a.disagreements.empty());
  CHECK(b.disagreements.empty());
}
