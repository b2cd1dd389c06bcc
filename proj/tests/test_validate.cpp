#include <doctest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "upo/error.hpp"
#include "upo/generate.hpp"
#include "upo/validate.hpp"

using upo::CheckOptions;
using upo::Definition;
using upo::EdgeOrder;
using upo::Graph;
using upo::Verdict;
using upo::Violation;

namespace {

// Compact one-line form: "U3 u3-in v:v,w e:i2@3,i1@1". Tests compare these
// instead of field-by-field.
std::string sig(const Violation& v) {
  std::string s = upo::rule_name(v.rule);
  s += ' ';
  s += v.note;
  if (!v.vertices.empty()) {
    s += " v:";
    for (std::size_t i = 0; i < v.vertices.size(); ++i) {
      if (i) s += ',';
      s += v.vertices[i];
    }
  }
  s += " e:";
  for (std::size_t i = 0; i < v.edges.size(); ++i) {
    if (i) s += ',';
    s += v.edges[i] + '@' + std::to_string(v.ranks[i]);
  }
  return s;
}

std::vector<std::string> sigs(const Verdict& v) {
  std::vector<std::string> out;
  for (const Violation& viol : v.violations) out.push_back(sig(viol));
  return out;
}

EdgeOrder ord_of(const Graph& g, std::vector<std::string> seq) {
  return upo::make_order(g, std::move(seq));
}

}  // namespace

TEST_CASE("extension rule cites the reaching edge at the higher rank") {
  Graph g = upo::fixture("pathx").graph;  // p: u->v, q: v->w, r: x->y
  Verdict v = upo::check_u1(g, ord_of(g, {"q", "p", "r"}));
  CHECK(!v.valid);
  CHECK(sigs(v) == std::vector<std::string>{"U1 u1-reach e:p@2,q@1"});
  CHECK(upo::check_u1(g, ord_of(g, {"p", "q", "r"})).valid);
  CHECK(upo::check_u1(g, ord_of(g, {"r", "p", "q"})).valid);

  // A two-step reach violates just the same as a direct one.
  Graph chain = Graph::build({"a", "b", "c", "d"},
                             {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "d"}});
  Verdict w = upo::check_u1(chain, ord_of(chain, {"e3", "e1", "e2"}));
  CHECK(sigs(w) == std::vector<std::string>{"U1 u1-reach e:e1@2,e3@1", "U1 u1-reach e:e2@3,e3@1"});
}

TEST_CASE("separation rule: gap witnesses") {
  Graph tri = upo::fixture("triangle").graph;
  Verdict v = upo::check_u2(tri, ord_of(tri, {"ab", "ac", "bc"}));
  CHECK(sigs(v) == std::vector<std::string>{"U2 u2-gap v:b e:ab@1,ac@2,bc@3"});

  Graph g = upo::fixture("pathx").graph;
  Verdict w = upo::check_u2(g, ord_of(g, {"p", "r", "q"}));
  CHECK(sigs(w) == std::vector<std::string>{"U2 u2-gap v:v e:p@1,r@2,q@3"});

  // The gap edge is the first rank past the lower of the two hulls, also
  // when the out-hull sits below the in-hull.
  Verdict x = upo::check_u2(g, ord_of(g, {"q", "r", "p"}));
  CHECK(sigs(x) == std::vector<std::string>{"U2 u2-gap v:v e:q@1,r@2,p@3"});

  CHECK(upo::check_u2(tri, ord_of(tri, {"ab", "bc", "ac"})).valid);
  CHECK(upo::check_u2(g, ord_of(g, {"p", "q", "r"})).valid);
  CHECK(upo::check_u2(g, ord_of(g, {"r", "p", "q"})).valid);
}

TEST_CASE("separation rule: overlap witnesses") {
  Graph g = Graph::build({"a", "b", "c", "v"},
                         {{"i1", "a", "v"}, {"i2", "b", "v"}, {"o1", "v", "c"}});
  Verdict v = upo::check_u2(g, ord_of(g, {"i1", "o1", "i2"}));
  CHECK(sigs(v) == std::vector<std::string>{"U2 u2-overlap v:v e:o1@2"});

  Graph h = Graph::build(
      {"a", "b", "c", "d", "v"},
      {{"i1", "a", "v"}, {"i2", "b", "v"}, {"o1", "v", "c"}, {"o2", "v", "d"}});
  Verdict w = upo::check_u2(h, ord_of(h, {"i1", "o1", "o2", "i2"}));
  CHECK(sigs(w) == std::vector<std::string>{"U2 u2-overlap v:v e:o1@2,o2@3"});
  CHECK(upo::check_u2(h, ord_of(h, {"i1", "i2", "o1", "o2"})).valid);
}

TEST_CASE("separation rule is vacuous at sources, sinks and isolated vertices") {
  Graph g = upo::fixture("star").graph;
  for (const auto& seq : oracle::permutations(g)) {
    CHECK(upo::check_u2(g, ord_of(g, seq)).valid);
  }
}

TEST_CASE("nesting rule witnesses") {
  Graph g = upo::fixture("interleave").graph;  // i1,i2 -> v; j1,j2 -> w
  Verdict v = upo::check_u3(g, ord_of(g, {"i1", "j1", "i2", "j2"}));
  CHECK(sigs(v) == std::vector<std::string>{"U3 u3-in v:v,w e:i2@3,i1@1",
                                            "U3 u3-in v:w,v e:j1@2,j2@4"});
  CHECK(upo::check_u3(g, ord_of(g, {"i1", "i2", "j1", "j2"})).valid);
  CHECK(upo::check_u3(g, ord_of(g, {"j1", "j2", "i1", "i2"})).valid);

  // Containment is fine; only straddling the hull boundary is cited.
  Graph n = Graph::build({"a", "b", "c", "v", "w"},
                         {{"i1", "a", "v"}, {"i2", "b", "v"}, {"k1", "c", "w"}});
  CHECK(upo::check_u3(n, ord_of(n, {"i1", "k1", "i2"})).valid);
}

TEST_CASE("nesting rule: out-clause and scan order over vertex pairs") {
  Graph g = Graph::build({"a", "b", "c", "d"},
                         {{"d1", "a", "b"}, {"d2", "a", "b"}, {"z1", "c", "d"}, {"z2", "c", "d"}});
  Verdict v = upo::check_u3(g, ord_of(g, {"d1", "z1", "d2", "z2"}));
  CHECK(sigs(v) == std::vector<std::string>{
                       "U3 u3-out v:a,c e:d2@3,d1@1",
                       "U3 u3-in v:b,d e:d2@3,d1@1",
                       "U3 u3-out v:c,a e:z1@2,z2@4",
                       "U3 u3-in v:d,b e:z1@2,z2@4",
                   });
  CHECK(upo::check_u3(g, ord_of(g, {"d1", "d2", "z1", "z2"})).valid);
  CHECK(upo::check_u3(g, ord_of(g, {"z1", "z2", "d1", "d2"})).valid);
}

TEST_CASE("interleaving rule: tt case") {
  Graph g = upo::fixture("interleave").graph;
  Verdict v = upo::check_q2(g, ord_of(g, {"i1", "j1", "i2", "j2"}));
  CHECK(sigs(v) == std::vector<std::string>{"Q2 q2-tt v:v,w e:i1@1,j1@2,i2@3",
                                            "Q2 q2-tt v:w,v e:j1@2,i2@3,j2@4"});
  CHECK(upo::check_q2(g, ord_of(g, {"i1", "i2", "j1", "j2"})).valid);
}

TEST_CASE("interleaving rule: ts case") {
  Graph g = upo::fixture("pathx").graph;
  Verdict v = upo::check_q2(g, ord_of(g, {"p", "r", "q"}));
  CHECK(sigs(v) == std::vector<std::string>{"Q2 q2-ts v:v e:p@1,r@2,q@3"});
  CHECK(upo::check_q2(g, ord_of(g, {"p", "q", "r"})).valid);
  CHECK(upo::check_q2(g, ord_of(g, {"r", "p", "q"})).valid);
}

TEST_CASE("interleaving rule: st imposes nothing") {
  Graph g = Graph::build({"a", "b", "c", "u", "v"},
                         {{"f", "v", "a"}, {"g", "b", "c"}, {"h", "u", "v"}});
  EdgeOrder ord = ord_of(g, {"f", "g", "h"});
  CHECK(upo::check_q2(g, ord).valid);
  CHECK(!upo::check_u1(g, ord).valid);  // h -> f, so the pair still fails U1
}

TEST_CASE("interleaving rule: parallel edges demand both clauses") {
  Graph g = Graph::build({"a", "b", "c", "d"},
                         {{"d1", "a", "b"}, {"d2", "a", "b"}, {"z1", "c", "d"}, {"z2", "c", "d"}});
  Verdict v = upo::check_q2(g, ord_of(g, {"d1", "z1", "d2", "z2"}));
  CHECK(sigs(v) == std::vector<std::string>{
                       "Q2 q2-tt v:b,d e:d1@1,z1@2,d2@3",
                       "Q2 q2-ss v:a,c e:d1@1,z1@2,d2@3",
                       "Q2 q2-tt v:d,b e:z1@2,d2@3,z2@4",
                       "Q2 q2-ss v:c,a e:z1@2,d2@3,z2@4",
                   });
  CHECK(upo::check_q2(g, ord_of(g, {"d1", "d2", "z1", "z2"})).valid);
}

TEST_CASE("combined validation merges in rule order and caps the list") {
  Graph g = upo::fixture("interleave").graph;
  EdgeOrder bad = ord_of(g, {"i1", "j1", "i2", "j2"});

  Verdict both = upo::validate(g, bad, Definition::both);
  CHECK(!both.valid);
  CHECK(!both.truncated);
  CHECK(!both.mismatch.has_value());
  CHECK(sigs(both) == std::vector<std::string>{
                          "U3 u3-in v:v,w e:i2@3,i1@1",
                          "U3 u3-in v:w,v e:j1@2,j2@4",
                          "Q2 q2-tt v:v,w e:i1@1,j1@2,i2@3",
                          "Q2 q2-tt v:w,v e:j1@2,i2@3,j2@4",
                      });

  Verdict capped = upo::validate(g, bad, Definition::both, CheckOptions{3});
  CHECK(!capped.valid);
  CHECK(capped.truncated);
  CHECK(capped.violations.size() == 3);

  Verdict u_only = upo::validate(g, bad, Definition::u_rules);
  CHECK(u_only.violations.size() == 2);
  Verdict q_only = upo::validate(g, bad, Definition::q_rules);
  CHECK(q_only.violations.size() == 2);

  EdgeOrder good = ord_of(g, {"i1", "i2", "j1", "j2"});
  Verdict ok = upo::validate(g, good, Definition::both);
  CHECK(ok.valid);
  CHECK(ok.violations.empty());
  CHECK(!ok.mismatch.has_value());
}

TEST_CASE("truncation inside a single rule") {
  Graph g = Graph::build({"a", "b", "c", "d"},
                         {{"d1", "a", "b"}, {"d2", "a", "b"}, {"z1", "c", "d"}, {"z2", "c", "d"}});
  Verdict v = upo::check_u3(g, ord_of(g, {"d1", "z1", "d2", "z2"}), CheckOptions{2});
  CHECK(!v.valid);
  CHECK(v.truncated);
  CHECK(v.violations.size() == 2);
}

TEST_CASE("named fixture orders validate under both rule families") {
  for (const char* name : {"star", "demo"}) {
    upo::Fixture f = upo::fixture(name);
    REQUIRE(!f.orders.empty());
    for (const auto& [order_name, ord] : f.orders) {
      Verdict v = upo::validate(f.graph, ord, Definition::both);
      CHECK_MESSAGE(v.valid, name, "/", order_name);
      CHECK(!v.mismatch.has_value());
    }
  }
}

TEST_CASE("checkers refuse cyclic graphs and mismatched orders") {
  Graph cyc = Graph::build({"a", "b"}, {{"f", "a", "b"}, {"g", "b", "a"}});
  EdgeOrder ord = ord_of(cyc, {"f", "g"});
  CHECK_THROWS_AS(upo::check_u1(cyc, ord), upo::Error);
  CHECK_THROWS_AS(upo::check_u2(cyc, ord), upo::Error);

  Graph tri = upo::fixture("triangle").graph;
  Graph pathx = upo::fixture("pathx").graph;
  EdgeOrder wrong = ord_of(pathx, {"p", "q", "r"});
  CHECK_THROWS_AS(upo::validate(tri, wrong, Definition::both), upo::Error);
}

TEST_CASE("degenerate inputs are trivially valid") {
  Graph empty = Graph::build({}, {});
  CHECK(upo::validate(empty, EdgeOrder{}, Definition::both).valid);
  Graph lone = Graph::build({"a", "b"}, {{"e", "a", "b"}});
  CHECK(upo::validate(lone, ord_of(lone, {"e"}), Definition::both).valid);
}

TEST_CASE("verdicts agree with the literal-set reference on random inputs") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const bool parallel = seed % 4 == 0;
    const std::size_t cap = parallel ? 8 : n * (n - 1) / 2;
    const std::size_t m = std::min<std::size_t>(2 + seed % 4, cap);
    Graph g = upo::gen_random_dag(n, m, seed, parallel);
    for (const auto& seq : oracle::permutations(g)) {
      EdgeOrder ord = ord_of(g, seq);
      CHECK(upo::check_u1(g, ord).valid == oracle::u1(g, seq));
      CHECK(upo::check_u2(g, ord).valid == oracle::u2(g, seq));
      CHECK(upo::check_u3(g, ord).valid == oracle::u3(g, seq));
      CHECK(upo::check_q2(g, ord).valid == oracle::q2(g, seq));
      CHECK(upo::validate(g, ord, Definition::u_rules).valid == oracle::valid_u(g, seq));
      CHECK(upo::validate(g, ord, Definition::q_rules).valid == oracle::valid_q(g, seq));
    }
  }
}

TEST_CASE("every cited witness is well formed") {
  for (std::uint64_t seed = 200; seed < 220; ++seed) {
    const std::size_t n = 2 + seed % 5;
    Graph g = upo::gen_random_dag(n, std::min<std::size_t>(2 + seed % 4, n * (n - 1) / 2), seed);
    for (const auto& seq : oracle::permutations(g)) {
      EdgeOrder ord = ord_of(g, seq);
      Verdict v = upo::validate(g, ord, Definition::both);
      for (const Violation& viol : v.violations) {
        REQUIRE(viol.edges.size() == viol.ranks.size());
        for (std::size_t i = 0; i < viol.edges.size(); ++i) {
          CHECK(g.has_edge(viol.edges[i]));
          CHECK(ord.rank_of(viol.edges[i]) == viol.ranks[i]);
        }
        for (const std::string& vid : viol.vertices) CHECK(g.has_vertex(vid));
        if (viol.rule == upo::Rule::u1) {
          REQUIRE(viol.edges.size() == 2);
          CHECK(oracle::edge_reaches(g, viol.edges[0], viol.edges[1]));
          CHECK(viol.ranks[0] > viol.ranks[1]);
        }
      }
    }
  }
}
