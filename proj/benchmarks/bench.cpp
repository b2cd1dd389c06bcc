#include <benchmark/benchmark.h>

#include "upo/generate.hpp"
#include "upo/io.hpp"
#include "upo/search.hpp"
#include "upo/validate.hpp"

namespace {

// Build cost is dominated by the eager edge-reachability closure.
void bm_build_closure(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  upo::Graph seedling = upo::gen_random_dag(n, 3 * n, 7, true);
  std::vector<std::string> vids = seedling.vertex_ids();
  std::vector<upo::Edge> edges = seedling.edges();
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::Graph::build(vids, edges));
  }
}
BENCHMARK(bm_build_closure)->Arg(16)->Arg(64)->Arg(256);

void bm_validate_demo(benchmark::State& state) {
  upo::Fixture f = upo::fixture("demo");
  const upo::EdgeOrder& ord = f.orders[0].second;
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::validate(f.graph, ord, upo::Definition::both));
  }
}
BENCHMARK(bm_validate_demo);

void bm_solve_demo(benchmark::State& state) {
  upo::Graph g = upo::fixture("demo").graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::find_upo(g));
  }
}
BENCHMARK(bm_solve_demo);

// Full refutation: the search exhausts every branch before answering none.
void bm_refute_k5(benchmark::State& state) {
  upo::Graph g = upo::fixture("k5").graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::find_upo(g));
  }
}
BENCHMARK(bm_refute_k5);

void bm_enumerate_star(benchmark::State& state) {
  upo::Graph g = upo::fixture("star").graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::enumerate_upos(g));
  }
}
BENCHMARK(bm_enumerate_star);

void bm_diff_exhaustive_star(benchmark::State& state) {
  upo::Graph g = upo::fixture("star").graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::diff_definitions(g));
  }
}
BENCHMARK(bm_diff_exhaustive_star);

void bm_gen_random_dag(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::gen_random_dag(n, 2 * n, ++seed, true));
  }
}
BENCHMARK(bm_gen_random_dag)->Arg(32)->Arg(128);

void bm_gen_upward_planar(benchmark::State& state) {
  upo::GenParams p;
  p.steps = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    ++p.seed;
    benchmark::DoNotOptimize(upo::gen_upward_planar(p));
  }
}
BENCHMARK(bm_gen_upward_planar)->Arg(16)->Arg(128);

void bm_parse_graph(benchmark::State& state) {
  std::string text = upo::serialize_graph(upo::gen_random_dag(64, 128, 3, true));
  for (auto _ : state) {
    benchmark::DoNotOptimize(upo::parse_graph(text));
  }
}
BENCHMARK(bm_parse_graph);

}  // namespace

BENCHMARK_MAIN();
