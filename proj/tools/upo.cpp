// upo: check, find, enumerate, and diff upward planar orders; generate and
// export instances. Exit codes: 0 success/valid/found, 1 invalid/none or
// disagreements (diff), 2 usage or input error, 3 solve budget exhausted.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "upo/error.hpp"
#include "upo/generate.hpp"
#include "upo/io.hpp"
#include "upo/search.hpp"
#include "upo/validate.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
}

upo::Definition parse_def(const std::string& d) {
  if (d == "u") return upo::Definition::u_rules;
  if (d == "q") return upo::Definition::q_rules;
  return upo::Definition::both;
}

std::string violation_line(const upo::Violation& v) {
  std::string out = upo::rule_name(v.rule);
  out += ' ';
  out += v.note;
  if (!v.vertices.empty()) {
    out += " vertices";
    for (const std::string& id : v.vertices) {
      out += ' ';
      out += id;
    }
  }
  out += " edges";
  for (std::size_t i = 0; i < v.edges.size(); ++i) {
    out += ' ';
    out += v.edges[i];
    out += '@';
    out += std::to_string(v.ranks[i]);
  }
  return out;
}

struct CheckArgs {
  std::string graph_file, order_file, def = "both";
  std::size_t max_violations = 100;
  bool lax = false;
};

int run_check(const CheckArgs& a) {
  upo::Graph g = upo::parse_graph(read_file(a.graph_file), a.lax);
  upo::EdgeOrder ord = upo::parse_order(read_file(a.order_file), g);
  upo::Verdict verdict = upo::validate(g, ord, parse_def(a.def), {a.max_violations});
  if (verdict.valid) {
    std::cout << "valid\n";
    return 0;
  }
  std::cout << "invalid: " << verdict.violations.size()
            << (verdict.violations.size() == 1 ? " violation\n" : " violations\n");
  for (const upo::Violation& v : verdict.violations) std::cout << violation_line(v) << '\n';
  if (verdict.truncated) std::cout << "(violation list truncated)\n";
  if (verdict.mismatch) {
    std::cout << "definition mismatch: u=" << (verdict.mismatch->u_valid ? "valid" : "invalid")
              << " q=" << (verdict.mismatch->q_valid ? "valid" : "invalid") << '\n';
  }
  return 1;
}

struct SolveArgs {
  std::string graph_file, def = "u";
  std::optional<std::uint64_t> budget;
  bool lax = false;
};

int run_solve(const SolveArgs& a) {
  upo::Graph g = upo::parse_graph(read_file(a.graph_file), a.lax);
  upo::SearchConfig cfg;
  cfg.definition = parse_def(a.def);
  cfg.node_budget = a.budget;
  upo::SolveResult res = upo::find_upo(g, cfg);
  switch (res.status) {
    case upo::SearchStatus::found:
      std::cout << upo::serialize_order(*res.order);
      return 0;
    case upo::SearchStatus::none:
      std::cout << "none\n";
      return 1;
    case upo::SearchStatus::budget_exhausted:
      std::cout << "budget exhausted\n";
      return 3;
  }
  return 2;
}

struct EnumArgs {
  std::string graph_file;
  std::optional<std::uint64_t> limit;
  bool lax = false;
};

int run_enum(const EnumArgs& a) {
  upo::Graph g = upo::parse_graph(read_file(a.graph_file), a.lax);
  upo::SearchConfig cfg;
  cfg.limit = a.limit;
  upo::EnumerateResult res = upo::enumerate_upos(g, cfg);
  for (const upo::EdgeOrder& ord : res.orders) std::cout << upo::serialize_order(ord);
  return 0;
}

int run_count(const std::string& graph_file, bool lax) {
  upo::Graph g = upo::parse_graph(read_file(graph_file), lax);
  std::cout << upo::count_upos(g) << '\n';
  return 0;
}

struct DiffArgs {
  std::string graph_file;
  bool exhaustive = false;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  std::size_t max_exhaustive = 7;
  bool lax = false;
};

int run_diff(const DiffArgs& a) {
  upo::Graph g = upo::parse_graph(read_file(a.graph_file), a.lax);
  upo::DiffOptions opt;
  opt.max_exhaustive_edges = a.max_exhaustive;
  if (a.samples) {
    opt.mode = upo::DiffMode::sampled;
    opt.samples = *a.samples;
    opt.seed = a.seed;
  }
  upo::DiffReport rep = upo::diff_definitions(g, opt);
  std::cout << rep.orders_tested << " orders, " << rep.disagreements.size()
            << " disagreements\n";
  for (const upo::Disagreement& d : rep.disagreements) {
    std::cout << "disagreement: u=" << (d.u.valid ? "valid" : "invalid")
              << " q=" << (d.q.valid ? "valid" : "invalid") << " order";
    for (const std::string& id : d.order) std::cout << ' ' << id;
    std::cout << '\n';
  }
  return rep.disagreements.empty() ? 0 : 1;
}

struct GenArgs {
  bool random = false, upward = false, parallel = false;
  std::size_t n_vertices = 0, n_edges = 0;
  upo::GenParams params;
};

int run_gen(const GenArgs& a) {
  upo::Graph g = a.random
                     ? upo::gen_random_dag(a.n_vertices, a.n_edges, a.params.seed, a.parallel)
                     : upo::gen_upward_planar(a.params);
  std::cout << upo::serialize_graph(g);
  return 0;
}

struct ExportArgs {
  std::string graph_file, out_file;
  bool lax = false;
};

int run_export(const ExportArgs& a) {
  upo::Graph g = upo::parse_graph(read_file(a.graph_file), a.lax);
  std::string dot = upo::to_dot(g);
  if (a.out_file.empty()) {
    std::cout << dot;
  } else {
    write_file(a.out_file, dot);
  }
  return 0;
}

struct FixtureArgs {
  std::string name, graph_out, order_out, order_name;
};

int run_fixture(const FixtureArgs& a) {
  upo::Fixture f = upo::fixture(a.name);
  if (a.graph_out.empty() && a.order_out.empty()) {
    std::cout << upo::serialize_graph(f.graph);
    for (const auto& [oname, ord] : f.orders) {
      std::cout << "# " << oname << '\n' << upo::serialize_order(ord);
    }
    return 0;
  }
  if (!a.graph_out.empty()) write_file(a.graph_out, upo::serialize_graph(f.graph));
  if (!a.order_out.empty()) {
    const auto it = a.order_name.empty()
                        ? f.orders.begin()
                        : std::find_if(f.orders.begin(), f.orders.end(),
                                       [&](const auto& p) { return p.first == a.order_name; });
    if (it == f.orders.end()) {
      throw std::runtime_error("fixture '" + a.name + "' has no order" +
                               (a.order_name.empty() ? "" : " named '" + a.order_name + "'"));
    }
    write_file(a.order_out, upo::serialize_order(it->second));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"upward planar orders on acyclic directed multigraphs"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "validate an order against a graph");
  check->add_option("-g,--graph", check_args.graph_file, "graph file")->required();
  check->add_option("-o,--order", check_args.order_file, "order file")->required();
  check->add_option("--def", check_args.def, "rule family")
      ->check(CLI::IsMember({"u", "q", "both"}));
  check->add_option("--max-violations", check_args.max_violations, "cap on reported violations");
  check->add_flag("--lax", check_args.lax, "auto-declare edge endpoints");

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "find the least upward planar order");
  solve->add_option("-g,--graph", solve_args.graph_file, "graph file")->required();
  solve->add_option("--def", solve_args.def, "rule family")->check(CLI::IsMember({"u", "q"}));
  solve->add_option("--budget", solve_args.budget, "max search nodes");
  solve->add_flag("--lax", solve_args.lax, "auto-declare edge endpoints");

  EnumArgs enum_args;
  CLI::App* enumerate = app.add_subcommand("enum", "list all upward planar orders");
  enumerate->add_option("-g,--graph", enum_args.graph_file, "graph file")->required();
  enumerate->add_option("--limit", enum_args.limit, "max orders to list");
  enumerate->add_flag("--lax", enum_args.lax, "auto-declare edge endpoints");

  std::string count_graph;
  bool count_lax = false;
  CLI::App* count = app.add_subcommand("count", "count upward planar orders");
  count->add_option("-g,--graph", count_graph, "graph file")->required();
  count->add_flag("--lax", count_lax, "auto-declare edge endpoints");

  DiffArgs diff_args;
  CLI::App* diff = app.add_subcommand("diff", "compare the two rule families over permutations");
  diff->add_option("-g,--graph", diff_args.graph_file, "graph file")->required();
  CLI::Option* diff_ex = diff->add_flag("--exhaustive", diff_args.exhaustive,
                                        "all permutations (default)");
  CLI::Option* diff_samples =
      diff->add_option("--samples", diff_args.samples, "random permutations to test");
  diff->add_option("--seed", diff_args.seed, "sampling seed")->needs(diff_samples);
  diff->add_option("--max-exhaustive", diff_args.max_exhaustive,
                   "edge cap for exhaustive mode");
  diff->add_flag("--lax", diff_args.lax, "auto-declare edge endpoints");
  diff_ex->excludes(diff_samples);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a graph");
  CLI::Option* gen_random = gen->add_flag("--random", gen_args.random, "seeded random DAG");
  CLI::Option* gen_upward =
      gen->add_flag("--upward", gen_args.upward, "upward-planar-by-construction graph");
  gen_random->excludes(gen_upward);
  gen->add_option("-n,--vertices", gen_args.n_vertices, "vertex count (--random)");
  gen->add_option("-m,--edges", gen_args.n_edges, "edge count (--random)");
  gen->add_option("--steps", gen_args.params.steps, "vertex events (--upward)");
  gen->add_option("--max-in", gen_args.params.max_in, "max in-degree per event (--upward)");
  gen->add_option("--max-out", gen_args.params.max_out, "max out-degree per event (--upward)");
  gen->add_option("--seed", gen_args.params.seed, "64-bit seed")->required();
  gen->add_flag("--parallel-edges", gen_args.parallel, "allow parallel edges");

  ExportArgs export_args;
  bool export_dot = false;
  CLI::App* exporter = app.add_subcommand("export", "export a graph");
  exporter->add_option("-g,--graph", export_args.graph_file, "graph file")->required();
  exporter->add_option("-o,--out", export_args.out_file, "output file (default stdout)");
  exporter->add_flag("--dot", export_dot, "Graphviz DOT format")->required();
  exporter->add_flag("--lax", export_args.lax, "auto-declare edge endpoints");

  FixtureArgs fixture_args;
  CLI::App* fix = app.add_subcommand("fixture", "print a built-in graph");
  fix->add_option("name", fixture_args.name, "one of: demo interleave k5 pathx star triangle")
      ->required();
  fix->add_option("-g,--graph-out", fixture_args.graph_out, "write graph file");
  fix->add_option("-o,--order-out", fixture_args.order_out, "write reference order file");
  fix->add_option("--order", fixture_args.order_name, "which reference order to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(check_args);
    if (*solve) return run_solve(solve_args);
    if (*enumerate) return run_enum(enum_args);
    if (*count) return run_count(count_graph, count_lax);
    if (*diff) return run_diff(diff_args);
    if (*gen) {
      if (!gen_args.random && !gen_args.upward) {
        std::cerr << "gen: pass --random or --upward\n";
        return 2;
      }
      gen_args.params.allow_parallel = gen_args.parallel;
      return run_gen(gen_args);
    }
    if (*exporter) return run_export(export_args);
    if (*fix) return run_fixture(fixture_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
