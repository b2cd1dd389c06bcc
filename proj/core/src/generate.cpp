#include "upo/generate.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "rng.hpp"
#include "upo/error.hpp"

namespace upo {

namespace {

std::string padded(const char* prefix, std::size_t k, std::size_t width) {
  std::string digits = std::to_string(k);
  std::string out(prefix);
  if (digits.size() < width) out.append(width - digits.size(), '0');
  out += digits;
  return out;
}

std::size_t digit_width(std::size_t n) {
  std::size_t w = 1;
  while (n >= 10) {
    n /= 10;
    ++w;
  }
  return w;
}

}  // namespace

Graph gen_random_dag(std::size_t n_vertices, std::size_t n_edges, std::uint64_t seed,
                     bool allow_parallel) {
  if (n_edges > 0 && n_vertices < 2) {
    fail(errc::infeasible_params, "edges need at least 2 vertices");
  }
  const std::size_t max_simple = n_vertices * (n_vertices - 1) / 2;
  if (!allow_parallel && n_vertices > 0 && n_edges > max_simple) {
    fail(errc::infeasible_params,
         std::to_string(n_edges) + " simple edges do not fit on " +
             std::to_string(n_vertices) + " vertices");
  }
  detail::Rng rng(seed);
  std::vector<std::size_t> pos(n_vertices);  // vertex -> position in the permutation
  {
    std::vector<std::size_t> perm(n_vertices);
    for (std::size_t i = 0; i < n_vertices; ++i) perm[i] = i;
    rng.shuffle(perm);
    for (std::size_t i = 0; i < n_vertices; ++i) pos[perm[i]] = i;
  }
  const std::size_t vw = digit_width(n_vertices == 0 ? 1 : n_vertices);
  const std::size_t ew = digit_width(n_edges == 0 ? 1 : n_edges);
  std::vector<std::string> vertex_ids;
  vertex_ids.reserve(n_vertices);
  for (std::size_t v = 1; v <= n_vertices; ++v) vertex_ids.push_back(padded("v", v, vw));
  std::vector<Edge> edges;
  edges.reserve(n_edges);
  std::set<std::pair<std::size_t, std::size_t>> used;
  for (std::size_t k = 1; k <= n_edges; ++k) {
    for (;;) {
      std::size_t a = static_cast<std::size_t>(rng.below(n_vertices));
      std::size_t b = static_cast<std::size_t>(rng.below(n_vertices));
      if (a == b) continue;
      if (pos[a] > pos[b]) std::swap(a, b);
      if (!allow_parallel && !used.insert({a, b}).second) continue;
      edges.push_back({padded("e", k, ew), vertex_ids[a], vertex_ids[b]});
      break;
    }
  }
  return Graph::build(std::move(vertex_ids), std::move(edges));
}

Graph gen_upward_planar(const GenParams& p) {
  if (p.steps < 1) fail(errc::infeasible_params, "steps must be at least 1");
  if (p.max_in < 1) fail(errc::infeasible_params, "max_in must be at least 1");
  if (p.max_out < 1) fail(errc::infeasible_params, "max_out must be at least 1");
  detail::Rng rng(p.seed);
  std::vector<std::string> vertex_ids;
  std::vector<Edge> edges;            // tgt filled in when consumed
  std::vector<std::size_t> frontier;  // open edge indices, left to right
  auto new_vertex = [&]() -> std::string {
    std::string id = padded("n", vertex_ids.size() + 1, 4);
    vertex_ids.push_back(id);
    return id;
  };
  auto emit = [&](const std::string& src, std::size_t at) {
    // Fresh out-edges spliced into the frontier at the event's position.
    std::uint64_t count = rng.below(p.max_out + 1);
    std::vector<std::size_t> fresh;
    for (std::uint64_t c = 0; c < count; ++c) {
      fresh.push_back(edges.size());
      edges.push_back({padded("f", edges.size() + 1, 4), src, ""});
    }
    frontier.insert(frontier.begin() + static_cast<std::ptrdiff_t>(at), fresh.begin(),
                    fresh.end());
  };
  auto pick_segment = [&](std::size_t& start, std::size_t& len) {
    const std::size_t cap = std::min<std::size_t>(p.max_in, frontier.size());
    // Without parallel edges a consumed segment must not repeat a source
    // vertex; a few seeded retries, then the always-safe single edge.
    for (int attempt = 0; attempt < 16; ++attempt) {
      len = 1 + static_cast<std::size_t>(rng.below(cap));
      start = static_cast<std::size_t>(rng.below(frontier.size() - len + 1));
      if (p.allow_parallel) return;
      std::set<std::string> srcs;
      bool clean = true;
      for (std::size_t i = start; i < start + len; ++i) {
        if (!srcs.insert(edges[frontier[i]].src).second) {
          clean = false;
          break;
        }
      }
      if (clean) return;
    }
    len = 1;
    start = static_cast<std::size_t>(rng.below(frontier.size()));
  };
  auto consume = [&](std::size_t start, std::size_t len, const std::string& tgt) {
    for (std::size_t i = start; i < start + len; ++i) edges[frontier[i]].tgt = tgt;
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(start),
                   frontier.begin() + static_cast<std::ptrdiff_t>(start + len));
  };
  for (std::uint64_t step = 0; step < p.steps; ++step) {
    if (frontier.empty() || rng.chance(1, 4)) {
      std::size_t at = static_cast<std::size_t>(rng.below(frontier.size() + 1));
      emit(new_vertex(), at);
    } else {
      std::size_t start = 0, len = 0;
      pick_segment(start, len);
      std::string id = new_vertex();
      consume(start, len, id);
      emit(id, start);
    }
  }
  while (!frontier.empty()) {
    std::size_t start = 0, len = 0;
    pick_segment(start, len);
    consume(start, len, new_vertex());
  }
  return Graph::build(std::move(vertex_ids), std::move(edges));
}

namespace {

Fixture make_fixture(std::string name, std::vector<std::string> vs, std::vector<Edge> es,
                     std::vector<std::pair<std::string, std::vector<std::string>>> orders) {
  Fixture f{std::move(name), Graph::build(std::move(vs), std::move(es)), {}};
  for (auto& [oname, seq] : orders) {
    f.orders.emplace_back(std::move(oname), make_order(f.graph, std::move(seq)));
  }
  return f;
}

}  // namespace

Fixture fixture(std::string_view name) {
  if (name == "star") {
    return make_fixture("star", {"a", "b", "c", "d", "e", "f"},
                        {{"x1", "a", "b"}, {"x2", "a", "c"}, {"x3", "d", "e"}, {"x4", "f", "e"}},
                        {{"interleaved", {"x1", "x3", "x2", "x4"}},
                         {"sequential", {"x1", "x2", "x3", "x4"}}});
  }
  if (name == "pathx") {
    return make_fixture("pathx", {"u", "v", "w", "x", "y"},
                        {{"p", "u", "v"}, {"q", "v", "w"}, {"r", "x", "y"}}, {});
  }
  if (name == "triangle") {
    return make_fixture("triangle", {"a", "b", "c"},
                        {{"ab", "a", "b"}, {"ac", "a", "c"}, {"bc", "b", "c"}}, {});
  }
  if (name == "interleave") {
    return make_fixture(
        "interleave", {"s1", "s2", "s3", "s4", "v", "w"},
        {{"i1", "s1", "v"}, {"i2", "s2", "v"}, {"j1", "s3", "w"}, {"j2", "s4", "w"}}, {});
  }
  if (name == "k5") {
    std::vector<std::string> vs = {"v1", "v2", "v3", "v4", "v5"};
    std::vector<Edge> es;
    for (int i = 1; i <= 5; ++i) {
      for (int j = i + 1; j <= 5; ++j) {
        es.push_back({"e" + std::to_string(i) + std::to_string(j), "v" + std::to_string(i),
                      "v" + std::to_string(j)});
      }
    }
    return make_fixture("k5", std::move(vs), std::move(es), {});
  }
  if (name == "demo") {
    std::vector<std::string> vs = {"a", "b", "c", "d", "e", "f", "g", "h", "i",
                                   "j", "k", "l", "m", "n", "o", "p", "q"};
    std::vector<Edge> es = {
        {"e01", "b", "a"}, {"e02", "a", "e"}, {"e03", "h", "e"}, {"e04", "h", "f"},
        {"e05", "b", "c"}, {"e06", "d", "c"}, {"e07", "d", "f"}, {"e08", "f", "e"},
        {"e09", "e", "i"}, {"e10", "f", "g"}, {"e11", "d", "g"}, {"e12", "d", "g"},
        {"e13", "g", "i"}, {"e14", "j", "l"}, {"e15", "l", "k"}, {"e16", "n", "o"},
        {"e17", "j", "m"}, {"e18", "j", "m"}, {"e19", "m", "k"}, {"e20", "p", "q"},
    };
    std::vector<std::string> ref;
    for (const Edge& e : es) ref.push_back(e.id);
    return make_fixture("demo", std::move(vs), std::move(es), {{"reference", std::move(ref)}});
  }
  fail(errc::unknown_fixture, "no fixture named '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
  return {"demo", "interleave", "k5", "pathx", "star", "triangle"};
}

}  // namespace upo
