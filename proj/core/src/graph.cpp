#include "upo/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace upo {

namespace {

bool valid_token(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
              c == '_';
    if (!ok) return false;
  }
  return true;
}

std::size_t find_sorted(const std::vector<std::string>& ids, std::string_view id) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return ids.size();
  return static_cast<std::size_t>(it - ids.begin());
}

constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

}  // namespace

Graph Graph::build(std::vector<std::string> vertex_ids, std::vector<Edge> edges) {
  std::unordered_set<std::string_view> vseen;
  vseen.reserve(vertex_ids.size());
  for (const auto& v : vertex_ids) {
    if (!valid_token(v)) fail(errc::invalid_id, "vertex id '" + v + "'");
    if (!vseen.insert(v).second) fail(errc::duplicate_vertex_id, v);
  }
  std::unordered_set<std::string_view> eseen;
  eseen.reserve(edges.size());
  for (const auto& e : edges) {
    if (!valid_token(e.id)) fail(errc::invalid_id, "edge id '" + e.id + "'");
    if (!eseen.insert(e.id).second) fail(errc::duplicate_edge_id, e.id);
    if (!vseen.contains(e.src)) fail(errc::unknown_endpoint, e.src);
    if (!vseen.contains(e.tgt)) fail(errc::unknown_endpoint, e.tgt);
  }

  Graph g;
  g.vertex_ids_ = std::move(vertex_ids);
  std::sort(g.vertex_ids_.begin(), g.vertex_ids_.end());
  g.edges_ = std::move(edges);
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  g.compute_structure();
  return g;
}

void Graph::compute_structure() {
  const std::size_t n = vertex_ids_.size();
  const std::size_t m = edges_.size();

  src_.resize(m);
  tgt_.resize(m);
  in_.assign(n, {});
  out_.assign(n, {});
  for (std::size_t e = 0; e < m; ++e) {
    src_[e] = static_cast<std::uint32_t>(find_sorted(vertex_ids_, edges_[e].src));
    tgt_[e] = static_cast<std::uint32_t>(find_sorted(vertex_ids_, edges_[e].tgt));
    out_[src_[e]].push_back(static_cast<std::uint32_t>(e));
    in_[tgt_[e]].push_back(static_cast<std::uint32_t>(e));
  }

  // Kahn's algorithm; a leftover vertex means a directed cycle (self-loops
  // included, since a self-loop never reaches in-degree zero).
  std::vector<std::size_t> indeg(n);
  for (std::size_t v = 0; v < n; ++v) indeg[v] = in_[v].size();
  std::vector<std::uint32_t> topo;
  topo.reserve(n);
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) topo.push_back(static_cast<std::uint32_t>(v));
  for (std::size_t head = 0; head < topo.size(); ++head) {
    std::uint32_t v = topo[head];
    for (std::uint32_t e : out_[v]) {
      if (--indeg[tgt_[e]] == 0) topo.push_back(tgt_[e]);
    }
  }
  acyclic_ = topo.size() == n;
  if (!acyclic_) {
    reach_.clear();
    reach_words_ = 0;
    return;
  }

  // Vertex reachability (strictly forward paths), then the edge relation:
  // e1 -> e2 iff t(e1) = s(e2) or t(e1) reaches s(e2).
  const std::size_t vwords = words_for(n);
  std::vector<std::uint64_t> vreach(n * vwords, 0);
  for (std::size_t i = n; i-- > 0;) {
    std::uint32_t v = topo[i];
    std::uint64_t* row = vreach.data() + v * vwords;
    for (std::uint32_t e : out_[v]) {
      std::uint32_t w = tgt_[e];
      row[w / kWordBits] |= std::uint64_t{1} << (w % kWordBits);
      const std::uint64_t* wrow = vreach.data() + w * vwords;
      for (std::size_t k = 0; k < vwords; ++k) row[k] |= wrow[k];
    }
  }

  reach_words_ = words_for(m);
  reach_.assign(m * reach_words_, 0);
  for (std::size_t e1 = 0; e1 < m; ++e1) {
    std::uint64_t* row = reach_.data() + e1 * reach_words_;
    const std::uint64_t* t_row = vreach.data() + tgt_[e1] * vwords;
    for (std::size_t e2 = 0; e2 < m; ++e2) {
      std::uint32_t s = src_[e2];
      bool hit = tgt_[e1] == s || (t_row[s / kWordBits] >> (s % kWordBits)) & 1;
      if (hit) row[e2 / kWordBits] |= std::uint64_t{1} << (e2 % kWordBits);
    }
  }
}

bool Graph::has_vertex(std::string_view id) const noexcept {
  return find_sorted(vertex_ids_, id) < vertex_ids_.size();
}

bool Graph::has_edge(std::string_view id) const noexcept {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, std::string_view v) { return e.id < v; });
  return it != edges_.end() && it->id == id;
}

std::size_t Graph::vertex_index(std::string_view id) const {
  std::size_t v = find_sorted(vertex_ids_, id);
  if (v == vertex_ids_.size()) fail(errc::unknown_vertex, std::string(id));
  return v;
}

std::size_t Graph::edge_index(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, std::string_view v) { return e.id < v; });
  if (it == edges_.end() || it->id != id) fail(errc::unknown_edge, std::string(id));
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::reaches(std::size_t e1, std::size_t e2) const {
  if (!acyclic_) fail(errc::cyclic_graph, "edge reachability requires an acyclic graph");
  const std::uint64_t* row = reach_.data() + e1 * reach_words_;
  return (row[e2 / kWordBits] >> (e2 % kWordBits)) & 1;
}

const char* vertex_kind_name(VertexKind k) noexcept {
  switch (k) {
    case VertexKind::source: return "source";
    case VertexKind::sink: return "sink";
    case VertexKind::processive: return "processive";
    case VertexKind::isolated: return "isolated";
  }
  return "?";
}

const char* adjacency_name(Adjacency a) noexcept {
  switch (a) {
    case Adjacency::tt: return "TT";
    case Adjacency::ss: return "SS";
    case Adjacency::ts: return "TS";
    case Adjacency::st: return "ST";
  }
  return "?";
}

bool is_acyclic(const Graph& g) noexcept { return g.acyclic(); }

std::vector<std::string> incoming(const Graph& g, std::string_view v) {
  std::vector<std::string> out;
  for (std::uint32_t e : g.in_edges(g.vertex_index(v))) out.push_back(g.edge(e).id);
  return out;
}

std::vector<std::string> outgoing(const Graph& g, std::string_view v) {
  std::vector<std::string> out;
  for (std::uint32_t e : g.out_edges(g.vertex_index(v))) out.push_back(g.edge(e).id);
  return out;
}

VertexKind classify_vertex(const Graph& g, std::string_view v) {
  std::size_t idx = g.vertex_index(v);
  bool has_in = !g.in_edges(idx).empty();
  bool has_out = !g.out_edges(idx).empty();
  if (has_in && has_out) return VertexKind::processive;
  if (has_in) return VertexKind::sink;
  if (has_out) return VertexKind::source;
  return VertexKind::isolated;
}

bool edge_reaches(const Graph& g, std::string_view e1, std::string_view e2) {
  std::size_t a = g.edge_index(e1);
  std::size_t b = g.edge_index(e2);
  if (!g.acyclic()) fail(errc::cyclic_graph, "edge reachability requires an acyclic graph");
  return g.reaches(a, b);
}

std::vector<std::pair<std::string, std::string>> reachability_closure(const Graph& g) {
  if (!g.acyclic()) fail(errc::cyclic_graph, "reachability closure requires an acyclic graph");
  std::vector<std::pair<std::string, std::string>> pairs;
  const std::size_t m = g.edge_count();
  for (std::size_t e1 = 0; e1 < m; ++e1)
    for (std::size_t e2 = 0; e2 < m; ++e2)
      if (g.reaches(e1, e2)) pairs.emplace_back(g.edge(e1).id, g.edge(e2).id);
  return pairs;
}

std::vector<AdjacencyCase> adjacency_cases(const Graph& g, std::string_view e1,
                                           std::string_view e2) {
  std::size_t a = g.edge_index(e1);
  std::size_t b = g.edge_index(e2);
  if (a == b) throw std::invalid_argument("adjacency_cases: e1 and e2 must be distinct");
  std::vector<AdjacencyCase> cases;
  if (g.edge_tgt(a) == g.edge_tgt(b))
    cases.push_back({Adjacency::tt, g.vertex_id(g.edge_tgt(a))});
  if (g.edge_src(a) == g.edge_src(b))
    cases.push_back({Adjacency::ss, g.vertex_id(g.edge_src(a))});
  if (g.edge_tgt(a) == g.edge_src(b))
    cases.push_back({Adjacency::ts, g.vertex_id(g.edge_tgt(a))});
  if (g.edge_src(a) == g.edge_tgt(b))
    cases.push_back({Adjacency::st, g.vertex_id(g.edge_src(a))});
  return cases;
}

}  // namespace upo
