#include "upo/io.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "upo/error.hpp"

namespace upo {

namespace {

bool valid_token(std::string_view t) {
  if (t.empty()) return false;
  for (char c : t) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                    c == '_';
    if (!ok) return false;
  }
  return true;
}

[[noreturn]] void fail_at(errc code, std::size_t line, const std::string& msg) {
  fail(code, "line " + std::to_string(line) + ": " + msg);
}

// Comment-stripped whitespace tokens of one line.
std::vector<std::string> tokens_of(std::string_view line) {
  const std::size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Calls fn(line_number, tokens) for every nonempty line.
template <typename Fn>
void each_line(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::vector<std::string> toks = tokens_of(text.substr(start, end - start));
    if (!toks.empty()) fn(line_no, toks);
    if (end == text.size()) break;
    start = end + 1;
  }
}

void check_id(const std::string& id, std::size_t line) {
  if (!valid_token(id)) fail_at(errc::invalid_id, line, "bad id '" + id + "'");
}

}  // namespace

Graph parse_graph(std::string_view text, bool lax) {
  std::vector<std::string> vertex_ids;
  std::vector<Edge> edges;
  std::unordered_map<std::string, std::size_t> vertex_line;
  std::unordered_map<std::string, std::size_t> edge_line;
  each_line(text, [&](std::size_t line, const std::vector<std::string>& t) {
    if (t[0] == "v" && t.size() == 2) {
      check_id(t[1], line);
      if (!vertex_line.emplace(t[1], line).second) {
        fail_at(errc::duplicate_vertex_id, line, "vertex '" + t[1] + "' already declared");
      }
      vertex_ids.push_back(t[1]);
    } else if (t[0] == "e" && t.size() == 4) {
      check_id(t[1], line);
      check_id(t[2], line);
      check_id(t[3], line);
      if (!edge_line.emplace(t[1], line).second) {
        fail_at(errc::duplicate_edge_id, line, "edge '" + t[1] + "' already declared");
      }
      edges.push_back({t[1], t[2], t[3]});
    } else {
      fail_at(errc::syntax_error, line,
              "expected 'v <id>' or 'e <id> <src> <tgt>', got '" + t[0] + "' with " +
                  std::to_string(t.size() - 1) + " arguments");
    }
  });
  for (const Edge& e : edges) {
    for (const std::string* end : {&e.src, &e.tgt}) {
      if (vertex_line.count(*end)) continue;
      if (!lax) {
        fail_at(errc::unknown_endpoint, edge_line[e.id],
                "edge '" + e.id + "' uses undeclared vertex '" + *end + "'");
      }
      vertex_line.emplace(*end, 0);
      vertex_ids.push_back(*end);
    }
  }
  return Graph::build(std::move(vertex_ids), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::string out;
  for (const std::string& v : g.vertex_ids()) {
    out += "v ";
    out += v;
    out += '\n';
  }
  for (const Edge& e : g.edges()) {
    out += "e ";
    out += e.id;
    out += ' ';
    out += e.src;
    out += ' ';
    out += e.tgt;
    out += '\n';
  }
  return out;
}

EdgeOrder parse_order(std::string_view text, const Graph& g) {
  bool header_seen = false;
  std::vector<std::string> seq;
  std::unordered_set<std::string> seen;
  each_line(text, [&](std::size_t line, const std::vector<std::string>& t) {
    std::size_t i = 0;
    if (!header_seen) {
      if (t[0] != "order") fail_at(errc::syntax_error, line, "expected 'order', got '" + t[0] + "'");
      header_seen = true;
      i = 1;
    }
    for (; i < t.size(); ++i) {
      check_id(t[i], line);
      if (!g.has_edge(t[i])) {
        fail_at(errc::foreign_edge, line, "edge '" + t[i] + "' not in graph");
      }
      if (!seen.insert(t[i]).second) {
        fail_at(errc::duplicate_edge, line, "edge '" + t[i] + "' appears twice");
      }
      seq.push_back(t[i]);
    }
  });
  if (!header_seen) fail(errc::syntax_error, "missing 'order' header");
  return make_order(g, std::move(seq));
}

std::string serialize_order(const EdgeOrder& ord) {
  std::string out = "order";
  for (const std::string& id : ord.sequence()) {
    out += ' ';
    out += id;
  }
  out += '\n';
  return out;
}

namespace {

std::string dot_text(const Graph& g, const EdgeOrder* ord) {
  std::string out = "digraph {\n";
  for (const std::string& v : g.vertex_ids()) {
    out += "  \"";
    out += v;
    out += "\";\n";
  }
  for (const Edge& e : g.edges()) {
    out += "  \"";
    out += e.src;
    out += "\" -> \"";
    out += e.tgt;
    out += "\" [label=\"";
    out += ord ? std::to_string(ord->rank_of(e.id)) : e.id;
    out += "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string to_dot(const Graph& g) { return dot_text(g, nullptr); }

std::string to_dot(const Graph& g, const EdgeOrder& ord) { return dot_text(g, &ord); }

}  // namespace upo
