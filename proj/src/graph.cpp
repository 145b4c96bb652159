#include "qauto/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qauto {

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw GraphError(GraphErrorKind::VertexOutOfRange, "negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (const auto& [s, r] : edges) {
    if (s < 1 || s > n || r < 1 || r > n)
      throw GraphError(GraphErrorKind::VertexOutOfRange,
                       "edge (" + std::to_string(s) + "," + std::to_string(r) + ") out of range");
    if (!seen.insert({s, r}).second)
      throw GraphError(GraphErrorKind::DuplicateEdge,
                       "duplicate edge (" + std::to_string(s) + "," + std::to_string(r) + ")");
  }
  return Graph{n, edges};
}

AdjacencyMatrix adjacency(const Graph& g) {
  AdjacencyMatrix eps;
  eps.n = g.n;
  eps.a.assign(static_cast<size_t>(g.n) * g.n, 0);
  for (const auto& [s, r] : g.edges) eps.a[(s - 1) * g.n + (r - 1)] = 1;
  return eps;
}

bool has_loops(const Graph& g) {
  for (const auto& [s, r] : g.edges)
    if (s == r) return true;
  return false;
}

bool has_edge(const Graph& g, int s, int r) {
  for (const auto& e : g.edges)
    if (e.first == s && e.second == r) return true;
  return false;
}

bool is_undirected(const Graph& g) {
  for (const auto& [s, r] : g.edges)
    if (!has_edge(g, r, s)) return false;
  return true;
}

Graph complement(const Graph& g, LoopsMode mode) {
  if (mode == LoopsMode::WithoutLoops && has_loops(g))
    throw GraphError(GraphErrorKind::LoopsPresent, "loopless complement of a graph with loops");
  AdjacencyMatrix eps = adjacency(g);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= g.n; ++i)
    for (int j = 1; j <= g.n; ++j) {
      if (mode == LoopsMode::WithoutLoops && i == j) continue;
      if (!eps.at(i, j)) edges.push_back({i, j});
    }
  return Graph{g.n, std::move(edges)};
}

Graph add_loops(const Graph& g) {
  if (has_loops(g)) throw GraphError(GraphErrorKind::LoopsPresent, "graph already has loops");
  Graph out = g;
  for (int i = 1; i <= g.n; ++i) out.edges.push_back({i, i});
  return out;
}

std::vector<int> source_vertices(const Graph& g) {
  std::set<int> s;
  for (const auto& e : g.edges) s.insert(e.first);
  return {s.begin(), s.end()};
}

std::vector<int> range_vertices(const Graph& g) {
  std::set<int> s;
  for (const auto& e : g.edges) s.insert(e.second);
  return {s.begin(), s.end()};
}

std::string graph_key(const Graph& g) {
  std::ostringstream os;
  os << "n" << g.n;
  for (const auto& [s, r] : g.edges) os << ";" << s << "-" << r;
  return os.str();
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["edges"] = nlohmann::json::array();
  for (const auto& [s, r] : g.edges) j["edges"].push_back({s, r});
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw GraphError(GraphErrorKind::ParseError, std::string("bad graph JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("edges"))
    throw GraphError(GraphErrorKind::ParseError, "graph JSON needs fields n, edges");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw GraphError(GraphErrorKind::ParseError, "edge entries must be [s, r]");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return build_graph(j["n"].get<int>(), edges);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError(GraphErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return graph_from_json(ss.str());
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  out << graph_to_json(g) << "\n";
}

}  // namespace qauto
