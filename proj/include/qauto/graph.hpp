#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qauto {

enum class GraphErrorKind {
  DuplicateEdge,
  VertexOutOfRange,
  LoopsPresent,
  NoSourcelessVertex,
  TooLarge,
  ParseError,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind(kind) {}
  GraphErrorKind kind;
};

// Finite directed graph without multiple edges. Vertices are 1..n; edges
// keep their input order, which fixes the labels e_1,...,e_m that every
// presentation refers to.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (source, range)

  int m() const { return static_cast<int>(edges.size()); }
  int source(int j) const { return edges.at(j - 1).first; }   // 1-based edge index
  int range(int j) const { return edges.at(j - 1).second; }
};

enum class LoopsMode { WithLoops, WithoutLoops };

struct AdjacencyMatrix {
  int n = 0;
  std::vector<unsigned char> a;  // row-major, entries in {0,1}
  int at(int i, int j) const { return a.at((i - 1) * n + (j - 1)); }
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
AdjacencyMatrix adjacency(const Graph& g);
Graph complement(const Graph& g, LoopsMode mode);
Graph add_loops(const Graph& g);

bool has_loops(const Graph& g);
bool is_undirected(const Graph& g);
bool has_edge(const Graph& g, int s, int r);

// Vertices v with s^{-1}(v) != {} resp. r^{-1}(v) != {}.
std::vector<int> source_vertices(const Graph& g);
std::vector<int> range_vertices(const Graph& g);

// Canonical text key (also used in report files).
std::string graph_key(const Graph& g);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace qauto
