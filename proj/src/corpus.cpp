#include "qauto/corpus.hpp"

#include <set>
#include <stdexcept>

namespace qauto {

Graph two_cycle() { return build_graph(2, {{1, 2}, {2, 1}}); }

Graph table_graph(int row) {
  switch (row) {
    case 1: return build_graph(4, {});
    case 2: return build_graph(4, {{1, 2}, {2, 1}});
    case 3: return build_graph(4, {{1, 2}, {2, 1}, {1, 3}, {3, 1}});
    case 4: return build_graph(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}});
    case 5: return build_graph(4, {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}});
    case 6: return build_graph(4, {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 4}, {4, 2}});
    default: throw std::out_of_range("table rows are 1..6");
  }
}

Graph table_complement(int row) { return complement(table_graph(row), LoopsMode::WithoutLoops); }

namespace {

Graph graph_from_mask(int n, uint32_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j, ++bit)
      if (mask & (1u << bit)) edges.push_back({i, j});
  return Graph{n, std::move(edges)};
}

std::vector<NamedGraph> build_corpus() {
  std::vector<NamedGraph> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& name, const Graph& g) {
    if (g.m() == 0) return;
    if (!seen.insert(graph_key(g)).second) return;
    out.push_back({name, g});
  };

  add("two_cycle", two_cycle());
  for (int r = 2; r <= 6; ++r) add("table" + std::to_string(r), table_graph(r));
  for (int r = 1; r <= 6; ++r)
    add("table" + std::to_string(r) + "c", table_complement(r));

  add("loop1", build_graph(1, {{1, 1}}));
  add("arrow2", build_graph(2, {{1, 2}}));
  add("loop2_pair", build_graph(2, {{1, 2}, {2, 1}, {1, 1}, {2, 2}}));
  add("arrow_loop", build_graph(2, {{1, 2}, {2, 2}}));
  add("cycle3", build_graph(3, {{1, 2}, {2, 3}, {3, 1}}));
  add("path3_directed", build_graph(3, {{1, 2}, {2, 3}}));
  add("triangle", build_graph(3, {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}}));
  add("star_out3", build_graph(3, {{1, 2}, {1, 3}}));
  add("sink3", build_graph(3, {{1, 3}, {2, 3}}));
  add("cycle4", build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
  add("source_sink4", build_graph(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}));

  // Deterministic filler from a fixed xorshift32 stream.
  uint32_t state = 0x9e3779b9u;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 17;
    state ^= state << 5;
    return state;
  };
  int n = 3;
  while (out.size() < 50) {
    uint32_t r = next();
    int bits = n * n;
    uint32_t mask = r & ((1u << bits) - 1);
    Graph g = graph_from_mask(n, mask);
    if (g.m() >= 1) add("rand_n" + std::to_string(n) + "_" + std::to_string(mask), g);
    n = (n == 3) ? 4 : 3;
  }
  return out;
}

}  // namespace

const std::vector<NamedGraph>& corpus() {
  static const std::vector<NamedGraph> c = build_corpus();
  return c;
}

std::vector<NamedGraph> loopless_corpus() {
  std::vector<NamedGraph> out;
  for (const auto& ng : corpus())
    if (!has_loops(ng.graph)) out.push_back(ng);
  return out;
}

}  // namespace qauto
