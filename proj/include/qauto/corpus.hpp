#pragma once

#include <string>
#include <vector>

#include "qauto/graph.hpp"

namespace qauto {

struct NamedGraph {
  std::string name;
  Graph graph;
};

// The six 4-vertex table graphs, vertex labels as in the pictures
// (1 top-left, 2 top-right, 3 bottom-left, 4 bottom-right). Row 1 is the
// empty graph.
Graph table_graph(int row);                 // 1..6
Graph table_complement(int row);            // loopless complement
Graph two_cycle();                          // vertices 1,2; edges (1,2),(2,1)

// Fixed deterministic verification corpus: 50 directed graphs on at most 4
// vertices without multiple edges, each with at least one edge. Contains the
// table graphs (rows 2-6), their complements, the 2-cycle and a spread of
// directed/loopy shapes; the remainder is drawn from a fixed xorshift
// sequence so every run sees the same sample.
const std::vector<NamedGraph>& corpus();

// The loopless members of the corpus.
std::vector<NamedGraph> loopless_corpus();

}  // namespace qauto
