#pragma once

#include "qauto/graph.hpp"
#include "qauto/presentation.hpp"

namespace qauto {

// -- magic unitary grids ----------------------------------------------------

std::string magic_gen_name(int i, int j, int n);

// Alphabet of n*n self-adjoint generators u_ij, row-major declaration order.
GenAlphabet magic_alphabet(int n);

// Symbol index of u_ij in the grid alphabet.
inline int magic_index(int i, int j, int n) { return (i - 1) * n + (j - 1); }
inline NCPoly magic_gen(int i, int j, int n) { return NCPoly::gen(magic_index(i, j, n)); }
inline std::pair<int, int> magic_decode(int sym, int n) { return {sym / n + 1, sym % n + 1}; }

// -- the paper's presented *-algebras ---------------------------------------

// Wang's quantum symmetric group: projections plus row/column orthogonality
// and row/column sums (QA1 + QA2).
Presentation snplus_presentation(int n);

// QA1, QA2 plus the linear intertwiner relations u*eps = eps*u (QA7).
Presentation banica_presentation(const Graph& g);

// The equivalent QA1-QA4 form of Banica's definition.
Presentation banica_presentation_qa14(const Graph& g);

// QA1-QA5.
Presentation bichon_presentation(const Graph& g);

// Bichon's hyperoctahedral quantum group on a 2x2 grid v_ij: self-adjoint,
// v_ij v_ik = 0 = v_ji v_ki for j != k, sum_k v_ik^2 = 1 = sum_k v_ki^2.
Presentation h2plus_presentation();

// Universal algebra on two projections p, q (the dual of Z2*Z2).
Presentation z2freedual_presentation();

// The displayed 4x4 block magic unitary over the two-projection algebra:
// blockdiag([[p,1-p],[1-p,p]], [[q,1-q],[1-q,q]]).
std::vector<std::vector<NCPoly>> z2freedual_block_matrix();

// Graph *-algebra: mutually orthogonal projections p_v, partial isometries
// s_e with s_e^* s_e = p_{r(e)}, the source-sum relations, the partial
// isometry relations s_e s_e^* s_e = s_e, and the unit relation sum_v p_v = 1.
Presentation graph_cstar_presentation(const Graph& g);

// Generator indices inside the graph C*-algebra alphabet.
int cstar_p_index(const Graph& g, int v);
int cstar_s_index(const Graph& g, int e);       // e is 1-based
int cstar_s_star_index(const Graph& g, int e);

// Relation subsets, used by the lemma provers.
std::vector<NCPoly> qa7_relations(const Graph& g);      // over magic_alphabet(n)
std::vector<NCPoly> qa3_relations(const Graph& g);
std::vector<NCPoly> qa4_relations(const Graph& g);
std::vector<NCPoly> qa5_relations(const Graph& g);      // commutators, ordered pairs

// Candidate counts before presentation-level dedup (regression-tested
// closed forms live in the tests).
struct RelationCounts {
  int qa1 = 0, qa2 = 0, qa3 = 0, qa4 = 0, qa5 = 0, qa7 = 0;
};
RelationCounts relation_counts(const Graph& g);

std::string presentation_to_json(const Presentation& p);

}  // namespace qauto
