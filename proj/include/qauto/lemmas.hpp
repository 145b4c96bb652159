#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qauto/graph.hpp"
#include "qauto/presentations.hpp"
#include "qauto/rewrite.hpp"

namespace qauto {

struct NamedCert {
  std::string name;
  NCPoly target;
  Certificate certificate;
};

// Outcome of one mechanized lemma instance. Proved implies every certificate
// replays against the presentation it was produced for.
struct LemmaReport {
  std::string lemma;
  std::string graph;     // graph key
  bool proved = false;
  int bound = 0;
  std::vector<NamedCert> certificates;
  std::vector<std::string> failures;  // names of identities that did not prove
  double wall_ms = 0.0;
};

// QA6 is implied by QA2-QA4: both QA6 sums prove zero for every edge.
LemmaReport prove_qa6_implied(const Graph& g, int degree_bound = 6);

// For q with s^{-1}(q) empty and any edge e_j: u_{q s(e_j)} = 0 = u_{s(e_j) q}.
LemmaReport prove_eqzero(const Graph& g, int degree_bound = 6);

// QA7 of the complement proves zero modulo banica(g) and conversely.
LemmaReport prove_banica_complement_invariance(const Graph& g, LoopsMode mode,
                                               int degree_bound = 6);

// Adding all loops changes neither quantum automorphism group: part (i) the
// QA7 relations transfer both ways, part (ii) the loop-edge QA5 relations
// prove zero modulo bichon(g).
LemmaReport prove_loops_invariance(const Graph& g, int degree_bound = 6);

// Instance of the mechanism behind "QBic(G) inside QBic(G^c) forces
// commutativity": all generator commutators prove zero modulo
// bichon(g) + QA5(g^c), in the loopless category.
LemmaReport prove_lemma_same_instance(const Graph& g, int degree_bound = 6);

// Normal forms of all u_ij under completed banica(g): the mechanically
// derived version of the displayed block matrices. Entries whose normal form
// differs from the generator come with a replayable certificate for the
// difference.
struct MatrixShape {
  std::vector<std::vector<NCPoly>> entry;  // normal forms, n x n
  std::vector<NamedCert> proofs;           // u_ij - NF(u_ij) = 0
  bool all_proved = false;
};
MatrixShape derive_matrix_shape(const Graph& g, int degree_bound = 6);

// The row-(4) isomorphism with the hyperoctahedral quantum group: both
// substitution directions plus the QA5 consequences.
LemmaReport verify_h2plus_isomorphism(int degree_bound = 8);

// The u-expressions v_ij = (pairs of Banica generators) and the inverse
// substitution used by verify_h2plus_isomorphism; exposed for tests.
std::vector<NCPoly> h2plus_to_banica_images();  // v_ij -> poly over magic_alphabet(4)
std::vector<NCPoly> banica_to_h2plus_images();  // u_ij -> poly over the v alphabet

std::string lemma_report_to_json(const LemmaReport& r, const Presentation& pres,
                                 bool include_timings = true);

}  // namespace qauto
