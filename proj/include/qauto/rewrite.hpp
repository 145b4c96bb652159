#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "qauto/presentation.hpp"

namespace qauto {

// One certificate summand c * l * relation[rel] * r.
struct CertTerm {
  Rat coeff;
  Word left;
  int rel;
  Word right;
};

// Explicit expression of a polynomial as a two-sided combination of the
// presentation's relations. Replayable independently of the prover.
using Certificate = std::vector<CertTerm>;

// Sorts by (rel, left, right), merges coefficients, drops zeros.
Certificate coalesce(Certificate cert);

// Exact free-algebra expansion of the certificate.
NCPoly expand_certificate(const Presentation& pres, const Certificate& cert);

// True iff the expansion equals p exactly. Independent of the rewrite engine.
bool check_certificate(const Presentation& pres, const NCPoly& p, const Certificate& cert);

Certificate star_certificate(const Presentation& pres, const Certificate& cert);

// A provenance step: c * l * X * r where X is either an input relation or an
// earlier rule's relation polynomial (lhs - rhs).
struct FormTerm {
  Rat coeff;
  Word left;
  bool is_rule;
  int idx;
  Word right;
};
using Formation = std::vector<FormTerm>;

struct Rule {
  Word lhs;      // leading word, monic
  NCPoly rhs;    // strictly smaller than lhs in the monomial order
  Formation formation;  // expands to lhs - rhs
  bool active = true;
};

struct CompletionOptions {
  MonomialOrder order;       // default: declaration order
  size_t max_rules = 20000;  // adoption cap; exceeding it ends completion unsaturated
};

struct ReduceResult {
  NCPoly normal_form;
  Formation trace;  // input = normal_form + expand(trace)
};

struct ProveZeroResult {
  bool proved = false;
  Certificate certificate;  // only when proved
};

// Oriented, degree-bounded completion state over a presentation. Rules are
// kept inter-reduced; reduction terminates because every rule replaces its
// leading word by strictly smaller words in a well-order.
class RewriteSystem {
 public:
  RewriteSystem(const Presentation& pres, int degree_bound, CompletionOptions opts = {});

  const Presentation& presentation() const { return pres_; }
  const MonomialOrder& order() const { return opts_.order; }
  int degree_bound() const { return degree_bound_; }
  bool saturated() const { return saturated_; }
  size_t active_rule_count() const { return active_count_; }

  // Full normal form plus the reduction trace.
  ReduceResult normalize(const NCPoly& p) const;

  std::optional<Word> normal_form_of_generator(int sym) const;

  // Sound zero test: Proved only if the normal form vanishes (of p, or of p*
  // with the certificate transported back through the star); the certificate
  // is replay-verified before returning. Never claims non-membership.
  ProveZeroResult prove_zero(const NCPoly& p) const;

  // Adds relations to the presentation (star-closing) and resumes completion.
  // Used by the quarantined POS rule during maximality replay.
  void extend(const std::vector<NCPoly>& new_relations);

  Certificate flatten(const Formation& form) const;

 private:
  struct Candidate {
    Word key;  // processing priority: superposition word (or leading word)
    uint64_t seq;
    NCPoly poly;
    Formation form;
  };
  struct CandidateLater {
    const MonomialOrder* order;
    bool operator()(const Candidate& a, const Candidate& b) const {
      if (a.key != b.key) return order->less(b.key, a.key);
      return a.seq > b.seq;
    }
  };

  void seed_relation(int rel_index);
  void run();
  void adopt(const NCPoly& nf, Formation form);
  void enqueue_overlaps(int idx);
  void enqueue_pair(int i, int j);  // overlaps of rule i's lhs over rule j's lhs
  void push_candidate(Word key, NCPoly poly, Formation form);
  bool find_reduction(const Word& w, size_t& pos, int& rule) const;
  void reindex_rule(int idx);

  const Certificate& flat_rule(int idx) const;

  Presentation pres_;
  int degree_bound_;
  CompletionOptions opts_;
  bool saturated_ = false;

  std::vector<Rule> rules_;  // append-only arena; formations reference it
  size_t active_count_ = 0;
  std::vector<std::vector<int>> first_sym_;  // active rule ids by lhs front symbol
  int unit_rule_ = -1;  // set when the ideal contains the unit (zero algebra)

  std::priority_queue<Candidate, std::vector<Candidate>, CandidateLater> pending_;
  uint64_t seq_ = 0;

  mutable std::vector<std::optional<Certificate>> flat_cache_;
};

struct CommutativityResult {
  bool proved = false;
  // When proved: one certificate per unordered generator pair (a < b).
  std::vector<std::pair<std::pair<int, int>, Certificate>> certificates;
  // When inconclusive: the first failing commutator.
  NCPoly failing_commutator;
  std::pair<int, int> failing_pair{-1, -1};
};

// Completes pres at bound D, then attempts to prove every pairwise generator
// commutator. Proved requires all of them; otherwise Inconclusive.
CommutativityResult prove_commutativity(const Presentation& pres, int degree_bound,
                                        CompletionOptions opts = {});

}  // namespace qauto
