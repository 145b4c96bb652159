#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qauto/rewrite.hpp"

namespace qauto {

// k-leg tensor word; legs commute past each other by construction (a tuple of
// words, one per leg), so no cross-leg rewriting is ever needed.
using TensorWord = std::vector<Word>;

struct TensorWordLess {
  bool operator()(const TensorWord& a, const TensorWord& b) const {
    WordLess less;
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return less(a[i], b[i]);
    }
    return false;
  }
};

class TensorPoly {
 public:
  using Terms = std::map<TensorWord, Rat, TensorWordLess>;

  explicit TensorPoly(int legs = 0) : legs_(legs) {}
  static TensorPoly unit(int legs) {
    TensorPoly t(legs);
    t.add_term(TensorWord(legs), 1);
    return t;
  }
  static TensorPoly monomial(TensorWord w, Rat c) {
    TensorPoly t(static_cast<int>(w.size()));
    t.add_term(std::move(w), std::move(c));
    return t;
  }
  // x placed on a single leg, units elsewhere.
  static TensorPoly embed(int legs, int leg, const NCPoly& x);

  int legs() const { return legs_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(TensorWord w, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(std::move(w), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
  friend TensorPoly operator*(const TensorPoly& a, const Rat& c);

  TensorPoly star(const std::vector<const GenAlphabet*>& alphas) const;

  bool operator==(const TensorPoly& o) const { return legs_ == o.legs_ && terms_ == o.terms_; }

 private:
  int legs_;
  Terms terms_;
};

// One replay step of a tensor proof: coeff * (other legs fixed) with
// l * relation * r substituted on leg `leg`.
struct TensorCertTerm {
  Rat coeff;
  int leg;
  Word left;
  int rel;
  Word right;
  TensorWord frame;  // words of the other legs (entry at `leg` ignored)
};
using TensorCertificate = std::vector<TensorCertTerm>;

struct TensorReduceResult {
  TensorPoly normal_form{0};
  TensorCertificate trace;
};

// Leg-wise normal form: every leg word reduced by its system (null = free
// leg, left untouched). Sound zero test for the tensor product of the
// quotients.
TensorReduceResult tensor_normalize(const TensorPoly& t,
                                    const std::vector<const RewriteSystem*>& systems);

TensorPoly expand_tensor_certificate(const std::vector<const Presentation*>& pres, int legs,
                                     const TensorCertificate& cert);

struct TensorProveResult {
  bool proved = false;
  TensorCertificate certificate;
};

// Proved only when the leg-wise normal form vanishes; the certificate is
// replayed in the free tensor algebra before returning.
TensorProveResult tensor_prove_zero(const TensorPoly& t,
                                    const std::vector<const RewriteSystem*>& systems);

// Coefficient extraction against the given leg: target leg words must be the
// distinct normal forms; returns word -> coefficient polynomial on the other
// leg. Only defined for 2-leg tensors.
std::map<Word, NCPoly, WordLess> collect_by_leg(const TensorPoly& t, int leg);

}  // namespace qauto
