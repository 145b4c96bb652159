#pragma once

#include <map>
#include <string>

#include "qauto/alphabet.hpp"
#include "qauto/rational.hpp"
#include "qauto/word.hpp"

namespace qauto {

// Noncommutative *-polynomial over exact rationals: a finite map from words
// to nonzero coefficients. The zero coefficient is never stored.
class NCPoly {
 public:
  using Terms = std::map<Word, Rat, WordLess>;

  NCPoly() = default;
  static NCPoly zero() { return NCPoly{}; }
  static NCPoly unit() { return monomial(Word{}, 1); }
  static NCPoly gen(int sym) { return monomial(word_single(sym), 1); }
  static NCPoly monomial(const Word& w, Rat c) {
    NCPoly p;
    if (c != 0) p.terms_[w] = std::move(c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Rat coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Word& w, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(const NCPoly& a) { return a * Rat(-1); }

  friend NCPoly operator*(const NCPoly& a, const Rat& c) {
    NCPoly r;
    if (c == 0) return r;
    for (const auto& [w, k] : a.terms_) r.terms_[w] = k * c;
    return r;
  }
  friend NCPoly operator*(const Rat& c, const NCPoly& a) { return a * c; }

  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
    return r;
  }

  // Two-sided monomial multiple l * p * r.
  NCPoly framed(const Word& l, const Word& r) const {
    NCPoly out;
    for (const auto& [w, c] : terms_) out.terms_[l + w + r] = c;
    return out;
  }

  // Involution: reverse every word, star every letter; rational coefficients
  // are fixed by conjugation.
  NCPoly star(const GenAlphabet& alpha) const {
    NCPoly out;
    for (const auto& [w, c] : terms_) {
      Word sw;
      sw.reserve(w.size());
      for (size_t i = w.size(); i-- > 0;)
        sw.push_back(static_cast<char>(alpha.star(word_sym(w, i)) + 1));
      out.add_term(sw, c);
    }
    return out;
  }

  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  // Largest word with respect to the given monomial order.
  const Word& leading_word(const MonomialOrder& o) const {
    if (o.is_identity()) return terms_.rbegin()->first;  // map order = deglex
    const Word* best = &terms_.begin()->first;
    for (const auto& [w, c] : terms_)
      if (o.less(*best, w)) best = &w;
    return *best;
  }

  std::string to_string(const GenAlphabet& alpha) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [w, c] = *it;
      if (!first) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      Rat a = abs(c);
      std::string cs = rat_str(a);
      if (w.empty()) s += cs;
      else {
        if (cs != "1") s += cs + "*";
        for (size_t i = 0; i < w.size(); ++i) {
          if (i) s += ".";
          s += alpha.name(word_sym(w, i));
        }
      }
      first = false;
    }
    return s;
  }

 private:
  Terms terms_;
};

// Extends a generator-wise assignment to a homomorphism of free algebras:
// every letter of every word is replaced by its image polynomial.
inline NCPoly substitute(const NCPoly& p, const std::vector<NCPoly>& images) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    NCPoly prod = NCPoly::unit();
    for (size_t i = 0; i < w.size(); ++i) prod = prod * images.at(word_sym(w, i));
    out += prod * c;
  }
  return out;
}

}  // namespace qauto
