#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qauto {

// A word in the free monoid over an alphabet of at most 255 generators.
// Symbols are stored as raw bytes (symbol index + 1, so that a word never
// contains a NUL); the empty word is the unit.
using Word = std::string;

inline Word word_of(std::initializer_list<int> syms) {
  Word w;
  w.reserve(syms.size());
  for (int s : syms) w.push_back(static_cast<char>(s + 1));
  return w;
}

inline int word_sym(const Word& w, size_t i) {
  return static_cast<unsigned char>(w[i]) - 1;
}

inline Word word_single(int sym) {
  return Word(1, static_cast<char>(sym + 1));
}

// Structural order: by length, then bytewise. Coincides with
// degree-lexicographic order for the declaration symbol order, and is the
// canonical key order for polynomial storage regardless of the monomial
// order in use.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Degree-lexicographic monomial order over a configurable symbol ranking.
// Rewriting is only allowed to replace a word by strictly smaller ones, so
// this order is what guarantees termination.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  static MonomialOrder identity() { return MonomialOrder{}; }
  static MonomialOrder reversed(int nsyms) {
    MonomialOrder o;
    o.rank_.resize(nsyms);
    for (int i = 0; i < nsyms; ++i) o.rank_[i] = nsyms - 1 - i;
    return o;
  }
  static MonomialOrder permuted(std::vector<int> rank) {
    MonomialOrder o;
    o.rank_ = std::move(rank);
    return o;
  }

  bool is_identity() const { return rank_.empty(); }

  bool less(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    if (rank_.empty()) return a < b;
    for (size_t i = 0; i < a.size(); ++i) {
      int ra = rank_[word_sym(a, i)], rb = rank_[word_sym(b, i)];
      if (ra != rb) return ra < rb;
    }
    return false;
  }

 private:
  std::vector<int> rank_;  // empty = declaration order
};

}  // namespace qauto
