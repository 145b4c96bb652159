#pragma once

#include <string>
#include <vector>

#include "qauto/poly.hpp"

namespace qauto {

// A presented *-algebra: generator alphabet plus a star-closed relation list
// (each relation is read as "= 0" in the quotient). Star closure is enforced
// at construction by appending r* whenever it is not already (up to sign)
// present; the involution on relation indices is kept so certificates can be
// transported through the star.
class Presentation {
 public:
  explicit Presentation(GenAlphabet alpha) : alphabet_(std::move(alpha)) {}

  const GenAlphabet& alphabet() const { return alphabet_; }
  const std::vector<NCPoly>& relations() const { return relations_; }
  const NCPoly& relation(int i) const { return relations_.at(i); }
  int relation_count() const { return static_cast<int>(relations_.size()); }

  // Index j and sign s with relations[j] * s == relations[i]^*.
  std::pair<int, int> star_of_relation(int i) const {
    return {star_partner_.at(i), star_sign_.at(i)};
  }

  // Appends r (unless zero or an exact duplicate) and, if needed, r*.
  void add_relation(const NCPoly& r) {
    if (r.is_zero()) return;
    if (find_exact(r) >= 0) return;
    int i = push(r);
    NCPoly rs = r.star(alphabet_);
    if (rs == r) { set_star(i, i, +1); return; }
    if (rs == -r) { set_star(i, i, -1); return; }
    int j = find_exact(rs);
    if (j < 0) {
      j = find_exact(-rs);
      if (j >= 0) { set_star(i, j, -1); set_star(j, i, -1); return; }
      j = push(rs);
    }
    set_star(i, j, +1);
    set_star(j, i, +1);
  }

  void add_relations(const std::vector<NCPoly>& rs) {
    for (const auto& r : rs) add_relation(r);
  }

 private:
  int find_exact(const NCPoly& r) const {
    for (int i = 0; i < relation_count(); ++i)
      if (relations_[i] == r) return i;
    return -1;
  }
  int push(const NCPoly& r) {
    relations_.push_back(r);
    star_partner_.push_back(-1);
    star_sign_.push_back(0);
    return relation_count() - 1;
  }
  void set_star(int i, int j, int sign) {
    if (star_partner_[i] < 0) { star_partner_[i] = j; star_sign_[i] = sign; }
  }

  GenAlphabet alphabet_;
  std::vector<NCPoly> relations_;
  std::vector<int> star_partner_;
  std::vector<int> star_sign_;
};

}  // namespace qauto
