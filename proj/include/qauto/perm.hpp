#pragma once

#include <map>
#include <string>
#include <vector>

#include "qauto/graph.hpp"

namespace qauto {

// Permutation of 1..n; image(i) = img[i-1].
struct Permutation {
  std::vector<int> img;

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img.at(i - 1); }
  bool operator==(const Permutation& o) const { return img == o.img; }
  bool operator<(const Permutation& o) const { return img < o.img; }

  static Permutation identity(int n) {
    Permutation p;
    p.img.resize(n);
    for (int i = 0; i < n; ++i) p.img[i] = i + 1;
    return p;
  }
  Permutation compose(const Permutation& o) const;  // (this∘o)(i) = this(o(i))
  Permutation inverse() const;
  int order() const;
  std::string cycle_string() const;  // "(1 2)(3 4)", identity prints "e"
};

// The full element list of a small permutation group, with the invariants
// used for catalog identification.
struct PermGroup {
  std::vector<Permutation> elements;  // sorted, contains the identity
  bool abelian = false;
  std::map<int, int> element_orders;  // order -> multiplicity
  std::string label;                  // catalog label, "unknown" if unmatched

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(const Permutation& p) const;
};

// Brute force over all n! permutations; requires n <= max_n (TooLarge otherwise).
PermGroup automorphisms(const Graph& g, int max_n = 10);

// Labels a group by (order, abelian flag, element-order multiset); enough to
// tell apart every subgroup class of S4 plus the small cyclic groups.
std::string identify_group(const PermGroup& g);

// Direct definitional check: (sigma(i), sigma(j)) in E iff (i, j) in E.
bool is_automorphism_by_definition(const Graph& g, const Permutation& p);
// Matrix form: P_sigma eps = eps P_sigma.
bool is_automorphism_by_commutation(const Graph& g, const Permutation& p);

std::string perm_group_to_json(const PermGroup& g);

}  // namespace qauto
