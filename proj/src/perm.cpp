#include "qauto/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace qauto {

Permutation Permutation::compose(const Permutation& o) const {
  Permutation out;
  out.img.resize(img.size());
  for (int i = 1; i <= n(); ++i) out.img[i - 1] = (*this)(o(i));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img.resize(img.size());
  for (int i = 1; i <= n(); ++i) out.img[(*this)(i)-1] = i;
  return out;
}

int Permutation::order() const {
  Permutation acc = *this;
  int k = 1;
  Permutation id = identity(n());
  while (!(acc == id)) {
    acc = acc.compose(*this);
    ++k;
  }
  return k;
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(n(), false);
  std::ostringstream os;
  bool any = false;
  for (int i = 1; i <= n(); ++i) {
    if (seen[i - 1] || (*this)(i) == i) continue;
    any = true;
    os << "(";
    int j = i;
    bool first = true;
    do {
      seen[j - 1] = true;
      if (!first) os << " ";
      os << j;
      first = false;
      j = (*this)(j);
    } while (j != i);
    os << ")";
  }
  return any ? os.str() : "e";
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool is_automorphism_by_definition(const Graph& g, const Permutation& p) {
  for (int i = 1; i <= g.n; ++i)
    for (int j = 1; j <= g.n; ++j)
      if (has_edge(g, i, j) != has_edge(g, p(i), p(j))) return false;
  return true;
}

bool is_automorphism_by_commutation(const Graph& g, const Permutation& p) {
  // (P eps)_{ij} = eps_{sigma^{-1}(i) j},  (eps P)_{ij} = eps_{i sigma(j)}.
  AdjacencyMatrix eps = adjacency(g);
  Permutation q = p.inverse();
  for (int i = 1; i <= g.n; ++i)
    for (int j = 1; j <= g.n; ++j)
      if (eps.at(q(i), j) != eps.at(i, p(j))) return false;
  return true;
}

PermGroup automorphisms(const Graph& g, int max_n) {
  if (g.n > max_n)
    throw GraphError(GraphErrorKind::TooLarge,
                     "automorphism enumeration capped at n=" + std::to_string(max_n));
  PermGroup out;
  Permutation p = Permutation::identity(g.n);
  do {
    if (is_automorphism_by_commutation(g, p)) out.elements.push_back(p);
  } while (std::next_permutation(p.img.begin(), p.img.end()));
  std::sort(out.elements.begin(), out.elements.end());

  out.abelian = true;
  for (size_t a = 0; a < out.elements.size() && out.abelian; ++a)
    for (size_t b = a + 1; b < out.elements.size(); ++b)
      if (!(out.elements[a].compose(out.elements[b]) ==
            out.elements[b].compose(out.elements[a]))) {
        out.abelian = false;
        break;
      }
  for (const auto& e : out.elements) out.element_orders[e.order()]++;
  out.label = identify_group(out);
  return out;
}

std::string identify_group(const PermGroup& g) {
  const int n = g.order();
  const auto& m = g.element_orders;
  auto mult = [&](int k) {
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
  };
  switch (n) {
    case 1: return "trivial";
    case 2: return "Z2";
    case 3: return "Z3";
    case 4: return mult(4) ? "Z4" : "Z2xZ2";
    case 6: return g.abelian ? "Z6" : "S3";
    case 8:
      if (g.abelian) {
        if (mult(8)) return "Z8";
        if (mult(4)) return "Z4xZ2";
        return "Z2xZ2xZ2";
      }
      return mult(2) == 5 ? "D4" : "Q8";
    case 12:
      if (!g.abelian && mult(3) == 8) return "A4";
      return "unknown";
    case 24:
      if (!g.abelian && mult(2) == 9 && mult(3) == 8 && mult(4) == 6) return "S4";
      return "unknown";
    default: return "unknown";
  }
}

std::string perm_group_to_json(const PermGroup& g) {
  nlohmann::json j;
  j["order"] = g.order();
  j["label"] = g.label;
  j["abelian"] = g.abelian;
  j["elements"] = nlohmann::json::array();
  for (const auto& e : g.elements) j["elements"].push_back(e.cycle_string());
  return j.dump(2);
}

}  // namespace qauto
