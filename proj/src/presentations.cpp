#include "qauto/presentations.hpp"

#include <json.hpp>

namespace qauto {

std::string magic_gen_name(int i, int j, int n) {
  if (n <= 9) return "u" + std::to_string(i) + std::to_string(j);
  return "u" + std::to_string(i) + "_" + std::to_string(j);
}

GenAlphabet magic_alphabet(int n) {
  GenAlphabet a;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.add_selfadjoint(magic_gen_name(i, j, n));
  return a;
}

static std::vector<NCPoly> qa1_relations(int n) {
  std::vector<NCPoly> rels;
  auto u = [&](int i, int j) { return magic_gen(i, j, n); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        NCPoly row = u(i, j) * u(i, k);
        if (j == k) row -= u(i, j);
        rels.push_back(row);
        if (j != k) rels.push_back(u(j, i) * u(k, i));
      }
  return rels;
}

static std::vector<NCPoly> qa2_relations(int n) {
  std::vector<NCPoly> rels;
  for (int i = 1; i <= n; ++i) {
    NCPoly row, col;
    for (int l = 1; l <= n; ++l) {
      row += magic_gen(i, l, n);
      col += magic_gen(l, i, n);
    }
    rels.push_back(row - NCPoly::unit());
    rels.push_back(col - NCPoly::unit());
  }
  return rels;
}

Presentation snplus_presentation(int n) {
  Presentation p(magic_alphabet(n));
  p.add_relations(qa1_relations(n));
  p.add_relations(qa2_relations(n));
  return p;
}

std::vector<NCPoly> qa7_relations(const Graph& g) {
  const int n = g.n;
  AdjacencyMatrix eps = adjacency(g);
  std::vector<NCPoly> rels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPoly r;
      for (int k = 1; k <= n; ++k) {
        if (eps.at(k, j)) r += magic_gen(i, k, n);
        if (eps.at(i, k)) r -= magic_gen(k, j, n);
      }
      if (!r.is_zero()) rels.push_back(r);
    }
  return rels;
}

std::vector<NCPoly> qa3_relations(const Graph& g) {
  const int n = g.n;
  std::vector<NCPoly> rels;
  for (const auto& [s, r] : g.edges)
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        if (has_edge(g, i, k)) continue;
        rels.push_back(magic_gen(s, i, n) * magic_gen(r, k, n));
        rels.push_back(magic_gen(r, k, n) * magic_gen(s, i, n));
      }
  return rels;
}

std::vector<NCPoly> qa4_relations(const Graph& g) {
  const int n = g.n;
  std::vector<NCPoly> rels;
  for (const auto& [s, r] : g.edges)
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        if (has_edge(g, i, k)) continue;
        rels.push_back(magic_gen(i, s, n) * magic_gen(k, r, n));
        rels.push_back(magic_gen(k, r, n) * magic_gen(i, s, n));
      }
  return rels;
}

std::vector<NCPoly> qa5_relations(const Graph& g) {
  const int n = g.n;
  std::vector<NCPoly> rels;
  for (const auto& [se, re] : g.edges)
    for (const auto& [sf, rf] : g.edges) {
      NCPoly a = magic_gen(se, sf, n), b = magic_gen(re, rf, n);
      NCPoly c = a * b - b * a;
      if (!c.is_zero()) rels.push_back(c);
    }
  return rels;
}

Presentation banica_presentation(const Graph& g) {
  Presentation p = snplus_presentation(g.n);
  p.add_relations(qa7_relations(g));
  return p;
}

Presentation banica_presentation_qa14(const Graph& g) {
  Presentation p = snplus_presentation(g.n);
  p.add_relations(qa3_relations(g));
  p.add_relations(qa4_relations(g));
  return p;
}

Presentation bichon_presentation(const Graph& g) {
  Presentation p = banica_presentation_qa14(g);
  p.add_relations(qa5_relations(g));
  return p;
}

RelationCounts relation_counts(const Graph& g) {
  RelationCounts c;
  c.qa1 = static_cast<int>(qa1_relations(g.n).size());
  c.qa2 = static_cast<int>(qa2_relations(g.n).size());
  c.qa3 = static_cast<int>(qa3_relations(g).size());
  c.qa4 = static_cast<int>(qa4_relations(g).size());
  c.qa5 = static_cast<int>(qa5_relations(g).size());
  c.qa7 = static_cast<int>(qa7_relations(g).size());
  return c;
}

Presentation h2plus_presentation() {
  GenAlphabet a;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) a.add_selfadjoint("v" + std::to_string(i) + std::to_string(j));
  auto v = [&](int i, int j) { return NCPoly::gen((i - 1) * 2 + (j - 1)); };
  Presentation p(a);
  for (int i = 1; i <= 2; ++i) {
    p.add_relation(v(i, 1) * v(i, 2));
    p.add_relation(v(i, 2) * v(i, 1));
    p.add_relation(v(1, i) * v(2, i));
    p.add_relation(v(2, i) * v(1, i));
  }
  for (int i = 1; i <= 2; ++i) {
    p.add_relation(v(i, 1) * v(i, 1) + v(i, 2) * v(i, 2) - NCPoly::unit());
    p.add_relation(v(1, i) * v(1, i) + v(2, i) * v(2, i) - NCPoly::unit());
  }
  return p;
}

Presentation z2freedual_presentation() {
  GenAlphabet a;
  a.add_selfadjoint("p");
  a.add_selfadjoint("q");
  Presentation pres(a);
  NCPoly p = NCPoly::gen(0), q = NCPoly::gen(1);
  pres.add_relation(p * p - p);
  pres.add_relation(q * q - q);
  return pres;
}

std::vector<std::vector<NCPoly>> z2freedual_block_matrix() {
  NCPoly p = NCPoly::gen(0), q = NCPoly::gen(1), one = NCPoly::unit(), zero;
  return {
      {p, one - p, zero, zero},
      {one - p, p, zero, zero},
      {zero, zero, q, one - q},
      {zero, zero, one - q, q},
  };
}

static std::string cstar_p_name(int v) { return "p" + std::to_string(v); }
static std::string cstar_s_name(int e) { return "s" + std::to_string(e); }

int cstar_p_index(const Graph&, int v) { return v - 1; }
int cstar_s_index(const Graph& g, int e) { return g.n + 2 * (e - 1); }
int cstar_s_star_index(const Graph& g, int e) { return g.n + 2 * (e - 1) + 1; }

Presentation graph_cstar_presentation(const Graph& g) {
  GenAlphabet a;
  for (int v = 1; v <= g.n; ++v) a.add_selfadjoint(cstar_p_name(v));
  for (int e = 1; e <= g.m(); ++e) a.add_pair(cstar_s_name(e), cstar_s_name(e) + "*");
  Presentation pres(a);

  auto p = [&](int v) { return NCPoly::gen(cstar_p_index(g, v)); };
  auto s = [&](int e) { return NCPoly::gen(cstar_s_index(g, e)); };
  auto st = [&](int e) { return NCPoly::gen(cstar_s_star_index(g, e)); };

  for (int v = 1; v <= g.n; ++v)
    for (int w = 1; w <= g.n; ++w)
      pres.add_relation(v == w ? p(v) * p(v) - p(v) : p(v) * p(w));

  for (int e = 1; e <= g.m(); ++e) pres.add_relation(st(e) * s(e) - p(g.range(e)));

  for (int v : source_vertices(g)) {
    NCPoly sum;
    for (int e = 1; e <= g.m(); ++e)
      if (g.source(e) == v) sum += s(e) * st(e);
    pres.add_relation(sum - p(v));
  }

  // s_e is a partial isometry; automatic in the C*-picture, explicit here.
  for (int e = 1; e <= g.m(); ++e) pres.add_relation(s(e) * st(e) * s(e) - s(e));

  NCPoly unit_sum;
  for (int v = 1; v <= g.n; ++v) unit_sum += p(v);
  pres.add_relation(unit_sum - NCPoly::unit());

  return pres;
}

std::string presentation_to_json(const Presentation& p) {
  nlohmann::json j;
  j["generators"] = nlohmann::json::array();
  const GenAlphabet& a = p.alphabet();
  for (int i = 0; i < a.size(); ++i) {
    nlohmann::json gen;
    gen["name"] = a.name(i);
    gen["star"] = a.name(a.star(i));
    j["generators"].push_back(gen);
  }
  j["relations"] = nlohmann::json::array();
  for (const auto& r : p.relations()) {
    nlohmann::json poly = nlohmann::json::object();
    for (const auto& [w, c] : r.terms()) {
      std::string key;
      for (size_t i = 0; i < w.size(); ++i) {
        if (i) key += " ";
        key += a.name(word_sym(w, i));
      }
      poly[key] = rat_str(c);
    }
    j["relations"].push_back(poly);
  }
  return j.dump(2);
}

}  // namespace qauto
