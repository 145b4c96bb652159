#include "qauto/reports.hpp"

#include <sstream>

#include <json.hpp>

namespace qauto {

namespace {

std::string word_key(const Word& w, const GenAlphabet& a) {
  std::string key;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) key += " ";
    key += a.name(word_sym(w, i));
  }
  return key;
}

Word word_from_key(const std::string& key, const GenAlphabet& a) {
  Word w;
  std::istringstream is(key);
  std::string name;
  while (is >> name) w.push_back(static_cast<char>(a.index_of(name) + 1));
  return w;
}

}  // namespace

std::string poly_key(const NCPoly::Terms::value_type& term, const GenAlphabet& a) {
  return word_key(term.first, a);
}

std::string poly_to_json(const NCPoly& p, const GenAlphabet& a) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& t : p.terms()) j[word_key(t.first, a)] = rat_str(t.second);
  return j.dump();
}

NCPoly poly_from_json(const std::string& text, const GenAlphabet& a) {
  nlohmann::json j = nlohmann::json::parse(text);
  NCPoly p;
  for (auto& [key, val] : j.items()) p.add_term(word_from_key(key, a), rat_parse(val.get<std::string>()));
  return p;
}

std::string certificate_to_json(const Presentation& pres, const NCPoly& target,
                                const Certificate& cert) {
  const GenAlphabet& a = pres.alphabet();
  nlohmann::json j;
  j["target"] = nlohmann::json::parse(poly_to_json(target, a));
  j["terms"] = nlohmann::json::array();
  for (const auto& t : cert) {
    nlohmann::json e;
    e["left"] = word_key(t.left, a);
    e["rel"] = t.rel;
    e["right"] = word_key(t.right, a);
    e["coeff"] = rat_str(t.coeff);
    j["terms"].push_back(e);
  }
  return j.dump(2);
}

ParsedCertificate certificate_from_json(const std::string& text, const Presentation& pres) {
  const GenAlphabet& a = pres.alphabet();
  nlohmann::json j = nlohmann::json::parse(text);
  ParsedCertificate out;
  out.target = poly_from_json(j.at("target").dump(), a);
  for (const auto& e : j.at("terms")) {
    CertTerm t;
    t.left = word_from_key(e.at("left").get<std::string>(), a);
    t.rel = e.at("rel").get<int>();
    t.right = word_from_key(e.at("right").get<std::string>(), a);
    t.coeff = rat_parse(e.at("coeff").get<std::string>());
    out.certificate.push_back(std::move(t));
  }
  return out;
}

std::string coaction_report_to_json(const CoactionReport& r, bool include_timings) {
  nlohmann::json j;
  j["section"] = r.section;
  j["graph"] = r.graph;
  j["status"] = r.proved ? "Proved" : "Inconclusive";
  j["bound"] = r.bound;
  j["proved"] = r.proved_items;
  j["failures"] = r.failures;
  j["assumptions"] = r.assumptions;
  if (include_timings) j["wall_ms"] = r.wall_ms;
  size_t terms = 0;
  for (const auto& c : r.certificates) terms += c.certificate.size();
  j["certificate_terms"] = terms;
  return j.dump(2);
}

std::string maximality_report_to_json(const MaximalityReport& r, const Presentation& hyp_pres,
                                      bool include_timings) {
  const GenAlphabet& a = hyp_pres.alphabet();
  nlohmann::json j;
  j["graph"] = r.graph;
  j["bound"] = r.bound;
  j["status"] = r.proved ? "Proved" : "Inconclusive";
  j["proved"] = r.proved_items;
  j["failures"] = r.failures;
  j["assumptions"] = r.assumptions;
  if (include_timings) j["wall_ms"] = r.wall_ms;
  j["pos_invocations"] = nlohmann::json::array();
  for (const auto& p : r.pos_log) {
    nlohmann::json e;
    e["phase"] = p.phase;
    e["edge"] = p.edge;
    e["column"] = p.column;
    e["words"] = nlohmann::json::array();
    for (const auto& w : p.words) {
      std::string key;
      for (size_t i = 0; i < w.size(); ++i) {
        if (i) key += " ";
        key += a.name(word_sym(w, i));
      }
      e["words"].push_back(key);
    }
    e["sum_certificate_terms"] = static_cast<int>(p.sum_certificate.size());
    j["pos_invocations"].push_back(e);
  }
  return j.dump(2);
}

}  // namespace qauto
