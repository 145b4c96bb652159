#include "qauto/rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <tuple>

namespace qauto {

Certificate coalesce(Certificate cert) {
  std::sort(cert.begin(), cert.end(), [](const CertTerm& a, const CertTerm& b) {
    return std::tie(a.rel, a.left, a.right) < std::tie(b.rel, b.left, b.right);
  });
  Certificate out;
  for (auto& t : cert) {
    if (!out.empty() && out.back().rel == t.rel && out.back().left == t.left &&
        out.back().right == t.right) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

NCPoly expand_certificate(const Presentation& pres, const Certificate& cert) {
  NCPoly acc;
  for (const auto& t : cert)
    acc += pres.relation(t.rel).framed(t.left, t.right) * t.coeff;
  return acc;
}

bool check_certificate(const Presentation& pres, const NCPoly& p, const Certificate& cert) {
  return expand_certificate(pres, cert) == p;
}

Certificate star_certificate(const Presentation& pres, const Certificate& cert) {
  const GenAlphabet& alpha = pres.alphabet();
  auto star_word = [&](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (size_t i = w.size(); i-- > 0;)
      out.push_back(static_cast<char>(alpha.star(word_sym(w, i)) + 1));
    return out;
  };
  Certificate out;
  out.reserve(cert.size());
  for (const auto& t : cert) {
    auto [rel, sign] = pres.star_of_relation(t.rel);
    out.push_back({t.coeff * sign, star_word(t.right), rel, star_word(t.left)});
  }
  return coalesce(std::move(out));
}

RewriteSystem::RewriteSystem(const Presentation& pres, int degree_bound, CompletionOptions opts)
    : pres_(pres),
      degree_bound_(degree_bound),
      opts_(std::move(opts)),
      pending_(CandidateLater{&opts_.order}) {
  int maxdeg = 0;
  for (const auto& r : pres_.relations())
    if (!r.is_zero())
      maxdeg = std::max(maxdeg, static_cast<int>(r.leading_word(opts_.order).size()));
  if (degree_bound_ < maxdeg)
    throw std::invalid_argument("DegreeTooSmall: completion bound below max relation degree");
  first_sym_.resize(pres_.alphabet().size());
  for (int i = 0; i < pres_.relation_count(); ++i) seed_relation(i);
  run();
}

void RewriteSystem::seed_relation(int rel_index) {
  const NCPoly& r = pres_.relation(rel_index);
  if (r.is_zero()) return;
  push_candidate(r.leading_word(opts_.order), r, {FormTerm{Rat(1), {}, false, rel_index, {}}});
}

void RewriteSystem::push_candidate(Word key, NCPoly poly, Formation form) {
  pending_.push(Candidate{std::move(key), seq_++, std::move(poly), std::move(form)});
}

bool RewriteSystem::find_reduction(const Word& w, size_t& pos, int& rule) const {
  if (unit_rule_ >= 0) {  // collapsed quotient: every word reduces to zero
    pos = 0;
    rule = unit_rule_;
    return true;
  }
  for (size_t p = 0; p < w.size(); ++p) {
    for (int idx : first_sym_[word_sym(w, p)]) {
      const Word& l = rules_[idx].lhs;
      if (l.size() <= w.size() - p && w.compare(p, l.size(), l) == 0) {
        pos = p;
        rule = idx;
        return true;
      }
    }
  }
  return false;
}

ReduceResult RewriteSystem::normalize(const NCPoly& p) const {
  NCPoly work = p;
  NCPoly nf;
  Formation trace;
  while (!work.is_zero()) {
    const Word w = work.leading_word(opts_.order);
    size_t pos;
    int ridx;
    if (!find_reduction(w, pos, ridx)) {
      Rat c = work.coeff(w);
      nf.add_term(w, c);
      work.add_term(w, -c);
      continue;
    }
    const Rule& rule = rules_[ridx];
    Rat c = work.coeff(w);
    Word left = w.substr(0, pos);
    Word right = w.substr(pos + rule.lhs.size());
    // work -= c * left * (lhs - rhs) * right
    work.add_term(w, -c);
    work += rule.rhs.framed(left, right) * c;
    trace.push_back(FormTerm{c, std::move(left), true, ridx, std::move(right)});
  }
  return {std::move(nf), std::move(trace)};
}

std::optional<Word> RewriteSystem::normal_form_of_generator(int sym) const {
  Word w = word_single(sym);
  size_t pos;
  int ridx;
  if (find_reduction(w, pos, ridx)) return std::nullopt;
  return w;
}

const Certificate& RewriteSystem::flat_rule(int idx) const {
  if (flat_cache_.size() < rules_.size()) flat_cache_.resize(rules_.size());
  if (!flat_cache_[idx]) flat_cache_[idx] = flatten(rules_[idx].formation);
  return *flat_cache_[idx];
}

Certificate RewriteSystem::flatten(const Formation& form) const {
  Certificate out;
  for (const auto& t : form) {
    if (!t.is_rule) {
      out.push_back({t.coeff, t.left, t.idx, t.right});
      continue;
    }
    for (const auto& c : flat_rule(t.idx))
      out.push_back({t.coeff * c.coeff, t.left + c.left, c.rel, c.right + t.right});
  }
  return coalesce(std::move(out));
}

ProveZeroResult RewriteSystem::prove_zero(const NCPoly& p) const {
  if (p.is_zero()) return {true, {}};
  ReduceResult r = normalize(p);
  if (r.normal_form.is_zero()) {
    Certificate cert = flatten(r.trace);
    if (!check_certificate(pres_, p, cert))
      throw std::logic_error("internal: certificate replay failed");
    return {true, std::move(cert)};
  }
  // Star route: bounded completion need not be star-symmetric, so try p*.
  NCPoly ps = p.star(pres_.alphabet());
  if (ps != p && ps != -p) {
    ReduceResult rs = normalize(ps);
    if (rs.normal_form.is_zero()) {
      Certificate cert = star_certificate(pres_, flatten(rs.trace));
      if (!check_certificate(pres_, p, cert))
        throw std::logic_error("internal: starred certificate replay failed");
      return {true, std::move(cert)};
    }
  }
  return {false, {}};
}

void RewriteSystem::adopt(const NCPoly& nf, Formation form) {
  const Word lhs = nf.leading_word(opts_.order);
  Rat lc = nf.coeff(lhs);
  // rule poly = nf / lc; rhs = lhs - nf/lc
  NCPoly rhs = NCPoly::monomial(lhs, 1) - nf * (1 / lc);
  if (lc != 1)
    for (auto& t : form) t.coeff /= lc;

  int idx = static_cast<int>(rules_.size());
  rules_.push_back(Rule{lhs, std::move(rhs), std::move(form), true});
  ++active_count_;
  if (lhs.empty()) {
    // The unit is in the ideal: the quotient is the zero algebra and every
    // polynomial reduces to zero through this rule.
    unit_rule_ = idx;
    while (!pending_.empty()) pending_.pop();
    return;
  }
  first_sym_[word_sym(lhs, 0)].push_back(idx);

  // Inter-reduction: rules are immutable once created (formations form a DAG
  // by rule index), so a rule whose lhs the new lhs subsumes is retired and
  // its relation polynomial requeued through the normal adoption path.
  // Right-hand sides are left as adopted: normalize always reduces to a full
  // normal form, and retiring on rhs hits would chain rule incarnations until
  // certificate flattening blows up.
  for (int j = 0; j < idx; ++j) {
    Rule& rj = rules_[j];
    if (!rj.active) continue;
    if (rj.lhs.find(lhs) != Word::npos) {
      rj.active = false;
      --active_count_;
      reindex_rule(j);
      NCPoly rp = NCPoly::monomial(rj.lhs, 1) - rj.rhs;
      push_candidate(rj.lhs, std::move(rp), {FormTerm{Rat(1), {}, true, j, {}}});
    }
  }
  enqueue_overlaps(idx);
}

void RewriteSystem::reindex_rule(int idx) {
  auto& bucket = first_sym_[word_sym(rules_[idx].lhs, 0)];
  bucket.erase(std::remove(bucket.begin(), bucket.end(), idx), bucket.end());
}

void RewriteSystem::enqueue_overlaps(int idx) {
  for (size_t j = 0; j < rules_.size(); ++j) {
    if (!rules_[j].active) continue;
    enqueue_pair(idx, static_cast<int>(j));
    if (static_cast<int>(j) != idx) enqueue_pair(static_cast<int>(j), idx);
  }
}

// Critical pairs between rule i (reduced first) and rule j.
void RewriteSystem::enqueue_pair(int i, int j) {
  const Word& li = rules_[i].lhs;
  const Word& lj = rules_[j].lhs;
  if (li.empty() || lj.empty()) return;

  // Suffix of li meets prefix of lj: superposition li + lj[k:].
  size_t kmax = std::min(li.size(), lj.size()) - 1;
  for (size_t k = 1; k <= kmax; ++k) {
    if (li.size() + lj.size() - k > static_cast<size_t>(degree_bound_)) continue;
    if (li.compare(li.size() - k, k, lj, 0, k) != 0) continue;
    Word tail = lj.substr(k);
    Word head = li.substr(0, li.size() - k);
    // s = li + tail = head + lj; h = head*rp_j - rp_i*tail
    NCPoly h = (NCPoly::monomial(lj, 1) - rules_[j].rhs).framed(head, {}) -
               (NCPoly::monomial(li, 1) - rules_[i].rhs).framed({}, tail);
    Formation form{FormTerm{Rat(1), head, true, j, {}}, FormTerm{Rat(-1), {}, true, i, tail}};
    push_candidate(li + tail, std::move(h), std::move(form));
  }

  // lj strictly inside li.
  if (lj.size() < li.size() && li.size() <= static_cast<size_t>(degree_bound_)) {
    for (size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
      if (li.compare(pos, lj.size(), lj) != 0) continue;
      Word head = li.substr(0, pos);
      Word tail = li.substr(pos + lj.size());
      NCPoly h = (NCPoly::monomial(lj, 1) - rules_[j].rhs).framed(head, tail) -
                 (NCPoly::monomial(li, 1) - rules_[i].rhs);
      Formation form{FormTerm{Rat(1), head, true, j, tail}, FormTerm{Rat(-1), {}, true, i, {}}};
      push_candidate(li, std::move(h), std::move(form));
    }
  }
}

void RewriteSystem::run() {
  while (!pending_.empty()) {
    if (active_count_ >= opts_.max_rules) {
      saturated_ = false;
      return;
    }
    Candidate c = pending_.top();
    pending_.pop();
    ReduceResult r = normalize(c.poly);
    if (r.normal_form.is_zero()) continue;
    Formation form = std::move(c.form);
    for (auto& t : r.trace)
      form.push_back(FormTerm{-t.coeff, std::move(t.left), true, t.idx, std::move(t.right)});
    adopt(r.normal_form, std::move(form));
  }
  saturated_ = true;
}

void RewriteSystem::extend(const std::vector<NCPoly>& new_relations) {
  int before = pres_.relation_count();
  for (const auto& r : new_relations) pres_.add_relation(r);
  for (int i = before; i < pres_.relation_count(); ++i) seed_relation(i);
  run();
}

CommutativityResult prove_commutativity(const Presentation& pres, int degree_bound,
                                        CompletionOptions opts) {
  RewriteSystem sys(pres, degree_bound, opts);
  CommutativityResult out;
  const int n = pres.alphabet().size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      NCPoly x = NCPoly::gen(a), y = NCPoly::gen(b);
      NCPoly comm = x * y - y * x;
      ProveZeroResult pz = sys.prove_zero(comm);
      if (!pz.proved) {
        out.proved = false;
        out.failing_commutator = comm;
        out.failing_pair = {a, b};
        out.certificates.clear();
        return out;
      }
      out.certificates.push_back({{a, b}, std::move(pz.certificate)});
    }
  }
  out.proved = true;
  return out;
}

}  // namespace qauto
