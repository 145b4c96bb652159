#include "qauto/tensor.hpp"

#include <stdexcept>

namespace qauto {

TensorPoly TensorPoly::embed(int legs, int leg, const NCPoly& x) {
  TensorPoly t(legs);
  for (const auto& [w, c] : x.terms()) {
    TensorWord tw(legs);
    tw[leg] = w;
    t.add_term(std::move(tw), c);
  }
  return t;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly r(a.legs_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      TensorWord w(a.legs_);
      for (int i = 0; i < a.legs_; ++i) w[i] = wa[i] + wb[i];
      r.add_term(std::move(w), ca * cb);
    }
  return r;
}

TensorPoly operator*(const TensorPoly& a, const Rat& c) {
  TensorPoly r(a.legs_);
  if (c == 0) return r;
  for (const auto& [w, k] : a.terms_) r.add_term(w, k * c);
  return r;
}

TensorPoly TensorPoly::star(const std::vector<const GenAlphabet*>& alphas) const {
  TensorPoly r(legs_);
  for (const auto& [w, c] : terms_) {
    TensorWord sw(legs_);
    for (int i = 0; i < legs_; ++i) {
      Word s;
      s.reserve(w[i].size());
      for (size_t k = w[i].size(); k-- > 0;)
        s.push_back(static_cast<char>(alphas[i]->star(word_sym(w[i], k)) + 1));
      sw[i] = std::move(s);
    }
    r.add_term(std::move(sw), c);
  }
  return r;
}

TensorReduceResult tensor_normalize(const TensorPoly& t,
                                    const std::vector<const RewriteSystem*>& systems) {
  TensorReduceResult out;
  out.normal_form = TensorPoly(t.legs());
  for (const auto& [tw, c] : t.terms()) {
    // Reduce leg words one leg at a time; record the cross terms so that the
    // input term equals (product of normal forms) + expanded trace.
    std::vector<NCPoly> nfs(t.legs());
    for (int leg = 0; leg < t.legs(); ++leg) {
      if (!systems[leg]) {
        nfs[leg] = NCPoly::monomial(tw[leg], 1);
        continue;
      }
      ReduceResult r = systems[leg]->normalize(NCPoly::monomial(tw[leg], 1));
      nfs[leg] = std::move(r.normal_form);
      if (r.trace.empty()) continue;
      Certificate flat = systems[leg]->flatten(r.trace);
      // frame: legs before `leg` already replaced by their normal forms
      // (handled by distributing below), legs after keep original words. To
      // keep replay exact we expand lazily: record one cert term per flat
      // entry per combination of the already-reduced legs' terms.
      // Combinations of earlier normal forms:
      std::vector<std::pair<TensorWord, Rat>> frames{{tw, c}};
      for (int e = 0; e < leg; ++e) {
        std::vector<std::pair<TensorWord, Rat>> next;
        for (const auto& [fw, fc] : frames)
          for (const auto& [w2, c2] : nfs[e].terms()) {
            TensorWord nw = fw;
            nw[e] = w2;
            next.push_back({std::move(nw), fc * c2});
          }
        frames = std::move(next);
      }
      for (const auto& [fw, fc] : frames)
        for (const auto& ct : flat)
          out.trace.push_back(TensorCertTerm{fc * ct.coeff, leg, ct.left, ct.rel, ct.right, fw});
    }
    // product of the per-leg normal forms
    std::vector<std::pair<TensorWord, Rat>> acc{{TensorWord(t.legs()), c}};
    for (int leg = 0; leg < t.legs(); ++leg) {
      std::vector<std::pair<TensorWord, Rat>> next;
      for (const auto& [fw, fc] : acc)
        for (const auto& [w2, c2] : nfs[leg].terms()) {
          TensorWord nw = fw;
          nw[leg] = w2;
          next.push_back({std::move(nw), fc * c2});
        }
      acc = std::move(next);
    }
    for (auto& [w, k] : acc) out.normal_form.add_term(std::move(w), k);
  }
  return out;
}

TensorPoly expand_tensor_certificate(const std::vector<const Presentation*>& pres, int legs,
                                     const TensorCertificate& cert) {
  TensorPoly acc(legs);
  for (const auto& ct : cert) {
    const NCPoly& rel = pres[ct.leg]->relation(ct.rel);
    for (const auto& [w, c] : rel.terms()) {
      TensorWord tw = ct.frame;
      tw[ct.leg] = ct.left + w + ct.right;
      acc.add_term(std::move(tw), ct.coeff * c);
    }
  }
  return acc;
}

TensorProveResult tensor_prove_zero(const TensorPoly& t,
                                    const std::vector<const RewriteSystem*>& systems) {
  TensorReduceResult r = tensor_normalize(t, systems);
  if (!r.normal_form.is_zero()) return {false, {}};
  std::vector<const Presentation*> pres;
  for (const auto* s : systems) pres.push_back(s ? &s->presentation() : nullptr);
  if (!(expand_tensor_certificate(pres, t.legs(), r.trace) == t))
    throw std::logic_error("internal: tensor certificate replay failed");
  return {true, std::move(r.trace)};
}

std::map<Word, NCPoly, WordLess> collect_by_leg(const TensorPoly& t, int leg) {
  if (t.legs() != 2) throw std::invalid_argument("collect_by_leg expects a 2-leg tensor");
  std::map<Word, NCPoly, WordLess> out;
  const int other = 1 - leg;
  for (const auto& [tw, c] : t.terms()) out[tw[leg]].add_term(tw[other], c);
  return out;
}

}  // namespace qauto
