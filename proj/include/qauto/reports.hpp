#pragma once

#include <string>

#include "qauto/coaction.hpp"
#include "qauto/lemmas.hpp"
#include "qauto/matrixrep.hpp"
#include "qauto/perm.hpp"

namespace qauto {

// Polynomials serialize as {"word as symbol list": "coeff"} maps; words join
// generator names with single spaces, the unit is the empty key.
std::string poly_key(const NCPoly::Terms::value_type& term, const GenAlphabet& a);
std::string poly_to_json(const NCPoly& p, const GenAlphabet& a);
NCPoly poly_from_json(const std::string& text, const GenAlphabet& a);

// Certificate files: {"target": poly, "terms": [{left, rel, right, coeff}]}.
std::string certificate_to_json(const Presentation& pres, const NCPoly& target,
                                const Certificate& cert);
struct ParsedCertificate {
  NCPoly target;
  Certificate certificate;
};
ParsedCertificate certificate_from_json(const std::string& text, const Presentation& pres);

std::string coaction_report_to_json(const CoactionReport& r, bool include_timings = true);
std::string maximality_report_to_json(const MaximalityReport& r, const Presentation& hyp_pres,
                                      bool include_timings = true);

}  // namespace qauto
