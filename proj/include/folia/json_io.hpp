#pragma once

#include <string>

#include "json.hpp"

#include "folia/algreal.hpp"
#include "folia/chordal.hpp"
#include "folia/equivalence.hpp"
#include "folia/foliation.hpp"

namespace folia {

// Order-preserving JSON type so reports serialize with stable field order.
using Json = nlohmann::ordered_json;

// {"defining": [coefficients as rational strings, ascending degree],
//  "interval": [lo, hi as rational strings], "approx": 12-digit decimal}.
// Exact rationals q serialize with defining [-q, 1] and interval [q, q].
Json json_of(const AlgReal& a);

// {"roots": [...], "bifurcation": [...], "tokens": [{"kind", "signs"}],
//  "regions": [{"strip", "interval", "boundary"}], "submersion": "ok"}.
Json json_of(const Configuration& c);

// {"foliation_o": part, "foliation_top": part, "function_o": part,
//  "function_top": part} where each part carries "value" plus, when present,
//  "witness": {"transformation", "sigma": [[from, to], ...]} and
//  "obstruction" with a fixed code.
Json json_of(const EquivalenceVerdict& v);

// {"checked": n, "violations": [{"triple", "relation_p", "relation_q"}],
//  "inconclusive": [...]}.
Json json_of(const CorrespondenceReport& r);

// "v<j>" for vertical lines, "s<strip>a" / "s<strip>b" / "s<strip>ab" for
// inner separatrices by attached end.
std::string separatrix_label(const SeparatrixId& id);

std::string sign_text(Sign s);                       // "+", "-", "0"
std::string token_kind_name(StripToken::Kind kind);  // e.g. "bounded_distinct"

}  // namespace folia
