#pragma once

#include <json.hpp>

#include "csp/border_strip.hpp"
#include "csp/laurent.hpp"
#include "csp/sieve.hpp"
#include "csp/signed_tableau.hpp"
#include "csp/tableau.hpp"

namespace csp {

/// Exact integers render as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise.
nlohmann::json to_json(const BigInt& v);

/// List of [exponent, coefficient] pairs sorted by exponent.
nlohmann::json to_json(const LaurentPolynomial& p);

/// List of rows of integers.
nlohmann::json to_json(const StandardTableau& t);

nlohmann::json to_json(const SignedTableau& t);

/// {"shape", "n", "grades"}: grades indexed by the number of negatives.
nlohmann::json to_json(const SuperGF& gf);

/// {"rows", "strip_size"}.
nlohmann::json to_json(const BorderStripTableau& t);

/// {"theorem", "shape", "n", "k", "m", "rows", "verdict"} with row fields
/// {"d", "s", "fix", "eval", "match"}; a non-integer evaluation renders
/// as the string "non-integer".
nlohmann::json to_json(const CspReport& report);

nlohmann::json to_json(const MnVerification& rec);
nlohmann::json to_json(const ContentLemmaVerification& rec);
nlohmann::json to_json(const OrbitProfile& profile);
nlohmann::json to_json(const TheoremBVerification& rec);
nlohmann::json to_json(const TwistSignVerification& rec);
nlohmann::json to_json(const ProductEvalVerification& rec);

}  // namespace csp
