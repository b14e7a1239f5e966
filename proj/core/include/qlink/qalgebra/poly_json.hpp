#pragma once

#include <json.hpp>

#include "qlink/qalgebra/bilaurent.hpp"
#include "qlink/qalgebra/laurent.hpp"

namespace qlink {

using Json = nlohmann::ordered_json;

// {"var": "A", "coeffs": {"<exponent>": "<integer>"}} with ascending exponents.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);
// {"vars": ["a","z"], "terms": [[e1, e2, "<integer>"], ...]}
Json to_json(const BiLaurentPoly& p);
std::string rational_string(const Rational& q);

}  // namespace qlink
