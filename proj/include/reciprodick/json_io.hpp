/*
   Copyright 2026 The reciprodick Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RECIPRODICK_JSON_IO_HPP
#define RECIPRODICK_JSON_IO_HPP

// Canonical JSON forms. Integers that may exceed 53 bits (coefficients) are
// decimal strings; field order is fixed so output is byte-stable.

#include <json.hpp>

#include "reciprodick/classifier.hpp"
#include "reciprodick/codes.hpp"
#include "reciprodick/coterm.hpp"
#include "reciprodick/family.hpp"
#include "reciprodick/poly.hpp"

namespace reciprodick {

using Json = nlohmann::ordered_json;

/// {"ring":"Z"} or {"ring":"Fp","p":5}
Json ring_to_json(const Ring& ring);
Ring ring_from_json(const Json& j);

/// {"ring":"Fp","p":5,"coeffs":["1","0","2"]}
Json poly_to_json(const Poly& a);
Poly poly_from_json(const Json& j);

/// {"family":"f","n":5,"k":1,"ring":{"ring":"Z"}} plus "a" for the Dickson family.
Json family_spec_to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const Json& j);

/// {"theorem":"T3_1","family":"f","n":6,"k":2,"p":3,"predicted":false,
///  "observed":false,"match":true} with "p" null over Z and "note" on mismatches.
Json verdict_to_json(const Verdict& v);

/// {"p":2,"m":7,"generator":["1","1","0","1"],"dimension":4,"reversible":false,
///  "self_reciprocal":false,"enumeration_checked":true}
Json code_to_json(const CyclicCode& code, bool enumeration_checked);

Json coterm_to_json(const Coterm& c);

}  // namespace reciprodick

#endif  // RECIPRODICK_JSON_IO_HPP
