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

#include "reciprodick/json_io.hpp"

#include <string>
#include <vector>

#include "reciprodick/errors.hpp"

namespace reciprodick {

namespace {

Json coeff_array(const Poly& a) {
  Json arr = Json::array();
  for (const Integer& c : a.coeffs()) arr.push_back(c.get_str());
  return arr;
}

Integer parse_integer(const Json& j) {
  Integer v;
  if (j.is_string()) {
    if (v.set_str(j.get<std::string>(), 10) != 0) {
      throw DomainError("malformed integer \"" + j.get<std::string>() + "\"");
    }
    return v;
  }
  if (j.is_number_integer()) return to_integer(j.get<std::int64_t>());
  throw DomainError("expected an integer or a decimal string");
}

}  // namespace

Json ring_to_json(const Ring& ring) {
  Json j;
  if (ring.is_integers()) {
    j["ring"] = "Z";
  } else {
    j["ring"] = "Fp";
    j["p"] = ring.modulus();
  }
  return j;
}

Ring ring_from_json(const Json& j) {
  const std::string kind = j.at("ring").get<std::string>();
  if (kind == "Z") return Ring::integers();
  if (kind == "Fp") return Ring::prime_field(j.at("p").get<std::uint64_t>());
  throw DomainError("unknown ring \"" + kind + "\"");
}

Json poly_to_json(const Poly& a) {
  Json j = ring_to_json(a.ring());
  j["coeffs"] = coeff_array(a);
  return j;
}

Poly poly_from_json(const Json& j) {
  const Ring ring = ring_from_json(j);
  std::vector<Integer> coeffs;
  for (const Json& c : j.at("coeffs")) coeffs.push_back(parse_integer(c));
  return Poly(ring, std::move(coeffs));
}

Json family_spec_to_json(const FamilySpec& spec) {
  Json j;
  j["family"] = std::string(family_name(spec.family));
  j["n"] = spec.n;
  j["k"] = spec.k;
  j["ring"] = ring_to_json(spec.ring);
  if (spec.family == Family::D) j["a"] = spec.a.get_str();
  return j;
}

FamilySpec family_spec_from_json(const Json& j) {
  FamilySpec spec;
  const std::string name = j.at("family").get<std::string>();
  const auto family = parse_family(name);
  if (!family) throw DomainError("unknown family \"" + name + "\"");
  spec.family = *family;
  spec.n = j.at("n").get<std::uint64_t>();
  spec.k = j.value("k", std::int64_t{0});
  spec.ring = j.contains("ring") ? ring_from_json(j.at("ring")) : Ring::integers();
  if (j.contains("a")) spec.a = parse_integer(j.at("a"));
  return spec;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["theorem"] = std::string(theorem_name(v.theorem));
  j["family"] = std::string(family_name(v.spec.family));
  j["n"] = v.spec.n;
  j["k"] = v.spec.k;
  if (v.spec.ring.is_prime_field()) {
    j["p"] = v.spec.ring.modulus();
  } else {
    j["p"] = nullptr;
  }
  j["predicted"] = v.predicted;
  j["observed"] = v.observed;
  j["match"] = v.match;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json code_to_json(const CyclicCode& code, bool enumeration_checked) {
  Json j;
  j["p"] = code.p;
  j["m"] = code.m;
  j["generator"] = coeff_array(code.generator);
  j["dimension"] = code.dimension;
  j["reversible"] = code.reversible;
  j["self_reciprocal"] = code.self_reciprocal;
  j["enumeration_checked"] = enumeration_checked;
  return j;
}

Json coterm_to_json(const Coterm& c) {
  Json j = poly_to_json(c.poly);
  j["m"] = c.ctx.m;
  j["degenerate"] = c.degenerate;
  j["is_coterm"] = is_coterm(c.poly, c.ctx);
  return j;
}

}  // namespace reciprodick
