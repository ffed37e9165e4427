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

#ifndef RECIPRODICK_FAMILY_HPP
#define RECIPRODICK_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "reciprodick/poly.hpp"
#include "reciprodick/ring.hpp"

namespace reciprodick {

enum class Family { D, f, g, h, gstar, hstar, f_kind1, f_kind2, f_kind3, f_char2 };

/// Canonical short name ("dickson", "f", "g", "h", "gstar", "hstar", "kind1",
/// "kind2", "kind3", "fchar2").
std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

/// Which polynomial to build. `a` is only read by Family::D; `k` is ignored by
/// the kind-1/2/3 families.
struct FamilySpec {
  Family family = Family::f;
  std::uint64_t n = 0;
  std::int64_t k = 0;
  Integer a = 1;
  Ring ring;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws DomainError describing the first violated constraint.
void validate(const FamilySpec& spec);

/// Validates, then dispatches to the matching constructor.
Poly build(const FamilySpec& spec);

/// Exact coefficient of (-x)^i a^(n-2i) in D_{n,k}(a, x), i.e.
/// (n - k i) / (n - i) * C(n - i, i). Throws InvariantViolation if the division
/// leaves a remainder. Requires n >= 1.
Integer dickson_coefficient(std::uint64_t n, std::int64_t k, std::uint64_t i);

/// Reversed Dickson polynomial of the (k+1)-th kind, D_{0,k} = 2 - k.
Poly reversed_dickson(std::uint64_t n, std::int64_t k, const Integer& a, Ring ring);

/// k sum_j C(n-1, 2j+1)(x^j - x^{j+1}) + 2 sum_j C(n, 2j) x^j, and 2 - k for n = 0.
/// Over F_p, k must lie in [0, p-1].
Poly f_family(std::uint64_t n, std::int64_t k, Ring ring);

/// The same polynomial assembled from its closed end and middle coefficients.
Poly f_expanded_even(std::uint64_t n, std::int64_t k, Ring ring);
Poly f_expanded_odd(std::uint64_t n, std::int64_t k, Ring ring);

/// k C(n-1, 2j+1) - k C(n-1, 2j-1) + 2 C(n, 2j), the shared middle coefficient
/// of x^j in the expanded forms.
Integer middle_coefficient(std::uint64_t n, std::int64_t k, std::uint64_t j);

/// Even n > 1. Both ends of g are 2 - k; both ends of h are k(n-1) + 2.
Poly g_family(std::uint64_t n, std::int64_t k, Ring ring);
Poly h_family(std::uint64_t n, std::int64_t k, Ring ring);
/// Odd n > 1. Both ends of g* are -k(n-1) + 2n; both ends of h* are k(n-1) + 2.
Poly gstar_family(std::uint64_t n, std::int64_t k, Ring ring);
Poly hstar_family(std::uint64_t n, std::int64_t k, Ring ring);

/// kind 1: sum_j C(n, 2j) x^j; kinds 2 and 3: sum_j C(n, 2j+1) x^j.
Poly f_kind(std::uint64_t n, int kind, Ring ring = Ring::integers());

/// The characteristic-2 family (k = 1) over F_2, n >= 1.
Poly f_char2(std::uint64_t n);

/// 2^n D_{n,k}(1, x) == f_{n,k}(1 - 4x) coefficientwise over the integers.
bool check_dickson_f_identity(std::uint64_t n, std::int64_t k);

}  // namespace reciprodick

#endif  // RECIPRODICK_FAMILY_HPP
