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

#ifndef RECIPRODICK_COTERM_HPP
#define RECIPRODICK_COTERM_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "reciprodick/poly.hpp"

namespace reciprodick {

/// Ambient ring R[x]/(x^m - 1) of a coterm polynomial.
struct CotermContext {
  std::uint64_t m = 1;
  Ring ring;

  friend bool operator==(const CotermContext&, const CotermContext&) = default;
};

/// a_i = a_{m-i} for 1 <= i <= floor(m/2), absent coefficients read as zero.
/// The constant term is free. Throws DomainError when deg(a) >= m or the rings
/// differ.
bool is_coterm(const Poly& a, const CotermContext& ctx);

struct Coterm {
  Poly poly;
  CotermContext ctx;
  /// The construction collapsed to a constant; `poly` then holds that constant.
  bool degenerate = false;
};

/// Drops the leading term of a self-reciprocal polynomial of degree m >= 1;
/// the result lives in the context of length m.
Coterm coterm_from_self_reciprocal(const Poly& a);

/// Coterm constructions derived from the self-reciprocal families.
///   T5_1  f_{n,0} - 2 x^{n/2}             over Z, even n >= 4
///   T5_2  f_{n,2} - 2n x^{n/2-1}          over Z, even n >= 6
///   T5_3  g_{n,0} - 2 x^{n/2}             over Z, even n >= 4
///   T5_4  f_{n,1} - (n+1) x^{(n-1)/2}     over Z, odd n > 3
///   T5_5  g*_{n,1} - (n+1) x^{(n-1)/2}    over Z, odd n > 3
///   T5_7  f_{n,0} - 2 x^{n/2}             over F_p, even n >= 4; weight_p(n) = 2 collapses to 2
///   T5_8  f_{n,2} - 2n x^{n/2-1}          over F_p, even n >= 6, p !| n; n = p^l + 1 collapses to 2
///   T5_9  f_{n,1} - (n+1) x^{(n-1)/2}     over F_p, odd n > 3, p !| n+1; n = p^l collapses to 1
///   Char2 f_{n,1} - x^{n/2}               over F_2, even n >= 4; n = 2^l collapses to 1
enum class CotermTheorem { T5_1, T5_2, T5_3, T5_4, T5_5, T5_7, T5_8, T5_9, Char2 };

inline constexpr CotermTheorem kAllCotermTheorems[] = {
    CotermTheorem::T5_1, CotermTheorem::T5_2, CotermTheorem::T5_3,
    CotermTheorem::T5_4, CotermTheorem::T5_5, CotermTheorem::T5_7,
    CotermTheorem::T5_8, CotermTheorem::T5_9, CotermTheorem::Char2};

std::string_view coterm_theorem_name(CotermTheorem t);
/// Accepts "T5_1", "t5.1", "char2", ...
std::optional<CotermTheorem> parse_coterm_theorem(std::string_view name);

/// Whether the construction's ring is F_p (otherwise Z).
bool over_prime_field(CotermTheorem t);

/// Checks the hypotheses (DomainError naming the failed one), then builds the
/// polynomial. The collapsing cases are returned with degenerate = true.
Coterm coterm_construct(CotermTheorem theorem, std::uint64_t n, std::int64_t k, Ring ring);

/// The constant a collapsing case must reduce to, if (n, ring) is one.
std::optional<long> degenerate_constant(CotermTheorem theorem, std::uint64_t n, Ring ring);

}  // namespace reciprodick

#endif  // RECIPRODICK_COTERM_HPP
