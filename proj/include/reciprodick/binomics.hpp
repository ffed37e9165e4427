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

#ifndef RECIPRODICK_BINOMICS_HPP
#define RECIPRODICK_BINOMICS_HPP

#include <cstdint>
#include <vector>

#include "reciprodick/ring.hpp"

namespace reciprodick {

/// Base-p expansion, least significant digit first. Empty for 0.
struct PadicDigits {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> digits;

  /// Digit at position i, zero past the end.
  std::uint64_t at(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
  Integer value() const;
};

/// Exact C(n, m); zero when m < 0 or m > n.
Integer binomial(std::uint64_t n, std::int64_t m);

PadicDigits digits_base_p(std::uint64_t n, std::uint64_t p);

/// C(n, m) mod p as the digitwise product of small binomials.
std::uint64_t binomial_mod_p_lucas(std::uint64_t n, std::uint64_t m, std::uint64_t p);

/// Some base-p digit of m exceeds the matching digit of n, i.e. p | C(n, m).
bool divisibility_by_digit_dominance(std::uint64_t n, std::uint64_t m, std::uint64_t p);

/// Sum of the base-p digits of n.
std::uint64_t weight_base_p(std::uint64_t n, std::uint64_t p);

/// n = p^l for some l >= 1.
bool is_positive_power_of(std::uint64_t n, std::uint64_t p);

}  // namespace reciprodick

#endif  // RECIPRODICK_BINOMICS_HPP
