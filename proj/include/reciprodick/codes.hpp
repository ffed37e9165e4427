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

#ifndef RECIPRODICK_CODES_HPP
#define RECIPRODICK_CODES_HPP

#include <cstdint>
#include <vector>

#include "reciprodick/poly.hpp"

namespace reciprodick {

/// Desk-scale limits for the cyclic-code pipeline.
inline constexpr std::uint64_t kMaxCodePrime = 13;
inline constexpr std::uint64_t kMaxCodeLength = 32;
inline constexpr std::size_t kMaxDivisors = 4096;
inline constexpr std::uint64_t kMaxEnumeratedCodewords = 1'000'000;

struct IrreducibleFactor {
  Poly factor;  // monic, irreducible over F_p
  unsigned multiplicity = 1;
};

/// Complete factorization of x^m - 1 over F_p, sorted by degree and then by
/// coefficients from the top down. CapacityError outside p <= 13, m <= 32.
std::vector<IrreducibleFactor> factor_xm_minus_1(std::uint64_t p, std::uint64_t m);

/// x^m - 1 over F_p.
Poly xm_minus_1(std::uint64_t p, std::uint64_t m);

/// All monic divisors of x^m - 1, sorted by degree then coefficients.
/// CapacityError when there are more than kMaxDivisors.
std::vector<Poly> monic_divisors(std::uint64_t p, std::uint64_t m);

/// Monic divisors d of x^m - 1 with is_self_reciprocal(d), in the same order.
/// Only exponent patterns that pair each factor with its reciprocal are
/// generated; CapacityError when that candidate set exceeds kMaxDivisors.
std::vector<Poly> self_reciprocal_divisors(std::uint64_t p, std::uint64_t m);

/// reciprocal(a) = c * a for some nonzero c in F_p. Coincides with
/// is_self_reciprocal over F_2.
bool is_self_reciprocal_up_to_unit(const Poly& a);

struct CyclicCode {
  std::uint64_t p = 2;
  std::uint64_t m = 1;
  Poly generator;
  std::uint64_t dimension = 0;
  /// is_self_reciprocal(generator): the coefficient palindrome test.
  bool self_reciprocal = false;
  /// Closed under reversal by the Massey criterion: the reciprocal of the
  /// generator is a scalar multiple of it.
  bool reversible = false;
};

/// Validates that the generator is monic over F_p and divides x^m - 1
/// (DomainError otherwise).
CyclicCode build_cyclic_code(std::uint64_t p, std::uint64_t m, const Poly& generator);

/// Number of codewords, p^dimension (saturating at UINT64_MAX).
std::uint64_t codeword_count(const CyclicCode& code);

/// Enumerates every codeword u * g (deg u < dimension) and checks that its
/// length-m reversal is again a codeword, by lookup in the enumerated set.
/// OpenMP-parallel; CapacityError above kMaxEnumeratedCodewords.
bool verify_reversibility_by_enumeration(const CyclicCode& code);
/// Single-threaded reference.
bool verify_reversibility_by_enumeration_serial(const CyclicCode& code);

}  // namespace reciprodick

#endif  // RECIPRODICK_CODES_HPP
