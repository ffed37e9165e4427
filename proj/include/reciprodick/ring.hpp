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

#ifndef RECIPRODICK_RING_HPP
#define RECIPRODICK_RING_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace reciprodick {

using Integer = mpz_class;

/// Deterministic primality test for 64-bit integers (Miller-Rabin with a
/// witness set that is exact below 2^64).
bool is_prime(std::uint64_t n);

/// Coefficient domain: the integers, or the prime field F_p.
class Ring {
 public:
  /// The integers. Also the default.
  constexpr Ring() = default;

  static constexpr Ring integers() { return Ring(); }
  /// Throws DomainError unless p is prime.
  static Ring prime_field(std::uint64_t p);

  constexpr bool is_integers() const { return p_ == 0; }
  constexpr bool is_prime_field() const { return p_ != 0; }
  /// Characteristic: p for F_p, 0 for the integers.
  constexpr std::uint64_t modulus() const { return p_; }

  /// Canonical representative of v in this ring.
  Integer reduce(const Integer& v) const;

  std::string name() const;

  friend constexpr bool operator==(Ring, Ring) = default;

 private:
  constexpr explicit Ring(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Conversion helpers between GMP integers and machine words.
Integer to_integer(std::uint64_t v);
Integer to_integer(std::int64_t v);
/// Residue of v modulo m in [0, m).
std::uint64_t mod_u64(const Integer& v, std::uint64_t m);

}  // namespace reciprodick

#endif  // RECIPRODICK_RING_HPP
