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

#include "reciprodick/ring.hpp"

#include <array>

#include "reciprodick/errors.hpp"

namespace reciprodick {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<u64, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kSmall) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These twelve witnesses decide every n < 3.3 * 10^24.
  for (u64 a : kSmall) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Ring Ring::prime_field(std::uint64_t p) {
  if (!is_prime(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not prime");
  }
  return Ring(p);
}

Integer Ring::reduce(const Integer& v) const {
  if (is_integers()) return v;
  Integer r;
  Integer m = to_integer(p_);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::string Ring::name() const {
  if (is_integers()) return "Z";
  return "F_" + std::to_string(p_);
}

Integer to_integer(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 platform expected");
  return Integer(static_cast<unsigned long>(v));
}

Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

std::uint64_t mod_u64(const Integer& v, std::uint64_t m) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m));
}

}  // namespace reciprodick
