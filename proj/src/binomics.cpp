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

#include "reciprodick/binomics.hpp"

#include <string>

#include "reciprodick/errors.hpp"

namespace reciprodick {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

void require_prime(u64 p) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return r;
}

// C(a, b) mod p for digits a, b < p. No factor of p appears, so Fermat
// inverses are valid.
u64 small_binomial_mod(u64 a, u64 b, u64 p) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  u64 num = 1;
  u64 den = 1;
  for (u64 i = 0; i < b; ++i) {
    num = mulmod(num, (a - i) % p, p);
    den = mulmod(den, (i + 1) % p, p);
  }
  return mulmod(num, powmod(den, p - 2, p), p);
}

}  // namespace

Integer PadicDigits::value() const {
  Integer v = 0;
  const Integer base = to_integer(p);
  for (std::size_t i = digits.size(); i-- > 0;) v = v * base + to_integer(digits[i]);
  return v;
}

Integer binomial(std::uint64_t n, std::int64_t m) {
  if (m < 0 || static_cast<std::uint64_t>(m) > n) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(m);
  if (r > n - r) r = n - r;
  // After step i the accumulator is C(n - r + i, i), so each division is exact.
  Integer acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc *= to_integer(n - r + i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return acc;
}

PadicDigits digits_base_p(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  PadicDigits out{p, {}};
  while (n != 0) {
    out.digits.push_back(n % p);
    n /= p;
  }
  return out;
}

std::uint64_t binomial_mod_p_lucas(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  require_prime(p);
  u64 result = 1 % p;
  while (m != 0 || n != 0) {
    const u64 a = n % p;
    const u64 b = m % p;
    if (b > a) return 0;
    result = mulmod(result, small_binomial_mod(a, b, p), p);
    n /= p;
    m /= p;
  }
  return result;
}

bool divisibility_by_digit_dominance(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  const PadicDigits dn = digits_base_p(n, p);
  const PadicDigits dm = digits_base_p(m, p);
  for (std::size_t i = 0; i < dm.digits.size(); ++i) {
    if (dm.digits[i] > dn.at(i)) return true;
  }
  return false;
}

std::uint64_t weight_base_p(std::uint64_t n, std::uint64_t p) {
  u64 w = 0;
  for (u64 d : digits_base_p(n, p).digits) w += d;
  return w;
}

bool is_positive_power_of(std::uint64_t n, std::uint64_t p) {
  if (p < 2 || n < p) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace reciprodick
