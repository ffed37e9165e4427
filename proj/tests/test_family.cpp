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

#include <doctest.h>

#include "oracles.hpp"
#include "reciprodick/binomics.hpp"
#include "reciprodick/errors.hpp"
#include "reciprodick/family.hpp"

using namespace reciprodick;

namespace {

const Ring Z = Ring::integers();
const std::uint64_t kOddPrimes[] = {3, 5, 7, 11, 13};

}  // namespace

TEST_CASE("family names round-trip") {
  for (Family f : {Family::D, Family::f, Family::g, Family::h, Family::gstar, Family::hstar, Family::f_kind1,
                   Family::f_kind2, Family::f_kind3, Family::f_char2}) {
    CHECK(parse_family(family_name(f)) == f);
  }
  CHECK_FALSE(parse_family("nope").has_value());
}

TEST_CASE("reversed Dickson examples") {
  for (std::int64_t k = -3; k <= 5; ++k) {
    CHECK(reversed_dickson(0, k, 7, Z) == Poly(Z, {2 - k}));
    // a^2 - (2-k) x
    CHECK(reversed_dickson(2, k, 3, Z) == Poly(Z, {9, k - 2}));
  }
  CHECK(reversed_dickson(4, 0, 1, Z) == Poly(Z, {1, -4, 2}));
}

TEST_CASE("reversed Dickson matches the three-term recurrence") {
  for (std::uint64_t n = 0; n <= 60; ++n) {
    for (std::int64_t k = -4; k <= 6; ++k) {
      for (long a : {1L, -2L, 3L}) {
        CHECK(reversed_dickson(n, k, a, Z) == oracle::to_poly(oracle::reversed_dickson(n, k, a)));
      }
    }
  }
}

TEST_CASE("Dickson coefficient closed form") {
  for (std::uint64_t n = 1; n <= 50; ++n) {
    for (std::int64_t k = -5; k <= 6; ++k) {
      for (std::uint64_t i = 0; 2 * i <= n; ++i) {
        Integer expected = oracle::binom(n - i, i);
        if (i >= 1) expected -= Integer(static_cast<long>(k - 1)) * oracle::binom(n - i - 1, i - 1);
        CHECK(dickson_coefficient(n, k, i) == expected);
      }
    }
  }
}

TEST_CASE("f family examples") {
  for (std::int64_t k = -5; k <= 6; ++k) {
    CHECK(f_family(0, k, Z) == Poly(Z, {2 - k}));
    CHECK(f_family(1, k, Z) == Poly(Z, {2}));
  }
  CHECK(f_family(3, 3, Z) == Poly(Z, {8}));
  CHECK(f_family(4, 0, Z) == Poly(Z, {2, 12, 2}));
  CHECK(f_family(4, 2, Z) == Poly(Z, {8, 8}));
  CHECK(f_family(5, 3, Z) == Poly(Z, {14, 20, -2}));
  CHECK(f_family(5, 1, Z) == Poly(Z, {6, 20, 6}));
  CHECK_THROWS_AS(f_family(4, 5, Ring::prime_field(5)), DomainError);
  CHECK_THROWS_AS(f_family(4, -1, Ring::prime_field(5)), DomainError);
}

TEST_CASE("f family matches the sum definition, over Z and mod p") {
  for (std::uint64_t n = 0; n <= 80; ++n) {
    for (std::int64_t k = -5; k <= 6; ++k) {
      const oracle::ZVec expected = oracle::f_sum(n, k);
      CHECK(f_family(n, k, Z) == oracle::to_poly(expected));
      for (std::uint64_t p : kOddPrimes) {
        if (k >= 0 && k < static_cast<std::int64_t>(p)) {
          CHECK(f_family(n, k, Ring::prime_field(p)) == oracle::to_poly(expected, Ring::prime_field(p)));
        }
      }
    }
  }
}

TEST_CASE("expanded forms") {
  CHECK(f_expanded_even(4, 0, Z) == Poly(Z, {2, 12, 2}));
  for (std::int64_t k = -5; k <= 6; ++k) CHECK(f_expanded_odd(3, k, Z) == Poly(Z, {2 * k + 2, 6 - 2 * k}));
  CHECK(f_expanded_odd(5, 1, Z) == Poly(Z, {6, 20, 6}));
  CHECK_THROWS_AS(f_expanded_even(5, 0, Z), DomainError);
  CHECK_THROWS_AS(f_expanded_odd(4, 0, Z), DomainError);
  CHECK_THROWS_AS(f_expanded_odd(1, 0, Z), DomainError);
  for (std::uint64_t n = 2; n <= 120; ++n) {
    for (std::int64_t k = -5; k <= 6; ++k) {
      const Poly direct = f_family(n, k, Z);
      CHECK(direct == (n % 2 == 0 ? f_expanded_even(n, k, Z) : f_expanded_odd(n, k, Z)));
    }
  }
  for (std::uint64_t p : kOddPrimes) {
    const Ring F = Ring::prime_field(p);
    for (std::uint64_t n = 2; n <= 60; ++n) {
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(p); ++k) {
        CHECK(f_family(n, k, F) == (n % 2 == 0 ? f_expanded_even(n, k, F) : f_expanded_odd(n, k, F)));
      }
    }
  }
}

TEST_CASE("collapse identities") {
  for (std::uint64_t n = 2; n <= 100; n += 2) {
    oracle::ZVec two_odd;
    for (std::uint64_t j = 0; 2 * j + 1 <= n; ++j) two_odd.push_back(2 * oracle::binom(n, 2 * j + 1));
    CHECK(f_family(n, 2, Z) == oracle::to_poly(two_odd));
  }
  for (std::uint64_t n = 1; n <= 99; n += 2) {
    oracle::ZVec odd;
    for (std::uint64_t j = 0; 2 * j + 1 <= n + 1; ++j) odd.push_back(oracle::binom(n + 1, 2 * j + 1));
    CHECK(f_family(n, 1, Z) == oracle::to_poly(odd));
  }
}

TEST_CASE("g h gstar hstar examples") {
  CHECK(g_family(4, 0, Z) == Poly(Z, {2, 12, 2}));
  CHECK(h_family(4, 1, Z) == Poly(Z, {5, 10, 5}));
  CHECK(g_family(6, 2, Z) == Poly(Z, {0, 40, 12}));
  for (std::int64_t k = -5; k <= 6; ++k) CHECK(hstar_family(5, k, Z) == Poly(Z, {4 * k + 2, 20, 4 * k + 2}));
  CHECK(gstar_family(5, 1, Z) == Poly(Z, {6, 20, 6}));
  CHECK(gstar_family(7, 0, Z) == Poly(Z, {14, 42, 70, 14}));
  CHECK_THROWS_AS(g_family(5, 0, Z), DomainError);
  CHECK_THROWS_AS(hstar_family(4, 0, Z), DomainError);
}

TEST_CASE("g and h share the middle of f with swapped or replaced ends") {
  for (std::uint64_t n = 4; n <= 60; n += 2) {
    for (std::int64_t k = -5; k <= 6; ++k) {
      const Poly f = f_expanded_even(n, k, Z);
      const Poly g = g_family(n, k, Z);
      const Poly h = h_family(n, k, Z);
      for (std::uint64_t j = 1; j < n / 2; ++j) {
        CHECK(g.coeff(j) == f.coeff(j));
        CHECK(h.coeff(j) == f.coeff(j));
      }
      CHECK(g.coeff(0) == 2 - k);
      CHECK(g.coeff(n / 2) == 2 - k);
      CHECK(h.coeff(0) == k * static_cast<std::int64_t>(n - 1) + 2);
      CHECK(h.coeff(n / 2) == k * static_cast<std::int64_t>(n - 1) + 2);
    }
  }
}

TEST_CASE("swapped ends stay non-palindromic at k = 1") {
  for (std::uint64_t n = 6; n <= 80; n += 2) {
    CHECK(oracle::binom(n + 1, 3) != oracle::binom(n + 1, n - 1));
    CHECK_FALSE(is_self_reciprocal(g_family(n, 1, Z)));
    CHECK_FALSE(is_self_reciprocal(h_family(n, 1, Z)));
  }
}

TEST_CASE("kind specializations") {
  CHECK(f_kind(4, 1) == Poly(Z, {1, 6, 1}));
  CHECK(f_kind(4, 2) == Poly(Z, {4, 4}));
  CHECK(f_kind(0, 1) == Poly(Z, {1}));
  for (std::uint64_t n = 0; n <= 60; ++n) {
    CHECK(scale(2, f_kind(n, 1)) == f_family(n, 0, Z));
    if (n % 2 == 0 && n > 0) CHECK(scale(2, f_kind(n, 2)) == f_family(n, 2, Z));
  }
  CHECK_THROWS_AS(f_kind(4, 4), DomainError);
}

TEST_CASE("characteristic 2 family") {
  const Ring F2 = Ring::prime_field(2);
  CHECK(f_char2(2) == Poly(F2, {1, 1}));
  CHECK(f_char2(4) == Poly(F2, {1, 0, 1}));
  CHECK(f_char2(3).is_zero());
  for (std::uint64_t n = 1; n <= 100; ++n) {
    oracle::ZVec expected;
    for (std::uint64_t j = 0; 2 * j + 1 <= n + 1; ++j) expected.push_back(oracle::binom(n + 1, 2 * j + 1));
    CHECK(f_char2(n) == oracle::to_poly(expected, F2));
  }
}

TEST_CASE("Dickson to f identity") {
  for (std::int64_t k = -3; k <= 6; ++k) {
    CHECK(check_dickson_f_identity(1, k));
    CHECK(check_dickson_f_identity(2, k));
  }
  CHECK(check_dickson_f_identity(4, 0));
  for (std::uint64_t n = 0; n <= 40; ++n) {
    for (std::int64_t k = -3; k <= 6; ++k) {
      const oracle::ZVec lhs = oracle::zscale(Integer(1) << static_cast<mp_bitcnt_t>(n), oracle::reversed_dickson(n, k, 1));
      // f(1 - 4x) by Horner on the oracle vectors.
      const oracle::ZVec f = oracle::f_sum(n, k);
      oracle::ZVec rhs;
      for (auto it = f.rbegin(); it != f.rend(); ++it) {
        rhs = oracle::zadd(oracle::zmul(rhs, {Integer(1), Integer(-4)}), {*it});
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("build dispatch and validation") {
  CHECK(build(FamilySpec{Family::f, 4, 0, 1, Z}) == Poly(Z, {2, 12, 2}));
  CHECK(build(FamilySpec{Family::D, 4, 0, 1, Z}) == Poly(Z, {1, -4, 2}));
  CHECK(build(FamilySpec{Family::f_char2, 2, 1, 1, Ring::prime_field(2)}) == Poly(Ring::prime_field(2), {1, 1}));
  CHECK_THROWS_AS(build(FamilySpec{Family::f_char2, 2, 1, 1, Z}), DomainError);
  CHECK_THROWS_AS(build(FamilySpec{Family::g, 3, 0, 1, Z}), DomainError);
  CHECK(build(FamilySpec{Family::f, 6, 2, 1, Ring::prime_field(3)}) ==
        reduce_mod_p(f_family(6, 2, Z), 3));
}
