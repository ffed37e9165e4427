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

#include <random>

#include "oracles.hpp"
#include "reciprodick/errors.hpp"
#include "reciprodick/poly.hpp"

using namespace reciprodick;

namespace {

const Ring Z = Ring::integers();

Poly random_poly(std::mt19937_64& rng, Ring ring, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::vector<Integer> c(len(rng));
  for (auto& v : c) v = coeff(rng);
  return Poly(ring, std::move(c));
}

}  // namespace

TEST_CASE("ring construction") {
  CHECK(Ring().is_integers());
  CHECK(Ring::prime_field(5).modulus() == 5);
  CHECK_THROWS_AS(Ring::prime_field(9), DomainError);
  CHECK_THROWS_AS(Ring::prime_field(1), DomainError);
  CHECK(Ring::prime_field(7).reduce(-1) == 6);
  CHECK(Ring::prime_field(5).name() == "F_5");
  CHECK(Z.name() == "Z");
}

TEST_CASE("is_prime agrees with trial division") {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool naive = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && naive; ++d) naive = n % d != 0;
    CHECK_MESSAGE(is_prime(n) == naive, n);
  }
  CHECK(is_prime(4294967291ULL));
  CHECK_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
  CHECK(is_prime(18446744073709551557ULL));
}

TEST_CASE("normalization trims and reduces") {
  const Poly a(Ring::prime_field(3), {3, 4, 6});
  CHECK(a.coeffs().size() == 2);
  CHECK(a.coeff(1) == 1);
  CHECK(a.coeff(7) == 0);
  CHECK(Poly(Z, {0, 0}).is_zero());
  CHECK_FALSE(Poly(Z).degree().has_value());
  CHECK(*Poly(Z, {1, 0, 5}).degree() == 2);
}

TEST_CASE("arithmetic examples") {
  CHECK(add(Poly(Z, {1, 1}), Poly(Z)) == Poly(Z, {1, 1}));
  CHECK(mul(Poly(Z, {1, 1}), Poly(Z, {1, -1})) == Poly(Z, {1, 0, -1}));
  const Ring F5 = Ring::prime_field(5);
  CHECK(scale(2, Poly(F5, {1, 3})) == Poly(F5, {2, 1}));
  CHECK_THROWS_AS(add(Poly(Z, {1}), Poly(F5, {1})), DomainError);
  CHECK_THROWS_AS(mul(Poly(Z, {1}), Poly(F5, {1})), DomainError);
}

TEST_CASE("evaluate and compose_linear") {
  const Poly f(Z, {2, 12, 2});
  CHECK(evaluate(f, 0) == 2);
  CHECK(evaluate(f, 1) == 16);
  CHECK(evaluate(Poly(Z, {0, 0, 1}), -1) == 1);
  CHECK(compose_linear(Poly(Z, {0, 0, 1}), 1, -4) == Poly(Z, {1, -8, 16}));
  CHECK(compose_linear(f, 1, -4) == Poly(Z, {16, -64, 32}));
  CHECK(compose_linear(f, 0, 1) == f);
  CHECK(evaluate(Poly(Ring::prime_field(7), {3, 5}), 4) == 2);
}

TEST_CASE("reciprocal and self-reciprocality") {
  CHECK(reciprocal(Poly(Z, {14, 20, -2})) == Poly(Z, {-2, 20, 14}));
  CHECK(reciprocal(Poly(Z, {5})) == Poly(Z, {5}));
  CHECK(reciprocal(Poly(Z, {2, 2})) == Poly(Z, {2, 2}));
  CHECK(reciprocal(Poly(Z, {0, 0, 3})) == Poly(Z, {3}));
  CHECK_THROWS_AS(reciprocal(Poly(Z)), DomainError);
  CHECK(is_self_reciprocal(Poly(Z, {8})));
  CHECK(is_self_reciprocal(Poly(Z, {6, 20, 6})));
  CHECK_FALSE(is_self_reciprocal(Poly(Z, {14, 20, -2})));
  // 1 + x + 3x^2 is 1 + x over F_3.
  CHECK(is_self_reciprocal(Poly(Ring::prime_field(3), {1, 1, 3})));
  CHECK_FALSE(is_self_reciprocal(Poly(Z, {0, 1})));
}

TEST_CASE("reduce_mod_p") {
  CHECK(reduce_mod_p(Poly(Z, {2, 12, 2}), 3) == Poly(Ring::prime_field(3), {2, 0, 2}));
  CHECK(reduce_mod_p(Poly(Z), 5).is_zero());
  CHECK(reduce_mod_p(Poly(Z, {8}), 5) == Poly(Ring::prime_field(5), {3}));
  CHECK(reduce_mod_p(Poly(Z, {-1}), 5) == Poly(Ring::prime_field(5), {4}));
  CHECK_THROWS_AS(reduce_mod_p(Poly(Z, {1}), 4), DomainError);
}

TEST_CASE("to_string") {
  CHECK(to_string(Poly(Z, {2, 12, 2})) == "2 + 12x + 2x^2");
  CHECK(to_string(Poly(Z)) == "0");
  CHECK(to_string(Poly(Z, {-1, 0, -1})) == "-1 - x^2");
}

TEST_CASE("random ring laws") {
  std::mt19937_64 rng(20261019);
  for (const Ring ring : {Z, Ring::prime_field(5), Ring::prime_field(13)}) {
    for (int trial = 0; trial < 300; ++trial) {
      const Poly a = random_poly(rng, ring, 7);
      const Poly b = random_poly(rng, ring, 7);
      const Poly c = random_poly(rng, ring, 7);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - b) + b == a);
      for (long v : {-3L, 0L, 2L, 5L}) {
        CHECK(evaluate(a * b, v) == ring.reduce(evaluate(a, v) * evaluate(b, v)));
      }
      if (!a.is_zero()) {
        CHECK(is_self_reciprocal(a) == oracle::palindromic({a.coeffs().begin(), a.coeffs().end()}));
        if (a.coeff(0) != 0) CHECK(reciprocal(reciprocal(a)) == a);
      }
    }
  }
}
