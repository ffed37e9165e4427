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
#include "reciprodick/gfp.hpp"

using namespace reciprodick;
using gfp::Coeffs;

namespace {

Coeffs random_coeffs(std::mt19937_64& rng, std::uint64_t p, std::size_t len) {
  std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
  Coeffs c(len);
  for (auto& v : c) v = d(rng);
  gfp::trim(c);
  return c;
}

oracle::PVec to_pvec(const Coeffs& c) { return {c.begin(), c.end()}; }

}  // namespace

TEST_CASE("field arithmetic") {
  const gfp::Field F(13);
  for (std::uint64_t a = 1; a < 13; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK_THROWS_AS(gfp::Field(15), DomainError);
  CHECK_THROWS_AS(gfp::Field(4294967311ULL), CapacityError);
}

TEST_CASE("division identity") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2, 3, 5, 13}) {
    const gfp::Field F(p);
    for (int t = 0; t < 200; ++t) {
      const Coeffs a = random_coeffs(rng, p, 12);
      Coeffs b = random_coeffs(rng, p, 6);
      if (b.empty()) continue;
      const auto [q, r] = gfp::divmod(F, a, b);
      CHECK(gfp::degree(r) < gfp::degree(b));
      CHECK(gfp::add(F, gfp::mul(F, q, b), r) == a);
      const Coeffs g = gfp::gcd(F, a, b);
      if (!g.empty()) {
        CHECK(g.back() == 1);
        CHECK(gfp::mod(F, a, g).empty());
        CHECK(gfp::mod(F, b, g).empty());
      }
    }
  }
}

TEST_CASE("irreducibility examples") {
  const gfp::Field F2(2);
  CHECK(gfp::is_irreducible(F2, {1, 1}));
  CHECK(gfp::is_irreducible(F2, {1, 1, 1}));
  CHECK_FALSE(gfp::is_irreducible(F2, {1, 0, 1}));
  CHECK(gfp::is_irreducible(F2, {1, 1, 0, 1}));
  CHECK_THROWS_AS(gfp::is_irreducible(F2, {1}), DomainError);
}

TEST_CASE("Ben-Or agrees with trial division on every small polynomial") {
  for (long p : {2L, 3L, 5L}) {
    const gfp::Field F(static_cast<std::uint64_t>(p));
    const std::size_t max_deg = p == 2 ? 10 : (p == 3 ? 6 : 4);
    for (std::size_t d = 1; d <= max_deg; ++d) {
      for (const oracle::PVec& f : oracle::monic_of_degree(p, d)) {
        const Coeffs c(f.begin(), f.end());
        CHECK_MESSAGE(gfp::is_irreducible(F, c) == oracle::irreducible_by_trial_division(f, p), p, " deg ", d);
      }
    }
  }
}

TEST_CASE("factorization reconstructs its input") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2, 3, 5, 7, 13}) {
    const gfp::Field F(p);
    for (int t = 0; t < 60; ++t) {
      Coeffs f = random_coeffs(rng, p, 14);
      if (gfp::degree(f) < 1) continue;
      // Force repeated factors now and then.
      if (t % 3 == 0) f = gfp::mul(F, f, gfp::mul(F, f, random_coeffs(rng, p, 3)));
      if (gfp::degree(f) < 1) continue;
      const Coeffs monic = gfp::make_monic(F, f);
      Coeffs product{1};
      for (const auto& fac : gfp::factor(F, f)) {
        CHECK(fac.poly.back() == 1);
        CHECK(gfp::is_irreducible(F, fac.poly));
        CHECK(oracle::irreducible_by_trial_division(to_pvec(fac.poly), static_cast<long>(p)));
        for (unsigned i = 0; i < fac.multiplicity; ++i) product = gfp::mul(F, product, fac.poly);
      }
      CHECK(product == monic);
    }
  }
}

TEST_CASE("p-th powers factor") {
  const gfp::Field F3(3);
  // (x + 1)^9 = x^9 + 1 over F_3
  Coeffs f(10, 0);
  f[0] = 1;
  f[9] = 1;
  const auto factors = gfp::factor(F3, f);
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].poly == Coeffs{1, 1});
  CHECK(factors[0].multiplicity == 9);
}

TEST_CASE("powmod and derivative") {
  const gfp::Field F(5);
  CHECK(gfp::derivative(F, {1, 2, 3}) == Coeffs{2, 1});
  CHECK(gfp::derivative(F, {1, 0, 0, 0, 0, 1}).empty());
  // x^5 = x mod (x^2 - 2)? x^2 = 2 so x^5 = 4x
  CHECK(gfp::powmod(F, {0, 1}, 5, {3, 0, 1}) == Coeffs{0, 4});
}

TEST_CASE("Poly conversion") {
  const Ring F7 = Ring::prime_field(7);
  const Poly a(F7, {3, 0, 6});
  CHECK(gfp::to_poly(gfp::Field(7), gfp::from_poly(a)) == a);
}
