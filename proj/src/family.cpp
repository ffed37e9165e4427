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

#include "reciprodick/family.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "reciprodick/binomics.hpp"
#include "reciprodick/errors.hpp"

namespace reciprodick {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

constexpr std::array<std::pair<Family, std::string_view>, 10> kFamilyNames = {{
    {Family::D, "dickson"},
    {Family::f, "f"},
    {Family::g, "g"},
    {Family::h, "h"},
    {Family::gstar, "gstar"},
    {Family::hstar, "hstar"},
    {Family::f_kind1, "kind1"},
    {Family::f_kind2, "kind2"},
    {Family::f_kind3, "kind3"},
    {Family::f_char2, "fchar2"},
}};

Integer zk(i64 k) { return to_integer(k); }
Integer zn(u64 n) { return to_integer(n); }

void require_k_in_field(i64 k, Ring ring) {
  if (ring.is_prime_field() &&
      (k < 0 || static_cast<u64>(k) >= ring.modulus())) {
    throw DomainError("k = " + std::to_string(k) + " outside [0, p-1] for p = " +
                      std::to_string(ring.modulus()));
  }
}

void require_even_gt1(u64 n, std::string_view what) {
  if (n < 2 || n % 2 != 0) {
    throw DomainError(std::string(what) + " requires even n > 1, got n = " + std::to_string(n));
  }
}

void require_odd_gt1(u64 n, std::string_view what) {
  if (n < 3 || n % 2 == 0) {
    throw DomainError(std::string(what) + " requires odd n > 1, got n = " + std::to_string(n));
  }
}

// Ends `lo` and `hi` at x^0 and x^top, middle coefficients for 1 <= j < top.
Poly assemble(u64 n, i64 k, u64 top, const Integer& lo, const Integer& hi, Ring ring) {
  std::vector<Integer> c(top + 1);
  c[0] = lo;
  for (u64 j = 1; j < top; ++j) c[j] = middle_coefficient(n, k, j);
  c[top] += hi;
  return Poly(ring, std::move(c));
}

Integer even_constant(u64 n, i64 k) { return zk(k) * zn(n - 1) + 2; }
Integer even_leading(i64 k) { return 2 - zk(k); }
Integer odd_leading(u64 n, i64 k) { return -zk(k) * zn(n - 1) + 2 * zn(n); }

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, canonical] : kFamilyNames) {
    if (canonical == name) return f;
  }
  if (name == "D") return Family::D;
  if (name == "f_kind1") return Family::f_kind1;
  if (name == "f_kind2") return Family::f_kind2;
  if (name == "f_kind3") return Family::f_kind3;
  if (name == "f_char2") return Family::f_char2;
  return std::nullopt;
}

void validate(const FamilySpec& spec) {
  require_k_in_field(spec.k, spec.ring);
  switch (spec.family) {
    case Family::g:
    case Family::h:
      require_even_gt1(spec.n, family_name(spec.family));
      break;
    case Family::gstar:
    case Family::hstar:
      require_odd_gt1(spec.n, family_name(spec.family));
      break;
    case Family::f_char2:
      if (spec.ring != Ring::prime_field(2)) throw DomainError("fchar2 is defined over F_2 only");
      if (spec.k != 1) throw DomainError("fchar2 fixes k = 1");
      if (spec.n < 1) throw DomainError("fchar2 requires n >= 1");
      break;
    default:
      break;
  }
}

Poly build(const FamilySpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::D: return reversed_dickson(spec.n, spec.k, spec.a, spec.ring);
    case Family::f: return f_family(spec.n, spec.k, spec.ring);
    case Family::g: return g_family(spec.n, spec.k, spec.ring);
    case Family::h: return h_family(spec.n, spec.k, spec.ring);
    case Family::gstar: return gstar_family(spec.n, spec.k, spec.ring);
    case Family::hstar: return hstar_family(spec.n, spec.k, spec.ring);
    case Family::f_kind1: return f_kind(spec.n, 1, spec.ring);
    case Family::f_kind2: return f_kind(spec.n, 2, spec.ring);
    case Family::f_kind3: return f_kind(spec.n, 3, spec.ring);
    case Family::f_char2: return f_char2(spec.n);
  }
  throw InvariantViolation("unhandled family");
}

Integer dickson_coefficient(std::uint64_t n, std::int64_t k, std::uint64_t i) {
  if (n == 0 || 2 * i > n) throw DomainError("dickson_coefficient requires n >= 1 and i <= n/2");
  const Integer numerator = (zn(n) - zk(k) * zn(i)) * binomial(n - i, static_cast<i64>(i));
  const Integer denominator = zn(n - i);
  Integer q;
  Integer r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  if (r != 0) {
    throw InvariantViolation("non-integral Dickson coefficient at n = " + std::to_string(n) +
                             ", k = " + std::to_string(k) + ", i = " + std::to_string(i));
  }
  return q;
}

Poly reversed_dickson(std::uint64_t n, std::int64_t k, const Integer& a, Ring ring) {
  require_k_in_field(k, ring);
  if (n == 0) return Poly::constant(ring, 2 - zk(k));
  std::vector<Integer> c(n / 2 + 1);
  for (u64 i = 0; i <= n / 2; ++i) {
    Integer apow;
    mpz_pow_ui(apow.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(n - 2 * i));
    c[i] = dickson_coefficient(n, k, i) * apow;
    if (i % 2 == 1) c[i] = -c[i];
  }
  return Poly(ring, std::move(c));
}

Poly f_family(std::uint64_t n, std::int64_t k, Ring ring) {
  require_k_in_field(k, ring);
  if (n == 0) return Poly::constant(ring, 2 - zk(k));
  std::vector<Integer> c(n / 2 + 2);
  const Integer kk = zk(k);
  for (u64 j = 0; 2 * j + 1 <= n - 1; ++j) {
    const Integer t = kk * binomial(n - 1, static_cast<i64>(2 * j + 1));
    c[j] += t;
    c[j + 1] -= t;
  }
  for (u64 j = 0; 2 * j <= n; ++j) c[j] += 2 * binomial(n, static_cast<i64>(2 * j));
  return Poly(ring, std::move(c));
}

Integer middle_coefficient(std::uint64_t n, std::int64_t k, std::uint64_t j) {
  const Integer kk = zk(k);
  const i64 jj = static_cast<i64>(j);
  return kk * binomial(n - 1, 2 * jj + 1) - kk * binomial(n - 1, 2 * jj - 1) +
         2 * binomial(n, 2 * jj);
}

Poly f_expanded_even(std::uint64_t n, std::int64_t k, Ring ring) {
  require_even_gt1(n, "f_expanded_even");
  require_k_in_field(k, ring);
  return assemble(n, k, n / 2, even_constant(n, k), even_leading(k), ring);
}

Poly f_expanded_odd(std::uint64_t n, std::int64_t k, Ring ring) {
  require_odd_gt1(n, "f_expanded_odd");
  require_k_in_field(k, ring);
  return assemble(n, k, (n - 1) / 2, even_constant(n, k), odd_leading(n, k), ring);
}

Poly g_family(std::uint64_t n, std::int64_t k, Ring ring) {
  require_even_gt1(n, "g");
  require_k_in_field(k, ring);
  return assemble(n, k, n / 2, even_leading(k), even_leading(k), ring);
}

Poly h_family(std::uint64_t n, std::int64_t k, Ring ring) {
  require_even_gt1(n, "h");
  require_k_in_field(k, ring);
  return assemble(n, k, n / 2, even_constant(n, k), even_constant(n, k), ring);
}

Poly gstar_family(std::uint64_t n, std::int64_t k, Ring ring) {
  require_odd_gt1(n, "gstar");
  require_k_in_field(k, ring);
  return assemble(n, k, (n - 1) / 2, odd_leading(n, k), odd_leading(n, k), ring);
}

Poly hstar_family(std::uint64_t n, std::int64_t k, Ring ring) {
  require_odd_gt1(n, "hstar");
  require_k_in_field(k, ring);
  return assemble(n, k, (n - 1) / 2, even_constant(n, k), even_constant(n, k), ring);
}

Poly f_kind(std::uint64_t n, int kind, Ring ring) {
  if (kind < 1 || kind > 3) throw DomainError("kind must be 1, 2 or 3");
  const i64 offset = kind == 1 ? 0 : 1;
  std::vector<Integer> c(n / 2 + 1);
  for (u64 j = 0; j <= n / 2; ++j) c[j] = binomial(n, 2 * static_cast<i64>(j) + offset);
  return Poly(ring, std::move(c));
}

Poly f_char2(std::uint64_t n) {
  if (n < 1) throw DomainError("fchar2 requires n >= 1");
  std::vector<Integer> c(n / 2 + 2);
  for (u64 j = 0; 2 * j + 1 <= n - 1; ++j) {
    const Integer t = binomial(n - 1, static_cast<i64>(2 * j + 1));
    c[j] += t;
    c[j + 1] -= t;
  }
  return Poly(Ring::prime_field(2), std::move(c));
}

bool check_dickson_f_identity(std::uint64_t n, std::int64_t k) {
  const Ring z = Ring::integers();
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n));
  const Poly lhs = scale(two_pow, reversed_dickson(n, k, 1, z));
  const Poly rhs = compose_linear(f_family(n, k, z), 1, -4);
  return lhs == rhs;
}

}  // namespace reciprodick
