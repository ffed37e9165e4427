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

#include "reciprodick/coterm.hpp"

#include <array>
#include <cctype>
#include <string>
#include <utility>

#include "reciprodick/binomics.hpp"
#include "reciprodick/errors.hpp"
#include "reciprodick/family.hpp"

namespace reciprodick {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

constexpr std::array<std::pair<CotermTheorem, std::string_view>, 9> kNames = {{
    {CotermTheorem::T5_1, "T5_1"},
    {CotermTheorem::T5_2, "T5_2"},
    {CotermTheorem::T5_3, "T5_3"},
    {CotermTheorem::T5_4, "T5_4"},
    {CotermTheorem::T5_5, "T5_5"},
    {CotermTheorem::T5_7, "T5_7"},
    {CotermTheorem::T5_8, "T5_8"},
    {CotermTheorem::T5_9, "T5_9"},
    {CotermTheorem::Char2, "CHAR2"},
}};

void require(bool ok, CotermTheorem t, std::string_view what) {
  if (!ok) throw DomainError(std::string(coterm_theorem_name(t)) + ": " + std::string(what));
}

bool is_power_of_two(u64 n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

std::string_view coterm_theorem_name(CotermTheorem t) {
  for (const auto& [id, name] : kNames) {
    if (id == t) return name;
  }
  return "?";
}

std::optional<CotermTheorem> parse_coterm_theorem(std::string_view name) {
  std::string canon;
  for (char c : name) canon += c == '.' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (canon == "C2R" || canon == "CHAR2_REMARK") canon = "CHAR2";
  for (const auto& [id, n] : kNames) {
    if (n == canon) return id;
  }
  return std::nullopt;
}

bool over_prime_field(CotermTheorem t) {
  switch (t) {
    case CotermTheorem::T5_7:
    case CotermTheorem::T5_8:
    case CotermTheorem::T5_9:
    case CotermTheorem::Char2:
      return true;
    default:
      return false;
  }
}

bool is_coterm(const Poly& a, const CotermContext& ctx) {
  if (a.ring() != ctx.ring) throw DomainError("coterm context ring differs from the polynomial's");
  if (ctx.m < 1) throw DomainError("coterm context needs m >= 1");
  if (a.degree() && *a.degree() >= ctx.m) {
    throw DomainError("degree " + std::to_string(*a.degree()) + " does not fit x^" + std::to_string(ctx.m) +
                      " - 1");
  }
  for (u64 i = 1; i <= ctx.m / 2; ++i) {
    if (a.coeff(i) != a.coeff(ctx.m - i)) return false;
  }
  return true;
}

Coterm coterm_from_self_reciprocal(const Poly& a) {
  if (!is_self_reciprocal(a)) throw DomainError("input is not self-reciprocal");
  const std::size_t m = *a.degree();
  if (m < 1) throw DomainError("a constant has no coterm counterpart");
  const Poly lead = Poly::monomial(a.ring(), a.leading(), m);
  return Coterm{sub(a, lead), CotermContext{m, a.ring()}, false};
}

std::optional<long> degenerate_constant(CotermTheorem theorem, std::uint64_t n, Ring ring) {
  const u64 p = ring.modulus();
  switch (theorem) {
    case CotermTheorem::T5_7:
      if (p > 2 && weight_base_p(n, p) == 2) return 2;
      break;
    case CotermTheorem::T5_8:
      if (p > 2 && n > 1 && is_positive_power_of(n - 1, p)) return 2;
      break;
    case CotermTheorem::T5_9:
      if (p > 2 && is_positive_power_of(n, p)) return 1;
      break;
    case CotermTheorem::Char2:
      if (p == 2 && n >= 2 && is_power_of_two(n)) return 1;
      break;
    default:
      break;
  }
  return std::nullopt;
}

Coterm coterm_construct(CotermTheorem t, std::uint64_t n, std::int64_t k, Ring ring) {
  const bool even = n % 2 == 0;
  if (over_prime_field(t)) {
    require(ring.is_prime_field(), t, "prime field required");
    if (t == CotermTheorem::Char2) {
      require(ring.modulus() == 2, t, "characteristic 2 required");
    } else {
      require(ring.modulus() != 2, t, "odd characteristic required");
    }
  } else {
    require(ring.is_integers(), t, "ring Z required");
  }
  const u64 p = ring.modulus();
  Poly parent(ring);
  Integer removed;
  u64 m = 0;
  switch (t) {
    case CotermTheorem::T5_1:
    case CotermTheorem::T5_3:
    case CotermTheorem::T5_7:
      require(even && n >= 4, t, "even n >= 4 required");
      require(k == 0, t, "k = 0 required");
      parent = t == CotermTheorem::T5_3 ? g_family(n, k, ring) : f_family(n, k, ring);
      removed = 2;
      m = n / 2;
      break;
    case CotermTheorem::T5_2:
    case CotermTheorem::T5_8:
      require(even && n >= 6, t, "even n >= 6 required");
      require(k == 2, t, "k = 2 required");
      if (t == CotermTheorem::T5_8) require(n % p != 0, t, "n != 2lp (p must not divide n) required");
      parent = f_family(n, k, ring);
      removed = 2 * to_integer(n);
      m = n / 2 - 1;
      break;
    case CotermTheorem::T5_4:
    case CotermTheorem::T5_5:
    case CotermTheorem::T5_9:
      require(!even && n > 3, t, "odd n > 3 required");
      require(k == 1, t, "k = 1 required");
      if (t == CotermTheorem::T5_9) {
        require((n + 1) % p != 0, t, "n+1 != 2lp (p must not divide n+1) required");
      }
      parent = t == CotermTheorem::T5_5 ? gstar_family(n, k, ring) : f_family(n, k, ring);
      removed = to_integer(n + 1);
      m = (n - 1) / 2;
      break;
    case CotermTheorem::Char2:
      require(even && n >= 4, t, "even n >= 4 required");
      require(k == 1, t, "k = 1 required");
      parent = f_char2(n);
      removed = 1;
      m = n / 2;
      break;
  }
  if (parent.degree() != std::optional<std::size_t>(m)) {
    throw InvariantViolation(std::string(coterm_theorem_name(t)) + ": parent degree differs from " +
                             std::to_string(m));
  }
  Poly c = sub(parent, Poly::monomial(ring, removed, m));
  const bool degenerate = degenerate_constant(t, n, ring).has_value();
  return Coterm{std::move(c), CotermContext{m, ring}, degenerate};
}

}  // namespace reciprodick
