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

#include "reciprodick/classifier.hpp"

#include <array>
#include <cctype>
#include <exception>
#include <string>
#include <utility>

#include "reciprodick/binomics.hpp"
#include "reciprodick/errors.hpp"
#include "reciprodick/gfp.hpp"

namespace reciprodick {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

constexpr std::array<std::pair<TheoremId, std::string_view>, 12> kTheoremNames = {{
    {TheoremId::T2_1, "T2_1"},
    {TheoremId::T2_3, "T2_3"},
    {TheoremId::T2_4, "T2_4"},
    {TheoremId::T2_7, "T2_7"},
    {TheoremId::T3_1, "T3_1"},
    {TheoremId::T3_4, "T3_4"},
    {TheoremId::T4_1, "T4_1"},
    {TheoremId::C3_2, "C3_2"},
    {TheoremId::C3_3, "C3_3"},
    {TheoremId::C3_5, "C3_5"},
    {TheoremId::C4_2, "C4_2"},
    {TheoremId::L1, "L1"},
}};

bool is_char2_family(const FamilySpec& s) {
  if (s.ring != Ring::prime_field(2)) return false;
  return s.family == Family::f_char2 || (s.family == Family::f && s.k == 1);
}

std::string describe(const FamilySpec& s) {
  return std::string(family_name(s.family)) + " n=" + std::to_string(s.n) +
         " k=" + std::to_string(s.k) + " over " + s.ring.name();
}

std::optional<std::string> need(bool ok, std::string_view what) {
  if (ok) return std::nullopt;
  return std::string(what);
}

// Hypotheses common to the odd-characteristic results on f.
std::optional<std::string> odd_field_f(const FamilySpec& s) {
  if (s.family != Family::f) return "family f required";
  if (!s.ring.is_prime_field() || s.ring.modulus() == 2) return "odd prime field required";
  if (s.k < 0 || static_cast<u64>(s.k) >= s.ring.modulus()) return "0 <= k <= p-1 required";
  return std::nullopt;
}

std::string truncated(std::string s) {
  constexpr std::size_t kMax = 160;
  if (s.size() > kMax) s = s.substr(0, kMax) + " ...";
  return s;
}

bool odd_degree_srim_shape(const Poly& f, bool require_odd) {
  const auto d = f.degree();
  if (!d || *d < 2) return false;
  if (require_odd && *d % 2 == 0) return false;
  if (!is_self_reciprocal(f)) return false;
  return is_irreducible(f);
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  for (const auto& [t, name] : kTheoremNames) {
    if (t == id) return name;
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  std::string canon;
  for (char c : name) canon += c == '.' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const auto& [t, n] : kTheoremNames) {
    if (n == canon) return t;
  }
  return std::nullopt;
}

bool is_corollary(TheoremId id) {
  switch (id) {
    case TheoremId::C3_2:
    case TheoremId::C3_3:
    case TheoremId::C3_5:
    case TheoremId::C4_2:
    case TheoremId::L1:
      return true;
    default:
      return false;
  }
}

bool oracle_self_reciprocal(const FamilySpec& spec) { return is_self_reciprocal(build(spec)); }

std::optional<std::string> hypothesis_violation(TheoremId theorem, const FamilySpec& s) {
  const bool over_z = s.ring.is_integers();
  switch (theorem) {
    case TheoremId::T2_1:
      if (auto v = need(s.family == Family::f, "family f required")) return v;
      if (auto v = need(over_z, "ring Z required")) return v;
      return need(s.n > 1 && s.n % 2 == 0, "even n > 1 required");
    case TheoremId::T2_3:
      if (auto v = need(s.family == Family::g || s.family == Family::h, "family g or h required")) return v;
      if (auto v = need(over_z, "ring Z required")) return v;
      return need(s.n > 1 && s.n % 2 == 0, "even n > 1 required");
    case TheoremId::T2_4:
      if (auto v = need(s.family == Family::f, "family f required")) return v;
      if (auto v = need(over_z, "ring Z required")) return v;
      return need(s.n > 1 && s.n % 2 == 1, "odd n > 1 required");
    case TheoremId::T2_7:
      if (auto v = need(s.family == Family::gstar || s.family == Family::hstar,
                        "family gstar or hstar required")) {
        return v;
      }
      if (auto v = need(over_z, "ring Z required")) return v;
      return need(s.n > 1 && s.n % 2 == 1, "odd n > 1 required");
    case TheoremId::T3_1:
      if (auto v = odd_field_f(s)) return v;
      return need(s.n > 1 && s.n % 2 == 0, "even n > 1 required");
    case TheoremId::T3_4:
      if (auto v = odd_field_f(s)) return v;
      return need(s.n % 2 == 1, "odd n > 0 required");
    case TheoremId::T4_1:
      if (auto v = need(is_char2_family(s), "fchar2 over F_2 (k = 1) required")) return v;
      return need(s.n > 1, "n > 1 required");
    case TheoremId::C3_2:
      if (auto v = odd_field_f(s)) return v;
      if (auto v = need(s.k == 0, "k = 0 required")) return v;
      return need(s.n > 2 && s.n % 4 == 2, "n > 2 with n = 2 mod 4 required");
    case TheoremId::C3_3:
      if (auto v = odd_field_f(s)) return v;
      if (auto v = need(s.k == 2, "k = 2 required")) return v;
      if (auto v = need(s.n > 0 && s.n % 4 == 0, "n > 0 with n = 0 mod 4 required")) return v;
      return need(s.n % s.ring.modulus() != 0, "n != 2lp (p must not divide n) required");
    case TheoremId::C3_5:
      if (auto v = odd_field_f(s)) return v;
      if (auto v = need(s.k == 1, "k = 1 required")) return v;
      if (auto v = need(s.n % 4 == 3, "n = 3 mod 4 required")) return v;
      return need((s.n + 1) % s.ring.modulus() != 0, "n+1 != 2lp (p must not divide n+1) required");
    case TheoremId::C4_2:
      if (auto v = need(is_char2_family(s), "fchar2 over F_2 (k = 1) required")) return v;
      return need(s.n > 2 && s.n % 4 == 2, "n > 2 with n = 2 mod 4 required");
    case TheoremId::L1:
      if (auto v = need(s.ring.is_prime_field(), "prime field required")) return v;
      try {
        validate(s);
      } catch (const DomainError& e) {
        return std::string(e.what());
      }
      return std::nullopt;
  }
  return "unknown theorem";
}

bool predicate(TheoremId theorem, const FamilySpec& s) {
  if (auto violation = hypothesis_violation(theorem, s)) {
    throw DomainError(std::string(theorem_name(theorem)) + ": " + *violation + " (" + describe(s) + ")");
  }
  const i64 k = s.k;
  const u64 n = s.n;
  const u64 p = s.ring.modulus();
  switch (theorem) {
    case TheoremId::T2_1: return k == 0 || k == 2;
    case TheoremId::T2_3: return k == 0;
    case TheoremId::T2_4: return k == 1 || (n == 3 && k == 3);
    case TheoremId::T2_7: return k == 1;
    // For even n and odd p, n = 2lp exactly when p | n.
    case TheoremId::T3_1: return k == 0 || (k == 2 && n % p != 0);
    case TheoremId::T3_4:
      return n == 1 || (k == 0 && is_positive_power_of(n, p)) || (n == 3 && k == 3 && p > 3) ||
             (k == 1 && (n + 1) % p != 0);
    case TheoremId::T4_1: return n % 2 == 0;
    case TheoremId::C3_2:
    case TheoremId::C3_3:
    case TheoremId::C3_5:
    case TheoremId::C4_2:
    case TheoremId::L1:
      return true;
  }
  throw InvariantViolation("unhandled theorem");
}

bool is_irreducible(const Poly& a) {
  if (!a.ring().is_prime_field()) throw DomainError("irreducibility is decided over F_p only");
  const auto d = a.degree();
  if (!d || *d < 1) throw DomainError("irreducibility needs degree >= 1");
  if (*d > kMaxIrreducibleDegree) {
    throw CapacityError("degree " + std::to_string(*d) + " exceeds the irreducibility limit");
  }
  const gfp::Field field(a.ring().modulus());
  return gfp::is_irreducible(field, gfp::from_poly(a));
}

bool check_corollary(TheoremId corollary, const FamilySpec& spec) {
  if (!is_corollary(corollary)) {
    throw DomainError(std::string(theorem_name(corollary)) + " is not a corollary");
  }
  if (auto violation = hypothesis_violation(corollary, spec)) {
    throw DomainError(std::string(theorem_name(corollary)) + ": " + *violation + " (" + describe(spec) + ")");
  }
  const Poly f = build(spec);
  return !odd_degree_srim_shape(f, corollary == TheoremId::L1);
}

bool observe(TheoremId theorem, const FamilySpec& spec) {
  return is_corollary(theorem) ? check_corollary(theorem, spec) : oracle_self_reciprocal(spec);
}

Verdict evaluate_case(TheoremId theorem, const FamilySpec& spec) {
  Verdict v;
  v.theorem = theorem;
  v.spec = spec;
  v.predicted = predicate(theorem, spec);
  v.observed = observe(theorem, spec);
  v.match = v.predicted == v.observed;
  if (!v.match) v.note = "polynomial " + truncated(to_string(build(spec)));
  return v;
}

std::vector<FamilySpec> enumerate_specs(TheoremId theorem, const ScanRange& range) {
  std::vector<Family> families;
  std::vector<u64> primes;
  switch (theorem) {
    case TheoremId::T2_1:
    case TheoremId::T2_4:
      families = {Family::f};
      primes = {0};
      break;
    case TheoremId::T2_3:
      families = {Family::g, Family::h};
      primes = {0};
      break;
    case TheoremId::T2_7:
      families = {Family::gstar, Family::hstar};
      primes = {0};
      break;
    case TheoremId::T4_1:
    case TheoremId::C4_2:
      families = {Family::f_char2};
      primes = {2};
      break;
    case TheoremId::L1:
      families = {Family::f, Family::g, Family::h, Family::gstar, Family::hstar, Family::D, Family::f_char2};
      primes = range.primes;
      break;
    default:
      families = {Family::f};
      for (u64 p : range.primes) {
        if (p != 2) primes.push_back(p);
      }
      break;
  }
  std::vector<FamilySpec> out;
  for (u64 n = range.n_min; n <= range.n_max; ++n) {
    for (i64 k = range.k_min; k <= range.k_max; ++k) {
      for (u64 p : primes) {
        const Ring ring = p == 0 ? Ring::integers() : Ring::prime_field(p);
        for (Family fam : families) {
          FamilySpec spec{fam, n, k, 1, ring};
          if (fam == Family::f_char2 && (p != 2 || k != 1)) continue;
          if (!hypothesis_violation(theorem, spec)) out.push_back(std::move(spec));
        }
      }
    }
  }
  return out;
}

std::vector<Verdict> scan_serial(TheoremId theorem, const ScanRange& range) {
  const std::vector<FamilySpec> specs = enumerate_specs(theorem, range);
  std::vector<Verdict> out;
  out.reserve(specs.size());
  for (const FamilySpec& s : specs) out.push_back(evaluate_case(theorem, s));
  return out;
}

std::vector<Verdict> scan(TheoremId theorem, const ScanRange& range) {
  const std::vector<FamilySpec> specs = enumerate_specs(theorem, range);
  std::vector<Verdict> out(specs.size());
  const long count = static_cast<long>(specs.size());
  std::exception_ptr failure;
  // Slots are preassigned, so the output order does not depend on scheduling.
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = evaluate_case(theorem, specs[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(reciprodick_scan_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace reciprodick
