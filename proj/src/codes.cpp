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

#include "reciprodick/codes.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "reciprodick/errors.hpp"
#include "reciprodick/gfp.hpp"

namespace reciprodick {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

void require_desk_scale(u64 p, u64 m) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  if (m < 1) throw DomainError("code length must be positive");
  if (p > kMaxCodePrime || m > kMaxCodeLength) {
    throw CapacityError("x^m - 1 factorization is limited to p <= " + std::to_string(kMaxCodePrime) +
                        ", m <= " + std::to_string(kMaxCodeLength));
  }
}

bool top_down_less(const Poly& a, const Poly& b) {
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  if (ca.size() != cb.size()) return ca.size() < cb.size();
  return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
}

Poly monic_reciprocal(const Poly& a) {
  const Poly r = reciprocal(a);
  const gfp::Field field(a.ring().modulus());
  return gfp::to_poly(field, gfp::make_monic(field, gfp::from_poly(r)));
}

// Products over all exponent vectors 0 <= e_i <= bound_i of prod base_i^e_i.
std::vector<Poly> all_products(const Ring& ring, const std::vector<Poly>& bases,
                               const std::vector<unsigned>& bounds) {
  std::vector<Poly> out{Poly::constant(ring, 1)};
  for (std::size_t i = 0; i < bases.size(); ++i) {
    std::vector<Poly> next;
    next.reserve(out.size() * (bounds[i] + 1));
    for (const Poly& d : out) {
      Poly acc = d;
      next.push_back(acc);
      for (unsigned e = 1; e <= bounds[i]; ++e) {
        acc = mul(acc, bases[i]);
        next.push_back(acc);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), top_down_less);
  return out;
}

// Base-p key of a length-m word; the caller guarantees p^m fits in 128 bits.
u128 word_key(const std::vector<u64>& word, u64 p) {
  u128 key = 0;
  for (std::size_t i = word.size(); i-- > 0;) key = key * p + word[i];
  return key;
}

struct Enumeration {
  u64 count;
  std::vector<u64> generator;
};

Enumeration prepare_enumeration(const CyclicCode& code) {
  const u64 count = codeword_count(code);
  if (count > kMaxEnumeratedCodewords) {
    throw CapacityError("p^dimension = " + std::to_string(count) + " exceeds the enumeration cap");
  }
  u128 span = 1;
  for (u64 i = 0; i < code.m; ++i) {
    if (span > std::numeric_limits<u128>::max() / code.p) {
      throw CapacityError("p^m does not fit the 128-bit codeword key");
    }
    span *= code.p;
  }
  return Enumeration{count, gfp::from_poly(code.generator)};
}

// Codeword for message index t: the digits of t in base p are the message
// coefficients u_0..u_{dim-1}; the word is u * g padded to length m.
std::vector<u64> codeword(const CyclicCode& code, const std::vector<u64>& g, u64 t) {
  std::vector<u64> word(code.m, 0);
  for (u64 i = 0; i < code.dimension && t != 0; ++i, t /= code.p) {
    const u64 ui = t % code.p;
    if (ui == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) word[i + j] = (word[i + j] + ui * g[j]) % code.p;
  }
  return word;
}

}  // namespace

Poly xm_minus_1(std::uint64_t p, std::uint64_t m) {
  const Ring ring = Ring::prime_field(p);
  return sub(Poly::monomial(ring, 1, m), Poly::constant(ring, 1));
}

std::vector<IrreducibleFactor> factor_xm_minus_1(std::uint64_t p, std::uint64_t m) {
  require_desk_scale(p, m);
  const gfp::Field field(p);
  std::vector<IrreducibleFactor> out;
  for (const gfp::Factor& f : gfp::factor(field, gfp::from_poly(xm_minus_1(p, m)))) {
    out.push_back({gfp::to_poly(field, f.poly), f.multiplicity});
  }
  return out;
}

std::vector<Poly> monic_divisors(std::uint64_t p, std::uint64_t m) {
  const auto factors = factor_xm_minus_1(p, m);
  std::vector<Poly> bases;
  std::vector<unsigned> bounds;
  std::size_t total = 1;
  for (const auto& f : factors) {
    bases.push_back(f.factor);
    bounds.push_back(f.multiplicity);
    total *= f.multiplicity + 1;
    if (total > kMaxDivisors) throw CapacityError("x^m - 1 has more than 4096 monic divisors");
  }
  return all_products(Ring::prime_field(p), bases, bounds);
}

std::vector<Poly> self_reciprocal_divisors(std::uint64_t p, std::uint64_t m) {
  const auto factors = factor_xm_minus_1(p, m);
  const Ring ring = Ring::prime_field(p);
  // A self-reciprocal divisor uses each factor and its monic reciprocal with
  // equal multiplicity, so pair them up and pick one exponent per pair.
  std::vector<bool> used(factors.size(), false);
  std::vector<Poly> bases;
  std::vector<unsigned> bounds;
  std::size_t total = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Poly partner = monic_reciprocal(factors[i].factor);
    Poly base = factors[i].factor;
    if (partner != factors[i].factor) {
      bool found = false;
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        if (!used[j] && factors[j].factor == partner) {
          if (factors[j].multiplicity != factors[i].multiplicity) {
            throw InvariantViolation("reciprocal factors of x^m - 1 with unequal multiplicity");
          }
          used[j] = true;
          found = true;
          break;
        }
      }
      if (!found) throw InvariantViolation("x^m - 1 factor without its reciprocal partner");
      base = mul(base, partner);
    }
    bases.push_back(base);
    bounds.push_back(factors[i].multiplicity);
    total *= factors[i].multiplicity + 1;
    if (total > kMaxDivisors) throw CapacityError("more than 4096 self-reciprocal divisor candidates");
  }
  std::vector<Poly> out;
  for (Poly& d : all_products(ring, bases, bounds)) {
    if (is_self_reciprocal(d)) out.push_back(std::move(d));
  }
  return out;
}

bool is_self_reciprocal_up_to_unit(const Poly& a) {
  if (a.is_zero()) return false;
  if (!a.ring().is_prime_field()) throw DomainError("expected a polynomial over F_p");
  const Poly r = reciprocal(a);
  if (r.degree() != a.degree()) return false;
  // r = c a forces c = r_n / a_n.
  const gfp::Field field(a.ring().modulus());
  const u64 c = field.mul(r.leading().get_ui(), field.inv(a.leading().get_ui()));
  return scale(to_integer(c), a) == r;
}

CyclicCode build_cyclic_code(std::uint64_t p, std::uint64_t m, const Poly& generator) {
  const Ring ring = Ring::prime_field(p);
  if (m < 1) throw DomainError("code length must be positive");
  if (generator.ring() != ring) throw DomainError("generator must be a polynomial over F_" + std::to_string(p));
  if (generator.is_zero() || generator.leading() != 1) throw DomainError("generator must be monic");
  const gfp::Field field(p);
  const auto [q, r] = gfp::divmod(field, gfp::from_poly(xm_minus_1(p, m)), gfp::from_poly(generator));
  if (!r.empty()) throw DomainError(to_string(generator) + " does not divide x^" + std::to_string(m) + " - 1");
  CyclicCode code;
  code.p = p;
  code.m = m;
  code.generator = generator;
  code.dimension = m - *generator.degree();
  code.self_reciprocal = is_self_reciprocal(generator);
  code.reversible = is_self_reciprocal_up_to_unit(generator);
  return code;
}

std::uint64_t codeword_count(const CyclicCode& code) {
  u64 count = 1;
  for (u64 i = 0; i < code.dimension; ++i) {
    if (count > std::numeric_limits<u64>::max() / code.p) return std::numeric_limits<u64>::max();
    count *= code.p;
  }
  return count;
}

bool verify_reversibility_by_enumeration(const CyclicCode& code) {
  const Enumeration e = prepare_enumeration(code);
  const long count = static_cast<long>(e.count);
  std::vector<u128> keys(e.count);
  std::vector<u128> reversed(e.count);
#pragma omp parallel for schedule(static)
  for (long t = 0; t < count; ++t) {
    std::vector<u64> word = codeword(code, e.generator, static_cast<u64>(t));
    keys[static_cast<std::size_t>(t)] = word_key(word, code.p);
    std::reverse(word.begin(), word.end());
    reversed[static_cast<std::size_t>(t)] = word_key(word, code.p);
  }
  std::sort(keys.begin(), keys.end());
  bool closed = true;
#pragma omp parallel for schedule(static) reduction(&& : closed)
  for (long t = 0; t < count; ++t) {
    closed = closed && std::binary_search(keys.begin(), keys.end(), reversed[static_cast<std::size_t>(t)]);
  }
  return closed;
}

bool verify_reversibility_by_enumeration_serial(const CyclicCode& code) {
  const Enumeration e = prepare_enumeration(code);
  std::set<std::vector<u64>> words;
  for (u64 t = 0; t < e.count; ++t) words.insert(codeword(code, e.generator, t));
  for (const auto& w : words) {
    if (!words.contains(std::vector<u64>(w.rbegin(), w.rend()))) return false;
  }
  return true;
}

}  // namespace reciprodick
