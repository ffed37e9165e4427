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

#include "reciprodick/poly.hpp"

#include <algorithm>
#include <utility>

#include "reciprodick/errors.hpp"

namespace reciprodick {

namespace {

void require_same_ring(const Poly& a, const Poly& b) {
  if (a.ring() != b.ring()) {
    throw DomainError("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
  }
}

}  // namespace

Poly::Poly(Ring ring, std::vector<Integer> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
  normalize();
}

Poly::Poly(Ring ring, std::initializer_list<long> coeffs) : ring_(ring) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Poly Poly::constant(Ring ring, const Integer& c) { return Poly(ring, std::vector<Integer>{c}); }

Poly Poly::monomial(Ring ring, const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return Poly(ring, std::move(v));
}

void Poly::normalize() {
  if (ring_.is_prime_field()) {
    for (auto& c : coeffs_) c = ring_.reduce(c);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Poly add(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  std::vector<Integer> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) out[i] += b.coeffs()[i];
  return Poly(a.ring(), std::move(out));
}

Poly sub(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  std::vector<Integer> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) out[i] -= b.coeffs()[i];
  return Poly(a.ring(), std::move(out));
}

Poly mul(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring());
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  std::vector<Integer> out(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
    }
  }
  return Poly(a.ring(), std::move(out));
}

Poly scale(const Integer& c, const Poly& a) {
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : out) v *= c;
  return Poly(a.ring(), std::move(out));
}

Integer evaluate(const Poly& a, const Integer& v) {
  Integer acc = 0;
  const auto c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * v + c[i];
    if (a.ring().is_prime_field()) acc = a.ring().reduce(acc);
  }
  return a.ring().reduce(acc);
}

Poly compose_linear(const Poly& a, const Integer& c0, const Integer& c1) {
  // Horner in the polynomial ring: ((a_n) * L + a_{n-1}) * L + ...
  const Poly lin(a.ring(), std::vector<Integer>{c0, c1});
  Poly acc(a.ring());
  const auto c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = add(mul(acc, lin), Poly::constant(a.ring(), c[i]));
  }
  return acc;
}

Poly reciprocal(const Poly& a) {
  if (a.is_zero()) throw DomainError("reciprocal of the zero polynomial");
  std::vector<Integer> rev(a.coeffs().rbegin(), a.coeffs().rend());
  return Poly(a.ring(), std::move(rev));
}

bool is_self_reciprocal(const Poly& a) {
  if (a.is_zero()) return false;
  const auto c = a.coeffs();
  for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j) {
    if (c[i] != c[j]) return false;
  }
  return true;
}

Poly reduce_mod_p(const Poly& a, std::uint64_t p) {
  const Ring fp = Ring::prime_field(p);
  if (!a.ring().is_integers()) {
    throw DomainError("reduce_mod_p expects an integer polynomial, got one over " + a.ring().name());
  }
  return Poly(fp, std::vector<Integer>(a.coeffs().begin(), a.coeffs().end()));
}

std::string to_string(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  const auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Integer mag = abs(c[i]);
    if (out.empty()) {
      if (c[i] < 0) out += "-";
    } else {
      out += c[i] < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace reciprodick
