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

#ifndef RECIPRODICK_POLY_HPP
#define RECIPRODICK_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reciprodick/ring.hpp"

namespace reciprodick {

/// Dense univariate polynomial over a Ring. Index i of coeffs() holds the
/// coefficient of x^i. The vector is always trimmed (no trailing zeros), so the
/// zero polynomial is the empty vector. Over F_p every coefficient lies in
/// [0, p-1].
class Poly {
 public:
  /// Zero polynomial over `ring`.
  explicit Poly(Ring ring = Ring::integers()) : ring_(ring) {}
  /// Reduces every coefficient into `ring` and trims.
  Poly(Ring ring, std::vector<Integer> coeffs);
  Poly(Ring ring, std::initializer_list<long> coeffs);

  static Poly constant(Ring ring, const Integer& c);
  /// c * x^degree.
  static Poly monomial(Ring ring, const Integer& c, std::size_t degree);

  const Ring& ring() const { return ring_; }
  std::span<const Integer> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Empty for the zero polynomial.
  std::optional<std::size_t> degree() const;
  /// Coefficient of x^i; zero beyond the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const { return coeffs_.back(); }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  Ring ring_;
  std::vector<Integer> coeffs_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Integer& c, const Poly& a);

inline Poly operator+(const Poly& a, const Poly& b) { return add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return sub(a, b); }
inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

/// Horner evaluation; the result is reduced into a.ring().
Integer evaluate(const Poly& a, const Integer& v);

/// a(c0 + c1 x), expanded.
Poly compose_linear(const Poly& a, const Integer& c0, const Integer& c1);

/// Coefficient reversal at the actual degree: x^deg(a) * a(1/x), trimmed.
/// Throws DomainError for the zero polynomial.
Poly reciprocal(const Poly& a);

/// a nonzero and a_i = a_{n-i} for all 0 <= i <= n = deg(a). Nonzero constants
/// qualify; the zero polynomial does not.
bool is_self_reciprocal(const Poly& a);

/// Coefficientwise reduction of an integer polynomial into F_p.
Poly reduce_mod_p(const Poly& a, std::uint64_t p);

/// Human-readable form such as "2 + 12x + 2x^2".
std::string to_string(const Poly& a);

}  // namespace reciprodick

#endif  // RECIPRODICK_POLY_HPP
