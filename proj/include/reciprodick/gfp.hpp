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

#ifndef RECIPRODICK_GFP_HPP
#define RECIPRODICK_GFP_HPP

// Machine-word polynomial kernels over F_p for p < 2^32: the fast path behind
// irreducibility testing and factorization. Coefficient vectors are ascending
// and trimmed like Poly.

#include <cstdint>
#include <utility>
#include <vector>

#include "reciprodick/poly.hpp"

namespace reciprodick::gfp {

using Coeffs = std::vector<std::uint64_t>;

/// Largest modulus the kernels accept.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 32) - 1;

class Field {
 public:
  /// Throws DomainError for non-primes, CapacityError above kMaxModulus.
  explicit Field(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t p_;
};

void trim(Coeffs& a);
/// -1 for the zero polynomial.
long degree(const Coeffs& a);

Coeffs add(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs sub(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs mul(const Field& F, const Coeffs& a, const Coeffs& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Coeffs, Coeffs> divmod(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs mod(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs make_monic(const Field& F, Coeffs a);
/// Monic gcd; zero only when both inputs are zero.
Coeffs gcd(const Field& F, Coeffs a, Coeffs b);
Coeffs derivative(const Field& F, const Coeffs& a);
/// base^e mod m.
Coeffs powmod(const Field& F, Coeffs base, std::uint64_t e, const Coeffs& m);

/// Ben-Or test: deg f >= 1 and gcd(f, x^{p^i} - x) = 1 for 1 <= i <= deg/2.
bool is_irreducible(const Field& F, const Coeffs& f);

struct Factor {
  Coeffs poly;  // monic irreducible
  unsigned multiplicity = 1;
};

/// Complete factorization of a nonzero polynomial into monic irreducibles
/// (squarefree decomposition followed by Berlekamp splitting). The leading
/// coefficient is dropped. Sorted by degree, then by coefficients from the top
/// down.
std::vector<Factor> factor(const Field& F, const Coeffs& f);

/// Number of irreducible factors of a squarefree monic f (Berlekamp nullity).
std::size_t berlekamp_rank_deficit(const Field& F, const Coeffs& f);

Coeffs from_poly(const Poly& a);
Poly to_poly(const Field& F, const Coeffs& a);

}  // namespace reciprodick::gfp

#endif  // RECIPRODICK_GFP_HPP
