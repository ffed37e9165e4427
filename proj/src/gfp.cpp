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

#include "reciprodick/gfp.hpp"

#include <algorithm>
#include <string>

#include "reciprodick/errors.hpp"

namespace reciprodick::gfp {

namespace {

using u64 = std::uint64_t;

const Coeffs kOne{1};

bool is_one(const Coeffs& a) { return a.size() == 1 && a[0] == 1; }

// Coefficients at multiples of p, i.e. the p-th root of a polynomial with
// zero derivative.
Coeffs pth_root(const Field& F, const Coeffs& a) {
  Coeffs out;
  for (std::size_t i = 0; i < a.size(); i += F.p()) out.push_back(a[i]);
  trim(out);
  return out;
}

void squarefree_into(const Field& F, const Coeffs& f, unsigned weight, std::vector<Factor>& out) {
  if (degree(f) < 1) return;
  Coeffs c = gcd(F, f, derivative(F, f));
  Coeffs w = divmod(F, f, c).first;
  unsigned i = 1;
  while (!is_one(w)) {
    Coeffs y = gcd(F, w, c);
    Coeffs z = divmod(F, w, y).first;
    if (degree(z) > 0) out.push_back({make_monic(F, z), i * weight});
    ++i;
    w = std::move(y);
    c = divmod(F, c, w).first;
  }
  if (degree(c) > 0) squarefree_into(F, pth_root(F, c), weight * static_cast<unsigned>(F.p()), out);
}

// Basis of { v : v^p = v mod f }, as coefficient vectors of length deg f.
std::vector<Coeffs> berlekamp_basis(const Field& F, const Coeffs& f) {
  const std::size_t d = static_cast<std::size_t>(degree(f));
  // Row i holds x^{ip} mod f.
  std::vector<Coeffs> rows(d, Coeffs(d, 0));
  const Coeffs xp = powmod(F, Coeffs{0, 1}, F.p(), f);
  Coeffs cur = kOne;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < cur.size(); ++j) rows[i][j] = cur[j];
    cur = mod(F, mul(F, cur, xp), f);
  }
  // A = (Q - I)^T, solve A v = 0.
  std::vector<Coeffs> A(d, Coeffs(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) A[j][i] = F.sub(rows[i][j], i == j ? 1 : 0);
  }
  std::vector<long> pivot_col_of_row;
  std::vector<bool> is_pivot(d, false);
  std::size_t r = 0;
  for (std::size_t col = 0; col < d && r < d; ++col) {
    std::size_t sel = r;
    while (sel < d && A[sel][col] == 0) ++sel;
    if (sel == d) continue;
    std::swap(A[sel], A[r]);
    const u64 inv = F.inv(A[r][col]);
    for (auto& v : A[r]) v = F.mul(v, inv);
    for (std::size_t row = 0; row < d; ++row) {
      if (row == r || A[row][col] == 0) continue;
      const u64 factor = A[row][col];
      for (std::size_t c2 = 0; c2 < d; ++c2) A[row][c2] = F.sub(A[row][c2], F.mul(factor, A[r][c2]));
    }
    pivot_col_of_row.push_back(static_cast<long>(col));
    is_pivot[col] = true;
    ++r;
  }
  std::vector<Coeffs> basis;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    Coeffs v(d, 0);
    v[free] = 1;
    for (std::size_t row = 0; row < pivot_col_of_row.size(); ++row) {
      v[static_cast<std::size_t>(pivot_col_of_row[row])] = F.sub(0, A[row][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Coeffs> berlekamp_split(const Field& F, const Coeffs& f) {
  const std::vector<Coeffs> basis = berlekamp_basis(F, f);
  const std::size_t r = basis.size();
  std::vector<Coeffs> parts{f};
  // prod_s (v - s) = v^p - v vanishes mod f, so every part u equals the
  // product of the pairwise coprime gcd(u, v - s).
  for (const Coeffs& raw : basis) {
    if (parts.size() == r) break;
    Coeffs v = raw;
    trim(v);
    if (degree(v) < 1) continue;
    std::vector<Coeffs> next;
    for (const Coeffs& u : parts) {
      if (degree(u) <= 1) {
        next.push_back(u);
        continue;
      }
      for (u64 s = 0; s < F.p(); ++s) {
        Coeffs shifted = v;
        shifted[0] = F.sub(shifted[0], s);
        trim(shifted);
        Coeffs g = gcd(F, u, shifted);
        if (degree(g) > 0) next.push_back(std::move(g));
      }
    }
    parts = std::move(next);
  }
  if (parts.size() != r) throw InvariantViolation("Berlekamp split did not reach the predicted factor count");
  return parts;
}

bool top_down_less(const Coeffs& a, const Coeffs& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

Field::Field(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  if (p > kMaxModulus) throw CapacityError("word-size kernels need p < 2^32");
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero in F_p");
  u64 result = 1;
  u64 base = a % p_;
  u64 e = p_ - 2;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long degree(const Coeffs& a) { return static_cast<long>(a.size()) - 1; }

Coeffs add(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(out);
  return out;
}

Coeffs sub(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(out);
  return out;
}

Coeffs mul(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

std::pair<Coeffs, Coeffs> divmod(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  Coeffs r = a;
  trim(r);
  if (r.size() < b.size()) return {Coeffs{}, r};
  Coeffs q(r.size() - b.size() + 1, 0);
  const u64 lead_inv = F.inv(b.back());
  for (std::size_t i = r.size(); i-- >= b.size();) {
    const u64 c = F.mul(r[i], lead_inv);
    if (c == 0) continue;
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

Coeffs mod(const Field& F, const Coeffs& a, const Coeffs& b) { return divmod(F, a, b).second; }

Coeffs make_monic(const Field& F, Coeffs a) {
  trim(a);
  if (a.empty()) return a;
  const u64 inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

Coeffs gcd(const Field& F, Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, std::move(a));
}

Coeffs derivative(const Field& F, const Coeffs& a) {
  if (a.size() <= 1) return {};
  Coeffs out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = F.mul(a[i], i % F.p());
  trim(out);
  return out;
}

Coeffs powmod(const Field& F, Coeffs base, std::uint64_t e, const Coeffs& m) {
  Coeffs result = mod(F, kOne, m);
  base = mod(F, base, m);
  while (e != 0) {
    if (e & 1U) result = mod(F, mul(F, result, base), m);
    base = mod(F, mul(F, base, base), m);
    e >>= 1U;
  }
  return result;
}

bool is_irreducible(const Field& F, const Coeffs& f_in) {
  Coeffs f = make_monic(F, f_in);
  const long d = degree(f);
  if (d < 1) throw DomainError("irreducibility needs degree >= 1");
  const Coeffs x{0, 1};
  Coeffs h = mod(F, x, f);
  for (long i = 1; 2 * i <= d; ++i) {
    h = powmod(F, h, F.p(), f);
    if (degree(gcd(F, f, sub(F, h, x))) > 0) return false;
  }
  return true;
}

std::size_t berlekamp_rank_deficit(const Field& F, const Coeffs& f) {
  return berlekamp_basis(F, make_monic(F, f)).size();
}

std::vector<Factor> factor(const Field& F, const Coeffs& f_in) {
  Coeffs f = make_monic(F, f_in);
  if (f.empty()) throw DomainError("cannot factor the zero polynomial");
  std::vector<Factor> squarefree;
  squarefree_into(F, f, 1, squarefree);
  std::vector<Factor> out;
  for (const Factor& part : squarefree) {
    for (Coeffs& irr : berlekamp_split(F, part.poly)) {
      out.push_back({make_monic(F, std::move(irr)), part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Factor& a, const Factor& b) { return top_down_less(a.poly, b.poly); });
  // Distinct squarefree parts are coprime, so no factor repeats.
  return out;
}

Coeffs from_poly(const Poly& a) {
  if (!a.ring().is_prime_field()) throw DomainError("expected a polynomial over F_p");
  Coeffs out;
  out.reserve(a.coeffs().size());
  for (const Integer& c : a.coeffs()) out.push_back(c.get_ui());
  return out;
}

Poly to_poly(const Field& F, const Coeffs& a) {
  std::vector<Integer> c;
  c.reserve(a.size());
  for (u64 v : a) c.push_back(to_integer(v));
  return Poly(Ring::prime_field(F.p()), std::move(c));
}

}  // namespace reciprodick::gfp
