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

#ifndef RECIPRODICK_CLASSIFIER_HPP
#define RECIPRODICK_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reciprodick/family.hpp"
#include "reciprodick/poly.hpp"

namespace reciprodick {

/// Classification results. T* are theorems (iff statements), C* corollaries
/// and L1 the even-degree lemma for self-reciprocal irreducibles.
enum class TheoremId { T2_1, T2_3, T2_4, T2_7, T3_1, T3_4, T4_1, C3_2, C3_3, C3_5, C4_2, L1 };

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::T2_1, TheoremId::T2_3, TheoremId::T2_4, TheoremId::T2_7,
    TheoremId::T3_1, TheoremId::T3_4, TheoremId::T4_1, TheoremId::C3_2,
    TheoremId::C3_3, TheoremId::C3_5, TheoremId::C4_2, TheoremId::L1};

/// "T2_1", "C3_5", ...
std::string_view theorem_name(TheoremId id);
/// Accepts "T2_1", "t2.1", "t2_1", "T2.1".
std::optional<TheoremId> parse_theorem(std::string_view name);
bool is_corollary(TheoremId id);

/// One checked case: the theorem's prediction against the definition-based
/// observation. match == (predicted == observed).
struct Verdict {
  TheoremId theorem = TheoremId::T2_1;
  FamilySpec spec;
  bool predicted = false;
  bool observed = false;
  bool match = false;
  std::string note;
};

/// Builds the polynomial and applies is_self_reciprocal.
bool oracle_self_reciprocal(const FamilySpec& spec);

/// Empty when spec lies inside the theorem's hypotheses, otherwise a
/// description of the first violated one.
std::optional<std::string> hypothesis_violation(TheoremId theorem, const FamilySpec& spec);

/// The theorem's stated side conditions evaluated on spec. For corollaries and
/// L1 the claim is unconditional, so this returns true. Throws DomainError
/// naming the hypothesis when spec is out of range.
bool predicate(TheoremId theorem, const FamilySpec& spec);

/// Irreducibility over F_p. Throws DomainError for degree < 1 or integer
/// polynomials, CapacityError past kMaxIrreducibleDegree.
inline constexpr std::size_t kMaxIrreducibleDegree = 512;
bool is_irreducible(const Poly& a);

/// For C3_2/C3_3/C3_5/C4_2: NOT (irreducible AND self-reciprocal AND deg >= 2).
/// For L1 (any family over F_p): NOT (irreducible AND self-reciprocal AND
/// deg >= 2 AND deg odd). Throws DomainError outside the hypotheses.
bool check_corollary(TheoremId corollary, const FamilySpec& spec);

/// Observed value the scanner compares against predicate(): the
/// self-reciprocality oracle for theorems, check_corollary for the rest.
bool observe(TheoremId theorem, const FamilySpec& spec);

struct ScanRange {
  std::uint64_t n_min = 0;
  std::uint64_t n_max = 200;
  std::int64_t k_min = -5;
  std::int64_t k_max = 6;
  /// Primes for the F_p theorems; ignored by the integer ones.
  std::vector<std::uint64_t> primes{3, 5, 7, 11, 13};
};

/// Every in-hypothesis spec for the theorem inside the range, ordered by n,
/// then k, then p, then family. Out-of-hypothesis combinations are skipped.
std::vector<FamilySpec> enumerate_specs(TheoremId theorem, const ScanRange& range);

/// One Verdict per enumerated spec, in enumerate_specs order. Evaluated in
/// parallel with OpenMP.
std::vector<Verdict> scan(TheoremId theorem, const ScanRange& range);
/// Single-threaded reference for scan().
std::vector<Verdict> scan_serial(TheoremId theorem, const ScanRange& range);

Verdict evaluate_case(TheoremId theorem, const FamilySpec& spec);

}  // namespace reciprodick

#endif  // RECIPRODICK_CLASSIFIER_HPP
