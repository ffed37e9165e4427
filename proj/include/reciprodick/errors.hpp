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

#ifndef RECIPRODICK_ERRORS_HPP
#define RECIPRODICK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reciprodick {

/// Input outside an operation's mathematical domain (ring mismatch, non-prime
/// modulus, violated theorem hypothesis, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input within the domain but beyond the sizes the algorithms are built for.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An internal invariant failed. Never expected to fire.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace reciprodick

#endif  // RECIPRODICK_ERRORS_HPP
