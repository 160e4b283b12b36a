// Copyright 2026 The halfiter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace halfiter {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "num", "num/den" or "-num/den" into canonical form. Rejects a zero
/// denominator, embedded whitespace and anything that is not an integer pair.
Rational parse_rational(std::string_view text);

/// Canonical interchange string: "num" when the denominator is 1, otherwise
/// "num/den" with gcd 1 and den > 0.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);

/// Exact rational square root with positive sign, or nullopt when q is not the
/// square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

Rational pow(const Rational& base, unsigned long exponent);
Integer factorial(unsigned long n);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

}  // namespace halfiter
