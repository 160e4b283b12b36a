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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "halfiter/rational.hpp"
#include "halfiter/series.hpp"

namespace halfiter {

/// outer(inner(x)) truncated at the common order, by Horner evaluation on
/// truncated polynomials. Does not touch any composita code.
Series substitute(const Series& outer, const Series& inner);

/// `a` composed with itself `times` times.
Series self_compose(const Series& a, int times);

struct OrderComparison {
  int n = 0;
  Rational expected;
  Rational actual;
  bool match = false;
};

struct VerificationReport {
  std::string equation;
  int order = 0;
  std::vector<OrderComparison> per_order;
  /// Set when the case could not be evaluated at all.
  std::optional<std::string> error;

  /// True iff there is no error and every entry matches.
  bool pass() const;
  std::optional<OrderComparison> first_mismatch() const;
};

/// Checks self_compose(a, iterations) == f order by order.
VerificationReport verify_solution(const Series& a, const Series& f, int iterations);

/// How a solution coefficient a(n) is encoded in a reference sequence.
enum class Convention {
  kOrdinary,        // a(n)
  kEgf,             // n! a(n)
  kNumerator,       // numerator of a(n)
  kDenominator,     // denominator of a(n)
  kEgfNumerator,    // numerator of n! a(n)
  kEgfDenominator,  // denominator of n! a(n)
};

enum class TermSelection { kAll, kOdd };

Convention parse_convention(std::string_view text);
std::string_view to_string(Convention c);
TermSelection parse_term_selection(std::string_view text);
std::string_view to_string(TermSelection t);

struct EncodedTerm {
  int n = 0;
  Rational value;
};

/// Encodes the selected coefficients of `a` under `convention`.
std::vector<EncodedTerm> encode_terms(const Series& a, Convention convention,
                                      TermSelection terms = TermSelection::kAll);

/// Plain-text table of a report.
std::string format_table(const VerificationReport& report);

}  // namespace halfiter
