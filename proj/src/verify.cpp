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

#include "halfiter/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "halfiter/error.hpp"

namespace halfiter {

namespace {

// Dense polynomial c[0..order], product truncated at x^order.
using Poly = std::vector<Rational>;

Poly multiply(const Poly& a, const Poly& b, int order) {
  Poly out(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (sgn(b[j]) == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly to_poly(const Series& s) {
  Poly p(static_cast<std::size_t>(s.order()) + 1);
  for (int n = 1; n <= s.order(); ++n) p[n] = s[n];
  return p;
}

}  // namespace

Series substitute(const Series& outer, const Series& inner) {
  if (outer.order() != inner.order()) {
    throw Error(ErrorCode::kOrderMismatch, "cannot substitute series of order " +
                                               std::to_string(inner.order()) + " into order " +
                                               std::to_string(outer.order()));
  }
  const int order = outer.order();
  const Poly b = to_poly(inner);
  // outer(b) = b * (a1 + b * (a2 + ... + b * aN))
  Poly acc(static_cast<std::size_t>(order) + 1);
  acc[0] = outer[order];
  for (int i = order - 1; i >= 1; --i) {
    acc = multiply(acc, b, order);
    acc[0] += outer[i];
  }
  acc = multiply(acc, b, order);
  return Series(order, std::vector<Rational>(acc.begin() + 1, acc.end()));
}

Series self_compose(const Series& a, int times) {
  if (times < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "self_compose needs times >= 1, got " + std::to_string(times));
  }
  Series result = a;
  for (int i = 1; i < times; ++i) result = substitute(a, result);
  return result.with_label(a.label());
}

bool VerificationReport::pass() const {
  return !error && std::all_of(per_order.begin(), per_order.end(),
                               [](const OrderComparison& c) { return c.match; });
}

std::optional<OrderComparison> VerificationReport::first_mismatch() const {
  for (const auto& c : per_order) {
    if (!c.match) return c;
  }
  return std::nullopt;
}

VerificationReport verify_solution(const Series& a, const Series& f, int iterations) {
  if (a.order() != f.order()) {
    throw Error(ErrorCode::kOrderMismatch, "candidate order " + std::to_string(a.order()) +
                                               " vs target order " + std::to_string(f.order()));
  }
  const Series composed = self_compose(a, iterations);
  VerificationReport report;
  report.equation = "A^" + std::to_string(iterations) + "(x) = " +
                    (f.label().empty() ? std::string("F(x)") : f.label());
  report.order = f.order();
  for (int n = 1; n <= f.order(); ++n) {
    report.per_order.push_back({n, f[n], composed[n], f[n] == composed[n]});
  }
  return report;
}

Convention parse_convention(std::string_view text) {
  if (text == "ordinary") return Convention::kOrdinary;
  if (text == "egf") return Convention::kEgf;
  if (text == "numerator") return Convention::kNumerator;
  if (text == "denominator") return Convention::kDenominator;
  if (text == "egf_numerator") return Convention::kEgfNumerator;
  if (text == "egf_denominator") return Convention::kEgfDenominator;
  throw Error(ErrorCode::kParse, "unknown coefficient convention '" + std::string(text) + "'");
}

std::string_view to_string(Convention c) {
  switch (c) {
    case Convention::kOrdinary: return "ordinary";
    case Convention::kEgf: return "egf";
    case Convention::kNumerator: return "numerator";
    case Convention::kDenominator: return "denominator";
    case Convention::kEgfNumerator: return "egf_numerator";
    case Convention::kEgfDenominator: return "egf_denominator";
  }
  return "ordinary";
}

TermSelection parse_term_selection(std::string_view text) {
  if (text == "all") return TermSelection::kAll;
  if (text == "odd") return TermSelection::kOdd;
  throw Error(ErrorCode::kParse, "unknown term selection '" + std::string(text) + "'");
}

std::string_view to_string(TermSelection t) { return t == TermSelection::kOdd ? "odd" : "all"; }

std::vector<EncodedTerm> encode_terms(const Series& a, Convention convention,
                                      TermSelection terms) {
  std::vector<EncodedTerm> out;
  Integer fact(1);
  for (int n = 1; n <= a.order(); ++n) {
    fact *= n;
    if (terms == TermSelection::kOdd && n % 2 == 0) continue;
    Rational v = a[n];
    if (convention == Convention::kEgf || convention == Convention::kEgfNumerator ||
        convention == Convention::kEgfDenominator) {
      v *= fact;
    }
    if (convention == Convention::kNumerator || convention == Convention::kEgfNumerator) {
      v = Rational(v.get_num());
    } else if (convention == Convention::kDenominator ||
               convention == Convention::kEgfDenominator) {
      v = Rational(v.get_den());
    }
    out.push_back({n, std::move(v)});
  }
  return out;
}

std::string format_table(const VerificationReport& report) {
  std::ostringstream os;
  os << report.equation << "  [order " << report.order << "]  "
     << (report.pass() ? "PASS" : "FAIL") << '\n';
  if (report.error) {
    os << "  error: " << *report.error << '\n';
    return os.str();
  }
  os << std::setw(5) << "n" << "  " << std::setw(24) << "expected" << "  " << std::setw(24)
     << "actual" << "  match\n";
  for (const auto& c : report.per_order) {
    os << std::setw(5) << c.n << "  " << std::setw(24) << to_string(c.expected) << "  "
       << std::setw(24) << to_string(c.actual) << "  " << (c.match ? "yes" : "NO") << '\n';
  }
  return os.str();
}

}  // namespace halfiter
