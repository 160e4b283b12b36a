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

#include "halfiter/rational.hpp"

#include <cctype>

#include "halfiter/error.hpp"

namespace halfiter {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kOrderMismatch: return "order-mismatch";
    case ErrorCode::kOrderTooLarge: return "order-too-large";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kZeroScale: return "zero-scale";
    case ErrorCode::kZeroLeading: return "zero-f1";
    case ErrorCode::kNonSquareLeading: return "non-square-f1";
    case ErrorCode::kNegativeBranch: return "negative-branch";
    case ErrorCode::kLeadingNotOne: return "f1-not-one";
    case ErrorCode::kNonIntegerInput: return "non-integer-input";
    case ErrorCode::kIntegralityViolation: return "integrality-violation";
    case ErrorCode::kUnknownCatalog: return "unknown-catalog-name";
    case ErrorCode::kFixtureMissing: return "fixture-missing";
    case ErrorCode::kInvalidId: return "invalid-id";
    case ErrorCode::kNetwork: return "network-failure";
    case ErrorCode::kUnknownId: return "unknown-id";
    case ErrorCode::kConventionMismatch: return "convention-mismatch";
    case ErrorCode::kIo: return "io-error";
  }
  return "unknown";
}

namespace {

bool is_signed_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_signed_integer(num, true) ||
      (slash != std::string_view::npos && !is_signed_integer(den, false))) {
    throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
  }
  Rational q;
  q.get_num() = Integer(strip_plus(num));
  q.get_den() = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den));
  if (q.get_den() == 0) {
    throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Rational root;
  root.get_num() = sqrt(num);
  root.get_den() = sqrt(den);
  root.canonicalize();
  return root;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace halfiter
