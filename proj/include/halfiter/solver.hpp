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
#include <vector>

#include "halfiter/composita.hpp"
#include "halfiter/rational.hpp"
#include "halfiter/series.hpp"

namespace halfiter {

/// Branch choice for a(1) = sqrt(f(1)). Only the positive rational root is
/// accepted: with a negative root a(1)^n + a(1)^k vanishes whenever n and k
/// have different parity.
class SqrtConfig {
 public:
  /// Positive root of `leading`; throws kZeroLeading or kNonSquareLeading.
  static SqrtConfig for_leading(const Rational& leading, int order);

  /// Throws kNegativeBranch for root <= 0 and kNonSquareLeading when
  /// root^2 != leading.
  SqrtConfig(Rational root, const Rational& leading, int order);

  const Rational& root_of_f1() const noexcept { return root_; }
  int order() const noexcept { return order_; }

 private:
  Rational root_;
  int order_;
};

/// Composita of the half-iterate A with A(A(x)) = F(x), from F's composita.
///
/// Row n is filled left of the diagonal from k = n-1 down to 1:
///   A(n,n) = r^n
///   A(n,k) = (F(n,k) - sum_{m=k+1}^{n-1} A(n,m) A(m,k)) / (r^n + r^k)
/// where r = a(1). Every right-hand entry is either in an earlier row or
/// further right in row n, so the fill order is sufficient.
Composita functional_sqrt(const Composita& f_comp);
Composita functional_sqrt(const Composita& f_comp, const SqrtConfig& config);

/// The f(1) = 1 case, where the divisor is the constant 2.
Composita functional_sqrt_unit(const Composita& f_comp);

/// A with A^(2^exponent) = F by repeated halving. Errors carry the failing
/// step index.
Composita iterated_root(const Composita& f_comp, int exponent);

struct IntegralityEntry {
  int n = 0;
  int k = 0;
  Rational value;
  /// 4^(n-k) * value.
  Rational scaled;
  bool integral = false;
};

struct IntegralityReport {
  std::vector<IntegralityEntry> entries;

  bool pass() const;
  std::optional<IntegralityEntry> first_failure() const;
};

/// Checks that 4^(n-k) T(n,k) is an integer for every entry.
IntegralityReport check_4adic_integrality(const Composita& a_comp);

/// For integer F with f(1) = 1, the integer-coefficient A solving
/// A(A(x)) = F(4x)/4.
Series solve_scaled_integer(const Series& f);

/// n! T(n,1), the coefficients of A read as an exponential generating function.
Series egf_coefficients(const Composita& a_comp);

}  // namespace halfiter
