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

#include <span>
#include <string>
#include <vector>

#include "halfiter/rational.hpp"

namespace halfiter {

/// Truncated power series f(1)x + f(2)x^2 + ... + f(N)x^N. There is no
/// constant term; coefficients are addressed 1..N.
class Series {
 public:
  /// Zero series of the given order.
  explicit Series(int order);

  /// `coeffs[i]` is the coefficient of x^(i+1). Shorter vectors are padded
  /// with zeros up to `order`; longer ones are an error.
  Series(int order, std::vector<Rational> coeffs, std::string label = {});

  static Series identity(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()); }
  const Rational& operator[](int n) const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  const std::string& label() const noexcept { return label_; }

  /// Same coefficients at another truncation order (zero-extended or cut).
  Series with_order(int order) const;
  Series with_label(std::string label) const;

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
  std::string label_;
};

}  // namespace halfiter
