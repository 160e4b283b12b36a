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

#include <cstddef>
#include <span>
#include <vector>

#include "halfiter/rational.hpp"
#include "halfiter/series.hpp"

namespace halfiter {

/// Lower-triangular table T(n, k), 1 <= k <= n <= N, where T(n, k) is the
/// coefficient of x^n in f(x)^k. Stored densely, row by row.
class Composita {
 public:
  explicit Composita(int order);
  /// `entries` is the flat row-major triangle, see `index`.
  Composita(int order, std::vector<Rational> entries);

  static Composita identity(int order);

  template <typename Formula>
  static Composita from_formula(int order, Formula&& formula) {
    std::vector<Rational> entries(entry_count(order));
    for (int n = 1; n <= order; ++n) {
      for (int k = 1; k <= n; ++k) entries[index(n, k)] = formula(n, k);
    }
    return Composita(order, std::move(entries));
  }

  static constexpr std::size_t index(int n, int k) noexcept {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 +
           static_cast<std::size_t>(k - 1);
  }
  static constexpr std::size_t entry_count(int order) noexcept {
    return static_cast<std::size_t>(order) * static_cast<std::size_t>(order + 1) / 2;
  }

  int order() const noexcept { return order_; }

  /// Bounds-checked access; throws kIndexOutOfRange outside the triangle.
  const Rational& operator()(int n, int k) const;
  std::span<const Rational> row(int n) const;
  std::span<const Rational> entries() const noexcept { return entries_; }

  friend bool operator==(const Composita& a, const Composita& b) {
    return a.order_ == b.order_ && a.entries_ == b.entries_;
  }

 private:
  int order_;
  std::vector<Rational> entries_;
};

/// Coefficients of the powers f^k, built row by row with one truncated
/// convolution per power.
Composita composita_of(const Series& f);

inline constexpr int kDefaultEnumerationBound = 16;

/// Sums f(l1)...f(lk) over every composition of n into k parts. Exponential;
/// refuses orders above `max_order`.
Composita composita_by_compositions(const Series& f, int max_order = kDefaultEnumerationBound);

/// Composita of G(A(x)) from the compositae of the inner A and outer G:
/// R(n,k) = sum_{m=k..n} A(n,m) G(m,k).
Composita compose(const Composita& inner, const Composita& outer);

/// First column, i.e. the series the table was built from.
Series coefficients(const Composita& a);

/// Composita of F(cx)/c, i.e. c^(n-k) T(n,k).
Composita scale_conjugate(const Composita& table, const Rational& scale);

/// Series with coefficients c^(n-1) f(n), i.e. F(cx)/c.
Series scale_series(const Series& f, const Rational& scale);

}  // namespace halfiter
