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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "halfiter/composita.hpp"
#include "halfiter/rational.hpp"
#include "halfiter/series.hpp"

namespace halfiter {

// Closed-form compositae. All throw kIndexOutOfRange unless 1 <= k <= n.

/// Composita of sin(x): (1+(-1)^(n-k))/(2^k n!) sum_{m<=k/2} C(k,m)(2m-k)^n (-1)^((n+k)/2-m).
Rational sin_composita(int n, int k);

/// Stirling numbers of the second kind by the triangle recurrence
/// S(n,k) = k S(n-1,k) + S(n-1,k-1). Valid for 0 <= k <= n.
Integer stirling2(int n, int k);

/// Same numbers from the alternating sum (1/k!) sum_j (-1)^(k-j) C(k,j) j^n.
Integer stirling2_by_sum(int n, int k);

/// Composita of e^x - 1 taken as an ordinary series: k!/n! S(n,k).
Rational expm1_composita(int n, int k);

/// Composita of the Catalan generating function (1-sqrt(1-4x))/2, the ballot
/// numbers C(2n-k-1, n-1) k/n.
Rational catalan_composita(int n, int k);

/// Composita of x + c x^2: C(k, n-k) c^(n-k).
Rational quadratic_composita(const Rational& c, int n, int k);

struct CatalogEntry {
  std::string name;
  std::function<Rational(int, int)> formula;
  std::function<Rational(int)> series;
  /// Natural coefficients carry a 1/n! factor.
  bool egf = false;

  Series reference_series(int order) const;
  Composita composita(int order) const;
};

/// Resolves "sin", "expm1", "catalan" or "quadratic:<rational>".
CatalogEntry catalog_entry(std::string_view name);

std::vector<std::string> catalog_names();

}  // namespace halfiter
