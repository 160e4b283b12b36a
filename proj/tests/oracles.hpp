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

// Test-only reference computations. Nothing here calls into the composita or
// solver code paths it is used to check.

#include <random>
#include <vector>

#include "halfiter/rational.hpp"
#include "halfiter/series.hpp"

namespace halfiter::testing {

using Coeffs = std::vector<Rational>;  // index 0..N, [0] unused/zero

inline Coeffs to_coeffs(const Series& s) {
  Coeffs c(static_cast<std::size_t>(s.order()) + 1);
  for (int n = 1; n <= s.order(); ++n) c[n] = s[n];
  return c;
}

inline Series to_series(const Coeffs& c) {
  return Series(static_cast<int>(c.size()) - 1, Coeffs(c.begin() + 1, c.end()));
}

inline Coeffs naive_product(const Coeffs& a, const Coeffs& b) {
  const std::size_t order = a.size() - 1;
  Coeffs out(a.size());
  for (std::size_t i = 0; i <= order; ++i) {
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// [x^n] f^k for all n, by k-1 plain multiplications.
inline Coeffs naive_power(const Coeffs& f, int k) {
  Coeffs p = f;
  for (int i = 1; i < k; ++i) p = naive_product(p, f);
  return p;
}

/// outer(inner(x)) = sum_i outer_i inner^i, powers built up one at a time.
inline Coeffs naive_substitute(const Coeffs& outer, const Coeffs& inner) {
  Coeffs out(outer.size());
  Coeffs power = inner;
  for (std::size_t i = 1; i < outer.size(); ++i) {
    for (std::size_t n = 0; n < out.size(); ++n) out[n] += outer[i] * power[n];
    power = naive_product(power, inner);
  }
  return out;
}

inline Coeffs naive_iterate(const Coeffs& a, int times) {
  Coeffs r = a;
  for (int i = 1; i < times; ++i) r = naive_substitute(a, r);
  return r;
}

/// Half-iterate by undetermined coefficients: with a(j) = 0, compute
/// [x^j] A(A(x)); the true a(j) enters that coefficient with weight
/// a1 + a1^j.
inline Coeffs undetermined_half_iterate(const Coeffs& f, const Rational& a1) {
  Coeffs a(f.size());
  a[1] = a1;
  for (std::size_t j = 2; j < f.size(); ++j) {
    const Rational partial = naive_iterate(a, 2)[j];
    a[j] = (f[j] - partial) / (a1 + pow(a1, static_cast<unsigned long>(j)));
  }
  return a;
}

/// A^(2^e) = F with a(1) = 1: a(j) enters [x^j] A^m with weight m.
inline Coeffs undetermined_unit_root(const Coeffs& f, int exponent) {
  const int m = 1 << exponent;
  Coeffs a(f.size());
  a[1] = 1;
  for (std::size_t j = 2; j < f.size(); ++j) {
    const Rational partial = naive_iterate(a, m)[j];
    a[j] = (f[j] - partial) / m;
  }
  return a;
}

inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Integer coefficients in [lo, hi] with f(1) = 1.
inline Series random_unit_integer_series(std::mt19937_64& rng, int order, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Rational> c(static_cast<std::size_t>(order));
  c[0] = 1;
  for (int n = 2; n <= order; ++n) c[n - 1] = dist(rng);
  return Series(order, std::move(c));
}

inline Series random_rational_series(std::mt19937_64& rng, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order));
  for (auto& v : c) v = random_rational(rng, -6, 6, 5);
  return Series(order, std::move(c));
}

/// f(1) is the square of a random positive rational.
inline Series random_square_leading_series(std::mt19937_64& rng, int order) {
  Series base = random_rational_series(rng, order);
  std::vector<Rational> c(base.coeffs().begin(), base.coeffs().end());
  Rational r = random_rational(rng, 1, 5, 4);
  c[0] = r * r;
  return Series(order, std::move(c));
}

}  // namespace halfiter::testing
