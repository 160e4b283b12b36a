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

#include <doctest.h>

#include <random>

#include "halfiter/composita.hpp"
#include "halfiter/error.hpp"
#include "oracles.hpp"

using namespace halfiter;
using halfiter::testing::Coeffs;

namespace {

Series poly(int order, std::vector<Rational> c) { return Series(order, std::move(c)); }

}  // namespace

TEST_CASE("series basics") {
  const Series s = poly(3, {1, 2});
  CHECK(s.order() == 3);
  CHECK(s[3] == 0);
  CHECK_THROWS_AS(s[0], Error);
  CHECK_THROWS_AS(s[4], Error);
  CHECK_THROWS_AS(Series(0), Error);
  CHECK_THROWS_AS(Series(1, {1, 2}), Error);
  CHECK(s.with_order(5)[2] == 2);
  CHECK(s.with_order(1).order() == 1);
}

TEST_CASE("composita_of") {
  SUBCASE("identity series") {
    const Composita t = composita_of(Series::identity(3));
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= n; ++k) CHECK(t(n, k) == (n == k ? 1 : 0));
    }
    CHECK(t == Composita::identity(3));
  }
  SUBCASE("x + x^2") {
    // (x+x^2)^2 = x^2 + 2x^3 + x^4, (x+x^2)^3 = x^3 + 3x^4 + ...
    const Composita t = composita_of(poly(4, {1, 1}));
    CHECK(t(3, 2) == 2);
    CHECK(t(4, 2) == 1);
    CHECK(t(4, 3) == 3);
  }
  SUBCASE("x + 16x^2 matches C(k, n-k) 16^(n-k)") {
    const Composita t = composita_of(poly(4, {1, 16}));
    CHECK(t(3, 2) == 32);
    for (int n = 1; n <= 4; ++n) {
      for (int k = 1; k <= n; ++k) {
        CHECK(t(n, k) == Rational(binomial(k, n - k)) * pow(Rational(16), n - k));
      }
    }
  }
  SUBCASE("out of triangle access") {
    const Composita t = composita_of(poly(3, {1, 1}));
    CHECK_THROWS_AS(t(2, 3), Error);
    CHECK_THROWS_AS(t(4, 1), Error);
    CHECK_THROWS_AS(t(1, 0), Error);
  }
}

TEST_CASE("composita_by_compositions") {
  CHECK(composita_by_compositions(poly(3, {1, 1}))(3, 2) == 2);
  const Composita id = composita_by_compositions(Series::identity(5));
  for (int n = 1; n <= 5; ++n) CHECK(id(n, n) == 1);
  const Series f = poly(6, {Rational(-3, 2), 5, 0, 1});
  const Composita t = composita_by_compositions(f);
  for (int n = 1; n <= 6; ++n) CHECK(t(n, n) == pow(f[1], n));
  CHECK_THROWS_AS(composita_by_compositions(Series(17)), Error);
  try {
    composita_by_compositions(Series(17));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOrderTooLarge);
  }
  CHECK_NOTHROW(composita_by_compositions(Series(5), 5));
  CHECK_THROWS_AS(composita_by_compositions(Series(6), 5), Error);
}

TEST_CASE("compose") {
  const Composita a = composita_of(poly(4, {1, 1}));
  SUBCASE("self composition of x + x^2") {
    // (x+x^2) + (x+x^2)^2 = x + 2x^2 + 2x^3 + x^4
    const Composita r = compose(a, a);
    CHECK(r(2, 1) == 2);
    CHECK(r == composita_of(poly(4, {1, 2, 2, 1})));
  }
  SUBCASE("identity on either side") {
    CHECK(compose(a, Composita::identity(4)) == a);
    CHECK(compose(Composita::identity(4), a) == a);
  }
  SUBCASE("order mismatch") {
    try {
      compose(a, Composita::identity(3));
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kOrderMismatch);
    }
  }
}

TEST_CASE("coefficients") {
  CHECK(coefficients(composita_of(poly(5, {1, 1}))) == poly(5, {1, 1}));
  CHECK(coefficients(Composita::identity(4)) == Series::identity(4));
}

TEST_CASE("scale_conjugate") {
  const Composita t = composita_of(poly(5, {1, 1}));
  CHECK(scale_conjugate(t, 1) == t);
  const Composita s = scale_conjugate(t, 4);
  CHECK(s(2, 1) == 4);
  CHECK(s == composita_of(poly(5, {1, 4})));
  try {
    scale_conjugate(t, 0);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kZeroScale);
  }
  CHECK(scale_series(poly(3, {1, 1, 1}), 2) == poly(3, {1, 2, 4}));
}

TEST_CASE("property: power construction agrees with composition enumeration and naive powers") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 40; ++trial) {
    const int order = 1 + trial % 12;
    const Series f = halfiter::testing::random_rational_series(rng, order);
    const Composita t = composita_of(f);
    CHECK(t == composita_by_compositions(f));
    const Coeffs fc = halfiter::testing::to_coeffs(f);
    for (int k = 1; k <= order; ++k) {
      const Coeffs p = halfiter::testing::naive_power(fc, k);
      for (int n = k; n <= order; ++n) CHECK(t(n, k) == p[n]);
    }
    for (int n = 1; n <= order; ++n) {
      CHECK(t(n, n) == pow(f[1], n));
      CHECK(t(n, 1) == f[n]);
    }
  }
}

TEST_CASE("property: compose matches direct substitution") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int order = 1 + trial % 12;
    const Series f = halfiter::testing::random_rational_series(rng, order);
    const Series g = halfiter::testing::random_rational_series(rng, order);
    const Coeffs gf = halfiter::testing::naive_substitute(halfiter::testing::to_coeffs(g),
                                                          halfiter::testing::to_coeffs(f));
    CHECK(compose(composita_of(f), composita_of(g)) ==
          composita_of(halfiter::testing::to_series(gf)));
  }
}

TEST_CASE("property: scale_conjugate equals composita of F(cx)/c") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int order = 1 + trial % 10;
    const Series f = halfiter::testing::random_rational_series(rng, order);
    Rational c = halfiter::testing::random_rational(rng, 1, 7, 3);
    if (trial % 2 == 1) c = -c;
    std::vector<Rational> scaled;
    for (int n = 1; n <= order; ++n) scaled.push_back(pow(c, n - 1) * f[n]);
    CHECK(scale_conjugate(composita_of(f), c) == composita_of(Series(order, scaled)));
  }
}

TEST_CASE("property: compose is associative") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    const int order = 1 + trial % 9;
    const Composita a = composita_of(halfiter::testing::random_rational_series(rng, order));
    const Composita b = composita_of(halfiter::testing::random_rational_series(rng, order));
    const Composita c = composita_of(halfiter::testing::random_rational_series(rng, order));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}
