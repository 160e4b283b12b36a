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

#include "halfiter/catalog.hpp"
#include "halfiter/composita.hpp"
#include "halfiter/error.hpp"

using namespace halfiter;

TEST_CASE("sin composita") {
  CHECK(sin_composita(3, 1) == Rational(-1, 6));
  CHECK(sin_composita(4, 3) == 0);
  for (int n = 1; n <= 12; ++n) CHECK(sin_composita(n, n) == 1);
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      if ((n - k) % 2 == 1) CHECK(sin_composita(n, k) == 0);
    }
  }
  CHECK_THROWS_AS(sin_composita(2, 3), Error);
  CHECK_THROWS_AS(sin_composita(2, 0), Error);
}

TEST_CASE("stirling numbers of the second kind") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(10, 4) == 34105);
  for (int n = 1; n <= 20; ++n) {
    CHECK(stirling2(n, n) == 1);
    CHECK(stirling2(n, 1) == 1);
    for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == stirling2_by_sum(n, k));
  }
  CHECK_THROWS_AS(stirling2(2, 3), Error);
  CHECK_THROWS_AS(stirling2(2, -1), Error);
}

TEST_CASE("expm1 composita") {
  // [x^3] (e^x - 1)^2 = [x^3] (e^{2x} - 2e^x + 1) = (8 - 2)/6
  CHECK(expm1_composita(3, 2) == 1);
  for (int n = 1; n <= 10; ++n) {
    CHECK(expm1_composita(n, n) == 1);
    Rational inv(1, factorial(n));
    inv.canonicalize();
    CHECK(expm1_composita(n, 1) == inv);
  }
}

TEST_CASE("catalan composita") {
  CHECK(catalan_composita(4, 1) == 5);
  CHECK(catalan_composita(3, 2) == 2);
  for (int n = 1; n <= 15; ++n) {
    CHECK(catalan_composita(n, n) == 1);
    for (int k = 1; k <= n; ++k) CHECK(is_integer(catalan_composita(n, k)));
  }
}

TEST_CASE("quadratic composita") {
  CHECK(quadratic_composita(16, 3, 2) == 32);
  CHECK(quadratic_composita(1, 4, 2) == 1);
  CHECK(quadratic_composita(Rational(-2, 7), 5, 5) == 1);
  CHECK(quadratic_composita(3, 5, 2) == 0);
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) CHECK(is_integer(quadratic_composita(-5, n, k)));
  }
}

TEST_CASE("catalog lookup") {
  CHECK(catalog_entry("sin").egf);
  CHECK(catalog_entry("expm1").egf);
  CHECK_FALSE(catalog_entry("catalan").egf);
  CHECK(catalog_entry("quadratic:32/2").name == "quadratic:16");
  for (const char* bad : {"cos", "", "quadratic:", "quadratic:x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(catalog_entry(bad), Error);
  }
  try {
    catalog_entry("tan");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownCatalog);
  }
}

TEST_CASE("catalog formulas agree with power construction and enumeration") {
  for (const char* name : {"sin", "expm1", "catalan", "quadratic:16", "quadratic:-1/3"}) {
    const CatalogEntry entry = catalog_entry(name);
    for (int order = 1; order <= 12; ++order) {
      CAPTURE(name);
      CAPTURE(order);
      const Series f = entry.reference_series(order);
      const Composita closed = entry.composita(order);
      CHECK(closed == composita_of(f));
      for (int n = 1; n <= order; ++n) {
        CHECK(entry.formula(n, 1) == entry.series(n));
        CHECK(entry.formula(n, n) == pow(entry.series(1), n));
      }
    }
    CHECK(entry.composita(12) == composita_by_compositions(entry.reference_series(12)));
  }
}
