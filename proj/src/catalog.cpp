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

#include "halfiter/catalog.hpp"

#include <string>

#include "halfiter/error.hpp"

namespace halfiter {

namespace {

void require_triangle(int n, int k, int min_k = 1) {
  if (k < min_k || k > n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "(" + std::to_string(n) + "," + std::to_string(k) + ") is outside the triangle");
  }
}

}  // namespace

Rational sin_composita(int n, int k) {
  require_triangle(n, k);
  if ((n - k) % 2 != 0) return 0;
  Integer sum;
  for (int m = 0; m <= k / 2; ++m) {
    Integer term = binomial(k, m);
    Integer base = 2 * m - k;
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
    term *= power;
    if (((n + k) / 2 - m) % 2 != 0) term = -term;
    sum += term;
  }
  // The parity factor is 2 here.
  Rational out(2 * sum, factorial(static_cast<unsigned long>(n)));
  out.canonicalize();
  out /= pow(Rational(2), static_cast<unsigned long>(k));
  return out;
}

Integer stirling2(int n, int k) {
  require_triangle(n, k, 0);
  std::vector<Integer> row(static_cast<std::size_t>(k) + 1);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

Integer stirling2_by_sum(int n, int k) {
  require_triangle(n, k, 0);
  Integer sum;
  for (int j = 0; j <= k; ++j) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
    Integer term = binomial(k, j) * power;
    if ((k - j) % 2 != 0) term = -term;
    sum += term;
  }
  Integer out;
  const Integer kf = factorial(static_cast<unsigned long>(k));
  mpz_divexact(out.get_mpz_t(), sum.get_mpz_t(), kf.get_mpz_t());
  return out;
}

Rational expm1_composita(int n, int k) {
  require_triangle(n, k);
  Rational out(factorial(static_cast<unsigned long>(k)) * stirling2(n, k),
               factorial(static_cast<unsigned long>(n)));
  out.canonicalize();
  return out;
}

Rational catalan_composita(int n, int k) {
  require_triangle(n, k);
  Rational out(binomial(2 * n - k - 1, n - 1) * k, Integer(n));
  out.canonicalize();
  return out;
}

Rational quadratic_composita(const Rational& c, int n, int k) {
  require_triangle(n, k);
  if (n - k > k) return 0;
  return Rational(binomial(k, n - k)) * pow(c, static_cast<unsigned long>(n - k));
}

Series CatalogEntry::reference_series(int order) const {
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(order));
  for (int n = 1; n <= order; ++n) c.push_back(series(n));
  return Series(order, std::move(c), name);
}

Composita CatalogEntry::composita(int order) const {
  return Composita::from_formula(order, formula);
}

CatalogEntry catalog_entry(std::string_view name) {
  if (name == "sin") {
    return {"sin", sin_composita,
            [](int n) {
              if (n % 2 == 0) return Rational(0);
              Rational c(1, factorial(static_cast<unsigned long>(n)));
              c.canonicalize();
              return ((n - 1) / 2) % 2 == 0 ? c : Rational(-c);
            },
            true};
  }
  if (name == "expm1") {
    return {"expm1", expm1_composita,
            [](int n) {
              Rational c(1, factorial(static_cast<unsigned long>(n)));
              c.canonicalize();
              return c;
            },
            true};
  }
  if (name == "catalan") {
    return {"catalan", catalan_composita,
            [](int n) {
              Rational c(binomial(2 * n - 2, n - 1), Integer(n));
              c.canonicalize();
              return c;
            },
            false};
  }
  constexpr std::string_view kQuadratic = "quadratic:";
  if (name.starts_with(kQuadratic)) {
    const Rational c = parse_rational(name.substr(kQuadratic.size()));
    return {"quadratic:" + to_string(c),
            [c](int n, int k) { return quadratic_composita(c, n, k); },
            [c](int n) {
              if (n == 1) return Rational(1);
              return n == 2 ? c : Rational(0);
            },
            false};
  }
  throw Error(ErrorCode::kUnknownCatalog, "unknown catalog entry '" + std::string(name) +
                                              "' (expected sin, expm1, catalan, quadratic:<c>)");
}

std::vector<std::string> catalog_names() { return {"sin", "expm1", "catalan", "quadratic:<c>"}; }

}  // namespace halfiter
