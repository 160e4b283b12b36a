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

#include "halfiter/composita.hpp"

#include <cstdint>
#include <string>
#include <utility>

#include "halfiter/error.hpp"

namespace halfiter {

namespace {

std::string cell(int n, int k) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

void require_same_order(int a, int b) {
  if (a != b) {
    throw Error(ErrorCode::kOrderMismatch,
                "order mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Composita::Composita(int order) : order_(order) {
  if (order < 1) {
    throw Error(ErrorCode::kInvalidArgument, "composita order must be >= 1");
  }
  entries_.resize(entry_count(order));
}

Composita::Composita(int order, std::vector<Rational> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order < 1) {
    throw Error(ErrorCode::kInvalidArgument, "composita order must be >= 1");
  }
  if (entries_.size() != entry_count(order)) {
    throw Error(ErrorCode::kOrderMismatch,
                "triangle of order " + std::to_string(order) + " needs " +
                    std::to_string(entry_count(order)) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  for (auto& e : entries_) e.canonicalize();
}

Composita Composita::identity(int order) {
  return from_formula(order, [](int n, int k) { return Rational(n == k ? 1 : 0); });
}

const Rational& Composita::operator()(int n, int k) const {
  if (k < 1 || k > n || n > order_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "entry " + cell(n, k) + " outside triangle of order " + std::to_string(order_));
  }
  return entries_[index(n, k)];
}

std::span<const Rational> Composita::row(int n) const {
  if (n < 1 || n > order_) {
    throw Error(ErrorCode::kIndexOutOfRange, "row " + std::to_string(n) + " outside 1.." +
                                                 std::to_string(order_));
  }
  return std::span<const Rational>(entries_).subspan(index(n, 1), static_cast<std::size_t>(n));
}

Composita composita_of(const Series& f) {
  const int order = f.order();
  std::vector<Rational> entries(Composita::entry_count(order));
  // power[n] = [x^n] f^k for the current k; entries below x^k are zero.
  std::vector<Rational> power(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) power[n] = f[n];

  for (int k = 1; k <= order; ++k) {
    for (int n = k; n <= order; ++n) entries[Composita::index(n, k)] = power[n];
    if (k == order) break;
    std::vector<Rational> next(power.size());
    for (int n = k + 1; n <= order; ++n) {
      Rational acc;
      for (int j = 1; j <= n - k; ++j) {
        if (sgn(power[n - j]) == 0) continue;
        acc += f[j] * power[n - j];
      }
      next[n] = acc;
    }
    power = std::move(next);
  }
  return Composita(order, std::move(entries));
}

Composita composita_by_compositions(const Series& f, int max_order) {
  const int order = f.order();
  if (order > max_order || order > 63) {
    throw Error(ErrorCode::kOrderTooLarge,
                "composition enumeration refused for order " + std::to_string(order) +
                    " (bound " + std::to_string(max_order) + ")");
  }
  std::vector<Rational> entries(Composita::entry_count(order));
  for (int n = 1; n <= order; ++n) {
    // Bit i of `cuts` set means a part ends after position i+1; every
    // composition of n corresponds to exactly one subset of the n-1 gaps.
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t cuts = 0; cuts < count; ++cuts) {
      Rational product(1);
      int parts = 0;
      int start = 0;
      for (int pos = 1; pos <= n; ++pos) {
        const bool ends = pos == n || ((cuts >> (pos - 1)) & 1U) != 0;
        if (!ends) continue;
        product *= f[pos - start];
        ++parts;
        start = pos;
        if (sgn(product) == 0) break;
      }
      if (sgn(product) == 0) continue;
      entries[Composita::index(n, parts)] += product;
    }
  }
  return Composita(order, std::move(entries));
}

Composita compose(const Composita& inner, const Composita& outer) {
  require_same_order(inner.order(), outer.order());
  const int order = inner.order();
  const auto a = inner.entries();
  const auto g = outer.entries();
  std::vector<Rational> entries(Composita::entry_count(order));
  for (int n = 1; n <= order; ++n) {
    for (int k = 1; k <= n; ++k) {
      Rational acc;
      for (int m = k; m <= n; ++m) {
        const Rational& lhs = a[Composita::index(n, m)];
        if (sgn(lhs) == 0) continue;
        acc += lhs * g[Composita::index(m, k)];
      }
      entries[Composita::index(n, k)] = std::move(acc);
    }
  }
  return Composita(order, std::move(entries));
}

Series coefficients(const Composita& a) {
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(a.order()));
  for (int n = 1; n <= a.order(); ++n) c.push_back(a(n, 1));
  return Series(a.order(), std::move(c));
}

Composita scale_conjugate(const Composita& table, const Rational& scale) {
  if (sgn(scale) == 0) throw Error(ErrorCode::kZeroScale, "scale factor must be nonzero");
  const int order = table.order();
  std::vector<Rational> powers(static_cast<std::size_t>(order));
  powers[0] = 1;
  for (int d = 1; d < order; ++d) powers[d] = powers[d - 1] * scale;
  return Composita::from_formula(
      order, [&](int n, int k) { return Rational(powers[n - k] * table(n, k)); });
}

Series scale_series(const Series& f, const Rational& scale) {
  if (sgn(scale) == 0) throw Error(ErrorCode::kZeroScale, "scale factor must be nonzero");
  std::vector<Rational> c(static_cast<std::size_t>(f.order()));
  Rational factor(1);
  for (int n = 1; n <= f.order(); ++n) {
    c[n - 1] = factor * f[n];
    factor *= scale;
  }
  return Series(f.order(), std::move(c), f.label());
}

}  // namespace halfiter
