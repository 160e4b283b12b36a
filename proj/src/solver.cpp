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

#include "halfiter/solver.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "halfiter/error.hpp"

namespace halfiter {

namespace {

std::string cell(int n, int k) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

// Shared recurrence. `divisor(n, k)` returns r^n + r^k.
template <typename Divisor>
Composita solve_half_iterate(const Composita& f_comp, const Rational& root, Divisor&& divisor) {
  const int order = f_comp.order();
  std::vector<Rational> a(Composita::entry_count(order));
  const auto f = f_comp.entries();
  auto at = [&a](int n, int k) -> Rational& { return a[Composita::index(n, k)]; };

  Rational diagonal(1);
  for (int n = 1; n <= order; ++n) {
    diagonal *= root;
    at(n, n) = diagonal;
    for (int k = n - 1; k >= 1; --k) {
      Rational rhs = f[Composita::index(n, k)];
      for (int m = k + 1; m <= n - 1; ++m) {
        const Rational& left = at(n, m);
        if (sgn(left) == 0) continue;
        rhs -= left * at(m, k);
      }
      rhs /= divisor(n, k);
      at(n, k) = std::move(rhs);
    }
  }
  return Composita(order, std::move(a));
}

}  // namespace

SqrtConfig SqrtConfig::for_leading(const Rational& leading, int order) {
  if (sgn(leading) == 0) {
    throw Error(ErrorCode::kZeroLeading, "f(1) = 0: the half-iterate recurrence needs f(1) != 0");
  }
  const auto root = exact_sqrt(leading);
  if (!root) {
    throw Error(ErrorCode::kNonSquareLeading,
                "f(1) = " + to_string(leading) + " has no rational square root");
  }
  return SqrtConfig(*root, leading, order);
}

SqrtConfig::SqrtConfig(Rational root, const Rational& leading, int order)
    : root_(std::move(root)), order_(order) {
  if (sgn(root_) <= 0) {
    throw Error(ErrorCode::kNegativeBranch,
                "a(1) = " + to_string(root_) +
                    " rejected: only the positive root is supported, since a(1)^n + a(1)^k "
                    "vanishes for n, k of different parity on the negative branch");
  }
  if (root_ * root_ != leading) {
    throw Error(ErrorCode::kNonSquareLeading,
                to_string(root_) + " is not a square root of f(1) = " + to_string(leading));
  }
  if (order < 1) throw Error(ErrorCode::kInvalidArgument, "order must be >= 1");
}

Composita functional_sqrt(const Composita& f_comp) {
  return functional_sqrt(f_comp, SqrtConfig::for_leading(f_comp(1, 1), f_comp.order()));
}

Composita functional_sqrt(const Composita& f_comp, const SqrtConfig& config) {
  if (config.order() != f_comp.order()) {
    throw Error(ErrorCode::kOrderMismatch, "config order " + std::to_string(config.order()) +
                                               " vs composita order " +
                                               std::to_string(f_comp.order()));
  }
  const Rational& leading = f_comp(1, 1);
  if (sgn(leading) == 0) {
    throw Error(ErrorCode::kZeroLeading, "f(1) = 0: the half-iterate recurrence needs f(1) != 0");
  }
  if (config.root_of_f1() * config.root_of_f1() != leading) {
    throw Error(ErrorCode::kNonSquareLeading, "configured a(1) = " +
                                                  to_string(config.root_of_f1()) +
                                                  " does not square to f(1) = " +
                                                  to_string(leading));
  }
  const int order = f_comp.order();
  std::vector<Rational> powers(static_cast<std::size_t>(order) + 1);
  powers[0] = 1;
  for (int i = 1; i <= order; ++i) powers[i] = powers[i - 1] * config.root_of_f1();
  return solve_half_iterate(f_comp, config.root_of_f1(), [&powers](int n, int k) {
    return Rational(powers[n] + powers[k]);
  });
}

Composita functional_sqrt_unit(const Composita& f_comp) {
  if (f_comp(1, 1) != 1) {
    throw Error(ErrorCode::kLeadingNotOne,
                "expected f(1) = 1, got " + to_string(f_comp(1, 1)));
  }
  const Rational two(2);
  return solve_half_iterate(f_comp, Rational(1), [&two](int, int) -> const Rational& { return two; });
}

Composita iterated_root(const Composita& f_comp, int exponent) {
  if (exponent < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "iteration exponent must be >= 1, got " + std::to_string(exponent));
  }
  Composita current = f_comp;
  for (int step = 1; step <= exponent; ++step) {
    try {
      current = functional_sqrt(current);
    } catch (const Error& e) {
      throw Error(e.code(), "halving step " + std::to_string(step) + " of " +
                                std::to_string(exponent) + ": " + e.what());
    }
  }
  return current;
}

bool IntegralityReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.integral; });
}

std::optional<IntegralityEntry> IntegralityReport::first_failure() const {
  const auto it =
      std::find_if(entries.begin(), entries.end(), [](const auto& e) { return !e.integral; });
  if (it == entries.end()) return std::nullopt;
  return *it;
}

IntegralityReport check_4adic_integrality(const Composita& a_comp) {
  IntegralityReport report;
  report.entries.reserve(a_comp.entries().size());
  for (int n = 1; n <= a_comp.order(); ++n) {
    for (int k = 1; k <= n; ++k) {
      IntegralityEntry e;
      e.n = n;
      e.k = k;
      e.value = a_comp(n, k);
      e.scaled = pow(Rational(4), static_cast<unsigned long>(n - k)) * e.value;
      e.integral = is_integer(e.scaled);
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

Series solve_scaled_integer(const Series& f) {
  for (int n = 1; n <= f.order(); ++n) {
    if (!is_integer(f[n])) {
      throw Error(ErrorCode::kNonIntegerInput,
                  "coefficient f(" + std::to_string(n) + ") = " + to_string(f[n]) +
                      " is not an integer");
    }
  }
  if (f[1] != 1) {
    throw Error(ErrorCode::kLeadingNotOne, "expected f(1) = 1, got " + to_string(f[1]));
  }
  const Composita a = functional_sqrt_unit(scale_conjugate(composita_of(f), Rational(4)));
  for (int n = 1; n <= a.order(); ++n) {
    for (int k = 1; k <= n; ++k) {
      if (!is_integer(a(n, k))) {
        throw Error(ErrorCode::kIntegralityViolation,
                    "scaled half-iterate entry " + cell(n, k) + " = " + to_string(a(n, k)) +
                        " is not an integer");
      }
    }
  }
  return coefficients(a).with_label(f.label().empty() ? std::string{} : f.label() + " scaled root");
}

Series egf_coefficients(const Composita& a_comp) {
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(a_comp.order()));
  Integer fact(1);
  for (int n = 1; n <= a_comp.order(); ++n) {
    fact *= n;
    c.push_back(Rational(fact) * a_comp(n, 1));
  }
  return Series(a_comp.order(), std::move(c));
}

}  // namespace halfiter
