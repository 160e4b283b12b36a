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

#include "halfiter/series.hpp"

#include <utility>

#include "halfiter/error.hpp"

namespace halfiter {

namespace {

void require_order(int order) {
  if (order < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "truncation order must be >= 1, got " + std::to_string(order));
  }
}

}  // namespace

Series::Series(int order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order));
}

Series::Series(int order, std::vector<Rational> coeffs, std::string label)
    : coeffs_(std::move(coeffs)), label_(std::move(label)) {
  require_order(order);
  if (coeffs_.size() > static_cast<std::size_t>(order)) {
    throw Error(ErrorCode::kOrderMismatch, std::to_string(coeffs_.size()) +
                                               " coefficients exceed order " +
                                               std::to_string(order));
  }
  coeffs_.resize(static_cast<std::size_t>(order));
  for (auto& c : coeffs_) c.canonicalize();
}

Series Series::identity(int order) { return Series(order, {Rational(1)}, "x"); }

const Rational& Series::operator[](int n) const {
  if (n < 1 || n > order()) {
    throw Error(ErrorCode::kIndexOutOfRange, "coefficient index " + std::to_string(n) +
                                                 " outside 1.." + std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(n - 1)];
}

Series Series::with_order(int order) const {
  require_order(order);
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + std::min<std::ptrdiff_t>(order, this->order()));
  return Series(order, std::move(c), label_);
}

Series Series::with_label(std::string label) const {
  Series out = *this;
  out.label_ = std::move(label);
  return out;
}

}  // namespace halfiter
