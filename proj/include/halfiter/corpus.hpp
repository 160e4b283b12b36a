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

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "halfiter/rational.hpp"
#include "halfiter/series.hpp"
#include "halfiter/verify.hpp"

namespace halfiter {

/// Right-hand side F of a corpus equation. Exactly one source is set.
struct RhsSpec {
  std::optional<std::string> catalog;
  std::optional<std::string> fixture;
  std::optional<Series> series;
  /// Replace F by F(4x)/4 before solving.
  bool scaled = false;
};

/// One equation A^(2^e)(x) = F(x) with a known solution prefix.
struct CorpusCase {
  std::string id;
  std::string description;
  RhsSpec rhs;
  int iteration_exponent = 1;
  /// Truncation order; 0 means "just enough for the expected prefix".
  int order = 0;
  Convention convention = Convention::kOrdinary;
  TermSelection terms = TermSelection::kAll;
  std::vector<Rational> expected_prefix;

  int effective_order() const;
};

CorpusCase corpus_case_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CorpusCase& c);
std::vector<CorpusCase> load_corpus(const std::filesystem::path& path);

/// F at the given order from catalog, fixture (<fixture_dir>/<name>.json) or
/// inline series, with the scaled transform applied when requested.
Series resolve_rhs(const RhsSpec& rhs, const std::filesystem::path& fixture_dir, int order);

/// Solves one case and compares against its expected prefix. Throws on
/// unresolvable input.
VerificationReport run_case(const CorpusCase& c, const std::filesystem::path& fixture_dir);

/// One report per case; cases run concurrently. A case that throws yields a
/// failed report carrying the error message.
std::vector<VerificationReport> run_corpus(std::span<const CorpusCase> cases,
                                           const std::filesystem::path& fixture_dir);

}  // namespace halfiter
