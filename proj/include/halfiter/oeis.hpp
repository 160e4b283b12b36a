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

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "halfiter/rational.hpp"
#include "halfiter/series.hpp"
#include "halfiter/verify.hpp"

namespace halfiter {

struct CachedSequence {
  std::string id;
  /// Index of the first term as listed in the b-file.
  long offset = 1;
  std::vector<Integer> terms;
  std::chrono::system_clock::time_point fetched_at;
  /// URL for a live fetch, cache file path when served from cache.
  std::string source;
};

/// "A" followed by exactly six digits.
bool is_valid_oeis_id(std::string_view id);

/// Parses b-file text: "index term" lines, '#' comments, blank lines.
/// Indices must be consecutive.
CachedSequence parse_bfile(std::string_view id, std::string_view text);

inline constexpr const char* kCacheDirEnv = "HALFITER_CACHE_DIR";

struct OeisClientOptions {
  std::filesystem::path cache_dir;
  std::string base_url = "https://oeis.org";
  bool offline = false;
  std::chrono::seconds ttl = std::chrono::hours(24 * 30);
  std::chrono::seconds timeout = std::chrono::seconds(15);

  /// Cache dir from HALFITER_CACHE_DIR, else $XDG_CACHE_HOME/halfiter/oeis,
  /// else ~/.cache/halfiter/oeis.
  static std::filesystem::path default_cache_dir();
};

class OeisClient {
 public:
  explicit OeisClient(OeisClientOptions options);

  /// Serves a fresh cache entry, else fetches the b-file and caches it. On
  /// network failure falls back to any cached copy, stale or not.
  CachedSequence fetch_sequence(std::string_view id) const;

  std::optional<CachedSequence> read_cache(std::string_view id) const;
  /// Atomic: writes a temp file then renames it over the entry.
  void write_cache(const CachedSequence& seq) const;
  std::filesystem::path cache_path(std::string_view id) const;

  const OeisClientOptions& options() const noexcept { return options_; }

 private:
  std::string download(std::string_view id) const;

  OeisClientOptions options_;
};

/// Compares encoded coefficients of `a` position by position with the
/// sequence terms, over min(#terms, #selected coefficients) entries. Throws
/// kConventionMismatch when an encoded value is not an integer.
VerificationReport compare_with_sequence(const Series& a, const CachedSequence& seq,
                                         Convention convention,
                                         TermSelection terms = TermSelection::kAll);

}  // namespace halfiter
