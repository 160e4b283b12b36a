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

#include <nlohmann/json.hpp>

#include "halfiter/composita.hpp"
#include "halfiter/series.hpp"
#include "halfiter/solver.hpp"
#include "halfiter/verify.hpp"

namespace halfiter {

// Series:    { "order": N, "coeffs": { "1": "num/den", ... } }  (absent keys are 0)
// Composita: { "order": N, "rows": [ ["T(1,1)"], ["T(2,1)", "T(2,2)"], ... ] }

nlohmann::json to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Composita& c);
Composita composita_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const IntegralityReport& r);

/// Reads a file and parses it as JSON; kIo when unreadable, kParse on bad JSON.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace halfiter
