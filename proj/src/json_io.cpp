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

#include "halfiter/json_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "halfiter/error.hpp"

namespace halfiter {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw Error(ErrorCode::kParse, "expected a rational string, got " + j.dump());
}

int order_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j["order"].is_number_integer()) {
    throw Error(ErrorCode::kParse, "missing integer \"order\"");
  }
  const int order = j["order"].get<int>();
  if (order < 1) throw Error(ErrorCode::kParse, "\"order\" must be >= 1");
  return order;
}

}  // namespace

json to_json(const Series& s) {
  json coeffs = json::object();
  for (int n = 1; n <= s.order(); ++n) coeffs[std::to_string(n)] = to_string(s[n]);
  json out = {{"order", s.order()}, {"coeffs", coeffs}};
  if (!s.label().empty()) out["label"] = s.label();
  return out;
}

Series series_from_json(const json& j) {
  const int order = order_from_json(j);
  if (!j.contains("coeffs") || !j["coeffs"].is_object()) {
    throw Error(ErrorCode::kParse, "missing \"coeffs\" object");
  }
  std::vector<Rational> c(static_cast<std::size_t>(order));
  for (const auto& [key, value] : j["coeffs"].items()) {
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || n < 1) {
      throw Error(ErrorCode::kParse, "coefficient key '" + key + "' is not a positive index");
    }
    if (n > order) {
      throw Error(ErrorCode::kOrderMismatch,
                  "coefficient index " + key + " exceeds order " + std::to_string(order));
    }
    c[static_cast<std::size_t>(n - 1)] = rational_from_json(value);
  }
  std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>()
                                                                    : std::string{};
  return Series(order, std::move(c), std::move(label));
}

json to_json(const Composita& c) {
  json rows = json::array();
  for (int n = 1; n <= c.order(); ++n) {
    json row = json::array();
    for (const auto& v : c.row(n)) row.push_back(to_string(v));
    rows.push_back(std::move(row));
  }
  return {{"order", c.order()}, {"rows", rows}};
}

Composita composita_from_json(const json& j) {
  const int order = order_from_json(j);
  if (!j.contains("rows") || !j["rows"].is_array() ||
      j["rows"].size() != static_cast<std::size_t>(order)) {
    throw Error(ErrorCode::kParse, "\"rows\" must be an array of " + std::to_string(order) + " rows");
  }
  std::vector<Rational> entries;
  entries.reserve(Composita::entry_count(order));
  int n = 0;
  for (const auto& row : j["rows"]) {
    ++n;
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::kParse, "row " + std::to_string(n) + " must have " +
                                         std::to_string(n) + " entries");
    }
    for (const auto& v : row) entries.push_back(rational_from_json(v));
  }
  return Composita(order, std::move(entries));
}

json to_json(const VerificationReport& r) {
  json per_order = json::array();
  for (const auto& c : r.per_order) {
    per_order.push_back({{"n", c.n},
                         {"expected", to_string(c.expected)},
                         {"actual", to_string(c.actual)},
                         {"match", c.match}});
  }
  json out = {{"equation", r.equation},
              {"order", r.order},
              {"pass", r.pass()},
              {"per_order", per_order}};
  if (r.error) out["error"] = *r.error;
  return out;
}

json to_json(const IntegralityReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"n", e.n},
                       {"k", e.k},
                       {"value", to_string(e.value)},
                       {"scaled", to_string(e.scaled)},
                       {"integral", e.integral}});
  }
  return {{"pass", r.pass()}, {"entries", entries}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

}  // namespace halfiter
