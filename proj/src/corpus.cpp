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

#include "halfiter/corpus.hpp"

#include <future>

#include "halfiter/catalog.hpp"
#include "halfiter/composita.hpp"
#include "halfiter/error.hpp"
#include "halfiter/json_io.hpp"
#include "halfiter/solver.hpp"

namespace halfiter {

using nlohmann::json;

int CorpusCase::effective_order() const {
  if (order > 0) return order;
  const int len = static_cast<int>(expected_prefix.size());
  return terms == TermSelection::kOdd ? 2 * len - 1 : len;
}

CorpusCase corpus_case_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "corpus case must be an object");
  CorpusCase c;
  try {
    c.id = j.at("id").get<std::string>();
    c.description = j.value("description", std::string{});
    const json& rhs = j.at("rhs");
    int sources = 0;
    if (rhs.contains("catalog")) {
      c.rhs.catalog = rhs["catalog"].get<std::string>();
      ++sources;
    }
    if (rhs.contains("fixture")) {
      c.rhs.fixture = rhs["fixture"].get<std::string>();
      ++sources;
    }
    if (rhs.contains("series")) {
      c.rhs.series = series_from_json(rhs["series"]);
      ++sources;
    }
    if (sources != 1) {
      throw Error(ErrorCode::kParse,
                  "case " + c.id + ": rhs needs exactly one of catalog, fixture, series");
    }
    c.rhs.scaled = j.value("scaled", false);
    c.iteration_exponent = j.value("iteration_exponent", 1);
    c.order = j.value("order", 0);
    c.convention = parse_convention(j.value("coefficient_convention", std::string("ordinary")));
    c.terms = parse_term_selection(j.value("terms", std::string("all")));
    for (const auto& v : j.at("expected_prefix")) {
      c.expected_prefix.push_back(parse_rational(v.get<std::string>()));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, "malformed corpus case: " + std::string(e.what()));
  }
  if (c.expected_prefix.empty()) {
    throw Error(ErrorCode::kParse, "case " + c.id + ": expected_prefix is empty");
  }
  if (c.iteration_exponent < 1) {
    throw Error(ErrorCode::kParse, "case " + c.id + ": iteration_exponent must be >= 1");
  }
  return c;
}

json to_json(const CorpusCase& c) {
  json rhs = json::object();
  if (c.rhs.catalog) rhs["catalog"] = *c.rhs.catalog;
  if (c.rhs.fixture) rhs["fixture"] = *c.rhs.fixture;
  if (c.rhs.series) rhs["series"] = to_json(*c.rhs.series);
  json prefix = json::array();
  for (const auto& v : c.expected_prefix) prefix.push_back(to_string(v));
  json out = {{"id", c.id},
              {"description", c.description},
              {"rhs", rhs},
              {"iteration_exponent", c.iteration_exponent},
              {"coefficient_convention", std::string(to_string(c.convention))},
              {"terms", std::string(to_string(c.terms))},
              {"expected_prefix", prefix}};
  if (c.order > 0) out["order"] = c.order;
  if (c.rhs.scaled) out["scaled"] = true;
  return out;
}

std::vector<CorpusCase> load_corpus(const std::filesystem::path& path) {
  const json doc = read_json_file(path);
  if (!doc.is_array()) throw Error(ErrorCode::kParse, path.string() + ": expected a JSON array");
  std::vector<CorpusCase> cases;
  for (const auto& j : doc) cases.push_back(corpus_case_from_json(j));
  return cases;
}

Series resolve_rhs(const RhsSpec& rhs, const std::filesystem::path& fixture_dir, int order) {
  Series f(order);
  if (rhs.catalog) {
    f = catalog_entry(*rhs.catalog).reference_series(order);
  } else if (rhs.fixture) {
    const auto path = fixture_dir / (*rhs.fixture + ".json");
    if (!std::filesystem::exists(path)) {
      throw Error(ErrorCode::kFixtureMissing, "fixture " + path.string() + " not found");
    }
    const Series stored = series_from_json(read_json_file(path));
    if (stored.order() < order) {
      throw Error(ErrorCode::kOrderMismatch, "fixture " + *rhs.fixture + " has order " +
                                                 std::to_string(stored.order()) + ", need " +
                                                 std::to_string(order));
    }
    f = stored.with_order(order).with_label(*rhs.fixture);
  } else if (rhs.series) {
    f = rhs.series->with_order(order);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "right-hand side has no source");
  }
  return rhs.scaled ? scale_series(f, Rational(4)) : f;
}

VerificationReport run_case(const CorpusCase& c, const std::filesystem::path& fixture_dir) {
  const int order = c.effective_order();
  const Series f = resolve_rhs(c.rhs, fixture_dir, order);
  const Composita root = iterated_root(composita_of(f), c.iteration_exponent);
  const auto encoded = encode_terms(coefficients(root), c.convention, c.terms);

  VerificationReport report;
  report.equation = c.id + ": " + c.description;
  report.order = order;
  if (encoded.size() < c.expected_prefix.size()) {
    throw Error(ErrorCode::kOrderMismatch, "case " + c.id + ": order " + std::to_string(order) +
                                               " yields only " + std::to_string(encoded.size()) +
                                               " terms");
  }
  for (std::size_t i = 0; i < c.expected_prefix.size(); ++i) {
    report.per_order.push_back({encoded[i].n, c.expected_prefix[i], encoded[i].value,
                                encoded[i].value == c.expected_prefix[i]});
  }
  return report;
}

std::vector<VerificationReport> run_corpus(std::span<const CorpusCase> cases,
                                           const std::filesystem::path& fixture_dir) {
  std::vector<std::future<VerificationReport>> pending;
  pending.reserve(cases.size());
  for (const auto& c : cases) {
    pending.push_back(std::async(std::launch::async, [&c, &fixture_dir] {
      try {
        return run_case(c, fixture_dir);
      } catch (const Error& e) {
        VerificationReport failed;
        failed.equation = c.id + ": " + c.description;
        failed.order = c.effective_order();
        failed.error = std::string(error_code_name(e.code())) + ": " + e.what();
        return failed;
      }
    }));
  }
  std::vector<VerificationReport> reports;
  reports.reserve(pending.size());
  for (auto& p : pending) reports.push_back(p.get());
  return reports;
}

}  // namespace halfiter
