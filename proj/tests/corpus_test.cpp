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

#include <filesystem>

#include "halfiter/corpus.hpp"
#include "halfiter/error.hpp"
#include "halfiter/json_io.hpp"
#include "halfiter/solver.hpp"
#include "halfiter/verify.hpp"

using namespace halfiter;

namespace {

const std::filesystem::path kData = HALFITER_DATA_DIR;

CorpusCase make_case(const std::string& json_text) {
  return corpus_case_from_json(nlohmann::json::parse(json_text));
}

}  // namespace

TEST_CASE("golden corpus examples") {
  const auto catalan = make_case(R"({
    "id": "A213422", "rhs": {"fixture": "A213422"}, "iteration_exponent": 1,
    "expected_prefix": ["1","2","12","96","880","8720","90752"]})");
  CHECK(catalan.effective_order() == 7);
  CHECK(run_case(catalan, kData / "fixtures").pass());

  const auto quartic = make_case(R"({
    "id": "A141119", "rhs": {"catalog": "quadratic:16"}, "iteration_exponent": 2,
    "expected_prefix": ["1","4","-48","960","-23296","616448","-16830464"]})");
  CHECK(run_case(quartic, kData / "fixtures").pass());

  const auto identity = make_case(R"({
    "id": "identity", "rhs": {"series": {"order": 1, "coeffs": {"1": "1"}}},
    "order": 5, "expected_prefix": ["1","0","0","0","0"]})");
  CHECK(run_case(identity, kData / "fixtures").pass());
}

TEST_CASE("mismatches are reported per order") {
  const auto wrong = make_case(R"({
    "id": "A141119", "rhs": {"catalog": "quadratic:16"}, "iteration_exponent": 2,
    "expected_prefix": ["1","4","-47"]})");
  const auto report = run_case(wrong, kData / "fixtures");
  CHECK_FALSE(report.pass());
  CHECK(report.first_mismatch()->n == 3);
}

TEST_CASE("unresolvable cases become failed reports") {
  const std::vector<CorpusCase> cases = {
      make_case(R"({"id": "x", "rhs": {"catalog": "cosh"}, "expected_prefix": ["1"]})"),
      make_case(R"({"id": "y", "rhs": {"fixture": "A999999"}, "expected_prefix": ["1"]})"),
      make_case(R"({"id": "z", "rhs": {"catalog": "catalan"}, "scaled": true,
                    "expected_prefix": ["1","2","12"]})")};
  const auto reports = run_corpus(cases, kData / "fixtures");
  REQUIRE(reports.size() == 3);
  CHECK_FALSE(reports[0].pass());
  REQUIRE(reports[0].error.has_value());
  CHECK(reports[0].error->find("unknown-catalog-name") != std::string::npos);
  CHECK_FALSE(reports[1].pass());
  CHECK(reports[1].error->find("fixture-missing") != std::string::npos);
  CHECK(reports[2].pass());

  try {
    run_case(cases[1], kData / "fixtures");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFixtureMissing);
  }
}

TEST_CASE("malformed corpus cases") {
  CHECK_THROWS_AS(make_case(R"({"id": "x", "rhs": {}, "expected_prefix": ["1"]})"), Error);
  CHECK_THROWS_AS(make_case(R"({"id": "x", "rhs": {"catalog": "sin", "fixture": "A1"},
                                "expected_prefix": ["1"]})"),
                  Error);
  CHECK_THROWS_AS(make_case(R"({"id": "x", "rhs": {"catalog": "sin"}, "expected_prefix": []})"),
                  Error);
  CHECK_THROWS_AS(make_case(R"({"id": "x", "rhs": {"catalog": "sin"},
                                "coefficient_convention": "weird", "expected_prefix": ["1"]})"),
                  Error);
}

TEST_CASE("corpus case json round trip") {
  const auto c = make_case(R"({
    "id": "A048602", "description": "sin", "rhs": {"catalog": "sin"}, "order": 7,
    "coefficient_convention": "numerator", "terms": "odd",
    "expected_prefix": ["1","-1","-1","-53"]})");
  CHECK(c.effective_order() == 7);
  const auto again = corpus_case_from_json(to_json(c));
  CHECK(again.id == c.id);
  CHECK(again.convention == Convention::kNumerator);
  CHECK(again.terms == TermSelection::kOdd);
  CHECK(again.expected_prefix == c.expected_prefix);
  CHECK(run_case(again, kData / "fixtures").pass());
}

TEST_CASE("bundled corpus loads and every case passes") {
  const auto cases = load_corpus(kData / "corpus.json");
  CHECK(cases.size() >= 16);
  for (const auto& r : run_corpus(cases, kData / "fixtures")) {
    CAPTURE(r.equation);
    CHECK(r.pass());
  }
}

TEST_CASE("bundled fixtures: the solved half-iterate substitutes back to the fixture") {
  for (const auto& entry : std::filesystem::directory_iterator(kData / "fixtures")) {
    CAPTURE(entry.path().string());
    const Series f = series_from_json(read_json_file(entry.path()));
    const Series a = coefficients(functional_sqrt(composita_of(f)));
    CHECK(verify_solution(a, f, 2).pass());
  }
}
