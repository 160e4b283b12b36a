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

// halfiter: compositae, half-iterates and verification from the command line.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "halfiter/catalog.hpp"
#include "halfiter/composita.hpp"
#include "halfiter/corpus.hpp"
#include "halfiter/error.hpp"
#include "halfiter/json_io.hpp"
#include "halfiter/oeis.hpp"
#include "halfiter/solver.hpp"
#include "halfiter/verify.hpp"

#ifndef HALFITER_DATA_DIR
#define HALFITER_DATA_DIR "data"
#endif

namespace {

using halfiter::Composita;
using halfiter::Error;
using halfiter::ErrorCode;
using halfiter::Rational;
using halfiter::Series;
using nlohmann::json;

constexpr int kCheckFailed = 1;

struct InputOptions {
  std::string catalog;
  std::string inline_coeffs;
  std::string series_file;
  int order = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* cat = cmd->add_option("--catalog", in.catalog,
                              "Catalog right-hand side: sin, expm1, catalan, quadratic:<c>");
  auto* inl = cmd->add_option("--inline", in.inline_coeffs,
                              "Comma-separated coefficients f(1),f(2),... as rationals");
  auto* file = cmd->add_option("--series", in.series_file, "Series JSON file");
  cat->excludes(inl, file);
  inl->excludes(file);
  cmd->add_option("--order", in.order, "Truncation order N")->check(CLI::PositiveNumber);
}

std::vector<Rational> parse_inline(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::kParse, "empty coefficient in --inline");
    out.push_back(halfiter::parse_rational(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw Error(ErrorCode::kParse, "--inline needs at least one coefficient");
  return out;
}

Series resolve_input(const InputOptions& in) {
  if (!in.catalog.empty()) {
    if (in.order < 1) throw Error(ErrorCode::kInvalidArgument, "--catalog needs --order");
    return halfiter::catalog_entry(in.catalog).reference_series(in.order);
  }
  if (!in.inline_coeffs.empty()) {
    auto coeffs = parse_inline(in.inline_coeffs);
    const int len = static_cast<int>(coeffs.size());
    if (in.order > 0 && in.order < len) {
      throw Error(ErrorCode::kOrderMismatch, "--order " + std::to_string(in.order) +
                                                 " is shorter than the inline list");
    }
    return Series(in.order > 0 ? in.order : len, std::move(coeffs));
  }
  if (!in.series_file.empty()) {
    const Series s = halfiter::series_from_json(halfiter::read_json_file(in.series_file));
    return in.order > 0 ? s.with_order(in.order) : s;
  }
  throw Error(ErrorCode::kInvalidArgument, "one of --catalog, --inline, --series is required");
}

std::string input_label(const InputOptions& in) {
  if (!in.catalog.empty()) return in.catalog;
  if (!in.inline_coeffs.empty()) return "[" + in.inline_coeffs + "]";
  return in.series_file;
}

void print_triangle(std::ostream& os, const Composita& c) {
  for (int n = 1; n <= c.order(); ++n) {
    const auto row = c.row(n);
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i == 0 ? "" : "  ") << halfiter::to_string(row[i]);
    }
    os << '\n';
  }
}

void print_series(std::ostream& os, const Series& s, std::string_view name) {
  for (int n = 1; n <= s.order(); ++n) {
    os << name << "(" << n << ") = " << halfiter::to_string(s[n]) << '\n';
  }
}

// composita ----------------------------------------------------------------

struct CompositaCmd {
  InputOptions in;
  std::string format = "table";
  std::string method = "power";
};

int run_composita(const CompositaCmd& cmd) {
  const Series f = resolve_input(cmd.in);
  const Composita c = cmd.method == "compositions" ? halfiter::composita_by_compositions(f)
                                                   : halfiter::composita_of(f);
  if (cmd.format == "json") {
    std::cout << halfiter::to_json(c).dump(2) << '\n';
  } else {
    print_triangle(std::cout, c);
  }
  return 0;
}

// solve --------------------------------------------------------------------

struct SolveCmd {
  InputOptions in;
  int exponent = 1;
  bool scaled = false;
  bool egf = false;
  bool triangle = false;
  bool check_integrality = false;
  std::string format = "table";
};

int run_solve(const SolveCmd& cmd) {
  Series f = resolve_input(cmd.in);
  Composita f_comp = halfiter::composita_of(f);
  if (cmd.scaled) f_comp = halfiter::scale_conjugate(f_comp, Rational(4));
  const Composita root = halfiter::iterated_root(f_comp, cmd.exponent);
  const Series a = halfiter::coefficients(root);

  std::optional<halfiter::IntegralityReport> integrality;
  if (cmd.check_integrality) integrality = halfiter::check_4adic_integrality(root);
  const bool ok = !integrality || integrality->pass();

  const std::string equation = "A^(2^" + std::to_string(cmd.exponent) + ")(x) = " +
                               (cmd.scaled ? "F(4x)/4, F = " : "") + input_label(cmd.in);
  if (cmd.format == "json") {
    json out = {{"equation", equation},
                {"exponent", cmd.exponent},
                {"scaled", cmd.scaled},
                {"series", halfiter::to_json(a)}};
    if (cmd.egf) out["egf"] = halfiter::to_json(halfiter::egf_coefficients(root));
    if (cmd.triangle) out["composita"] = halfiter::to_json(root);
    if (integrality) out["integrality"] = halfiter::to_json(*integrality);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "# " << equation << ", order " << root.order() << '\n';
    print_series(std::cout, cmd.egf ? halfiter::egf_coefficients(root) : a,
                 cmd.egf ? "n!a" : "a");
    if (cmd.triangle) {
      std::cout << "# composita\n";
      print_triangle(std::cout, root);
    }
    if (integrality) {
      if (const auto bad = integrality->first_failure()) {
        std::cout << "# 4^(n-k) integrality FAILED at (" << bad->n << "," << bad->k
                  << "): " << halfiter::to_string(bad->scaled) << '\n';
      } else {
        std::cout << "# 4^(n-k) integrality: pass\n";
      }
    }
  }
  return ok ? 0 : static_cast<int>(ErrorCode::kIntegralityViolation);
}

// verify -------------------------------------------------------------------

struct VerifyCmd {
  InputOptions in;
  std::string candidate_file;
  std::string candidate_inline;
  int iterations = 2;
  std::string format = "table";
};

int run_verify(const VerifyCmd& cmd) {
  const Series f = resolve_input(cmd.in).with_label(input_label(cmd.in));
  Series a(1);
  if (!cmd.candidate_file.empty()) {
    a = halfiter::series_from_json(halfiter::read_json_file(cmd.candidate_file));
  } else if (!cmd.candidate_inline.empty()) {
    a = Series(static_cast<int>(parse_inline(cmd.candidate_inline).size()),
               parse_inline(cmd.candidate_inline));
  } else {
    throw Error(ErrorCode::kInvalidArgument, "--candidate or --candidate-inline is required");
  }
  if (a.order() < f.order()) a = a.with_order(f.order());
  const auto report = halfiter::verify_solution(a, f.with_order(a.order()), cmd.iterations);
  if (cmd.format == "json") {
    std::cout << halfiter::to_json(report).dump(2) << '\n';
  } else {
    std::cout << halfiter::format_table(report);
  }
  return report.pass() ? 0 : kCheckFailed;
}

// corpus -------------------------------------------------------------------

struct CorpusCmd {
  std::string corpus = std::string(HALFITER_DATA_DIR) + "/corpus.json";
  std::string fixtures;
  std::string format = "table";
};

int run_corpus_cmd(const CorpusCmd& cmd) {
  const auto cases = halfiter::load_corpus(cmd.corpus);
  const std::filesystem::path fixtures =
      cmd.fixtures.empty() ? std::filesystem::path(cmd.corpus).parent_path() / "fixtures"
                           : std::filesystem::path(cmd.fixtures);
  const auto reports = halfiter::run_corpus(cases, fixtures);
  bool all = true;
  json out = json::array();
  for (const auto& r : reports) {
    all = all && r.pass();
    if (cmd.format == "json") {
      out.push_back(halfiter::to_json(r));
    } else {
      std::cout << (r.pass() ? "PASS  " : "FAIL  ") << r.equation;
      if (r.error) {
        std::cout << "  [" << *r.error << "]";
      } else if (const auto bad = r.first_mismatch()) {
        std::cout << "  [n=" << bad->n << " expected " << halfiter::to_string(bad->expected)
                  << " got " << halfiter::to_string(bad->actual) << "]";
      }
      std::cout << '\n';
    }
  }
  if (cmd.format == "json") std::cout << out.dump(2) << '\n';
  return all ? 0 : kCheckFailed;
}

// fetch --------------------------------------------------------------------

struct FetchCmd {
  std::string id;
  bool offline = false;
  std::string cache_dir;
  std::string base_url = "https://oeis.org";
  int ttl_days = 30;
  InputOptions in;
  int exponent = 1;
  bool scaled = false;
  std::string convention = "ordinary";
  std::string terms = "all";
  std::string format = "table";
};

int run_fetch(const FetchCmd& cmd) {
  halfiter::OeisClientOptions opts;
  opts.cache_dir = cmd.cache_dir;
  opts.base_url = cmd.base_url;
  opts.offline = cmd.offline;
  opts.ttl = std::chrono::hours(24 * cmd.ttl_days);
  const halfiter::OeisClient client(opts);
  const auto seq = client.fetch_sequence(cmd.id);

  const bool compare = !cmd.in.catalog.empty() || !cmd.in.inline_coeffs.empty() ||
                       !cmd.in.series_file.empty();
  if (!compare) {
    if (cmd.format == "json") {
      json terms = json::array();
      for (const auto& t : seq.terms) terms.push_back(t.get_str());
      std::cout << json{{"id", seq.id}, {"offset", seq.offset}, {"source", seq.source},
                        {"terms", terms}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "# " << seq.id << " (" << seq.source << ")\n";
      for (std::size_t i = 0; i < seq.terms.size(); ++i) {
        std::cout << seq.offset + static_cast<long>(i) << ' ' << seq.terms[i].get_str() << '\n';
      }
    }
    return 0;
  }
  Composita f_comp = halfiter::composita_of(resolve_input(cmd.in));
  if (cmd.scaled) f_comp = halfiter::scale_conjugate(f_comp, Rational(4));
  const Series a = halfiter::coefficients(halfiter::iterated_root(f_comp, cmd.exponent))
                       .with_label(input_label(cmd.in));
  const auto report =
      halfiter::compare_with_sequence(a, seq, halfiter::parse_convention(cmd.convention),
                                      halfiter::parse_term_selection(cmd.terms));
  if (cmd.format == "json") {
    std::cout << halfiter::to_json(report).dump(2) << '\n';
  } else {
    std::cout << halfiter::format_table(report);
  }
  return report.pass() ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Functional square roots of formal power series via compositae"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"table", "json"});

  CompositaCmd composita;
  auto* c = app.add_subcommand("composita", "Print the composita triangle of a series");
  add_input_options(c, composita.in);
  c->add_option("--format", composita.format)->check(formats);
  c->add_option("--method", composita.method, "power (default) or compositions")
      ->check(CLI::IsMember({"power", "compositions"}));

  SolveCmd solve;
  auto* s = app.add_subcommand("solve", "Solve A^(2^e)(x) = F(x)");
  add_input_options(s, solve.in);
  s->add_option("--exponent", solve.exponent, "e in A^(2^e) = F")->check(CLI::PositiveNumber);
  s->add_flag("--scaled", solve.scaled, "Solve against F(4x)/4");
  s->add_flag("--egf", solve.egf, "Report n! a(n)");
  s->add_flag("--triangle", solve.triangle, "Also print the composita of A");
  s->add_flag("--check-integrality", solve.check_integrality, "Check 4^(n-k) A(n,k) is integral");
  s->add_option("--format", solve.format)->check(formats);

  VerifyCmd verify;
  auto* v = app.add_subcommand("verify", "Check that a candidate A iterates to F");
  add_input_options(v, verify.in);
  auto* cf = v->add_option("--candidate", verify.candidate_file, "Candidate series JSON");
  auto* ci = v->add_option("--candidate-inline", verify.candidate_inline, "Candidate coefficients");
  cf->excludes(ci);
  v->add_option("--iterations", verify.iterations, "How many times A is composed")
      ->check(CLI::PositiveNumber);
  v->add_option("--format", verify.format)->check(formats);

  CorpusCmd corpus;
  auto* k = app.add_subcommand("corpus", "Run the fixture corpus");
  k->add_option("--corpus", corpus.corpus, "Corpus JSON file");
  k->add_option("--fixtures", corpus.fixtures, "Fixture directory (default: <corpus dir>/fixtures)");
  k->add_option("--format", corpus.format)->check(formats);

  FetchCmd fetch;
  auto* f = app.add_subcommand("fetch", "Fetch an OEIS sequence, optionally compare a solution");
  f->add_option("id", fetch.id, "OEIS id, e.g. A141119")->required();
  f->add_flag("--offline", fetch.offline, "Serve from cache only");
  f->add_option("--cache-dir", fetch.cache_dir, "Cache directory (default: $HALFITER_CACHE_DIR)");
  f->add_option("--base-url", fetch.base_url);
  f->add_option("--ttl-days", fetch.ttl_days)->check(CLI::NonNegativeNumber);
  add_input_options(f, fetch.in);
  f->add_option("--exponent", fetch.exponent)->check(CLI::PositiveNumber);
  f->add_flag("--scaled", fetch.scaled);
  f->add_option("--convention", fetch.convention,
                "ordinary, egf, numerator, denominator, egf_numerator, egf_denominator");
  f->add_option("--terms", fetch.terms, "all or odd");
  f->add_option("--format", fetch.format)->check(formats);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c->parsed()) return run_composita(composita);
    if (s->parsed()) return run_solve(solve);
    if (v->parsed()) return run_verify(verify);
    if (k->parsed()) return run_corpus_cmd(corpus);
    if (f->parsed()) return run_fetch(fetch);
  } catch (const Error& e) {
    std::cerr << "error [" << halfiter::error_code_name(e.code()) << "]: " << e.what() << '\n';
    return e.exit_status();
  }
  return 0;
}
