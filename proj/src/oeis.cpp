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

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "halfiter/oeis.hpp"

#include <httplib.h>

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "halfiter/error.hpp"
#include "halfiter/json_io.hpp"

namespace halfiter {

namespace {

using nlohmann::json;

std::string bfile_name(std::string_view id) { return "b" + std::string(id.substr(1)) + ".txt"; }

void require_valid_id(std::string_view id) {
  if (!is_valid_oeis_id(id)) {
    throw Error(ErrorCode::kInvalidId,
                "'" + std::string(id) + "' is not an OEIS id (expected A followed by 6 digits)");
  }
}

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

bool is_valid_oeis_id(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  }
  return true;
}

CachedSequence parse_bfile(std::string_view id, std::string_view text) {
  require_valid_id(id);
  CachedSequence seq;
  seq.id = std::string(id);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool first = true;
  long expected_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line.substr(start));
    std::string index_tok;
    std::string term_tok;
    std::string extra;
    fields >> index_tok >> term_tok;
    if (!is_integer_token(index_tok) || !is_integer_token(term_tok) || (fields >> extra)) {
      throw Error(ErrorCode::kParse, std::string(id) + " b-file line " + std::to_string(line_no) +
                                         ": expected \"index term\", got '" + line + "'");
    }
    const long index = std::stol(index_tok);
    if (first) {
      seq.offset = index;
      expected_index = index;
      first = false;
    }
    if (index != expected_index) {
      throw Error(ErrorCode::kParse, std::string(id) + " b-file line " + std::to_string(line_no) +
                                         ": index " + index_tok + " out of sequence");
    }
    ++expected_index;
    seq.terms.emplace_back(term_tok);
  }
  if (seq.terms.empty()) {
    throw Error(ErrorCode::kParse, std::string(id) + " b-file contains no terms");
  }
  seq.fetched_at = std::chrono::system_clock::now();
  return seq;
}

std::filesystem::path OeisClientOptions::default_cache_dir() {
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return std::filesystem::path(xdg) / "halfiter" / "oeis";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".cache" / "halfiter" / "oeis";
  }
  return std::filesystem::temp_directory_path() / "halfiter-oeis";
}

OeisClient::OeisClient(OeisClientOptions options) : options_(std::move(options)) {
  if (options_.cache_dir.empty()) options_.cache_dir = OeisClientOptions::default_cache_dir();
}

std::filesystem::path OeisClient::cache_path(std::string_view id) const {
  return options_.cache_dir / (std::string(id) + ".json");
}

std::optional<CachedSequence> OeisClient::read_cache(std::string_view id) const {
  require_valid_id(id);
  const auto path = cache_path(id);
  if (!std::filesystem::exists(path)) return std::nullopt;
  const json doc = read_json_file(path);
  try {
    CachedSequence seq;
    seq.id = doc.at("id").get<std::string>();
    seq.offset = doc.at("offset").get<long>();
    for (const auto& t : doc.at("terms")) seq.terms.emplace_back(t.get<std::string>());
    seq.fetched_at = std::chrono::system_clock::time_point(
        std::chrono::seconds(doc.at("fetched_at").get<long long>()));
    seq.source = path.string();
    if (seq.id != id || seq.terms.empty()) {
      throw Error(ErrorCode::kParse, "cache entry " + path.string() + " is inconsistent");
    }
    return seq;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, "cache entry " + path.string() + ": " + e.what());
  }
}

void OeisClient::write_cache(const CachedSequence& seq) const {
  require_valid_id(seq.id);
  std::error_code ec;
  std::filesystem::create_directories(options_.cache_dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + options_.cache_dir.string());

  json terms = json::array();
  for (const auto& t : seq.terms) terms.push_back(t.get_str());
  const json doc = {
      {"id", seq.id},
      {"offset", seq.offset},
      {"terms", terms},
      {"fetched_at",
       std::chrono::duration_cast<std::chrono::seconds>(seq.fetched_at.time_since_epoch()).count()},
      {"source", seq.source}};

  static std::atomic<unsigned> counter{0};
  const auto final_path = cache_path(seq.id);
  auto tmp = final_path;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
         "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out << doc.dump(2) << '\n';
    if (!out) throw Error(ErrorCode::kIo, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot rename cache entry into " + final_path.string());
  }
}

std::string OeisClient::download(std::string_view id) const {
  httplib::Client client(options_.base_url);
  client.set_connection_timeout(options_.timeout);
  client.set_read_timeout(options_.timeout);
  client.set_follow_location(true);
  const std::string path = "/" + std::string(id) + "/" + bfile_name(id);
  const auto res = client.Get(path);
  if (!res) {
    throw Error(ErrorCode::kNetwork, "GET " + options_.base_url + path + " failed: " +
                                         httplib::to_string(res.error()));
  }
  if (res->status == 404) {
    throw Error(ErrorCode::kUnknownId, std::string(id) + " not found at " + options_.base_url);
  }
  if (res->status != 200) {
    throw Error(ErrorCode::kNetwork, "GET " + options_.base_url + path + " returned HTTP " +
                                         std::to_string(res->status));
  }
  return res->body;
}

CachedSequence OeisClient::fetch_sequence(std::string_view id) const {
  require_valid_id(id);
  std::optional<CachedSequence> cached = read_cache(id);
  if (cached) {
    const auto age = std::chrono::system_clock::now() - cached->fetched_at;
    if (options_.offline || age < options_.ttl) return *cached;
  }
  if (options_.offline) {
    throw Error(ErrorCode::kNetwork,
                "offline mode and no cached copy of " + std::string(id) + " in " +
                    options_.cache_dir.string());
  }
  std::string body;
  try {
    body = download(id);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNetwork && cached) return *cached;
    throw;
  }
  CachedSequence seq = parse_bfile(id, body);
  seq.source = options_.base_url + "/" + std::string(id) + "/" + bfile_name(id);
  write_cache(seq);
  return seq;
}

VerificationReport compare_with_sequence(const Series& a, const CachedSequence& seq,
                                         Convention convention, TermSelection terms) {
  const auto encoded = encode_terms(a, convention, terms);
  VerificationReport report;
  report.equation = seq.id + " vs " + (a.label().empty() ? std::string("series") : a.label()) +
                    " (" + std::string(to_string(convention)) + ")";
  report.order = a.order();
  const std::size_t count = std::min(encoded.size(), seq.terms.size());
  for (std::size_t i = 0; i < count; ++i) {
    if (!is_integer(encoded[i].value)) {
      throw Error(ErrorCode::kConventionMismatch,
                  "coefficient " + std::to_string(encoded[i].n) + " encodes to " +
                      to_string(encoded[i].value) + ", not an integer under convention " +
                      std::string(to_string(convention)));
    }
    const Rational expected(seq.terms[i]);
    report.per_order.push_back(
        {encoded[i].n, expected, encoded[i].value, expected == encoded[i].value});
  }
  return report;
}

}  // namespace halfiter
