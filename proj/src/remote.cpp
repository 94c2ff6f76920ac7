// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "syllo/remote.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "syllo/parser.hpp"
#include "syllo/text.hpp"

namespace syllo {

using nlohmann::json;

namespace {

std::optional<std::string> env_value(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

}  // namespace

std::optional<RemoteConfig> RemoteConfig::from_env() {
  auto url = env_value("SYLLO_REMOTE_URL");
  if (!url) return std::nullopt;
  RemoteConfig cfg;
  cfg.url = *url;
  if (auto v = env_value("SYLLO_REMOTE_PATH")) cfg.path = *v;
  if (auto v = env_value("SYLLO_REMOTE_API_KEY")) cfg.api_key = *v;
  if (auto v = env_value("SYLLO_REMOTE_MODEL")) cfg.model = *v;
  if (auto v = env_value("SYLLO_REMOTE_TIMEOUT_MS")) cfg.timeout_ms = std::stoi(*v);
  if (auto v = env_value("SYLLO_REMOTE_MAX_INFLIGHT")) cfg.max_inflight = std::stoi(*v);
  return cfg;
}

RemoteConfig RemoteConfig::from_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("remote config not readable: " + p.string());
  json j = json::parse(in);
  RemoteConfig cfg;
  cfg.url = j.at("url").get<std::string>();
  if (j.contains("path")) cfg.path = j["path"].get<std::string>();
  if (j.contains("api_key")) cfg.api_key = j["api_key"].get<std::string>();
  if (j.contains("model")) cfg.model = j["model"].get<std::string>();
  if (j.contains("timeout_ms")) cfg.timeout_ms = j["timeout_ms"].get<int>();
  if (j.contains("max_inflight")) cfg.max_inflight = j["max_inflight"].get<int>();
  return cfg;
}

std::string_view PromptLibrary::template_id(NormalizationMode m) {
  switch (m) {
    case NormalizationMode::EnglishNorm: return "english_norm";
    case NormalizationMode::EpnValidity: return "epn_validity";
    case NormalizationMode::EpnRelevance: return "epn_relevance";
  }
  return "?";
}

PromptLibrary::PromptLibrary(std::filesystem::path prompt_dir) {
  for (NormalizationMode m : {NormalizationMode::EnglishNorm,
                              NormalizationMode::EpnValidity,
                              NormalizationMode::EpnRelevance}) {
    std::filesystem::path file =
        prompt_dir / (std::string(template_id(m)) + ".txt");
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("prompt template not readable: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    templates_[m] = buf.str();
  }
}

const std::string& PromptLibrary::template_text(NormalizationMode m) const {
  return templates_.at(m);
}

std::string PromptLibrary::render(NormalizationMode m, std::string_view argument) const {
  const std::string& tpl = templates_.at(m);
  std::string out;
  out.reserve(tpl.size() + argument.size());
  for (std::size_t i = 0; i < tpl.size();) {
    if (tpl.compare(i, 2, "{{") == 0) {
      out.push_back('{');
      i += 2;
    } else if (tpl.compare(i, 2, "}}") == 0) {
      out.push_back('}');
      i += 2;
    } else if (tpl.compare(i, 11, "{syllogism}") == 0) {
      out.append(argument);
      i += 11;
    } else {
      out.push_back(tpl[i]);
      ++i;
    }
  }
  return out;
}

namespace {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace

std::string fixture_key(NormalizationMode mode, std::string_view raw) {
  std::string material;
  material.append(mode_name(mode));
  material.push_back('\0');
  material.append(PromptLibrary::template_id(mode));
  material.push_back('\0');
  material.append(raw);
  std::string key;
  key.append(mode_name(mode));
  key.push_back(':');
  key.append(PromptLibrary::template_id(mode));
  key.push_back(':');
  key.append(fnv1a_hex(material));
  return key;
}

FixtureStore FixtureStore::load(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("fixture file not readable: " + p.string());
  std::vector<Record> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw std::runtime_error("fixture file " + p.string() + ": line " +
                               std::to_string(line_no) + " is not a JSON object");
    }
    Record r;
    try {
      r.key = j.at("key").get<std::string>();
      auto mode = mode_from_name(j.at("mode").get<std::string>());
      if (!mode) throw std::runtime_error("unknown mode");
      r.mode = *mode;
      r.raw = j.at("raw").get<std::string>();
      r.response = j.at("response").get<std::string>();
    } catch (const std::exception& e) {
      throw std::runtime_error("fixture file " + p.string() + ": line " +
                               std::to_string(line_no) + ": " + e.what());
    }
    if (r.key != fixture_key(r.mode, r.raw)) {
      throw std::runtime_error("fixture file " + p.string() + ": line " +
                               std::to_string(line_no) + ": key does not match contents");
    }
    records.push_back(std::move(r));
  }
  return in_memory(std::move(records));
}

FixtureStore FixtureStore::in_memory(std::vector<Record> records) {
  FixtureStore store;
  for (auto& r : records) {
    if (r.key.empty()) r.key = fixture_key(r.mode, r.raw);
    auto [it, inserted] = store.by_key_.emplace(r.key, std::move(r));
    if (!inserted) throw std::runtime_error("duplicate fixture key: " + it->first);
  }
  return store;
}

const FixtureStore::Record* FixtureStore::find(NormalizationMode mode,
                                               std::string_view raw) const {
  auto it = by_key_.find(fixture_key(mode, raw));
  return it == by_key_.end() ? nullptr : &it->second;
}

void FixtureStore::append_record(const std::filesystem::path& p, NormalizationMode mode,
                                 std::string_view raw, std::string_view response) {
  json j{{"key", fixture_key(mode, raw)},
         {"mode", std::string(mode_name(mode))},
         {"raw", std::string(raw)},
         {"response", std::string(response)}};
  std::ofstream out(p, std::ios::app);
  if (!out) throw std::runtime_error("fixture file not writable: " + p.string());
  out << j.dump() << '\n';
}

namespace {

const std::vector<std::string>& required_keys(NormalizationMode mode) {
  static const std::vector<std::string> norm = {"reasoning", "mapped", "parsed"};
  static const std::vector<std::string> epn = {"detected_language", "reasoning", "english"};
  return mode == NormalizationMode::EnglishNorm ? norm : epn;
}

bool has_required(const json& j, NormalizationMode mode) {
  if (!j.is_object()) return false;
  for (const auto& k : required_keys(mode)) {
    if (!j.contains(k) || !j[k].is_string()) return false;
  }
  return true;
}

// Code fences and brace-balanced substrings, in order of appearance.
void collect_candidates(std::string_view body, std::vector<std::string>& out) {
  out.emplace_back(body);

  std::size_t pos = 0;
  while ((pos = body.find("```", pos)) != std::string_view::npos) {
    std::size_t start = pos + 3;
    std::size_t nl = body.find('\n', start);
    std::size_t close = body.find("```", start);
    if (close == std::string_view::npos) break;
    std::size_t content_start = (nl != std::string_view::npos && nl < close) ? nl + 1 : start;
    out.emplace_back(body.substr(content_start, close - content_start));
    pos = close + 3;
  }

  // brace-balanced scan, quote-aware
  int depth = 0;
  bool in_string = false, escaped = false;
  std::size_t obj_start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (in_string) {
      if (escaped) escaped = false;
      else if (c == '\\') escaped = true;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') in_string = true;
    else if (c == '{') {
      if (depth == 0) obj_start = i;
      ++depth;
    } else if (c == '}') {
      if (depth > 0 && --depth == 0) out.emplace_back(body.substr(obj_start, i - obj_start + 1));
    }
  }
}

std::optional<TermMapping> parse_mapped_string(const std::string& mapped) {
  // "A:animal,B:feline,C:cats"
  auto parts = text::split_non_empty(mapped, ',');
  if (parts.size() != 3) return std::nullopt;
  std::vector<std::string> terms;
  for (const auto& part : parts) {
    auto colon = part.find(':');
    if (colon == std::string::npos || colon == 0) return std::nullopt;
    std::string symbol(text::trim(part.substr(0, colon)));
    std::string term(text::trim(part.substr(colon + 1)));
    char expected = static_cast<char>('A' + terms.size());
    if (symbol.size() != 1 || term.empty()) return std::nullopt;
    if (symbol[0] != expected && symbol[0] != static_cast<char>(expected - 'A' + 'a'))
      return std::nullopt;
    terms.push_back(term);
  }
  // Feed first-appearance order through the same builder the rules
  // engine uses.
  std::vector<Proposition> synth;
  synth.push_back(Proposition{Form::A, Term{terms[0]}, Term{terms[1]}});
  synth.push_back(Proposition{Form::A, Term{terms[2]}, Term{terms[2]}});
  return TermMapping::from_propositions(synth);
}

}  // namespace

Result<NormalizationResult, NormalizeError> parse_llm_response(std::string_view body,
                                                               NormalizationMode mode) {
  std::vector<std::string> candidates;
  collect_candidates(body, candidates);

  // one level of unwrapping for JSON wrappers with text-bearing fields
  json whole = json::parse(candidates.front(), nullptr, false);
  if (whole.is_object() && !has_required(whole, mode)) {
    for (const auto& [k, v] : whole.items()) {
      if (v.is_string()) collect_candidates(v.get_ref<const std::string&>(), candidates);
    }
  }

  for (const auto& cand : candidates) {
    json j = json::parse(cand, nullptr, false);
    if (!has_required(j, mode)) continue;
    NormalizationResult out;
    out.reasoning = j["reasoning"].get<std::string>();
    if (mode == NormalizationMode::EnglishNorm) {
      out.parsed = j["parsed"].get<std::string>();
      out.mapped = parse_mapped_string(j["mapped"].get<std::string>());
    } else {
      out.parsed = j["english"].get<std::string>();
      out.detected_language = j["detected_language"].get<std::string>();
      out.diagnostics = term_distribution_report(out.parsed);
    }
    out.well_formed = parse_canonical(out.parsed).ok();
    return out;
  }
  return NormalizeError{NormalizeError::Kind::MalformedResponse,
                        "no structured object with the required keys in response"};
}

std::string build_request_body(std::string_view model, std::string_view prompt) {
  json j{{"model", std::string(model)},
         {"temperature", 0},
         {"seed", 0},
         {"prompt", std::string(prompt)}};
  return j.dump();
}

RemoteNormalizer::RemoteNormalizer(RemoteConfig cfg, const PromptLibrary& prompts)
    : cfg_(std::move(cfg)), prompts_(prompts) {}

Result<NormalizationResult, NormalizeError> RemoteNormalizer::normalize(
    std::string_view raw, NormalizationMode mode) const {
  httplib::Client client(cfg_.url);
  client.set_connection_timeout(0, cfg_.timeout_ms * 1000);
  client.set_read_timeout(cfg_.timeout_ms / 1000, (cfg_.timeout_ms % 1000) * 1000);
  httplib::Headers headers;
  if (!cfg_.api_key.empty()) headers.emplace("Authorization", "Bearer " + cfg_.api_key);

  const std::string body = build_request_body(cfg_.model, prompts_.render(mode, raw));
  auto res = client.Post(cfg_.path, headers, body, "application/json");
  if (!res) {
    return NormalizeError{NormalizeError::Kind::Transport,
                          "transport failure: " + httplib::to_string(res.error())};
  }
  if (res->status != 200) {
    return NormalizeError{NormalizeError::Kind::Transport,
                          "unexpected HTTP status " + std::to_string(res->status)};
  }
  return parse_llm_response(res->body, mode);
}

std::vector<Result<NormalizationResult, NormalizeError>> RemoteNormalizer::normalize_many(
    std::span<const std::string> raws, NormalizationMode mode) const {
  using Item = Result<NormalizationResult, NormalizeError>;
  std::vector<std::optional<Item>> slots(raws.size());
  std::atomic<std::size_t> next{0};

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(cfg_.max_inflight, 1)),
                            raws.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([this, &raws, &slots, &next, mode] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= raws.size()) return;
        slots[i] = normalize(raws[i], mode);  // result keyed by input index
      }
    });
  }
  for (auto& t : pool) t.join();

  std::vector<Item> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

Result<NormalizationResult, NormalizeError> FixtureNormalizer::normalize(
    std::string_view raw, NormalizationMode mode) const {
  const FixtureStore::Record* rec = store_.find(mode, raw);
  if (rec == nullptr) {
    return NormalizeError{NormalizeError::Kind::FixtureMiss,
                          "no recorded response for key " + fixture_key(mode, raw)};
  }
  return parse_llm_response(rec->response, mode);
}

Result<NormalizationResult, NormalizeError> normalize_argument(
    std::string_view raw, NormalizationMode mode, NormalizationEngine engine,
    const NormalizationContext& ctx) {
  if (text::trim(raw).empty())
    return NormalizeError{NormalizeError::Kind::EmptyInput, "empty argument"};

  switch (engine) {
    case NormalizationEngine::Rules:
      if (mode != NormalizationMode::EnglishNorm) {
        return NormalizeError{NormalizeError::Kind::UnsupportedMode,
                              "rules engine supports english-norm only"};
      }
      return normalize_argument_rules(raw);
    case NormalizationEngine::Fixture:
      if (ctx.fixtures == nullptr) {
        return NormalizeError{NormalizeError::Kind::Config, "no fixture store configured"};
      }
      return FixtureNormalizer(*ctx.fixtures).normalize(raw, mode);
    case NormalizationEngine::Remote: {
      if (ctx.remote == nullptr || ctx.prompts == nullptr) {
        return NormalizeError{NormalizeError::Kind::Config,
                              "remote engine needs endpoint config and prompt templates"};
      }
      return RemoteNormalizer(*ctx.remote, *ctx.prompts).normalize(raw, mode);
    }
  }
  return NormalizeError{NormalizeError::Kind::Config, "unknown engine"};
}

}  // namespace syllo
