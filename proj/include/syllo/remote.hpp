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

#ifndef SYLLO_REMOTE_HPP
#define SYLLO_REMOTE_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syllo/normalizer.hpp"
#include "syllo/result.hpp"

namespace syllo {

/// Endpoint settings for the remote normalizer. Never hard-coded: read
/// from the environment (SYLLO_REMOTE_URL, SYLLO_REMOTE_PATH,
/// SYLLO_REMOTE_API_KEY, SYLLO_REMOTE_MODEL, SYLLO_REMOTE_TIMEOUT_MS,
/// SYLLO_REMOTE_MAX_INFLIGHT) or from a JSON config file with the same
/// lowercase keys minus the prefix.
struct RemoteConfig {
  std::string url;   // scheme://host[:port]
  std::string path = "/v1/complete";
  std::string api_key;  // optional; sent as a bearer token when set
  std::string model;
  int timeout_ms = 30000;
  int max_inflight = 4;

  static std::optional<RemoteConfig> from_env();
  static RemoteConfig from_file(const std::filesystem::path& p);
};

/// Prompt templates shipped as text assets, one file per mode. Rendering
/// substitutes {syllogism} and collapses doubled braces, reproducing the
/// exact wire text.
class PromptLibrary {
 public:
  explicit PromptLibrary(std::filesystem::path prompt_dir);

  static std::string_view template_id(NormalizationMode m);
  const std::string& template_text(NormalizationMode m) const;
  std::string render(NormalizationMode m, std::string_view argument) const;

 private:
  std::map<NormalizationMode, std::string> templates_;
};

/// Replay key: stable hash over (mode, prompt-template id, raw text).
std::string fixture_key(NormalizationMode mode, std::string_view raw);

/// Recorded remote responses, one JSON object per line with fields
/// {key, mode, raw, response}. Lookups are by recomputed key; a stored
/// key that does not match its own fields is rejected at load time.
class FixtureStore {
 public:
  struct Record {
    std::string key;
    NormalizationMode mode;
    std::string raw;
    std::string response;
  };

  static FixtureStore load(const std::filesystem::path& p);
  static FixtureStore in_memory(std::vector<Record> records);

  const Record* find(NormalizationMode mode, std::string_view raw) const;
  std::size_t size() const { return by_key_.size(); }

  /// Appends one well-formed record line to a fixture file.
  static void append_record(const std::filesystem::path& p, NormalizationMode mode,
                            std::string_view raw, std::string_view response);

 private:
  std::map<std::string, Record> by_key_;
};

/// Pulls the mode's structured object out of a completion response body:
/// the body itself, a code-fenced block, a string field of a JSON wrapper,
/// or any brace-balanced substring — first candidate with all required
/// keys wins.
Result<NormalizationResult, NormalizeError> parse_llm_response(std::string_view body,
                                                               NormalizationMode mode);

/// Request body for one completion call; decoding is pinned deterministic
/// (temperature 0, seed 0).
std::string build_request_body(std::string_view model, std::string_view prompt);

/// HTTP port mirroring the remote normalization step.
class RemoteNormalizer {
 public:
  RemoteNormalizer(RemoteConfig cfg, const PromptLibrary& prompts);

  Result<NormalizationResult, NormalizeError> normalize(std::string_view raw,
                                                        NormalizationMode mode) const;

  /// Bounded-concurrency batch: at most cfg.max_inflight requests in
  /// flight; results are positional, never completion-ordered.
  std::vector<Result<NormalizationResult, NormalizeError>> normalize_many(
      std::span<const std::string> raws, NormalizationMode mode) const;

 private:
  RemoteConfig cfg_;
  const PromptLibrary& prompts_;
};

/// Replay engine over recorded responses; misses fail loudly.
class FixtureNormalizer {
 public:
  explicit FixtureNormalizer(const FixtureStore& store) : store_(store) {}

  Result<NormalizationResult, NormalizeError> normalize(std::string_view raw,
                                                        NormalizationMode mode) const;

 private:
  const FixtureStore& store_;
};

struct NormalizationContext {
  const FixtureStore* fixtures = nullptr;
  const PromptLibrary* prompts = nullptr;
  const RemoteConfig* remote = nullptr;
};

/// Engine dispatcher: rules (English-only, deterministic), remote (HTTP
/// port), or fixture (replay).
Result<NormalizationResult, NormalizeError> normalize_argument(
    std::string_view raw, NormalizationMode mode, NormalizationEngine engine,
    const NormalizationContext& ctx = {});

}  // namespace syllo

#endif  // SYLLO_REMOTE_HPP
