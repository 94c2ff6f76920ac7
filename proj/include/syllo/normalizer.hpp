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

#ifndef SYLLO_NORMALIZER_HPP
#define SYLLO_NORMALIZER_HPP

#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "syllo/result.hpp"
#include "syllo/types.hpp"

namespace syllo {

enum class NormalizationMode { EnglishNorm, EpnValidity, EpnRelevance };
enum class NormalizationEngine { Rules, Remote, Fixture };

std::string_view mode_name(NormalizationMode m);
std::optional<NormalizationMode> mode_from_name(std::string_view s);
std::string_view engine_name(NormalizationEngine e);
std::optional<NormalizationEngine> engine_from_name(std::string_view s);

/// One ordered rewrite rule: an anchored surface template over
/// surface-normalized text, capturing subject and predicate, plus the
/// categorical form it rewrites to. Lower rank wins; the rank is explicit
/// data so the rule list's insertion order never matters.
struct ParaphraseRule {
  int rank;
  std::string pattern_text;
  Form target_form;
  std::string note;  // family / polarity note, e.g. "double negative -> A"
  std::regex pattern;
};

/// The built-in English paraphrase table: quantifier families for
/// all/every/each/any(thing), no/none/never/not-a-single/there-are-no,
/// some/a-few/there-exist/a-portion, some-not/not-all/at-least-one-not,
/// and the double negatives that collapse to A.
const std::vector<ParaphraseRule>& builtin_paraphrase_rules();

struct NotNormalizable {
  std::string sentence;
  std::string reason;
};

/// Rule-based English normalization of one sentence: surface cleanup,
/// first matching paraphrase rule (captured terms are stripped of leading
/// articles), rewrite to canonical form, then the canonical matcher.
/// Sentences that are already canonical pass through the matcher verbatim.
Result<Proposition, NotNormalizable> normalize_en(std::string_view raw_sentence);

/// Same, against an explicit rule table (sorted by rank internally).
Result<Proposition, NotNormalizable> normalize_en(std::string_view raw_sentence,
                                                  std::vector<ParaphraseRule> rules);

/// Symbol abstraction: the three distinct terms of an argument mapped to
/// A/B/C by order of first appearance (subjects before predicates,
/// sentence order).
class TermMapping {
 public:
  static std::optional<TermMapping> from_propositions(
      const std::vector<Proposition>& props);

  std::optional<char> symbol_for(const Term& t) const;
  std::optional<Term> term_for(char symbol) const;
  const std::vector<std::pair<char, Term>>& entries() const { return entries_; }
  std::string render() const;  // "A:animal,B:feline,C:cats"

 private:
  std::vector<std::pair<char, Term>> entries_;
};

struct NormalizationResult {
  std::string reasoning;
  std::optional<TermMapping> mapped;
  std::string parsed;  // canonical argument string
  std::optional<std::string> detected_language;
  bool well_formed = false;  // parsed survives parse_canonical
  /// Reported, never repaired: EPN term-distribution violations (each term
  /// of a three-sentence argument should occur in exactly 2 sentences).
  std::vector<std::string> diagnostics;
};

/// Fills diagnostics for a parsed three-sentence EPN result.
std::vector<std::string> term_distribution_report(std::string_view canonical_argument);

struct NormalizeError {
  enum class Kind {
    EmptyInput,
    NotNormalizable,
    UnsupportedMode,   // rules engine handles English normalization only
    Transport,
    MalformedResponse,
    FixtureMiss,
    Config,
  };
  Kind kind;
  std::string message;
};

/// Rule-based whole-argument normalization (English-only): splits on ".",
/// normalizes every sentence, abstracts terms to A/B/C when the argument
/// spans exactly three, and re-emits the canonical string.
Result<NormalizationResult, NormalizeError> normalize_argument_rules(std::string_view raw);

}  // namespace syllo

#endif  // SYLLO_NORMALIZER_HPP
