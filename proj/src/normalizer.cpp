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

#include "syllo/normalizer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "syllo/parser.hpp"
#include "syllo/text.hpp"

namespace syllo {

std::string_view mode_name(NormalizationMode m) {
  switch (m) {
    case NormalizationMode::EnglishNorm: return "english-norm";
    case NormalizationMode::EpnValidity: return "epn-validity";
    case NormalizationMode::EpnRelevance: return "epn-relevance";
  }
  return "?";
}

std::optional<NormalizationMode> mode_from_name(std::string_view s) {
  if (s == "english-norm") return NormalizationMode::EnglishNorm;
  if (s == "epn-validity") return NormalizationMode::EpnValidity;
  if (s == "epn-relevance") return NormalizationMode::EpnRelevance;
  return std::nullopt;
}

std::string_view engine_name(NormalizationEngine e) {
  switch (e) {
    case NormalizationEngine::Rules: return "rules";
    case NormalizationEngine::Remote: return "remote";
    case NormalizationEngine::Fixture: return "fixture";
  }
  return "?";
}

std::optional<NormalizationEngine> engine_from_name(std::string_view s) {
  if (s == "rules") return NormalizationEngine::Rules;
  if (s == "remote") return NormalizationEngine::Remote;
  if (s == "fixture") return NormalizationEngine::Fixture;
  return std::nullopt;
}

namespace {

ParaphraseRule make_rule(int rank, std::string pattern, Form target, std::string note) {
  std::regex re(pattern, std::regex::ECMAScript);
  return ParaphraseRule{rank, std::move(pattern), target, std::move(note), std::move(re)};
}

// Subject slots in generic rules must not swallow a quantifier, so
// quantified sentences keep falling through to the canonical matcher.
constexpr const char* kBareSubject = "((?!all |no |some |every |each |any|not ).+)";

std::vector<ParaphraseRule> make_builtin_rules() {
  std::vector<ParaphraseRule> r;
  std::string bare = kBareSubject;

  // Double negatives collapse to A; they must outrank the plain
  // "there are no" E-rules.
  r.push_back(make_rule(10, "^there are no (.+) that are not (.+)$", Form::A, "double negative -> A"));
  r.push_back(make_rule(11, "^there are no (.+) which are not (.+)$", Form::A, "double negative -> A"));
  r.push_back(make_rule(12, "^no (.+) are not (.+)$", Form::A, "double negative -> A"));

  r.push_back(make_rule(20, "^there are no (.+) that are (.+)$", Form::E, "there-are-no -> E"));
  r.push_back(make_rule(21, "^there are no (.+) which are (.+)$", Form::E, "there-are-no -> E"));
  r.push_back(make_rule(22, "^not a single (.+) are (.+)$", Form::E, "not-a-single -> E"));
  r.push_back(make_rule(23, "^none of the (.+) are (.+)$", Form::E, "none -> E"));
  r.push_back(make_rule(24, "^none of (.+) are (.+)$", Form::E, "none -> E"));

  // O variants come before their I counterparts, mirroring the canonical
  // matcher's O-before-I priority.
  r.push_back(make_rule(30, "^not all (.+) are (.+)$", Form::O, "not-all -> O"));
  r.push_back(make_rule(31, "^not every (.+) are (.+)$", Form::O, "not-every -> O"));
  r.push_back(make_rule(32, "^at least one (.+) are not (.+)$", Form::O, "at-least-one-not -> O"));
  r.push_back(make_rule(33, "^a few (.+) are not (.+)$", Form::O, "a-few-not -> O"));
  r.push_back(make_rule(34, "^a portion of (.+) are not (.+)$", Form::O, "a-portion-not -> O"));
  r.push_back(make_rule(35, "^there exist (.+) that are not (.+)$", Form::O, "there-exist-not -> O"));
  r.push_back(make_rule(36, "^there are some (.+) that are not (.+)$", Form::O, "there-are-some-not -> O"));

  r.push_back(make_rule(40, "^a few (.+) are (.+)$", Form::I, "a-few -> I"));
  r.push_back(make_rule(41, "^a portion of (.+) are (.+)$", Form::I, "a-portion -> I"));
  r.push_back(make_rule(42, "^there exist (.+) that are (.+)$", Form::I, "there-exist -> I"));
  r.push_back(make_rule(43, "^there are some (.+) that are (.+)$", Form::I, "there-are-some -> I"));
  r.push_back(make_rule(44, "^something that are (.+) are (.+)$", Form::I, "something-that-is -> I"));

  r.push_back(make_rule(50, "^every single (.+) are (.+)$", Form::A, "every-single -> A"));
  r.push_back(make_rule(51, "^anything that are (.+) are (.+)$", Form::A, "anything-that-is -> A"));
  r.push_back(make_rule(52, "^everything that are (.+) are (.+)$", Form::A, "everything-that-is -> A"));
  r.push_back(make_rule(53, "^whatever are (.+) are (.+)$", Form::A, "whatever-is -> A"));
  r.push_back(make_rule(54, "^every (.+) are (.+)$", Form::A, "every -> A"));
  r.push_back(make_rule(55, "^each (.+) are (.+)$", Form::A, "each -> A"));
  r.push_back(make_rule(56, "^any (.+) are (.+)$", Form::A, "any -> A"));
  r.push_back(make_rule(57, "^the entire set of (.+) are contained within the set of (.+)$",
                        Form::A, "subset -> A"));

  // Generic-subject rules run last among the paraphrases.
  r.push_back(make_rule(60, "^" + bare + " are a subset of (.+)$", Form::A, "subset -> A"));
  r.push_back(make_rule(61, "^" + bare + " are subset of (.+)$", Form::A, "subset -> A"));
  r.push_back(make_rule(62, "^" + bare + " cannot be (.+)$", Form::E, "cannot-be -> E"));
  r.push_back(make_rule(63, "^" + bare + " are never (.+)$", Form::E, "is-never -> E"));

  std::sort(r.begin(), r.end(),
            [](const ParaphraseRule& a, const ParaphraseRule& b) { return a.rank < b.rank; });
  return r;
}

// Captured paraphrase terms shed leading articles ("a kitten" -> "kitten");
// canonical sentences never pass through here, so the exact-match parser
// keeps its verbatim terms.
std::string clean_captured_term(std::string_view captured) {
  auto toks = text::tokens(captured);
  std::size_t drop = 0;
  while (drop + 1 < toks.size()) {
    const std::string& t = toks[drop];
    if (t == "a" || t == "an" || t == "the" || t == "also") ++drop;
    else break;
  }
  toks.erase(toks.begin(), toks.begin() + static_cast<std::ptrdiff_t>(drop));
  return text::join(toks, " ");
}

std::string render_canonical(Form f, const std::string& x, const std::string& y) {
  switch (f) {
    case Form::A: return "all " + x + " are " + y;
    case Form::E: return "no " + x + " are " + y;
    case Form::I: return "some " + x + " are " + y;
    case Form::O: return "some " + x + " are not " + y;
  }
  return {};
}

}  // namespace

const std::vector<ParaphraseRule>& builtin_paraphrase_rules() {
  static const std::vector<ParaphraseRule> rules = make_builtin_rules();
  return rules;
}

namespace {

Result<Proposition, NotNormalizable> normalize_en_sorted(
    std::string_view raw_sentence, const std::vector<ParaphraseRule>& rules) {
  const std::string surface = normalize_surface(raw_sentence);
  if (surface.empty())
    return NotNormalizable{std::string(raw_sentence), "empty sentence"};

  for (const auto& rule : rules) {
    std::smatch m;
    if (!std::regex_match(surface, m, rule.pattern)) continue;
    const std::string x = clean_captured_term(m[1].str());
    const std::string y = clean_captured_term(m[2].str());
    if (x.empty() || y.empty())
      return NotNormalizable{surface, "paraphrase captured an empty term"};
    auto parsed = match_aeio(render_canonical(rule.target_form, x, y));
    if (!parsed.ok()) return NotNormalizable{surface, parsed.error().describe()};
    return parsed.value();
  }

  auto parsed = match_aeio(surface);
  if (parsed.ok()) return parsed.value();
  return NotNormalizable{surface, "no paraphrase rule matches"};
}

}  // namespace

Result<Proposition, NotNormalizable> normalize_en(std::string_view raw_sentence,
                                                  std::vector<ParaphraseRule> rules) {
  std::sort(rules.begin(), rules.end(),
            [](const ParaphraseRule& a, const ParaphraseRule& b) { return a.rank < b.rank; });
  return normalize_en_sorted(raw_sentence, rules);
}

Result<Proposition, NotNormalizable> normalize_en(std::string_view raw_sentence) {
  return normalize_en_sorted(raw_sentence, builtin_paraphrase_rules());
}

std::optional<TermMapping> TermMapping::from_propositions(
    const std::vector<Proposition>& props) {
  std::vector<Term> order;
  auto note = [&order](const Term& t) {
    if (std::find(order.begin(), order.end(), t) == order.end()) order.push_back(t);
  };
  for (const auto& p : props) {
    note(p.subject);
    note(p.predicate);
  }
  if (order.size() != 3) return std::nullopt;
  TermMapping m;
  for (std::size_t i = 0; i < 3; ++i) {
    m.entries_.emplace_back(static_cast<char>('A' + i), order[i]);
  }
  return m;
}

std::optional<char> TermMapping::symbol_for(const Term& t) const {
  for (const auto& [sym, term] : entries_) {
    if (term == t) return sym;
  }
  return std::nullopt;
}

std::optional<Term> TermMapping::term_for(char symbol) const {
  for (const auto& [sym, term] : entries_) {
    if (sym == symbol) return term;
  }
  return std::nullopt;
}

std::string TermMapping::render() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i].first << ':' << entries_[i].second.str();
  }
  return os.str();
}

std::vector<std::string> term_distribution_report(std::string_view canonical_argument) {
  std::vector<std::string> report;
  auto parsed = parse_canonical(canonical_argument);
  if (!parsed.ok()) return report;
  const Syllogism& s = parsed.value();
  if (s.premises().size() != 2) return report;

  std::vector<Proposition> sentences = s.premises();
  sentences.push_back(s.conclusion());
  std::map<Term, int> sentence_count;
  for (const auto& p : sentences) {
    sentence_count[p.subject] += 1;
    if (p.predicate != p.subject) sentence_count[p.predicate] += 1;
  }
  for (const auto& [term, count] : sentence_count) {
    if (count != 2) {
      report.push_back("term '" + term.str() + "' appears in " +
                       std::to_string(count) + " of 3 sentences (expected 2)");
    }
  }
  return report;
}

Result<NormalizationResult, NormalizeError> normalize_argument_rules(std::string_view raw) {
  if (text::trim(raw).empty())
    return NormalizeError{NormalizeError::Kind::EmptyInput, "empty argument"};

  auto segments = text::split_non_empty(raw, '.');
  if (segments.size() < 2) {
    return NormalizeError{NormalizeError::Kind::NotNormalizable,
                          "expected at least 2 sentences"};
  }
  std::vector<Proposition> props;
  props.reserve(segments.size());
  for (const auto& seg : segments) {
    auto p = normalize_en(seg);
    if (!p.ok()) {
      return NormalizeError{NormalizeError::Kind::NotNormalizable,
                            p.error().reason + ": \"" + p.error().sentence + "\""};
    }
    props.push_back(p.value());
  }

  NormalizationResult out;
  out.mapped = TermMapping::from_propositions(props);

  std::vector<Proposition> emitted = props;
  if (out.mapped) {
    for (auto& p : emitted) {
      char s = *out.mapped->symbol_for(p.subject);
      char y = *out.mapped->symbol_for(p.predicate);
      p.subject = Term{std::string(1, s)};
      p.predicate = Term{std::string(1, y)};
    }
  }
  Proposition conclusion = emitted.back();
  emitted.pop_back();
  out.parsed = emit_canonical(Syllogism{std::move(emitted), std::move(conclusion)});

  std::ostringstream reasoning;
  reasoning << "rule-based normalization: " << segments.size() << " sentences; forms ";
  for (const auto& p : props) reasoning << form_letter(p.form);
  reasoning << (out.mapped ? "; terms " + out.mapped->render()
                           : "; term count != 3, surface terms kept");
  out.reasoning = reasoning.str();
  out.well_formed = parse_canonical(out.parsed).ok();
  return out;
}

}  // namespace syllo
