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

#include "syllo/parser.hpp"

#include <array>
#include <optional>
#include <sstream>

#include "syllo/text.hpp"

namespace syllo {

std::string ParseFailure::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::NotAEIO:
      os << "not a categorical sentence: \"" << offending_text << "\"";
      break;
    case Kind::WrongSentenceCount:
      os << "expected at least 2 sentences, found " << found;
      break;
    case Kind::EmptyTerm:
      os << "empty term in: \"" << offending_text << "\"";
      break;
  }
  return os.str();
}

namespace {

constexpr std::array<std::string_view, 4> kConnectors = {"therefore", "thus",
                                                         "hence", "so"};

std::string strip_leading_connector(std::string s) {
  for (std::string_view c : kConnectors) {
    if (s.size() < c.size() || s.compare(0, c.size(), c) != 0) continue;
    std::string_view rest = std::string_view(s).substr(c.size());
    if (!rest.empty() && rest.front() == ',') rest.remove_prefix(1);
    else if (!rest.empty() && rest.front() != ' ') continue;  // e.g. "south..."
    return std::string(text::trim(rest));
  }
  return s;
}

std::string replace_is_tokens(const std::string& s) {
  auto toks = text::tokens(s);
  for (auto& t : toks) {
    if (t == "is") t = "are";
  }
  return text::join(toks, " ");
}

}  // namespace

std::string normalize_surface(std::string_view raw) {
  std::string s = text::collapse_whitespace(text::to_lower_ascii(raw));
  if (!s.empty() && s.back() == '.') {
    s.pop_back();
    s = std::string(text::trim(s));
  }
  s = strip_leading_connector(std::move(s));
  return replace_is_tokens(s);
}

namespace {

// Captures X and Y from "<quantifier> X <separator> Y" using the final
// occurrence of the separator, so a subject may itself contain the
// separator text but a predicate may not.
std::optional<std::pair<std::string_view, std::string_view>> capture(
    std::string_view sentence, std::string_view prefix, std::string_view separator) {
  if (sentence.size() <= prefix.size() ||
      sentence.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;
  std::string_view rest = sentence.substr(prefix.size());
  std::size_t pos = rest.rfind(separator);
  if (pos == std::string_view::npos) return std::nullopt;
  return std::make_pair(rest.substr(0, pos), rest.substr(pos + separator.size()));
}

}  // namespace

Result<Proposition, ParseFailure> match_aeio(std::string_view sentence) {
  struct Pattern {
    std::string_view prefix;
    std::string_view separator;
    Form form;
  };
  // O before I: "some ... are not ..." must never parse as I.
  static constexpr std::array<Pattern, 4> kPatterns = {{
      {"all ", " are ", Form::A},
      {"no ", " are ", Form::E},
      {"some ", " are not ", Form::O},
      {"some ", " are ", Form::I},
  }};

  for (const auto& pat : kPatterns) {
    auto captured = capture(sentence, pat.prefix, pat.separator);
    if (!captured) continue;
    std::string_view x = text::trim(captured->first);
    std::string_view y = text::trim(captured->second);
    if (x.empty() || y.empty()) {
      return ParseFailure{ParseFailure::Kind::EmptyTerm, std::string(sentence)};
    }
    return Proposition{pat.form, Term{x}, Term{y}};
  }
  return ParseFailure{ParseFailure::Kind::NotAEIO, std::string(sentence)};
}

Result<Syllogism, ParseFailure> parse_canonical(std::string_view text_in) {
  auto segments = text::split_non_empty(text_in, '.');
  // Segments are parsed before the count check so an unparseable sentence
  // reports NotAEIO rather than a count complaint.
  std::vector<Proposition> props;
  props.reserve(segments.size());
  for (const auto& seg : segments) {
    auto parsed = match_aeio(normalize_surface(seg));
    if (!parsed.ok()) return parsed.error();
    props.push_back(parsed.value());
  }
  if (props.size() < 2) {
    return ParseFailure{ParseFailure::Kind::WrongSentenceCount,
                        std::string(text_in), static_cast<int>(props.size())};
  }
  Proposition conclusion = props.back();
  props.pop_back();
  return Syllogism{std::move(props), std::move(conclusion)};
}

std::string emit_proposition(const Proposition& p) {
  const std::string& s = p.subject.str();
  const std::string& y = p.predicate.str();
  if (s.find('.') != std::string::npos || y.find('.') != std::string::npos)
    throw std::invalid_argument("emit: term contains the sentence delimiter '.'");
  switch (p.form) {
    case Form::A: return "all " + s + " are " + y;
    case Form::E: return "no " + s + " are " + y;
    case Form::I: return "some " + s + " are " + y;
    case Form::O: return "some " + s + " are not " + y;
  }
  throw std::logic_error("unreachable form");
}

std::string emit_canonical(const Syllogism& s) {
  std::string out;
  for (const auto& p : s.premises()) {
    out += emit_proposition(p);
    out += ". ";
  }
  out += emit_proposition(s.conclusion());
  out += '.';
  return out;
}

}  // namespace syllo
