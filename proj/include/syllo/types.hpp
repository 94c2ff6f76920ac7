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

#ifndef SYLLO_TYPES_HPP
#define SYLLO_TYPES_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace syllo {

/// The four categorical proposition forms.
///   A  "all S are P"        universal affirmative
///   E  "no S are P"         universal negative
///   I  "some S are P"       particular affirmative
///   O  "some S are not P"   particular negative
enum class Form : std::uint8_t { A = 0, E = 1, I = 2, O = 3 };

constexpr bool is_universal(Form f) { return f == Form::A || f == Form::E; }
constexpr bool is_particular(Form f) { return !is_universal(f); }
constexpr bool is_negative(Form f) { return f == Form::E || f == Form::O; }
constexpr bool is_affirmative(Form f) { return !is_negative(f); }

char form_letter(Form f);
std::optional<Form> form_from_letter(char c);

/// A category term. Construction normalizes the text: ASCII-lowered,
/// trimmed, internal whitespace collapsed. Equality is byte equality of
/// the normalized string; there is no lemmatization and no
/// singular/plural merging.
class Term {
 public:
  explicit Term(std::string_view raw);  // throws std::invalid_argument if empty

  const std::string& str() const noexcept { return text_; }
  bool operator==(const Term&) const = default;
  auto operator<=>(const Term&) const = default;

 private:
  std::string text_;
};

struct Proposition {
  Form form;
  Term subject;
  Term predicate;

  bool mentions(const Term& t) const { return subject == t || predicate == t; }
  bool operator==(const Proposition&) const = default;
  auto operator<=>(const Proposition&) const = default;
};

/// An argument: ordered premises (at least one) plus a conclusion.
/// Premise indices are 0-based everywhere.
class Syllogism {
 public:
  Syllogism(std::vector<Proposition> premises, Proposition conclusion);

  const std::vector<Proposition>& premises() const noexcept { return premises_; }
  const Proposition& conclusion() const noexcept { return conclusion_; }

  bool operator==(const Syllogism&) const = default;

 private:
  std::vector<Proposition> premises_;
  Proposition conclusion_;
};

/// Ordered triple of forms in major-minor-conclusion order, e.g. "AAA".
struct Mood {
  Form major;
  Form minor;
  Form conclusion;

  std::string str() const;
  static std::optional<Mood> parse(std::string_view s);

  /// Dense index in 0..63: major*16 + minor*4 + conclusion.
  int index() const {
    return static_cast<int>(major) * 16 + static_cast<int>(minor) * 4 +
           static_cast<int>(conclusion);
  }
  static Mood from_index(int idx);

  bool operator==(const Mood&) const = default;
  auto operator<=>(const Mood&) const = default;
};

/// One of the four canonical middle-term configurations.
class Figure {
 public:
  explicit Figure(int value);  // throws std::invalid_argument unless 1..4

  int value() const noexcept { return value_; }
  bool operator==(const Figure&) const = default;
  auto operator<=>(const Figure&) const = default;

 private:
  int value_;
};

/// Result of structural analysis of a two-premise syllogism: role terms
/// (S = minor/conclusion subject, P = major/conclusion predicate, M =
/// middle), which premise is major/minor, and the derived mood and figure.
class StructuredSyllogism {
 public:
  StructuredSyllogism(Syllogism source, Term minor_term, Term major_term,
                      Term middle_term, int major_index, int minor_index,
                      Mood mood, Figure figure);

  const Syllogism& source() const noexcept { return source_; }
  const Term& minor_term() const noexcept { return s_; }   // S
  const Term& major_term() const noexcept { return p_; }   // P
  const Term& middle_term() const noexcept { return m_; }  // M
  int major_index() const noexcept { return major_index_; }
  int minor_index() const noexcept { return minor_index_; }
  const Mood& mood() const noexcept { return mood_; }
  const Figure& figure() const noexcept { return figure_; }

 private:
  Syllogism source_;
  Term s_, p_, m_;
  int major_index_, minor_index_;
  Mood mood_;
  Figure figure_;
};

/// Validity that does not arise from the mood-figure interaction.
enum class TrivialKind : std::uint8_t {
  PetitioPrincipii,   // a premise restates the conclusion
  ConversionE,        // premise (E,x,y), conclusion (E,y,x)
  ConversionI,        // premise (I,x,y), conclusion (I,y,x)
  SubalternationAI,   // premise (A,x,y), conclusion (I,x,y); needs import
  SubalternationEO,   // premise (E,x,y), conclusion (O,x,y); needs import
  Explosion,          // contradictory premises entail anything
};

const std::vector<TrivialKind>& all_trivial_kinds();
std::string_view trivial_kind_name(TrivialKind k);
std::optional<TrivialKind> trivial_kind_from_name(std::string_view name);

struct MoodFigureBasis {
  Mood mood;
  Figure figure;
  bool operator==(const MoodFigureBasis&) const = default;
};
struct TrivialBasis {
  TrivialKind kind;
  bool operator==(const TrivialBasis&) const = default;
};
struct MalformedBasis {
  std::string reason;
  bool operator==(const MalformedBasis&) const = default;
};
using VerdictBasis = std::variant<MoodFigureBasis, TrivialBasis, MalformedBasis>;

/// valid/invalid plus how the verdict was reached. Factories keep the
/// basis invariants: Trivial is always valid, Malformed never is.
class ValidityVerdict {
 public:
  static ValidityVerdict mood_figure(Mood m, Figure f, bool valid);
  static ValidityVerdict trivial(TrivialKind k);
  static ValidityVerdict malformed(std::string reason);

  bool valid() const noexcept { return valid_; }
  const VerdictBasis& basis() const noexcept { return basis_; }

  bool is_mood_figure() const noexcept;
  bool is_trivial() const noexcept;
  bool is_malformed() const noexcept;

  /// e.g. "valid (AAA-1)", "invalid (AAA-2)",
  /// "valid (trivial: petitio principii)", "invalid (malformed: ...)".
  std::string describe() const;

  bool operator==(const ValidityVerdict&) const = default;

 private:
  ValidityVerdict(bool valid, VerdictBasis basis)
      : valid_(valid), basis_(std::move(basis)) {}
  bool valid_;
  VerdictBasis basis_;
};

/// 0-based indices of the premises required for the conclusion; empty by
/// convention for invalid arguments.
struct RelevanceSet {
  std::set<int> indices;

  std::string str() const;  // "[0, 4]"
  bool operator==(const RelevanceSet&) const = default;
};

}  // namespace syllo

#endif  // SYLLO_TYPES_HPP
