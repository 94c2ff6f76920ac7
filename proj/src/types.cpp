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

#include "syllo/types.hpp"

#include <sstream>
#include <stdexcept>

#include "syllo/text.hpp"

namespace syllo {

char form_letter(Form f) {
  switch (f) {
    case Form::A: return 'A';
    case Form::E: return 'E';
    case Form::I: return 'I';
    case Form::O: return 'O';
  }
  throw std::logic_error("unreachable form");
}

std::optional<Form> form_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Form::A;
    case 'E': case 'e': return Form::E;
    case 'I': case 'i': return Form::I;
    case 'O': case 'o': return Form::O;
    default: return std::nullopt;
  }
}

Term::Term(std::string_view raw)
    : text_(text::collapse_whitespace(text::to_lower_ascii(raw))) {
  if (text_.empty()) throw std::invalid_argument("Term: empty after normalization");
}

Syllogism::Syllogism(std::vector<Proposition> premises, Proposition conclusion)
    : premises_(std::move(premises)), conclusion_(std::move(conclusion)) {
  if (premises_.empty()) throw std::invalid_argument("Syllogism: needs at least one premise");
}

std::string Mood::str() const {
  return {form_letter(major), form_letter(minor), form_letter(conclusion)};
}

std::optional<Mood> Mood::parse(std::string_view s) {
  if (s.size() != 3) return std::nullopt;
  auto a = form_from_letter(s[0]);
  auto b = form_from_letter(s[1]);
  auto c = form_from_letter(s[2]);
  if (!a || !b || !c) return std::nullopt;
  return Mood{*a, *b, *c};
}

Mood Mood::from_index(int idx) {
  if (idx < 0 || idx > 63) throw std::invalid_argument("Mood index out of range");
  return Mood{static_cast<Form>(idx / 16), static_cast<Form>((idx / 4) % 4),
              static_cast<Form>(idx % 4)};
}

Figure::Figure(int value) : value_(value) {
  if (value < 1 || value > 4) throw std::invalid_argument("Figure: value must be in 1..4");
}

StructuredSyllogism::StructuredSyllogism(Syllogism source, Term minor_term,
                                         Term major_term, Term middle_term,
                                         int major_index, int minor_index,
                                         Mood mood, Figure figure)
    : source_(std::move(source)),
      s_(std::move(minor_term)),
      p_(std::move(major_term)),
      m_(std::move(middle_term)),
      major_index_(major_index),
      minor_index_(minor_index),
      mood_(mood),
      figure_(figure) {
  if (source_.premises().size() != 2)
    throw std::invalid_argument("StructuredSyllogism: exactly 2 premises required");
  if (s_ == p_ || s_ == m_ || p_ == m_)
    throw std::invalid_argument("StructuredSyllogism: role terms must be pairwise distinct");
  if (major_index_ == minor_index_ || (major_index_ | minor_index_) != 1 ||
      (major_index_ & minor_index_) != 0)
    throw std::invalid_argument("StructuredSyllogism: indices must be {0,1} and distinct");
  const auto& prem = source_.premises();
  if (!prem[static_cast<std::size_t>(major_index_)].mentions(p_))
    throw std::invalid_argument("StructuredSyllogism: major premise must mention P");
  if (!prem[static_cast<std::size_t>(minor_index_)].mentions(s_))
    throw std::invalid_argument("StructuredSyllogism: minor premise must mention S");
  if (!prem[0].mentions(m_) || !prem[1].mentions(m_))
    throw std::invalid_argument("StructuredSyllogism: middle term must occur in both premises");
  if (source_.conclusion().mentions(m_))
    throw std::invalid_argument("StructuredSyllogism: middle term must not occur in the conclusion");
}

const std::vector<TrivialKind>& all_trivial_kinds() {
  static const std::vector<TrivialKind> kinds = {
      TrivialKind::PetitioPrincipii, TrivialKind::ConversionE,
      TrivialKind::ConversionI,      TrivialKind::SubalternationAI,
      TrivialKind::SubalternationEO, TrivialKind::Explosion};
  return kinds;
}

std::string_view trivial_kind_name(TrivialKind k) {
  switch (k) {
    case TrivialKind::PetitioPrincipii: return "petitio";
    case TrivialKind::ConversionE: return "conversion-e";
    case TrivialKind::ConversionI: return "conversion-i";
    case TrivialKind::SubalternationAI: return "subalternation-ai";
    case TrivialKind::SubalternationEO: return "subalternation-eo";
    case TrivialKind::Explosion: return "explosion";
  }
  throw std::logic_error("unreachable trivial kind");
}

std::optional<TrivialKind> trivial_kind_from_name(std::string_view name) {
  for (TrivialKind k : all_trivial_kinds()) {
    if (trivial_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

namespace {
std::string_view trivial_kind_pretty(TrivialKind k) {
  switch (k) {
    case TrivialKind::PetitioPrincipii: return "petitio principii";
    case TrivialKind::ConversionE: return "E-conversion";
    case TrivialKind::ConversionI: return "I-conversion";
    case TrivialKind::SubalternationAI: return "subalternation A->I";
    case TrivialKind::SubalternationEO: return "subalternation E->O";
    case TrivialKind::Explosion: return "explosion";
  }
  return "?";
}
}  // namespace

ValidityVerdict ValidityVerdict::mood_figure(Mood m, Figure f, bool valid) {
  return ValidityVerdict(valid, MoodFigureBasis{m, f});
}

ValidityVerdict ValidityVerdict::trivial(TrivialKind k) {
  return ValidityVerdict(true, TrivialBasis{k});
}

ValidityVerdict ValidityVerdict::malformed(std::string reason) {
  return ValidityVerdict(false, MalformedBasis{std::move(reason)});
}

bool ValidityVerdict::is_mood_figure() const noexcept {
  return std::holds_alternative<MoodFigureBasis>(basis_);
}
bool ValidityVerdict::is_trivial() const noexcept {
  return std::holds_alternative<TrivialBasis>(basis_);
}
bool ValidityVerdict::is_malformed() const noexcept {
  return std::holds_alternative<MalformedBasis>(basis_);
}

std::string ValidityVerdict::describe() const {
  std::ostringstream os;
  os << (valid_ ? "valid" : "invalid") << " (";
  if (const auto* mf = std::get_if<MoodFigureBasis>(&basis_)) {
    os << mf->mood.str() << '-' << mf->figure.value();
  } else if (const auto* tv = std::get_if<TrivialBasis>(&basis_)) {
    os << "trivial: " << trivial_kind_pretty(tv->kind);
  } else {
    os << "malformed: " << std::get<MalformedBasis>(basis_).reason;
  }
  os << ')';
  return os.str();
}

std::string RelevanceSet::str() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (int i : indices) {
    if (!first) os << ", ";
    first = false;
    os << i;
  }
  os << ']';
  return os.str();
}

}  // namespace syllo
