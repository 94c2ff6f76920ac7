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

#include "syllo/validity.hpp"

#include <sstream>
#include <stdexcept>

#include "syllo/analyzer.hpp"
#include "syllo/parser.hpp"

namespace syllo {

ValidityConfig ValidityConfig::without_import() {
  ValidityConfig cfg;
  cfg.existential_import = false;
  cfg.enabled_trivial_rules.erase(TrivialKind::SubalternationAI);
  cfg.enabled_trivial_rules.erase(TrivialKind::SubalternationEO);
  return cfg;
}

ValidityConfig ValidityConfig::no_trivial() {
  ValidityConfig cfg;
  cfg.enabled_trivial_rules.clear();
  return cfg;
}

namespace {

std::vector<Mood> row(std::initializer_list<const char*> moods) {
  std::vector<Mood> out;
  for (const char* m : moods) out.push_back(*Mood::parse(m));
  return out;
}

}  // namespace

ValidityTable::ValidityTable(std::vector<std::vector<Mood>> rows)
    : rows_(std::move(rows)) {
  if (rows_.size() != 4) throw std::logic_error("ValidityTable: 4 figures required");
  for (int fig = 1; fig <= 4; ++fig) {
    for (const Mood& m : rows_[static_cast<std::size_t>(fig - 1)]) {
      flat_.insert((fig - 1) * 64 + m.index());
    }
  }
}

const ValidityTable& ValidityTable::with_import() {
  static const ValidityTable table({
      row({"AAA", "EAE", "AII", "EIO", "AAI", "EAO"}),
      row({"EAE", "AEE", "EIO", "AOO", "EAO", "AEO"}),
      row({"AAI", "IAI", "AII", "EAO", "OAO", "EIO"}),
      row({"AAI", "AEE", "IAI", "EAO", "EIO", "AEO"}),
  });
  return table;
}

// The unconditionally valid subset; frozen from the finite-model oracle
// with existential_import=false (see the table/oracle equivalence tests).
const ValidityTable& ValidityTable::without_import() {
  static const ValidityTable table({
      row({"AAA", "EAE", "AII", "EIO"}),
      row({"EAE", "AEE", "EIO", "AOO"}),
      row({"IAI", "AII", "OAO", "EIO"}),
      row({"AEE", "IAI", "EIO"}),
  });
  return table;
}

bool ValidityTable::contains(const Mood& m, const Figure& f) const {
  return flat_.count((f.value() - 1) * 64 + m.index()) != 0;
}

int ValidityTable::size() const { return static_cast<int>(flat_.size()); }

const std::vector<Mood>& ValidityTable::moods_for(int figure) const {
  if (figure < 1 || figure > 4) throw std::invalid_argument("figure out of range");
  return rows_[static_cast<std::size_t>(figure - 1)];
}

std::string ValidityTable::render() const {
  std::ostringstream os;
  os << "figure  valid moods (major-minor-conclusion)\n";
  for (int fig = 1; fig <= 4; ++fig) {
    os << fig << "       ";
    const auto& moods = moods_for(fig);
    for (std::size_t i = 0; i < moods.size(); ++i) {
      if (i) os << ", ";
      os << moods[i].str();
    }
    os << '\n';
  }
  return os.str();
}

bool lookup_valid(const Mood& mood, const Figure& figure, const ValidityConfig& cfg) {
  const ValidityTable& table = cfg.existential_import
                                   ? ValidityTable::with_import()
                                   : ValidityTable::without_import();
  return table.contains(mood, figure);
}

namespace {

bool contradictory(const Proposition& a, const Proposition& b) {
  if (a.subject != b.subject || a.predicate != b.predicate) return false;
  return (a.form == Form::A && b.form == Form::O) ||
         (a.form == Form::O && b.form == Form::A) ||
         (a.form == Form::E && b.form == Form::I) ||
         (a.form == Form::I && b.form == Form::E);
}

std::optional<int> first_premise_matching(const Syllogism& s, Form premise_form,
                                          const Term& subj, const Term& pred) {
  const auto& prem = s.premises();
  for (std::size_t i = 0; i < prem.size(); ++i) {
    if (prem[i].form == premise_form && prem[i].subject == subj &&
        prem[i].predicate == pred)
      return static_cast<int>(i);
  }
  return std::nullopt;
}

}  // namespace

std::optional<TrivialKind> detect_trivial(const Syllogism& s, const ValidityConfig& cfg) {
  const Proposition& c = s.conclusion();

  if (cfg.trivial_rule_active(TrivialKind::PetitioPrincipii)) {
    for (const auto& p : s.premises()) {
      if (p == c) return TrivialKind::PetitioPrincipii;
    }
  }
  if (cfg.trivial_rule_active(TrivialKind::ConversionE) && c.form == Form::E) {
    if (first_premise_matching(s, Form::E, c.predicate, c.subject))
      return TrivialKind::ConversionE;
  }
  if (cfg.trivial_rule_active(TrivialKind::ConversionI) && c.form == Form::I) {
    if (first_premise_matching(s, Form::I, c.predicate, c.subject))
      return TrivialKind::ConversionI;
  }
  if (cfg.trivial_rule_active(TrivialKind::SubalternationAI) && c.form == Form::I) {
    if (first_premise_matching(s, Form::A, c.subject, c.predicate))
      return TrivialKind::SubalternationAI;
  }
  if (cfg.trivial_rule_active(TrivialKind::SubalternationEO) && c.form == Form::O) {
    if (first_premise_matching(s, Form::E, c.subject, c.predicate))
      return TrivialKind::SubalternationEO;
  }
  if (cfg.trivial_rule_active(TrivialKind::Explosion)) {
    const auto& prem = s.premises();
    for (std::size_t i = 0; i < prem.size(); ++i) {
      for (std::size_t j = i + 1; j < prem.size(); ++j) {
        if (contradictory(prem[i], prem[j])) return TrivialKind::Explosion;
      }
    }
  }
  return std::nullopt;
}

namespace {

ValidityVerdict judge_structure(const Syllogism& s, const ValidityConfig& cfg) {
  if (s.premises().size() != 2) {
    std::ostringstream os;
    os << "expected exactly 2 premises, found " << s.premises().size();
    return ValidityVerdict::malformed(os.str());
  }
  auto analyzed = analyze(s);
  if (!analyzed.ok())
    return ValidityVerdict::malformed(analyzed.error().describe());
  const StructuredSyllogism& st = analyzed.value();
  return ValidityVerdict::mood_figure(st.mood(), st.figure(),
                                      lookup_valid(st.mood(), st.figure(), cfg));
}

}  // namespace

ValidityVerdict judge(const Syllogism& s, const ValidityConfig& cfg) {
  if (cfg.trivial_before_structure) {
    if (auto kind = detect_trivial(s, cfg)) return ValidityVerdict::trivial(*kind);
  }
  ValidityVerdict structural = judge_structure(s, cfg);
  if (!structural.is_malformed()) return structural;
  if (!cfg.trivial_before_structure) {
    if (auto kind = detect_trivial(s, cfg)) return ValidityVerdict::trivial(*kind);
  }
  return structural;
}

ValidityVerdict judge(std::string_view canonical_text, const ValidityConfig& cfg) {
  auto parsed = parse_canonical(canonical_text);
  if (!parsed.ok()) return ValidityVerdict::malformed(parsed.error().describe());
  return judge(parsed.value(), cfg);
}

}  // namespace syllo
