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

#include "syllo/relevance.hpp"

#include <optional>

namespace syllo {

namespace {

ValidityVerdict judge_pair(const Proposition& a, const Proposition& b,
                           const Proposition& conclusion, const ValidityConfig& cfg) {
  return judge(Syllogism{{a, b}, conclusion}, cfg);
}

std::optional<int> first_single_trivial(std::span<const Proposition> premises,
                                        const Proposition& c, TrivialKind kind) {
  auto matches = [&c, kind](const Proposition& p) {
    switch (kind) {
      case TrivialKind::PetitioPrincipii:
        return p == c;
      case TrivialKind::ConversionE:
        return c.form == Form::E && p.form == Form::E && p.subject == c.predicate &&
               p.predicate == c.subject;
      case TrivialKind::ConversionI:
        return c.form == Form::I && p.form == Form::I && p.subject == c.predicate &&
               p.predicate == c.subject;
      case TrivialKind::SubalternationAI:
        return c.form == Form::I && p.form == Form::A && p.subject == c.subject &&
               p.predicate == c.predicate;
      case TrivialKind::SubalternationEO:
        return c.form == Form::O && p.form == Form::E && p.subject == c.subject &&
               p.predicate == c.predicate;
      case TrivialKind::Explosion:
        return false;
    }
    return false;
  };
  for (std::size_t k = 0; k < premises.size(); ++k) {
    if (matches(premises[k])) return static_cast<int>(k);
  }
  return std::nullopt;
}

bool contradictory(const Proposition& a, const Proposition& b) {
  if (a.subject != b.subject || a.predicate != b.predicate) return false;
  return (a.form == Form::A && b.form == Form::O) ||
         (a.form == Form::O && b.form == Form::A) ||
         (a.form == Form::E && b.form == Form::I) ||
         (a.form == Form::I && b.form == Form::E);
}

}  // namespace

RelevanceResult select_relevant(std::span<const Proposition> premises,
                                const Proposition& conclusion,
                                const ValidityConfig& cfg) {
  const std::size_t n = premises.size();

  // Pass 1: structural pairs, smallest (i,j) first. Trivial rules are
  // masked here so a restated premise cannot shadow a structural pair.
  ValidityConfig structural_cfg = cfg;
  structural_cfg.enabled_trivial_rules.clear();
  std::optional<ValidityVerdict> first_pair_verdict;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ValidityVerdict v = judge_pair(premises[i], premises[j], conclusion, structural_cfg);
      if (!first_pair_verdict) first_pair_verdict = v;
      if (v.valid() && v.is_mood_figure()) {
        return {v, RelevanceSet{{static_cast<int>(i), static_cast<int>(j)}}};
      }
    }
  }

  // Pass 2: trivial fallbacks in the detect_trivial rule order.
  for (TrivialKind kind : all_trivial_kinds()) {
    if (!cfg.trivial_rule_active(kind)) continue;
    if (kind == TrivialKind::Explosion) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (contradictory(premises[i], premises[j])) {
            return {ValidityVerdict::trivial(kind),
                    RelevanceSet{{static_cast<int>(i), static_cast<int>(j)}}};
          }
        }
      }
      continue;
    }
    if (auto k = first_single_trivial(premises, conclusion, kind)) {
      return {ValidityVerdict::trivial(kind), RelevanceSet{{*k}}};
    }
  }

  // No derivation: empty set by convention. Keep the first pair's verdict
  // when one exists so callers still see a mood/figure or failure reason.
  if (first_pair_verdict) return {*first_pair_verdict, RelevanceSet{}};
  return {ValidityVerdict::malformed("fewer than two candidate premises"),
          RelevanceSet{}};
}

}  // namespace syllo
