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

#ifndef SYLLO_VALIDITY_HPP
#define SYLLO_VALIDITY_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "syllo/types.hpp"

namespace syllo {

struct ValidityConfig {
  bool existential_import = true;
  std::set<TrivialKind> enabled_trivial_rules{all_trivial_kinds().begin(),
                                              all_trivial_kinds().end()};
  bool trivial_before_structure = true;

  /// Subalternation rules require existential import; they stay inert when
  /// import is off even if listed as enabled.
  bool trivial_rule_active(TrivialKind k) const {
    if (!enabled_trivial_rules.count(k)) return false;
    if (k == TrivialKind::SubalternationAI || k == TrivialKind::SubalternationEO)
      return existential_import;
    return true;
  }

  static ValidityConfig without_import();
  static ValidityConfig no_trivial();
};

/// Per-figure valid mood sets. Two frozen instances exist: the 24-entry
/// table assuming existential import and the 15-entry table without it
/// (the latter rederivable from the finite-model oracle).
class ValidityTable {
 public:
  static const ValidityTable& with_import();
  static const ValidityTable& without_import();

  bool contains(const Mood& m, const Figure& f) const;
  int size() const;
  const std::vector<Mood>& moods_for(int figure) const;  // listing order

  /// Text layout: one row per figure with its comma-separated moods.
  std::string render() const;

 private:
  explicit ValidityTable(std::vector<std::vector<Mood>> rows);
  std::vector<std::vector<Mood>> rows_;   // rows_[figure-1], listing order
  std::set<int> flat_;                    // (figure-1)*64 + mood index
};

/// Membership test against the table selected by cfg.existential_import.
bool lookup_valid(const Mood& mood, const Figure& figure, const ValidityConfig& cfg);

/// First enabled trivial-validity rule that fires, in fixed order:
/// petitio, E-conversion, I-conversion, subalternation A->I, E->O,
/// explosion. Works for any premise count >= 1.
std::optional<TrivialKind> detect_trivial(const Syllogism& s, const ValidityConfig& cfg);

/// Full classification: trivial rules (before or after structure per cfg),
/// structural analysis, mood-figure lookup. Failures never throw; they
/// yield a Malformed (invalid) verdict.
ValidityVerdict judge(const Syllogism& s, const ValidityConfig& cfg = {});

/// Same, from a canonical argument string; parse failures yield Malformed.
ValidityVerdict judge(std::string_view canonical_text, const ValidityConfig& cfg = {});

}  // namespace syllo

#endif  // SYLLO_VALIDITY_HPP
