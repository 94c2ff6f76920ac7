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

#ifndef SYLLO_ORACLE_HPP
#define SYLLO_ORACLE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "syllo/types.hpp"

namespace syllo {

/// A finite interpretation: a universe {0..n-1} and one subset per term,
/// stored as a bitmask over universe elements.
struct Model {
  int universe_size = 0;
  std::map<Term, std::uint32_t> extensions;
};

/// Set-theoretic truth of a proposition in a model:
///   A: S subset of P; E: S and P disjoint; I: they intersect; O: S \ P nonempty.
/// Throws std::out_of_range if a mentioned term has no extension.
bool eval_proposition(const Proposition& p, const Model& m);

struct OracleOptions {
  bool existential_import = true;
  /// 3 suffices to refute every invalid pure syllogistic form; 4 adds margin.
  int max_universe = 4;
};

/// Exhaustive finite-model entailment: true iff in every universe of size
/// 0..max_universe (1..max_universe under import) and every assignment of
/// extensions to the mentioned terms (nonempty ones under import), all
/// premises true implies the conclusion true.
bool entails(std::span<const Proposition> premises, const Proposition& conclusion,
             const OracleOptions& opts = {});

/// Validity flags for all 256 (mood, figure) pairs.
class FormTable {
 public:
  bool get(const Mood& m, const Figure& f) const {
    return cells_[flat(m, f)];
  }
  void set(const Mood& m, const Figure& f, bool v) { cells_[flat(m, f)] = v; }

  int count_valid() const;
  std::vector<std::pair<Mood, Figure>> valid_forms() const;  // figure-major order
  bool contains_all(const FormTable& other) const;           // superset of other's valid set

  bool operator==(const FormTable&) const = default;

 private:
  static std::size_t flat(const Mood& m, const Figure& f) {
    return static_cast<std::size_t>(f.value() - 1) * 64 +
           static_cast<std::size_t>(m.index());
  }
  std::array<bool, 256> cells_{};
};

/// Builds the abstract two-premise syllogism for a (mood, figure) cell over
/// terms "s"/"m"/"p", premises ordered [major, minor]. The figure fixes the
/// middle term's slot: 1 = subject of major only, 2 = neither subject,
/// 3 = both subjects, 4 = subject of minor only.
Syllogism instantiate_form(const Mood& mood, const Figure& figure);

/// Serial reference enumeration over all 256 cells; kept as the baseline
/// the parallel version is tested against.
FormTable enumerate_forms_serial(bool existential_import, int max_universe = 4);

/// OpenMP-parallel enumeration across cells; cell results are independent,
/// so the outcome is identical to the serial reference.
FormTable enumerate_forms(bool existential_import, int max_universe = 4);

}  // namespace syllo

#endif  // SYLLO_ORACLE_HPP
