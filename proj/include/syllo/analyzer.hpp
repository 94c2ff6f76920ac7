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

#ifndef SYLLO_ANALYZER_HPP
#define SYLLO_ANALYZER_HPP

#include <string>

#include "syllo/result.hpp"
#include "syllo/types.hpp"

namespace syllo {

struct StructureFailure {
  enum class Reason {
    TermCountNot3,   // premises+conclusion do not span exactly 3 terms
    NoUniqueMiddle,  // (U1 n U2) \ {S,P} is not a singleton
    MajorNotFound,   // no premise mentions the conclusion predicate
    MinorNotFound,   // the remaining premise does not mention the subject
  };
  Reason reason;

  std::string describe() const;
};

/// Term-role analysis of a two-premise syllogism: S/P from the conclusion,
/// M as the unique shared non-conclusion term, major/minor assignment by
/// which premise mentions P, figure from the middle term's subject
/// positions, mood as (f_major, f_minor, f_conclusion).
/// Throws std::invalid_argument unless the input has exactly 2 premises.
Result<StructuredSyllogism, StructureFailure> analyze(const Syllogism& s);

}  // namespace syllo

#endif  // SYLLO_ANALYZER_HPP
