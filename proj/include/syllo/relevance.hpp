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

#ifndef SYLLO_RELEVANCE_HPP
#define SYLLO_RELEVANCE_HPP

#include <span>

#include "syllo/types.hpp"
#include "syllo/validity.hpp"

namespace syllo {

struct RelevanceResult {
  ValidityVerdict verdict;
  RelevanceSet relevant;
};

/// Finds the premises needed to derive the conclusion among candidates
/// that may contain distractors.
///
/// Pass 1 scans unordered index pairs (i,j), i<j, in lexicographic order
/// and returns the first pair whose two premises form a structurally valid
/// syllogism with the conclusion (mood-figure basis). Pass 2 falls back to
/// enabled trivial rules: single-premise kinds yield a singleton set,
/// explosion yields the contradictory pair. With no hit the result is an
/// invalid verdict and the empty set.
RelevanceResult select_relevant(std::span<const Proposition> premises,
                                const Proposition& conclusion,
                                const ValidityConfig& cfg = {});

}  // namespace syllo

#endif  // SYLLO_RELEVANCE_HPP
