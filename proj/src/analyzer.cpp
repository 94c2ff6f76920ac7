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

#include "syllo/analyzer.hpp"

#include <set>
#include <stdexcept>

namespace syllo {

std::string StructureFailure::describe() const {
  switch (reason) {
    case Reason::TermCountNot3: return "term count is not 3";
    case Reason::NoUniqueMiddle: return "no unique middle term";
    case Reason::MajorNotFound: return "no premise mentions the conclusion predicate";
    case Reason::MinorNotFound: return "minor premise does not mention the conclusion subject";
  }
  return "?";
}

Result<StructuredSyllogism, StructureFailure> analyze(const Syllogism& syl) {
  if (syl.premises().size() != 2)
    throw std::invalid_argument("analyze: exactly 2 premises required");

  const Proposition& p1 = syl.premises()[0];
  const Proposition& p2 = syl.premises()[1];
  const Term s = syl.conclusion().subject;
  const Term p = syl.conclusion().predicate;

  const std::set<Term> u1{p1.subject, p1.predicate};
  const std::set<Term> u2{p2.subject, p2.predicate};

  std::set<Term> all = u1;
  all.insert(u2.begin(), u2.end());
  all.insert(s);
  all.insert(p);
  if (all.size() != 3)
    return StructureFailure{StructureFailure::Reason::TermCountNot3};

  std::set<Term> middle_candidates;
  for (const Term& t : u1) {
    if (u2.count(t) && t != s && t != p) middle_candidates.insert(t);
  }
  if (middle_candidates.size() != 1)
    return StructureFailure{StructureFailure::Reason::NoUniqueMiddle};
  const Term m = *middle_candidates.begin();

  // Premise 1 is preferred when P occurs in both (unreachable once the
  // 3-term guard holds, but the order is fixed anyway).
  int major_index;
  if (u1.count(p)) major_index = 0;
  else if (u2.count(p)) major_index = 1;
  else return StructureFailure{StructureFailure::Reason::MajorNotFound};
  const int minor_index = 1 - major_index;

  const Proposition& major = syl.premises()[static_cast<std::size_t>(major_index)];
  const Proposition& minor = syl.premises()[static_cast<std::size_t>(minor_index)];
  if (!minor.mentions(s))
    return StructureFailure{StructureFailure::Reason::MinorNotFound};

  const bool a = major.subject == m;
  const bool b = minor.subject == m;
  int fig;
  if (a && !b) fig = 1;
  else if (!a && !b) fig = 2;
  else if (a && b) fig = 3;
  else fig = 4;

  const Mood mood{major.form, minor.form, syl.conclusion().form};
  return StructuredSyllogism{syl, s, p, m, major_index, minor_index, mood, Figure{fig}};
}

}  // namespace syllo
