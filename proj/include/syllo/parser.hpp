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

#ifndef SYLLO_PARSER_HPP
#define SYLLO_PARSER_HPP

#include <string>
#include <string_view>

#include "syllo/result.hpp"
#include "syllo/types.hpp"

namespace syllo {

struct ParseFailure {
  enum class Kind { NotAEIO, WrongSentenceCount, EmptyTerm };
  Kind kind;
  std::string offending_text;  // the exact input fragment that failed
  int found = 0;               // sentence count, for WrongSentenceCount

  std::string describe() const;
};

/// Canonical surface cleanup: ASCII-lowercase, trim, collapse whitespace,
/// strip one trailing period, strip one leading connector
/// (therefore/thus/hence/so, optionally followed by a comma), and replace
/// every standalone token "is" with "are". Total; never fails.
std::string normalize_surface(std::string_view raw);

/// Matches one already-normalized sentence against the four canonical
/// patterns, in this order:
///   "all X are Y" -> A, "no X are Y" -> E,
///   "some X are not Y" -> O, "some X are Y" -> I.
/// O is tried before I so "are not" is never swallowed by the I pattern.
/// The separator is the final " are " (" are not " for O); the predicate is
/// the suffix after it.
Result<Proposition, ParseFailure> match_aeio(std::string_view sentence);

/// Splits a canonical argument on "." into non-empty segments (at least
/// two: premises then conclusion) and parses each via normalize_surface +
/// match_aeio. Accepts any premise count >= 1; validity-mode callers
/// enforce exactly two premises themselves.
Result<Syllogism, ParseFailure> parse_canonical(std::string_view text);

/// Renders the canonical string "p1. p2. conclusion." with each
/// proposition in its exact pattern. Inverse of parse_canonical for
/// delimiter-free terms. Throws std::invalid_argument if a term contains
/// the "." sentence delimiter.
std::string emit_canonical(const Syllogism& s);

/// Single-proposition rendering, e.g. "some x are not y".
std::string emit_proposition(const Proposition& p);

}  // namespace syllo

#endif  // SYLLO_PARSER_HPP
