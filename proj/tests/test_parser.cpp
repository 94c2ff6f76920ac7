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

#include <doctest.h>

#include <stdexcept>

#include <random>

#include "syllo/parser.hpp"
#include "testutil.hpp"

using namespace syllo;

TEST_SUITE_BEGIN("parser");

TEST_CASE("surface normalization") {
  CHECK(normalize_surface("Therefore, All C are B.") == "all c are b");
  CHECK(normalize_surface("") == "");
  CHECK(normalize_surface("Every bike is a vehicle") == "every bike are a vehicle");
  CHECK(normalize_surface("  Thus   SOME  x ARE y . ") == "some x are y");
  CHECK(normalize_surface("Hence, no a are b.") == "no a are b");
  CHECK(normalize_surface("So, all x are y") == "all x are y");
  // "is" replacement applies to the standalone token only
  CHECK(normalize_surface("all islands are isolated") == "all islands are isolated");
  // words that merely start with a connector stay intact
  CHECK(normalize_surface("southern birds are rare") == "southern birds are rare");
  CHECK(normalize_surface("theses are papers") == "theses are papers");
  // only one leading connector is removed
  CHECK(normalize_surface("therefore, thus x is y") == "thus x are y");
}

TEST_CASE("canonical pattern matching") {
  auto a = match_aeio("all b are a");
  REQUIRE(a.ok());
  CHECK(a.value() == Proposition{Form::A, Term{"b"}, Term{"a"}});

  auto e = match_aeio("no bikes are cars");
  REQUIRE(e.ok());
  CHECK(e.value() == Proposition{Form::E, Term{"bikes"}, Term{"cars"}});

  auto i = match_aeio("some vehicles are bikes");
  REQUIRE(i.ok());
  CHECK(i.value() == Proposition{Form::I, Term{"vehicles"}, Term{"bikes"}});

  auto o = match_aeio("some dogs are not canines");
  REQUIRE(o.ok());
  CHECK(o.value() == Proposition{Form::O, Term{"dogs"}, Term{"canines"}});

  auto fail = match_aeio("most cats are mammals");
  REQUIRE_FALSE(fail.ok());
  CHECK(fail.error().kind == ParseFailure::Kind::NotAEIO);
  CHECK(fail.error().offending_text == "most cats are mammals");
}

TEST_CASE("subject may contain the separator; predicate is the final suffix") {
  auto p = match_aeio("all a are b are c");
  REQUIRE(p.ok());
  CHECK(p.value().subject.str() == "a are b");
  CHECK(p.value().predicate.str() == "c");

  auto o = match_aeio("some a are not b are c");
  REQUIRE(o.ok());
  CHECK(o.value().form == Form::O);
  CHECK(o.value().subject.str() == "a");
  CHECK(o.value().predicate.str() == "b are c");
}

TEST_CASE("empty capture reports EmptyTerm") {
  auto r = match_aeio("all x are ");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error().kind == ParseFailure::Kind::EmptyTerm);
}

TEST_CASE("O is matched before I") {
  auto r = match_aeio("some x are not y");
  REQUIRE(r.ok());
  CHECK(r.value().form == Form::O);
}

TEST_CASE("canonical argument parsing") {
  auto r = parse_canonical("All B are A. All C are A. All C are B.");
  REQUIRE(r.ok());
  const Syllogism& s = r.value();
  REQUIRE(s.premises().size() == 2);
  CHECK(s.premises()[0] == Proposition{Form::A, Term{"b"}, Term{"a"}});
  CHECK(s.premises()[1] == Proposition{Form::A, Term{"c"}, Term{"a"}});
  CHECK(s.conclusion() == Proposition{Form::A, Term{"c"}, Term{"b"}});
}

TEST_CASE("sentence-count and per-sentence failures") {
  auto one = parse_canonical("All s are p.");
  REQUIRE_FALSE(one.ok());
  CHECK(one.error().kind == ParseFailure::Kind::WrongSentenceCount);
  CHECK(one.error().found == 1);

  auto empty = parse_canonical("");
  REQUIRE_FALSE(empty.ok());
  CHECK(empty.error().kind == ParseFailure::Kind::WrongSentenceCount);
  CHECK(empty.error().found == 0);

  auto bad = parse_canonical("All a are b. hello there. All a are b.");
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.error().kind == ParseFailure::Kind::NotAEIO);
  CHECK(bad.error().offending_text == "hello there");
}

TEST_CASE("bracket-tagged terms parse verbatim") {
  auto r = parse_canonical(
      "No samaki are nyoka[g]. All nyoka[s] are nyoka[g]. Some nyoka[s] are not samaki.");
  REQUIRE(r.ok());
  const Syllogism& s = r.value();
  CHECK(s.premises()[0].form == Form::E);
  CHECK(s.premises()[1].form == Form::A);
  CHECK(s.conclusion().form == Form::O);
  CHECK(s.premises()[0].predicate.str() == "nyoka[g]");
  CHECK(s.conclusion().subject.str() == "nyoka[s]");
}

TEST_CASE("relevance-style inputs keep more than two premises") {
  auto r = parse_canonical("all a are b. all b are c. some d are e. all a are c.");
  REQUIRE(r.ok());
  CHECK(r.value().premises().size() == 3);
}

TEST_CASE("emission renders the exact patterns") {
  Syllogism s{{Proposition{Form::A, Term{"m"}, Term{"p"}},
               Proposition{Form::A, Term{"s"}, Term{"m"}}},
              Proposition{Form::A, Term{"s"}, Term{"p"}}};
  CHECK(emit_canonical(s) == "all m are p. all s are m. all s are p.");
  CHECK(emit_proposition(Proposition{Form::O, Term{"x"}, Term{"y"}}) ==
        "some x are not y");
}

TEST_CASE("emission rejects the sentence delimiter inside terms") {
  Syllogism s{{Proposition{Form::A, Term{"a.b"}, Term{"c"}}},
              Proposition{Form::A, Term{"a.b"}, Term{"c"}}};
  CHECK_THROWS_AS(emit_canonical(s), std::invalid_argument);
}

TEST_CASE("parse(emit(s)) round-trips over delimiter-free terms") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    Syllogism s = testutil::random_syllogism(rng, 1 + static_cast<int>(rng() % 4));
    std::string text = emit_canonical(s);
    auto back = parse_canonical(text);
    REQUIRE(back.ok());
    CHECK(back.value() == s);
    // determinism: byte-equal re-emission
    CHECK(emit_canonical(back.value()) == text);
  }
}

TEST_CASE("pattern disjointness: a sentence parses as exactly one form") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    Proposition p = testutil::random_proposition(rng);
    auto parsed = match_aeio(emit_proposition(p));
    REQUIRE(parsed.ok());
    CHECK(parsed.value().form == p.form);
  }
}

TEST_SUITE_END();
