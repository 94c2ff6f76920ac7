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

#include "syllo/types.hpp"

using namespace syllo;

TEST_SUITE_BEGIN("types");

TEST_CASE("form classification") {
  CHECK(is_universal(Form::A));
  CHECK(is_universal(Form::E));
  CHECK(is_particular(Form::I));
  CHECK(is_particular(Form::O));
  CHECK(is_negative(Form::E));
  CHECK(is_negative(Form::O));
  CHECK(is_affirmative(Form::A));
  CHECK(is_affirmative(Form::I));
}

TEST_CASE("term normalization and equality") {
  CHECK(Term{"  Dogs  "}.str() == "dogs");
  CHECK(Term{"Three-Sided   Figures"}.str() == "three-sided figures");
  CHECK(Term{"dogs"} == Term{"DOGS"});
  // no lemmatization or plural merging
  CHECK(Term{"pianta"} != Term{"piante"});
  CHECK(Term{"dog"} != Term{"dogs"});
  // bracket tags are ordinary characters
  CHECK(Term{"nyoka[s]"}.str() == "nyoka[s]");
  // multibyte characters pass through unchanged
  CHECK(Term{"Animal Doméstico"}.str() == "animal doméstico");
  CHECK_THROWS_AS(Term{"   "}, std::invalid_argument);
  CHECK_THROWS_AS(Term{""}, std::invalid_argument);
}

TEST_CASE("mood renders and parses back for all 64 moods") {
  for (int idx = 0; idx < 64; ++idx) {
    Mood m = Mood::from_index(idx);
    auto back = Mood::parse(m.str());
    REQUIRE(back.has_value());
    CHECK(*back == m);
    CHECK(back->index() == idx);
  }
  CHECK(Mood{Form::A, Form::A, Form::A}.str() == "AAA");
  CHECK_FALSE(Mood::parse("AAX").has_value());
  CHECK_FALSE(Mood::parse("AA").has_value());
}

TEST_CASE("figure accepts only 1..4") {
  for (int v = 1; v <= 4; ++v) CHECK(Figure{v}.value() == v);
  CHECK_THROWS_AS(Figure{0}, std::invalid_argument);
  CHECK_THROWS_AS(Figure{5}, std::invalid_argument);
}

TEST_CASE("syllogism requires a premise") {
  Proposition p{Form::A, Term{"a"}, Term{"b"}};
  CHECK_THROWS_AS(Syllogism({}, p), std::invalid_argument);
  Syllogism ok{{p}, p};
  CHECK(ok.premises().size() == 1);
}

TEST_CASE("structured syllogism rejects duplicated role terms") {
  Proposition maj{Form::A, Term{"m"}, Term{"p"}};
  Proposition min{Form::A, Term{"s"}, Term{"m"}};
  Proposition con{Form::A, Term{"s"}, Term{"p"}};
  Syllogism src{{maj, min}, con};
  Mood mood{Form::A, Form::A, Form::A};

  CHECK_NOTHROW(StructuredSyllogism(src, Term{"s"}, Term{"p"}, Term{"m"}, 0, 1,
                                    mood, Figure{1}));
  CHECK_THROWS_AS(StructuredSyllogism(src, Term{"s"}, Term{"s"}, Term{"m"}, 0, 1,
                                      mood, Figure{1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StructuredSyllogism(src, Term{"s"}, Term{"p"}, Term{"m"}, 0, 0,
                                      mood, Figure{1}),
                  std::invalid_argument);
  // premise 1 does not mention P, so it cannot be the major premise
  CHECK_THROWS_AS(StructuredSyllogism(src, Term{"s"}, Term{"p"}, Term{"m"}, 1, 0,
                                      mood, Figure{1}),
                  std::invalid_argument);
}

TEST_CASE("verdict factories keep basis invariants") {
  auto t = ValidityVerdict::trivial(TrivialKind::PetitioPrincipii);
  CHECK(t.valid());
  CHECK(t.is_trivial());
  CHECK(t.describe() == "valid (trivial: petitio principii)");

  auto m = ValidityVerdict::malformed("no unique middle term");
  CHECK_FALSE(m.valid());
  CHECK(m.is_malformed());
  CHECK(m.describe() == "invalid (malformed: no unique middle term)");

  auto mf = ValidityVerdict::mood_figure(Mood{Form::A, Form::A, Form::A}, Figure{2}, false);
  CHECK(mf.describe() == "invalid (AAA-2)");
}

TEST_CASE("trivial kind names round-trip") {
  for (TrivialKind k : all_trivial_kinds()) {
    auto back = trivial_kind_from_name(trivial_kind_name(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
}

TEST_CASE("relevance set renders as a 0-based index list") {
  CHECK(RelevanceSet{{0, 4}}.str() == "[0, 4]");
  CHECK(RelevanceSet{}.str() == "[]");
}

TEST_SUITE_END();
