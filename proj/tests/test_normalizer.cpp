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

#include <algorithm>
#include <random>

#include "syllo/normalizer.hpp"
#include "syllo/parser.hpp"
#include "testutil.hpp"

using namespace syllo;

namespace {

void expect_norm(const char* raw, Form form, const char* subject, const char* predicate) {
  auto r = normalize_en(raw);
  REQUIRE_MESSAGE(r.ok(), raw);
  CHECK_MESSAGE(r.value().form == form, raw);
  CHECK_MESSAGE(r.value().subject.str() == subject, raw);
  CHECK_MESSAGE(r.value().predicate.str() == predicate, raw);
}

}  // namespace

TEST_SUITE_BEGIN("normalizer");

TEST_CASE("A-family paraphrases") {
  expect_norm("All dogs are mammals.", Form::A, "dogs", "mammals");
  expect_norm("Every bike is a vehicle", Form::A, "bike", "vehicle");
  expect_norm("Every single puppy is a kitten.", Form::A, "puppy", "kitten");
  expect_norm("Each triangle is a shape", Form::A, "triangle", "shape");
  expect_norm("Anything that is a poodle is also a canine.", Form::A, "poodle", "canine");
  expect_norm("Everything that is a wrench is a tool.", Form::A, "wrench", "tool");
  expect_norm("Whatever is a rose is a flower", Form::A, "rose", "flower");
  expect_norm("Dogs are a subset of animals", Form::A, "dogs", "animals");
  expect_norm("The entire set of poodles is contained within the set of dogs.",
              Form::A, "poodles", "dogs");
}

TEST_CASE("E-family paraphrases") {
  expect_norm("No bikes are cars.", Form::E, "bikes", "cars");
  expect_norm("Not a single fish is a mammal", Form::E, "fish", "mammal");
  expect_norm("Spiders are never ants.", Form::E, "spiders", "ants");
  expect_norm("None of the planets are stars", Form::E, "planets", "stars");
  expect_norm("Reptiles cannot be birds", Form::E, "reptiles", "birds");
  expect_norm("There are no animals which are dogs.", Form::E, "animals", "dogs");
  expect_norm("There are no webs that are traps", Form::E, "webs", "traps");
}

TEST_CASE("I-family paraphrases") {
  expect_norm("Some vehicles are bikes.", Form::I, "vehicles", "bikes");
  expect_norm("A few ants are insects", Form::I, "ants", "insects");
  expect_norm("A few roots are edible", Form::I, "roots", "edible");
  expect_norm("There exist insects that are pollinators", Form::I, "insects",
              "pollinators");
  expect_norm("A portion of vehicles are bikes.", Form::I, "vehicles", "bikes");
  expect_norm("Something that is a square is a rectangle", Form::I, "square",
              "rectangle");
}

TEST_CASE("O-family paraphrases") {
  expect_norm("Some dogs are not canines.", Form::O, "dogs", "canines");
  expect_norm("Not all X are Y", Form::O, "x", "y");
  expect_norm("Not all keys are objects", Form::O, "keys", "objects");
  expect_norm("Not every dog is a poodle.", Form::O, "dog", "poodle");
  expect_norm("At least one swan is not white", Form::O, "swan", "white");
  expect_norm("A portion of dogs are not canines.", Form::O, "dogs", "canines");
  expect_norm("There exist insects that are not spiders", Form::O, "insects", "spiders");
}

TEST_CASE("double negatives collapse to A") {
  expect_norm("There are no carrots that are not edible", Form::A, "carrots", "edible");
  expect_norm("No penguins are not birds", Form::A, "penguins", "birds");
  expect_norm("There are no chickens which are not birds", Form::A, "chickens", "birds");
}

TEST_CASE("partitive quantifiers are rejected") {
  auto r = normalize_en("A number of vehicles are bikes");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error().reason == "no paraphrase rule matches");
}

TEST_CASE("unsupported wrappers are rejected rather than guessed") {
  CHECK_FALSE(normalize_en("It is also true that every bike is a vehicle").ok());
  CHECK_FALSE(normalize_en("Most cats are mammals").ok());
  // interjection commas break the copular pattern
  CHECK_FALSE(normalize_en("A few ants are, in fact, insects").ok());
  CHECK_FALSE(normalize_en("").ok());
}

TEST_CASE("canonical sentences normalize exactly like the strict matcher") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Proposition p = testutil::random_proposition(rng);
    std::string sentence = emit_proposition(p);
    auto direct = match_aeio(sentence);
    auto rules = normalize_en(sentence);
    REQUIRE(direct.ok());
    REQUIRE(rules.ok());
    CHECK(direct.value() == rules.value());
  }
}

TEST_CASE("rule ranks make insertion order irrelevant") {
  std::vector<ParaphraseRule> shuffled = builtin_paraphrase_rules();
  std::mt19937 rng(13);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);

  const char* inputs[] = {
      "There are no carrots that are not edible",
      "Every single puppy is a kitten.",
      "Not all keys are objects",
      "A portion of dogs are not canines.",
      "Spiders are never ants.",
  };
  for (const char* raw : inputs) {
    auto a = normalize_en(raw);
    auto b = normalize_en(raw, shuffled);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(a.value() == b.value());
  }
}

TEST_CASE("term mapping assigns A/B/C by first appearance") {
  std::vector<Proposition> props = {
      {Form::I, Term{"housecats"}, Term{"mice chasers"}},
      {Form::A, Term{"mice chasers"}, Term{"felines"}},
      {Form::A, Term{"housecats"}, Term{"felines"}},
  };
  auto m = TermMapping::from_propositions(props);
  REQUIRE(m.has_value());
  CHECK(m->render() == "A:housecats,B:mice chasers,C:felines");
  CHECK(*m->symbol_for(Term{"felines"}) == 'C');
  CHECK(m->term_for('A') == Term{"housecats"});

  std::vector<Proposition> two_terms = {{Form::A, Term{"x"}, Term{"y"}},
                                        {Form::A, Term{"y"}, Term{"x"}}};
  CHECK_FALSE(TermMapping::from_propositions(two_terms).has_value());
}

TEST_CASE("whole-argument rule normalization abstracts terms to symbols") {
  auto r = normalize_argument_rules(
      "All bikes are vehicles. All vehicles are machines. Therefore, all bikes are machines.");
  REQUIRE(r.ok());
  const NormalizationResult& n = r.value();
  REQUIRE(n.mapped.has_value());
  CHECK(n.mapped->render() == "A:bikes,B:vehicles,C:machines");
  CHECK(n.parsed == "all a are b. all b are c. all a are c.");
  CHECK(n.well_formed);
  CHECK_FALSE(n.detected_language.has_value());
}

TEST_CASE("surface terms are kept when the argument does not span 3 terms") {
  // "vehicle" vs "vehicles" and "machine" vs "machines" stay distinct, so
  // no A/B/C mapping exists and the surface terms are preserved
  auto r = normalize_argument_rules(
      "Every bike is a vehicle. All vehicles are machines. Therefore, every bike is a machine.");
  REQUIRE(r.ok());
  CHECK_FALSE(r.value().mapped.has_value());
  CHECK(r.value().parsed ==
        "all bike are vehicle. all vehicles are machines. all bike are machine.");
  CHECK(r.value().well_formed);
}

TEST_CASE("whole-argument failure modes") {
  auto empty = normalize_argument_rules("   ");
  REQUIRE_FALSE(empty.ok());
  CHECK(empty.error().kind == NormalizeError::Kind::EmptyInput);

  auto one = normalize_argument_rules("All dogs are mammals.");
  REQUIRE_FALSE(one.ok());
  CHECK(one.error().kind == NormalizeError::Kind::NotNormalizable);

  auto partitive = normalize_argument_rules(
      "A number of vehicles are bikes. All bikes are machines. Some vehicles are machines.");
  REQUIRE_FALSE(partitive.ok());
  CHECK(partitive.error().kind == NormalizeError::Kind::NotNormalizable);
}

TEST_SUITE_END();
