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

#include <map>
#include <random>
#include <set>

#include "syllo/oracle.hpp"
#include "syllo/validity.hpp"
#include "testutil.hpp"

using namespace syllo;

namespace {

Proposition prop(Form f, const char* s, const char* p) {
  return Proposition{f, Term{s}, Term{p}};
}

Mood mood(const char* s) { return *Mood::parse(s); }

}  // namespace

TEST_SUITE_BEGIN("validity");

TEST_CASE("lookup membership") {
  ValidityConfig with;
  ValidityConfig without = ValidityConfig::without_import();
  CHECK(lookup_valid(mood("AAA"), Figure{1}, with));
  CHECK_FALSE(lookup_valid(mood("AAA"), Figure{2}, with));
  CHECK(lookup_valid(mood("EIO"), Figure{4}, with));
  CHECK(lookup_valid(mood("AAI"), Figure{1}, with));
  CHECK_FALSE(lookup_valid(mood("AAI"), Figure{1}, without));  // Barbari needs import
}

TEST_CASE("table sizes and the import-only difference set") {
  CHECK(ValidityTable::with_import().size() == 24);
  CHECK(ValidityTable::without_import().size() == 15);

  const std::set<std::pair<std::string, int>> import_only = {
      {"AAI", 1}, {"EAO", 1}, {"AEO", 2}, {"EAO", 2}, {"AAI", 3},
      {"EAO", 3}, {"AAI", 4}, {"EAO", 4}, {"AEO", 4}};
  int extras = 0;
  for (int fig = 1; fig <= 4; ++fig) {
    for (int idx = 0; idx < 64; ++idx) {
      Mood m = Mood::from_index(idx);
      const bool in_with = ValidityTable::with_import().contains(m, Figure{fig});
      const bool in_without = ValidityTable::without_import().contains(m, Figure{fig});
      if (in_without) CHECK(in_with);  // strict subset
      if (in_with && !in_without) {
        ++extras;
        CHECK(import_only.count({m.str(), fig}) == 1);
        // every import-only form pairs two universal premises with a
        // particular conclusion
        CHECK(is_universal(m.major));
        CHECK(is_universal(m.minor));
        CHECK(is_particular(m.conclusion));
      }
    }
  }
  CHECK(extras == 9);
}

TEST_CASE("table renders in the row layout") {
  CHECK(ValidityTable::with_import().render() ==
        "figure  valid moods (major-minor-conclusion)\n"
        "1       AAA, EAE, AII, EIO, AAI, EAO\n"
        "2       EAE, AEE, EIO, AOO, EAO, AEO\n"
        "3       AAI, IAI, AII, EAO, OAO, EIO\n"
        "4       AAI, AEE, IAI, EAO, EIO, AEO\n");
}

TEST_CASE("trivial detection rules and order") {
  ValidityConfig cfg;

  Syllogism petitio{{prop(Form::A, "a", "b"), prop(Form::E, "c", "d")},
                    prop(Form::A, "a", "b")};
  CHECK(detect_trivial(petitio, cfg) == TrivialKind::PetitioPrincipii);

  Syllogism conv_e{{prop(Form::E, "a", "b"), prop(Form::A, "c", "d")},
                   prop(Form::E, "b", "a")};
  CHECK(detect_trivial(conv_e, cfg) == TrivialKind::ConversionE);

  Syllogism conv_i{{prop(Form::I, "a", "b")}, prop(Form::I, "b", "a")};
  CHECK(detect_trivial(conv_i, cfg) == TrivialKind::ConversionI);

  Syllogism sub_ai{{prop(Form::A, "x", "y")}, prop(Form::I, "x", "y")};
  CHECK(detect_trivial(sub_ai, cfg) == TrivialKind::SubalternationAI);

  Syllogism sub_eo{{prop(Form::E, "x", "y")}, prop(Form::O, "x", "y")};
  CHECK(detect_trivial(sub_eo, cfg) == TrivialKind::SubalternationEO);

  Syllogism boom{{prop(Form::A, "a", "b"), prop(Form::O, "a", "b")},
                 prop(Form::E, "p", "q")};
  CHECK(detect_trivial(boom, cfg) == TrivialKind::Explosion);

  // A premise that merely contradicts the conclusion is not a rule
  Syllogism none{{prop(Form::A, "a", "b")}, prop(Form::O, "a", "b")};
  CHECK_FALSE(detect_trivial(none, cfg).has_value());

  // fixed order: a restated conclusion wins over a later explosion
  Syllogism both{{prop(Form::A, "a", "b"), prop(Form::O, "a", "b"),
                  prop(Form::E, "p", "q")},
                 prop(Form::E, "p", "q")};
  CHECK(detect_trivial(both, cfg) == TrivialKind::PetitioPrincipii);
}

TEST_CASE("subalternation rules stay inert without import") {
  ValidityConfig cfg = ValidityConfig::without_import();
  Syllogism sub_ai{{prop(Form::A, "x", "y")}, prop(Form::I, "x", "y")};
  CHECK_FALSE(detect_trivial(sub_ai, cfg).has_value());

  // even if listed as enabled, the import gate holds
  ValidityConfig manual;
  manual.existential_import = false;
  CHECK_FALSE(manual.trivial_rule_active(TrivialKind::SubalternationAI));
  CHECK(manual.trivial_rule_active(TrivialKind::PetitioPrincipii));
}

TEST_CASE("trivial rules can be disabled individually") {
  ValidityConfig cfg;
  cfg.enabled_trivial_rules.erase(TrivialKind::PetitioPrincipii);
  Syllogism petitio{{prop(Form::A, "a", "b"), prop(Form::E, "c", "d")},
                    prop(Form::A, "a", "b")};
  CHECK_FALSE(detect_trivial(petitio, cfg).has_value());
}

TEST_CASE("judge on canonical strings") {
  ValidityVerdict worked = judge("All B are A. All C are A. All C are B.");
  CHECK_FALSE(worked.valid());
  CHECK(worked.describe() == "invalid (AAA-2)");

  ValidityVerdict barbara = judge("all m are p. all s are m. all s are p.");
  CHECK(barbara.valid());
  CHECK(barbara.describe() == "valid (AAA-1)");

  ValidityVerdict bikes =
      judge("no bikes are cars. all bikes are vehicles. some vehicles are bikes.");
  CHECK_FALSE(bikes.valid());
  CHECK(bikes.is_malformed());
  CHECK(bikes.describe() == "invalid (malformed: no unique middle term)");

  // a restatement short-circuits what would otherwise be a structure failure
  ValidityVerdict restate = judge("all a are b. some c are d. all a are b.");
  CHECK(restate.valid());
  CHECK(restate.describe() == "valid (trivial: petitio principii)");

  ValidityVerdict garbage = judge("this is not logic.");
  CHECK_FALSE(garbage.valid());
  CHECK(garbage.is_malformed());
}

TEST_CASE("judge rejects wrong premise counts unless a trivial rule fires") {
  Syllogism three{{prop(Form::A, "a", "b"), prop(Form::A, "b", "c"),
                   prop(Form::A, "c", "d")},
                  prop(Form::A, "a", "d")};
  ValidityVerdict v = judge(three, {});
  CHECK_FALSE(v.valid());
  CHECK(v.is_malformed());

  Syllogism three_petitio{{prop(Form::A, "a", "b"), prop(Form::A, "b", "c"),
                           prop(Form::A, "a", "d")},
                          prop(Form::A, "a", "d")};
  CHECK(judge(three_petitio, {}).valid());
}

TEST_CASE("structure can be preferred over trivial rules") {
  ValidityConfig after;
  after.trivial_before_structure = false;

  // structurally analyzable: the mood-figure verdict wins
  Syllogism barbara{{prop(Form::A, "m", "p"), prop(Form::A, "s", "m")},
                    prop(Form::A, "s", "p")};
  CHECK(judge(barbara, after).is_mood_figure());

  // structure fails, trivial rule still rescues it
  Syllogism restate{{prop(Form::A, "a", "b"), prop(Form::I, "c", "d")},
                    prop(Form::A, "a", "b")};
  ValidityVerdict v = judge(restate, after);
  CHECK(v.valid());
  CHECK(v.is_trivial());
}

TEST_CASE("keystone: table agrees with the oracle on all 256 forms") {
  for (bool import : {true, false}) {
    ValidityConfig cfg;
    cfg.existential_import = import;
    int valid_count = 0;
    for (int fig = 1; fig <= 4; ++fig) {
      for (int idx = 0; idx < 64; ++idx) {
        const Mood m = Mood::from_index(idx);
        const Syllogism s = instantiate_form(m, Figure{fig});
        const ValidityVerdict v = judge(s, cfg);
        REQUIRE(v.is_mood_figure());
        const bool semantic = entails(s.premises(), s.conclusion(), {import, 4});
        CHECK(v.valid() == semantic);
        valid_count += v.valid() ? 1 : 0;
      }
    }
    CHECK(valid_count == (import ? 24 : 15));
  }
}

TEST_CASE("judge is invariant under bijective term renaming") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    Syllogism s = testutil::random_syllogism(rng, 2);
    std::map<std::string, Term> rename;
    int salt = 0;
    auto renamed_term = [&](const Term& t) {
      auto it = rename.find(t.str());
      if (it == rename.end()) {
        it = rename.emplace(t.str(), Term{testutil::fresh_name(rng, salt++)}).first;
      }
      return it->second;
    };
    auto apply = [&](const Proposition& p) {
      return Proposition{p.form, renamed_term(p.subject), renamed_term(p.predicate)};
    };
    Syllogism renamed{{apply(s.premises()[0]), apply(s.premises()[1])},
                      apply(s.conclusion())};

    ValidityVerdict a = judge(s, {});
    ValidityVerdict b = judge(renamed, {});
    CHECK(a.valid() == b.valid());
    CHECK(a.basis().index() == b.basis().index());
    if (a.is_mood_figure()) {
      CHECK(std::get<MoodFigureBasis>(a.basis()).mood ==
            std::get<MoodFigureBasis>(b.basis()).mood);
      CHECK(std::get<MoodFigureBasis>(a.basis()).figure ==
            std::get<MoodFigureBasis>(b.basis()).figure);
    }
  }
}

TEST_CASE("whenever a trivial rule fires, the oracle confirms entailment") {
  // tiny vocabulary so restatements, converses and contradictions occur
  std::mt19937 rng(31);
  const char* vocab[3] = {"x", "y", "z"};
  auto tiny_prop = [&rng, &vocab] {
    return Proposition{static_cast<Form>(rng() % 4), Term{vocab[rng() % 3]},
                       Term{vocab[rng() % 3]}};
  };
  int fired = 0;
  std::set<TrivialKind> kinds_seen;
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<Proposition> premises;
    const int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) premises.push_back(tiny_prop());
    Syllogism s{std::move(premises), tiny_prop()};
    ValidityConfig cfg;
    auto kind = detect_trivial(s, cfg);
    if (!kind) continue;
    ++fired;
    kinds_seen.insert(*kind);
    CHECK(entails(s.premises(), s.conclusion(), {cfg.existential_import, 4}));
  }
  // the generator must actually exercise the rules
  CHECK(fired > 100);
  CHECK(kinds_seen.size() >= 4);
}

TEST_SUITE_END();
