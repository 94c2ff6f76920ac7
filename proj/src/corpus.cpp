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

#include "syllo/corpus.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "syllo/oracle.hpp"
#include "syllo/text.hpp"

namespace syllo {

namespace {

std::string fill(std::string_view tpl, const std::string& s, const std::string& p) {
  std::string out;
  for (std::size_t i = 0; i < tpl.size();) {
    if (tpl.compare(i, 3, "{s}") == 0) {
      out += s;
      i += 3;
    } else if (tpl.compare(i, 3, "{p}") == 0) {
      out += p;
      i += 3;
    } else {
      out.push_back(tpl[i]);
      ++i;
    }
  }
  return out;
}

constexpr std::array<std::string_view, 4> kVariantsA = {
    "All {s} are {p}",
    "Every {s} is {p}",
    "Each {s} is {p}",
    "Anything that is {s} is {p}",
};
constexpr std::array<std::string_view, 4> kVariantsE = {
    "No {s} are {p}",
    "Not a single {s} is {p}",
    "None of the {s} are {p}",
    "{s} are never {p}",
};
constexpr std::array<std::string_view, 4> kVariantsI = {
    "Some {s} are {p}",
    "A few {s} are {p}",
    "There exist {s} that are {p}",
    "A portion of {s} are {p}",
};
constexpr std::array<std::string_view, 3> kVariantsO = {
    "Some {s} are not {p}",
    "Not all {s} are {p}",
    "At least one {s} is not {p}",
};

}  // namespace

unsigned surface_variant_count(Form f) {
  switch (f) {
    case Form::A: return kVariantsA.size();
    case Form::E: return kVariantsE.size();
    case Form::I: return kVariantsI.size();
    case Form::O: return kVariantsO.size();
  }
  return 1;
}

std::string render_surface(const Proposition& p, unsigned variant) {
  std::string_view tpl;
  switch (p.form) {
    case Form::A: tpl = kVariantsA[variant % kVariantsA.size()]; break;
    case Form::E: tpl = kVariantsE[variant % kVariantsE.size()]; break;
    case Form::I: tpl = kVariantsI[variant % kVariantsI.size()]; break;
    case Form::O: tpl = kVariantsO[variant % kVariantsO.size()]; break;
  }
  return fill(tpl, p.subject.str(), p.predicate.str()) + ".";
}

namespace {

struct Lexicalization {
  // role terms in (S, M, P) order
  std::string s, m, p;
};

// Belief-consistent triples follow real taxonomies; the inconsistent ones
// reuse the same nouns with the hierarchy scrambled, so the two halves of
// the corpus differ only by term substitution.
const std::array<Lexicalization, 8> kConsistentTriples = {{
    {"dogs", "mammals", "animals"},
    {"roses", "flowers", "plants"},
    {"sparrows", "birds", "egg layers"},
    {"oaks", "trees", "organisms"},
    {"carrots", "vegetables", "edible things"},
    {"triangles", "polygons", "shapes"},
    {"violins", "string instruments", "instruments"},
    {"sedans", "cars", "vehicles"},
}};
const std::array<Lexicalization, 8> kInconsistentTriples = {{
    {"animals", "mammals", "dogs"},
    {"plants", "flowers", "roses"},
    {"egg layers", "birds", "sparrows"},
    {"organisms", "trees", "oaks"},
    {"edible things", "vegetables", "carrots"},
    {"shapes", "polygons", "triangles"},
    {"instruments", "string instruments", "violins"},
    {"vehicles", "cars", "sedans"},
}};

Proposition relabel(const Proposition& abstract, const Lexicalization& lex) {
  auto map_term = [&lex](const Term& t) {
    if (t.str() == "s") return Term{lex.s};
    if (t.str() == "m") return Term{lex.m};
    return Term{lex.p};
  };
  return Proposition{abstract.form, map_term(abstract.subject),
                     map_term(abstract.predicate)};
}

std::string conclusion_surface(const Proposition& p, unsigned variant) {
  return "Therefore, " + render_surface(p, variant);
}

}  // namespace

std::vector<DatasetRecord> make_validity_corpus(const ValidityCorpusOptions& opts) {
  std::mt19937 rng(opts.seed);
  std::vector<DatasetRecord> out;
  out.reserve(512 * static_cast<std::size_t>(opts.copies_per_form));

  int form_counter = 0;
  for (int fig = 1; fig <= 4; ++fig) {
    for (int mood_idx = 0; mood_idx < 64; ++mood_idx) {
      const Mood mood = Mood::from_index(mood_idx);
      const Figure figure{fig};
      const Syllogism abstract = instantiate_form(mood, figure);
      const bool valid =
          entails(abstract.premises(), abstract.conclusion(), OracleOptions{true, 4});

      for (int copy = 0; copy < opts.copies_per_form; ++copy) {
        // One variant draw per (form, copy), shared by both groups so the
        // halves differ only in their terms.
        std::array<unsigned, 3> variants = {static_cast<unsigned>(rng()),
                                            static_cast<unsigned>(rng()),
                                            static_cast<unsigned>(rng())};
        const std::size_t triple_idx =
            static_cast<std::size_t>(form_counter + copy) % kConsistentTriples.size();

        for (PlausibilityGroup group :
             {PlausibilityGroup::Consistent, PlausibilityGroup::Inconsistent}) {
          const Lexicalization& lex = group == PlausibilityGroup::Consistent
                                          ? kConsistentTriples[triple_idx]
                                          : kInconsistentTriples[triple_idx];
          DatasetRecord r;
          r.id = "form-" + mood.str() + "-" + std::to_string(fig) +
                 (opts.copies_per_form > 1 ? "-" + std::to_string(copy) : "") + "-" +
                 std::string(group_name(group));
          r.language = "en";
          r.sentences = {
              render_surface(relabel(abstract.premises()[0], lex), variants[0]),
              render_surface(relabel(abstract.premises()[1], lex), variants[1]),
              conclusion_surface(relabel(abstract.conclusion(), lex), variants[2]),
          };
          r.gold_validity = valid;
          if (valid) r.gold_relevant = {0, 1};
          r.plausibility_group = group;
          out.push_back(std::move(r));
        }
      }
      ++form_counter;
    }
  }
  return out;
}

namespace {

const std::array<std::string, 12> kDistractorTerms = {
    "clouds",  "rivers",  "planets", "metals", "books",   "songs",
    "bridges", "lanterns", "meadows", "comets", "saddles", "anchors"};

struct RelevanceDraft {
  std::vector<Proposition> premises;
  Proposition conclusion{Form::A, Term{"x"}, Term{"y"}};
  std::set<int> gold;  // empty for invalid instances
};

bool oracle_clean(const RelevanceDraft& d, const OracleOptions& oracle) {
  const std::size_t n = d.premises.size();
  // No single premise may entail the conclusion; that would admit a
  // trivial singleton answer besides the pair.
  for (std::size_t k = 0; k < n; ++k) {
    std::array<Proposition, 1> one = {d.premises[k]};
    if (entails(one, d.conclusion, oracle)) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::array<Proposition, 2> pair = {d.premises[i], d.premises[j]};
      const bool is_gold = d.gold.count(static_cast<int>(i)) != 0 &&
                           d.gold.count(static_cast<int>(j)) != 0;
      if (entails(pair, d.conclusion, oracle) != is_gold) return false;
    }
  }
  return true;
}

Proposition random_distractor(std::mt19937& rng, const Term& middle) {
  const Form form = static_cast<Form>(rng() % 4);
  auto pick_term = [&rng, &middle]() {
    // occasionally reuse the middle term so distractors overlap the gold
    // pair's vocabulary, like real task items do
    if (rng() % 4 == 0) return middle;
    return Term{kDistractorTerms[rng() % kDistractorTerms.size()]};
  };
  Term a = pick_term();
  Term b = pick_term();
  int guard = 0;
  while (b == a && ++guard < 8) b = Term{kDistractorTerms[rng() % kDistractorTerms.size()]};
  return Proposition{form, a, b};
}

}  // namespace

std::vector<DatasetRecord> make_relevance_corpus(const RelevanceCorpusOptions& opts) {
  std::mt19937 rng(opts.seed);
  const OracleOptions oracle{true, 4};

  const auto valid_forms = [] {
    std::vector<std::pair<Mood, Figure>> forms;
    FormTable t = enumerate_forms(true, 4);
    for (auto& mf : t.valid_forms()) forms.push_back(mf);
    return forms;
  }();

  const std::array<Lexicalization, 8>& lex_pool = kConsistentTriples;
  std::vector<DatasetRecord> out;

  const int total = opts.valid_count + opts.invalid_count;
  for (int inst = 0; inst < total; ++inst) {
    const bool want_valid = inst < opts.valid_count;

    RelevanceDraft draft;
    bool ok = false;
    for (int attempt = 0; attempt < 200 && !ok; ++attempt) {
      draft = RelevanceDraft{};
      const auto& [mood, figure] = valid_forms[rng() % valid_forms.size()];
      const Lexicalization& lex = lex_pool[rng() % lex_pool.size()];
      Syllogism gold_syl = instantiate_form(mood, figure);
      Proposition major = relabel(gold_syl.premises()[0], lex);
      Proposition minor = relabel(gold_syl.premises()[1], lex);
      draft.conclusion = relabel(gold_syl.conclusion(), lex);
      if (!want_valid) {
        // Flip the conclusion form; the checker below rejects flips that
        // happen to stay entailed.
        draft.conclusion.form = static_cast<Form>((static_cast<int>(draft.conclusion.form) +
                                                   1 + static_cast<int>(rng() % 3)) % 4);
      }

      const int extra = static_cast<int>(rng() % static_cast<unsigned>(opts.max_distractors + 1));
      std::vector<Proposition> all = {major, minor};
      for (int d = 0; d < extra; ++d) all.push_back(random_distractor(rng, Term{lex.m}));

      std::vector<int> order(all.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      // explicit Fisher-Yates: identical output on every standard library
      for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng() % i]);
      }

      draft.premises.clear();
      for (std::size_t pos = 0; pos < order.size(); ++pos) {
        draft.premises.push_back(all[static_cast<std::size_t>(order[pos])]);
        if (want_valid && order[pos] < 2) draft.gold.insert(static_cast<int>(pos));
      }
      ok = oracle_clean(draft, oracle) &&
           (want_valid ? draft.gold.size() == 2 : draft.gold.empty());
    }
    if (!ok) throw std::runtime_error("relevance corpus generation exhausted retries");

    DatasetRecord r;
    r.id = (want_valid ? "rel-valid-" : "rel-invalid-") + std::to_string(inst);
    r.language = "en";
    for (const auto& p : draft.premises)
      r.sentences.push_back(render_surface(p, rng()));
    r.sentences.push_back(conclusion_surface(draft.conclusion, rng()));
    r.gold_validity = want_valid;
    r.gold_relevant = draft.gold;
    r.plausibility_group = PlausibilityGroup::Neutral;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace syllo
