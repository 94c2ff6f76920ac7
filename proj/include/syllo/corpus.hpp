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

#ifndef SYLLO_CORPUS_HPP
#define SYLLO_CORPUS_HPP

#include <vector>

#include "syllo/dataset.hpp"
#include "syllo/types.hpp"

namespace syllo {

/// English surface realizations of one proposition; variant selection is
/// seeded, and every variant round-trips through the rule normalizer to
/// the same proposition.
std::string render_surface(const Proposition& p, unsigned variant);
unsigned surface_variant_count(Form f);

struct ValidityCorpusOptions {
  unsigned seed = 7;
  /// Lexicalizations per (form, group); 256 forms x 2 groups x copies.
  int copies_per_form = 1;
};

/// All 256 (mood, figure) structures, each paired with a belief-consistent
/// and a belief-inconsistent lexicalization that differ only by term
/// substitution. Gold labels come from the finite-model oracle.
std::vector<DatasetRecord> make_validity_corpus(const ValidityCorpusOptions& opts = {});

struct RelevanceCorpusOptions {
  unsigned seed = 11;
  int valid_count = 200;
  int invalid_count = 100;
  int max_distractors = 5;
};

/// n-sentence instances: a gold premise pair drawn from the valid forms
/// plus distractors, shuffled. Generation is oracle-checked so that the
/// gold pair is the unique entailing pair (and no single premise suffices);
/// invalid instances have no entailing pair at all.
std::vector<DatasetRecord> make_relevance_corpus(const RelevanceCorpusOptions& opts = {});

}  // namespace syllo

#endif  // SYLLO_CORPUS_HPP
