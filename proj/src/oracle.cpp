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

#include "syllo/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace syllo {

namespace {

bool eval_masks(Form f, std::uint32_t s, std::uint32_t p) {
  switch (f) {
    case Form::A: return (s & ~p) == 0;
    case Form::E: return (s & p) == 0;
    case Form::I: return (s & p) != 0;
    case Form::O: return (s & ~p) != 0;
  }
  throw std::logic_error("unreachable form");
}

// Proposition with term slots resolved to indices into the term list.
struct IndexedProp {
  Form form;
  std::size_t subject;
  std::size_t predicate;
};

struct IndexedArgument {
  std::vector<Term> terms;
  std::vector<IndexedProp> premises;
  IndexedProp conclusion;
};

IndexedArgument index_argument(std::span<const Proposition> premises,
                               const Proposition& conclusion) {
  IndexedArgument out;
  auto slot = [&out](const Term& t) -> std::size_t {
    auto it = std::find(out.terms.begin(), out.terms.end(), t);
    if (it != out.terms.end()) return static_cast<std::size_t>(it - out.terms.begin());
    out.terms.push_back(t);
    return out.terms.size() - 1;
  };
  auto index_prop = [&slot](const Proposition& p) {
    return IndexedProp{p.form, slot(p.subject), slot(p.predicate)};
  };
  for (const auto& p : premises) out.premises.push_back(index_prop(p));
  out.conclusion = index_prop(conclusion);
  return out;
}

// Sweeps every extension assignment for one universe size; returns false
// on the first countermodel (premises all true, conclusion false).
bool holds_at_size(const IndexedArgument& arg, int n, bool import) {
  const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);
  const std::uint32_t first = import ? 1u : 0u;
  const std::size_t k = arg.terms.size();
  std::vector<std::uint32_t> ext(k, first);

  for (;;) {
    bool premises_true = true;
    for (const auto& p : arg.premises) {
      if (!eval_masks(p.form, ext[p.subject], ext[p.predicate])) {
        premises_true = false;
        break;
      }
    }
    if (premises_true &&
        !eval_masks(arg.conclusion.form, ext[arg.conclusion.subject],
                    ext[arg.conclusion.predicate])) {
      return false;
    }
    // odometer over term extensions
    std::size_t i = 0;
    while (i < k) {
      if (ext[i] < full) {
        ++ext[i];
        break;
      }
      ext[i] = first;
      ++i;
    }
    if (i == k) return true;
  }
}

}  // namespace

bool eval_proposition(const Proposition& p, const Model& m) {
  auto lookup = [&m](const Term& t) -> std::uint32_t {
    auto it = m.extensions.find(t);
    if (it == m.extensions.end())
      throw std::out_of_range("eval_proposition: no extension for term '" + t.str() + "'");
    return it->second;
  };
  return eval_masks(p.form, lookup(p.subject), lookup(p.predicate));
}

bool entails(std::span<const Proposition> premises, const Proposition& conclusion,
             const OracleOptions& opts) {
  if (opts.max_universe < 3)
    throw std::invalid_argument("entails: max_universe must be at least 3");
  const IndexedArgument arg = index_argument(premises, conclusion);
  const int lo = opts.existential_import ? 1 : 0;
  for (int n = lo; n <= opts.max_universe; ++n) {
    if (n == 0) {
      // Empty universe: every extension is empty; universals hold,
      // particulars fail.
      bool premises_true = true;
      for (const auto& p : arg.premises) premises_true &= is_universal(p.form);
      if (premises_true && !is_universal(arg.conclusion.form)) return false;
      continue;
    }
    if (!holds_at_size(arg, n, opts.existential_import)) return false;
  }
  return true;
}

int FormTable::count_valid() const {
  int n = 0;
  for (bool b : cells_) n += b ? 1 : 0;
  return n;
}

std::vector<std::pair<Mood, Figure>> FormTable::valid_forms() const {
  std::vector<std::pair<Mood, Figure>> out;
  for (int fig = 1; fig <= 4; ++fig) {
    for (int idx = 0; idx < 64; ++idx) {
      Mood m = Mood::from_index(idx);
      Figure f{fig};
      if (get(m, f)) out.emplace_back(m, f);
    }
  }
  return out;
}

bool FormTable::contains_all(const FormTable& other) const {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (other.cells_[i] && !cells_[i]) return false;
  }
  return true;
}

Syllogism instantiate_form(const Mood& mood, const Figure& figure) {
  const Term s{"s"}, m{"m"}, p{"p"};
  // (a, b) = (middle is subject of major, middle is subject of minor)
  bool a = false, b = false;
  switch (figure.value()) {
    case 1: a = true; b = false; break;
    case 2: a = false; b = false; break;
    case 3: a = true; b = true; break;
    case 4: a = false; b = true; break;
  }
  Proposition major{mood.major, a ? m : p, a ? p : m};
  Proposition minor{mood.minor, b ? m : s, b ? s : m};
  Proposition conclusion{mood.conclusion, s, p};
  return Syllogism{{major, minor}, conclusion};
}

namespace {

bool cell_valid(int flat_index, bool import, int max_universe) {
  const Figure fig{flat_index / 64 + 1};
  const Mood mood = Mood::from_index(flat_index % 64);
  const Syllogism syl = instantiate_form(mood, fig);
  return entails(syl.premises(), syl.conclusion(),
                 OracleOptions{import, max_universe});
}

}  // namespace

FormTable enumerate_forms_serial(bool existential_import, int max_universe) {
  FormTable table;
  for (int i = 0; i < 256; ++i) {
    const Figure fig{i / 64 + 1};
    const Mood mood = Mood::from_index(i % 64);
    table.set(mood, fig, cell_valid(i, existential_import, max_universe));
  }
  return table;
}

FormTable enumerate_forms(bool existential_import, int max_universe) {
  std::array<bool, 256> flags{};
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < 256; ++i) {
    flags[static_cast<std::size_t>(i)] = cell_valid(i, existential_import, max_universe);
  }
  FormTable table;
  for (int i = 0; i < 256; ++i) {
    table.set(Mood::from_index(i % 64), Figure{i / 64 + 1},
              flags[static_cast<std::size_t>(i)]);
  }
  return table;
}

}  // namespace syllo
