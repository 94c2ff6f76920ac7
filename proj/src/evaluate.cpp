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

#include "syllo/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "syllo/normalizer.hpp"
#include "syllo/parser.hpp"
#include "syllo/relevance.hpp"
#include "syllo/text.hpp"

namespace syllo {

std::string_view pipeline_name(PipelineId p) {
  switch (p) {
    case PipelineId::Rules: return "rules";
    case PipelineId::Fixtures: return "fixtures";
  }
  return "?";
}

std::optional<PipelineId> pipeline_from_name(std::string_view s) {
  if (s == "rules") return PipelineId::Rules;
  if (s == "fixtures") return PipelineId::Fixtures;
  return std::nullopt;
}

CombinedScorer placeholder_combined_scorer() {
  return [](double accuracy, double bias) { return accuracy * (100.0 - bias) / 100.0; };
}

double set_f1_percent(const std::set<int>& gold, const std::set<int>& predicted) {
  if (gold.empty() && predicted.empty()) return 100.0;
  if (gold.empty() || predicted.empty()) return 0.0;
  std::size_t hits = 0;
  for (int i : predicted) hits += gold.count(i);
  if (hits == 0) return 0.0;
  const double precision = static_cast<double>(hits) / static_cast<double>(predicted.size());
  const double recall = static_cast<double>(hits) / static_cast<double>(gold.size());
  return 100.0 * 2.0 * precision * recall / (precision + recall);
}

std::string record_argument_text(const DatasetRecord& r) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < r.sentences.size(); ++i) {
    std::string s{text::trim(r.sentences[i])};
    const bool is_conclusion = (i + 1 == r.sentences.size());
    if (is_conclusion) {
      std::string lowered = text::to_lower_ascii(s);
      if (lowered.rfind("therefore", 0) != 0) s = "Therefore, " + s;
    }
    if (s.empty() || s.back() != '.') s += '.';
    parts.push_back(std::move(s));
  }
  return text::join(parts, " ");
}

namespace {

struct Prediction {
  ValidityVerdict verdict = ValidityVerdict::malformed("unset");
  std::set<int> relevant;
  std::string note;
};

Prediction predict_rules(const DatasetRecord& r, const ValidityConfig& cfg) {
  Prediction out;
  const std::size_t n = r.sentences.size();

  auto conclusion = normalize_en(r.sentences[n - 1]);
  if (!conclusion.ok()) {
    out.verdict = ValidityVerdict::malformed("conclusion: " + conclusion.error().reason);
    out.note = "conclusion not normalizable";
    return out;
  }

  std::vector<Proposition> parsed;
  std::vector<int> original_index;
  std::vector<std::string> failures;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto p = normalize_en(r.sentences[i]);
    if (p.ok()) {
      parsed.push_back(p.value());
      original_index.push_back(static_cast<int>(i));
    } else {
      failures.push_back("premise " + std::to_string(i) + " not normalizable");
    }
  }
  if (!failures.empty()) out.note = text::join(failures, "; ");
  if (parsed.empty()) {
    out.verdict = ValidityVerdict::malformed("no premise is normalizable");
    return out;
  }

  RelevanceResult sel = select_relevant(parsed, conclusion.value(), cfg);
  out.verdict = sel.verdict;
  for (int idx : sel.relevant.indices)
    out.relevant.insert(original_index[static_cast<std::size_t>(idx)]);
  return out;
}

// Maps one normalized premise back to an original sentence by token
// overlap with its terms; singular/plural "+s" variants count as equal.
int best_sentence_match(const Proposition& premise,
                        const std::vector<std::vector<std::string>>& sentence_tokens,
                        const std::set<int>& taken) {
  auto term_tokens = text::tokens(premise.subject.str());
  for (const auto& t : text::tokens(premise.predicate.str())) term_tokens.push_back(t);

  int best = -1;
  std::size_t best_score = 0;
  for (std::size_t i = 0; i < sentence_tokens.size(); ++i) {
    if (taken.count(static_cast<int>(i))) continue;
    std::size_t score = 0;
    for (const auto& tt : term_tokens) {
      for (const auto& st : sentence_tokens[i]) {
        if (tt == st || tt + "s" == st || st + "s" == tt) {
          ++score;
          break;
        }
      }
    }
    if (score > best_score) {
      best_score = score;
      best = static_cast<int>(i);
    }
  }
  return best_score == 0 ? -1 : best;
}

std::vector<std::string> sentence_token_list(const std::string& sentence) {
  std::string cleaned;
  for (unsigned char c : text::to_lower_ascii(sentence)) {
    cleaned.push_back((c == '.' || c == ',' || c == ';' || c == ':' || c == '!' ||
                       c == '?' || c == '"')
                          ? ' '
                          : static_cast<char>(c));
  }
  return text::tokens(cleaned);
}

Prediction predict_fixtures(const DatasetRecord& r, const ValidityConfig& cfg,
                            const FixtureStore* store) {
  Prediction out;
  if (store == nullptr) throw std::invalid_argument("fixtures pipeline needs a fixture store");

  const NormalizationMode mode =
      (r.language == "en" || r.language.empty())
          ? NormalizationMode::EnglishNorm
          : (r.sentences.size() <= 3 ? NormalizationMode::EpnValidity
                                     : NormalizationMode::EpnRelevance);
  const std::string raw = record_argument_text(r);
  auto norm = FixtureNormalizer(*store).normalize(raw, mode);
  if (!norm.ok()) {
    out.verdict = ValidityVerdict::malformed(norm.error().message);
    out.note = "normalization failed";
    return out;
  }
  auto syl = parse_canonical(norm.value().parsed);
  if (!syl.ok()) {
    out.verdict = ValidityVerdict::malformed(syl.error().describe());
    out.note = "normalized output not parseable";
    return out;
  }

  const auto& premises = syl.value().premises();
  RelevanceResult sel = select_relevant(premises, syl.value().conclusion(), cfg);
  out.verdict = sel.verdict;

  const std::size_t original_premises = r.sentences.size() - 1;
  if (premises.size() == original_premises) {
    out.relevant = sel.relevant.indices;
    return out;
  }

  // The normalizer condensed the argument (EPN selects two premises), so
  // selected premises are mapped back to original sentences by term-token
  // overlap. Unmatched premises are dropped and noted.
  std::vector<std::vector<std::string>> sentence_tokens;
  for (std::size_t i = 0; i + 1 < r.sentences.size(); ++i)
    sentence_tokens.push_back(sentence_token_list(r.sentences[i]));
  std::set<int> taken;
  bool dropped = false;
  for (int idx : sel.relevant.indices) {
    int mapped = best_sentence_match(premises[static_cast<std::size_t>(idx)],
                                     sentence_tokens, taken);
    if (mapped < 0) {
      dropped = true;
      continue;
    }
    taken.insert(mapped);
    out.relevant.insert(mapped);
  }
  if (!sel.relevant.indices.empty()) {
    out.note = dropped ? "premise indices remapped by token overlap; some unmatched"
                       : "premise indices remapped by token overlap";
  }
  return out;
}

}  // namespace

RecordReport predict_record(const DatasetRecord& record, PipelineId pipeline,
                            const EvalOptions& opts) {
  Prediction p = pipeline == PipelineId::Rules
                     ? predict_rules(record, opts.validity)
                     : predict_fixtures(record, opts.validity, opts.fixtures);
  RecordReport rep;
  rep.id = record.id;
  rep.predicted_valid = p.verdict.valid();
  rep.basis = p.verdict.describe();
  rep.predicted_relevant = p.relevant;
  rep.gold_validity = record.gold_validity;
  rep.gold_relevant = record.gold_relevant;
  rep.validity_correct = (rep.predicted_valid == record.gold_validity);
  rep.premise_f1 = set_f1_percent(record.gold_relevant, p.relevant);
  rep.note = p.note;
  return rep;
}

namespace {

double per_index_class_f1(const std::vector<RecordReport>& reports) {
  std::set<int> classes;
  for (const auto& r : reports) {
    classes.insert(r.gold_relevant.begin(), r.gold_relevant.end());
    classes.insert(r.predicted_relevant.begin(), r.predicted_relevant.end());
  }
  if (classes.empty()) return 100.0;
  double sum = 0.0;
  for (int cls : classes) {
    long tp = 0, fp = 0, fn = 0;
    for (const auto& r : reports) {
      const bool in_gold = r.gold_relevant.count(cls) != 0;
      const bool in_pred = r.predicted_relevant.count(cls) != 0;
      tp += (in_gold && in_pred) ? 1 : 0;
      fp += (!in_gold && in_pred) ? 1 : 0;
      fn += (in_gold && !in_pred) ? 1 : 0;
    }
    const double denom = static_cast<double>(2 * tp + fp + fn);
    sum += denom == 0.0 ? 100.0 : 100.0 * 2.0 * static_cast<double>(tp) / denom;
  }
  return sum / static_cast<double>(classes.size());
}

}  // namespace

EvalOutcome evaluate(std::span<const DatasetRecord> records, PipelineId pipeline,
                     const EvalOptions& opts) {
  if (records.empty()) throw std::invalid_argument("evaluate: no records");

  std::vector<RecordReport> reports(records.size());
  if (opts.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < records.size(); ++i) {
      reports[i] = predict_record(records[i], pipeline, opts);
    }
  } else {
    for (std::size_t i = 0; i < records.size(); ++i) {
      reports[i] = predict_record(records[i], pipeline, opts);
    }
  }

  RunMetrics m;
  m.n = static_cast<int>(records.size());

  long correct = 0;
  double f1_sum = 0.0;
  std::map<PlausibilityGroup, std::pair<long, long>> group_counts;  // correct, total
  for (std::size_t i = 0; i < records.size(); ++i) {
    correct += reports[i].validity_correct ? 1 : 0;
    f1_sum += reports[i].premise_f1;
    auto& gc = group_counts[records[i].plausibility_group];
    gc.first += reports[i].validity_correct ? 1 : 0;
    gc.second += 1;
  }
  m.accuracy = 100.0 * static_cast<double>(correct) / static_cast<double>(m.n);
  m.premise_f1 = opts.f1_axis == F1Axis::PerRecord
                     ? f1_sum / static_cast<double>(m.n)
                     : per_index_class_f1(reports);

  for (const auto& [group, counts] : group_counts) {
    m.per_group_accuracy[group] =
        100.0 * static_cast<double>(counts.first) / static_cast<double>(counts.second);
  }
  const bool has_consistent = group_counts.count(PlausibilityGroup::Consistent) != 0;
  const bool has_inconsistent = group_counts.count(PlausibilityGroup::Inconsistent) != 0;
  if (has_consistent && has_inconsistent) {
    m.bias = std::abs(m.per_group_accuracy[PlausibilityGroup::Consistent] -
                      m.per_group_accuracy[PlausibilityGroup::Inconsistent]);
  } else {
    m.bias = 0.0;
    m.warnings.push_back(
        "bias defaulted to 0: consistent and inconsistent groups are not both present");
  }
  m.combined = opts.combined(m.accuracy, m.bias);

  std::sort(reports.begin(), reports.end(),
            [](const RecordReport& a, const RecordReport& b) { return a.id < b.id; });
  return EvalOutcome{std::move(m), std::move(reports)};
}

std::string render_metrics(const RunMetrics& m) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "records            " << m.n << '\n';
  os << "validity accuracy  " << m.accuracy << '\n';
  os << "premise F1         " << m.premise_f1 << '\n';
  os << "bias               " << m.bias << '\n';
  os << "combined*          " << m.combined << "   (*placeholder formula acc*(100-bias)/100)\n";
  for (const auto& [group, acc] : m.per_group_accuracy) {
    std::string label = "accuracy[" + std::string(group_name(group)) + "]";
    if (label.size() < 23) label.append(23 - label.size(), ' ');
    os << label << acc << '\n';
  }
  for (const auto& w : m.warnings) os << "warning: " << w << '\n';
  return os.str();
}

}  // namespace syllo
