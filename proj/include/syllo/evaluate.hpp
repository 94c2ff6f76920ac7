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

#ifndef SYLLO_EVALUATE_HPP
#define SYLLO_EVALUATE_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "syllo/dataset.hpp"
#include "syllo/remote.hpp"
#include "syllo/validity.hpp"

namespace syllo {

enum class PipelineId { Rules, Fixtures };

std::string_view pipeline_name(PipelineId p);
std::optional<PipelineId> pipeline_from_name(std::string_view s);

/// How the relevant-premise score aggregates: mean of per-record set F1
/// (default) or macro over premise-index classes.
enum class F1Axis { PerRecord, PerIndexClass };

/// Combined-score hook. The default, accuracy * (100 - bias) / 100, is a
/// documented placeholder, not the shared task's official formula.
using CombinedScorer = std::function<double(double accuracy_pct, double bias_pct)>;
CombinedScorer placeholder_combined_scorer();

struct EvalOptions {
  ValidityConfig validity{};
  F1Axis f1_axis = F1Axis::PerRecord;
  bool parallel = true;
  const FixtureStore* fixtures = nullptr;  // required by PipelineId::Fixtures
  CombinedScorer combined = placeholder_combined_scorer();
};

struct RecordReport {
  std::string id;
  bool predicted_valid = false;
  std::string basis;  // verdict description
  std::set<int> predicted_relevant;
  bool gold_validity = false;
  std::set<int> gold_relevant;
  bool validity_correct = false;
  double premise_f1 = 0.0;  // percent
  std::string note;         // normalization failures, index remapping, ...
};

struct RunMetrics {
  double accuracy = 0.0;    // percent
  double premise_f1 = 0.0;  // percent
  double bias = 0.0;        // percent
  double combined = 0.0;    // percent, placeholder formula by default
  std::map<PlausibilityGroup, double> per_group_accuracy;
  int n = 0;
  std::vector<std::string> warnings;
};

struct EvalOutcome {
  RunMetrics metrics;
  std::vector<RecordReport> reports;  // sorted by id
};

/// Set F1 in percent; two empty sets count as a correct abstention (100).
double set_f1_percent(const std::set<int>& gold, const std::set<int>& predicted);

/// The raw argument string handed to normalizer engines for one record:
/// sentences joined with a period each and "Therefore, " prefixed to the
/// conclusion. Fixture keys for dataset records are computed over this.
std::string record_argument_text(const DatasetRecord& r);

/// Runs the pipeline over every record (optionally OpenMP-parallel with
/// deterministic, input-ordered aggregation) and computes validity
/// accuracy, premise F1, content-effect bias (|acc(consistent) -
/// acc(inconsistent)|, neutral excluded) and the combined score.
EvalOutcome evaluate(std::span<const DatasetRecord> records, PipelineId pipeline,
                     const EvalOptions& opts = {});

/// Single-record prediction, exposed for tests and the CLI.
RecordReport predict_record(const DatasetRecord& record, PipelineId pipeline,
                            const EvalOptions& opts);

std::string render_metrics(const RunMetrics& m);

}  // namespace syllo

#endif  // SYLLO_EVALUATE_HPP
