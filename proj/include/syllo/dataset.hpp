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

#ifndef SYLLO_DATASET_HPP
#define SYLLO_DATASET_HPP

#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace syllo {

enum class PlausibilityGroup { Consistent, Inconsistent, Neutral };

std::string_view group_name(PlausibilityGroup g);
std::optional<PlausibilityGroup> group_from_name(std::string_view s);

/// One labeled task instance. Sentences are raw surface strings; the last
/// one is the conclusion. gold_relevant holds 0-based premise indices and
/// is empty whenever gold_validity is false.
struct DatasetRecord {
  std::string id;
  std::string language = "en";
  std::vector<std::string> sentences;
  bool gold_validity = false;
  std::set<int> gold_relevant;
  PlausibilityGroup plausibility_group = PlausibilityGroup::Neutral;
};

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checks the schema constraints of one record; throws DatasetError with
/// `where` as the location prefix on violation.
void validate_record(const DatasetRecord& r, const std::string& where);

/// Line-delimited JSON records, UTF-8. Schema violations, malformed lines
/// (reported with their line number) and duplicate ids all throw.
std::vector<DatasetRecord> load_dataset(const std::filesystem::path& p);

void save_dataset(const std::filesystem::path& p, std::span<const DatasetRecord> records);

}  // namespace syllo

#endif  // SYLLO_DATASET_HPP
