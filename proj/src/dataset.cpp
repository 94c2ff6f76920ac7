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

#include "syllo/dataset.hpp"

#include <fstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "syllo/text.hpp"

namespace syllo {

using nlohmann::json;

std::string_view group_name(PlausibilityGroup g) {
  switch (g) {
    case PlausibilityGroup::Consistent: return "consistent";
    case PlausibilityGroup::Inconsistent: return "inconsistent";
    case PlausibilityGroup::Neutral: return "neutral";
  }
  return "?";
}

std::optional<PlausibilityGroup> group_from_name(std::string_view s) {
  if (s == "consistent") return PlausibilityGroup::Consistent;
  if (s == "inconsistent") return PlausibilityGroup::Inconsistent;
  if (s == "neutral") return PlausibilityGroup::Neutral;
  return std::nullopt;
}

void validate_record(const DatasetRecord& r, const std::string& where) {
  if (r.id.empty()) throw DatasetError(where + ": empty id");
  if (r.sentences.size() < 2)
    throw DatasetError(where + ": needs at least 2 sentences (premises + conclusion)");
  const int premise_count = static_cast<int>(r.sentences.size()) - 1;
  for (int idx : r.gold_relevant) {
    if (idx < 0 || idx >= premise_count)
      throw DatasetError(where + ": gold_relevant index " + std::to_string(idx) +
                         " outside premises 0.." + std::to_string(premise_count - 1));
  }
  if (!r.gold_validity && !r.gold_relevant.empty())
    throw DatasetError(where + ": invalid records must have empty gold_relevant");
}

namespace {

DatasetRecord record_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw DatasetError(where + ": not a JSON object");
  DatasetRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    if (j.contains("language")) r.language = j["language"].get<std::string>();
    r.sentences = j.at("sentences").get<std::vector<std::string>>();
    r.gold_validity = j.at("gold_validity").get<bool>();
    if (j.contains("gold_relevant")) {
      for (int idx : j["gold_relevant"].get<std::vector<int>>()) r.gold_relevant.insert(idx);
    }
    auto group = group_from_name(j.value("plausibility_group", "neutral"));
    if (!group) throw DatasetError(where + ": unknown plausibility_group");
    r.plausibility_group = *group;
  } catch (const DatasetError&) {
    throw;
  } catch (const std::exception& e) {
    throw DatasetError(where + ": " + e.what());
  }
  validate_record(r, where);
  return r;
}

json record_to_json(const DatasetRecord& r) {
  json j;
  j["id"] = r.id;
  j["language"] = r.language;
  j["sentences"] = r.sentences;
  j["gold_validity"] = r.gold_validity;
  j["gold_relevant"] = std::vector<int>(r.gold_relevant.begin(), r.gold_relevant.end());
  j["plausibility_group"] = std::string(group_name(r.plausibility_group));
  return j;
}

}  // namespace

std::vector<DatasetRecord> load_dataset(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw DatasetError("dataset not readable: " + p.string());
  std::vector<DatasetRecord> records;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    const std::string where = p.string() + ":" + std::to_string(line_no);
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw DatasetError(where + ": malformed JSON");
    DatasetRecord r = record_from_json(j, where);
    if (!seen_ids.insert(r.id).second)
      throw DatasetError(where + ": duplicate id '" + r.id + "'");
    records.push_back(std::move(r));
  }
  return records;
}

void save_dataset(const std::filesystem::path& p, std::span<const DatasetRecord> records) {
  std::ofstream out(p, std::ios::trunc);
  if (!out) throw DatasetError("dataset not writable: " + p.string());
  for (const auto& r : records) out << record_to_json(r).dump() << '\n';
}

}  // namespace syllo
