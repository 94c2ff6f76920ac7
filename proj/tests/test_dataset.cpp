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

#include <filesystem>
#include <fstream>

#include "syllo/dataset.hpp"

using namespace syllo;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const char* name)
      : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
  void write(const std::string& content) const {
    std::ofstream out(path, std::ios::trunc);
    out << content;
  }
};

const char* kGoodLine =
    R"({"id":"r1","language":"en","sentences":["All a are b.","All b are c.","All a are c."],"gold_validity":true,"gold_relevant":[0,1],"plausibility_group":"consistent"})";

}  // namespace

TEST_SUITE_BEGIN("dataset");

TEST_CASE("well-formed records load in order") {
  TempFile tmp("syllo_ds_good.jsonl");
  tmp.write(std::string(kGoodLine) + "\n" +
            R"({"id":"r2","sentences":["No a are b.","Some c are b.","Some c are not a."],"gold_validity":true,"gold_relevant":[0,1]})" +
            "\n\n" +
            R"({"id":"r3","sentences":["All a are b.","All c are d.","All a are d."],"gold_validity":false})" +
            "\n");
  auto records = load_dataset(tmp.path);
  REQUIRE(records.size() == 3);
  CHECK(records[0].id == "r1");
  CHECK(records[0].plausibility_group == PlausibilityGroup::Consistent);
  CHECK(records[1].language == "en");  // defaulted
  CHECK(records[1].plausibility_group == PlausibilityGroup::Neutral);
  CHECK(records[2].gold_relevant.empty());
}

TEST_CASE("empty file loads as an empty list") {
  TempFile tmp("syllo_ds_empty.jsonl");
  tmp.write("");
  CHECK(load_dataset(tmp.path).empty());
}

TEST_CASE("missing file is an error") {
  CHECK_THROWS_AS(load_dataset("/nonexistent/nope.jsonl"), DatasetError);
}

TEST_CASE("malformed lines report their line number") {
  TempFile tmp("syllo_ds_bad.jsonl");
  tmp.write(std::string(kGoodLine) + "\nnot json at all\n");
  try {
    load_dataset(tmp.path);
    FAIL("expected DatasetError");
  } catch (const DatasetError& e) {
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
}

TEST_CASE("duplicate ids are rejected") {
  TempFile tmp("syllo_ds_dup.jsonl");
  tmp.write(std::string(kGoodLine) + "\n" + kGoodLine + "\n");
  CHECK_THROWS_AS(load_dataset(tmp.path), DatasetError);
}

TEST_CASE("schema constraints") {
  DatasetRecord r;
  r.id = "x";
  r.sentences = {"All a are b.", "All b are c.", "All a are c."};
  r.gold_validity = false;
  CHECK_NOTHROW(validate_record(r, "t"));

  // invalid records must abstain
  r.gold_relevant = {0, 1};
  CHECK_THROWS_AS(validate_record(r, "t"), DatasetError);

  // relevant indices must address premises only
  r.gold_validity = true;
  r.gold_relevant = {0, 2};
  CHECK_THROWS_AS(validate_record(r, "t"), DatasetError);

  DatasetRecord short_rec;
  short_rec.id = "y";
  short_rec.sentences = {"All a are b."};
  CHECK_THROWS_AS(validate_record(short_rec, "t"), DatasetError);
}

TEST_CASE("save and reload round-trips") {
  TempFile tmp("syllo_ds_rt.jsonl");
  DatasetRecord r;
  r.id = "rt1";
  r.language = "it";
  r.sentences = {"Tutti i gatti sono animali.", "però qualcosa.", "Quindi fine."};
  r.gold_validity = true;
  r.gold_relevant = {0};
  r.plausibility_group = PlausibilityGroup::Inconsistent;
  save_dataset(tmp.path, std::vector<DatasetRecord>{r});

  auto back = load_dataset(tmp.path);
  REQUIRE(back.size() == 1);
  CHECK(back[0].id == r.id);
  CHECK(back[0].language == "it");
  CHECK(back[0].sentences == r.sentences);
  CHECK(back[0].gold_relevant == r.gold_relevant);
  CHECK(back[0].plausibility_group == r.plausibility_group);
}

TEST_SUITE_END();
