// Copyright 2026 The dialect-tod Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dialect/records.h"

#include <fmt/format.h>

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <utility>

#include "dialect/error.h"
#include "json.hpp"
#include "text_util.h"

namespace dialect {
namespace {

using nlohmann::json;

json Parse(std::string_view line) {
  try {
    json j = json::parse(line);
    if (!j.is_object()) throw Error("record is not a JSON object");
    return j;
  } catch (const json::exception& e) {
    throw Error(fmt::format("malformed JSON record: {}", e.what()));
  }
}

template <typename T>
T Field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(fmt::format("missing field \"{}\"", key));
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw Error(fmt::format("field \"{}\" has the wrong type", key));
  }
}

std::string OptionalString(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  return Field<std::string>(j, key);
}

template <typename Record, typename Parser>
std::vector<Record> ReadLines(std::istream& in, Parser parse) {
  std::vector<Record> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (internal::Trim(line).empty()) continue;
    try {
      out.push_back(parse(line));
    } catch (const Error& e) {
      throw Error(fmt::format("line {}: {}", number, e.what()));
    }
  }
  return out;
}

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open {}", path.string()));
  return in;
}

template <typename Record>
void WriteLines(std::ostream& out, const std::vector<Record>& records) {
  for (const Record& r : records) out << ToJson(r) << '\n';
}

}  // namespace

int ParseScore(std::string_view text) {
  if (text == "idk") return RatingRecord::kIdk;
  if (text.size() == 1 && text[0] >= '1' && text[0] <= '5') return text[0] - '0';
  throw Error(fmt::format("score must be 1-5 or \"idk\", got \"{}\"", text));
}

std::string ScoreToString(int score) {
  if (score == RatingRecord::kIdk) return "idk";
  if (score < 1 || score > 5) throw Error(fmt::format("invalid score {}", score));
  return std::to_string(score);
}

std::string ToJson(const PredictionRecord& r) {
  json j = {{"sent_id", r.sent_id},
            {"variant", r.variant},
            {"run_seed", r.run_seed},
            {"intent", r.intent},
            {"slots", internal::Join(r.slots, " ")}};
  if (r.pppl) j["pppl"] = *r.pppl;
  return j.dump();
}

std::string ToJson(const RatingRecord& r) {
  json j = {{"item_id", r.item_id},
            {"annotator_id", r.annotator_id},
            {"comment", r.comment},
            {"timestamp", r.timestamp}};
  if (r.idk()) {
    j["score"] = "idk";
  } else {
    ScoreToString(r.score);  // validates
    j["score"] = r.score;
  }
  return j.dump();
}

std::string ToJson(const EvalItem& item) {
  return json{{"item_id", item.item_id},       {"sent_id", item.sent_id},
              {"dataset", item.dataset},       {"rule", item.rule},
              {"sentence_a", item.sentence_a}, {"sentence_b", item.sentence_b}}
      .dump();
}

PredictionRecord PredictionFromJson(std::string_view line) {
  const json j = Parse(line);
  PredictionRecord r;
  r.sent_id = Field<std::string>(j, "sent_id");
  r.variant = Field<std::string>(j, "variant");
  r.run_seed = Field<long>(j, "run_seed");
  r.intent = Field<std::string>(j, "intent");
  const auto slots = Field<std::string>(j, "slots");
  for (std::string_view s : internal::Split(slots, ' ')) {
    if (!s.empty()) r.slots.emplace_back(s);
  }
  if (auto it = j.find("pppl"); it != j.end() && !it->is_null()) {
    const double v = Field<double>(j, "pppl");
    if (v < 0) throw Error("pppl must be non-negative");
    r.pppl = v;
  }
  return r;
}

RatingRecord RatingFromJson(std::string_view line) {
  const json j = Parse(line);
  RatingRecord r;
  r.item_id = Field<std::string>(j, "item_id");
  r.annotator_id = Field<std::string>(j, "annotator_id");
  const json& score = j.contains("score") ? j.at("score") : json();
  if (score.is_number_integer()) {
    r.score = ParseScore(std::to_string(score.get<long>()));
  } else if (score.is_string()) {
    r.score = ParseScore(score.get<std::string>());
  } else {
    throw Error("score must be 1-5 or \"idk\"");
  }
  r.comment = OptionalString(j, "comment");
  r.timestamp = OptionalString(j, "timestamp");
  return r;
}

EvalItem EvalItemFromJson(std::string_view line) {
  const json j = Parse(line);
  EvalItem item;
  item.item_id = Field<std::string>(j, "item_id");
  item.sent_id = OptionalString(j, "sent_id");
  item.dataset = Field<std::string>(j, "dataset");
  item.rule = Field<std::string>(j, "rule");
  item.sentence_a = Field<std::string>(j, "sentence_a");
  item.sentence_b = Field<std::string>(j, "sentence_b");
  return item;
}

std::vector<PredictionRecord> ReadPredictions(std::istream& in) {
  return ReadLines<PredictionRecord>(in, PredictionFromJson);
}
std::vector<RatingRecord> ReadRatings(std::istream& in) {
  return ReadLines<RatingRecord>(in, RatingFromJson);
}
std::vector<EvalItem> ReadEvalItems(std::istream& in) {
  return ReadLines<EvalItem>(in, EvalItemFromJson);
}

std::vector<PredictionRecord> ReadPredictionsFile(
    const std::filesystem::path& path) {
  auto in = OpenInput(path);
  return ReadPredictions(in);
}
std::vector<RatingRecord> ReadRatingsFile(const std::filesystem::path& path) {
  auto in = OpenInput(path);
  return ReadRatings(in);
}
std::vector<EvalItem> ReadEvalItemsFile(const std::filesystem::path& path) {
  auto in = OpenInput(path);
  return ReadEvalItems(in);
}

void WriteJsonl(std::ostream& out, const std::vector<PredictionRecord>& r) {
  WriteLines(out, r);
}
void WriteJsonl(std::ostream& out, const std::vector<RatingRecord>& r) {
  WriteLines(out, r);
}
void WriteJsonl(std::ostream& out, const std::vector<EvalItem>& r) {
  WriteLines(out, r);
}

std::vector<RatingRecord> MaterializeRatings(
    const std::vector<RatingRecord>& log) {
  std::vector<RatingRecord> out;
  std::map<std::pair<std::string, std::string>, std::size_t> slot;
  for (const RatingRecord& r : log) {
    auto key = std::pair(r.item_id, r.annotator_id);
    auto [it, fresh] = slot.emplace(key, out.size());
    if (fresh) {
      out.push_back(r);
    } else {
      out[it->second] = r;
    }
  }
  return out;
}

}  // namespace dialect
