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

#ifndef DIALECT_RECORDS_H_
#define DIALECT_RECORDS_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dialect/error.h"

namespace dialect {

// One model output for one sentence of one variant ("intact", a rule name or
// "all") under one run seed.
struct PredictionRecord {
  std::string sent_id;
  std::string variant;
  long run_seed = 0;
  std::string intent;
  std::vector<std::string> slots;
  std::optional<double> pppl;

  friend bool operator==(const PredictionRecord&,
                         const PredictionRecord&) = default;
};

// A fluency judgment. Scores are 1..5; kIdk marks "I don't know".
struct RatingRecord {
  static constexpr int kIdk = 0;

  std::string item_id;
  std::string annotator_id;
  int score = kIdk;
  std::string comment;
  std::string timestamp;  // ISO-8601

  bool idk() const { return score == kIdk; }
  friend bool operator==(const RatingRecord&, const RatingRecord&) = default;
};

// One intact/perturbed pair shown to annotators.
struct EvalItem {
  std::string item_id;
  std::string sent_id;
  std::string dataset;
  std::string rule;
  std::string sentence_a;  // intact
  std::string sentence_b;  // perturbed

  friend bool operator==(const EvalItem&, const EvalItem&) = default;
};

// Line-delimited JSON, one object per line. Readers skip blank lines and throw
// Error naming the line on malformed records.
std::string ToJson(const PredictionRecord& r);
std::string ToJson(const RatingRecord& r);
std::string ToJson(const EvalItem& item);

PredictionRecord PredictionFromJson(std::string_view line);
RatingRecord RatingFromJson(std::string_view line);
EvalItem EvalItemFromJson(std::string_view line);

std::vector<PredictionRecord> ReadPredictions(std::istream& in);
std::vector<RatingRecord> ReadRatings(std::istream& in);
std::vector<EvalItem> ReadEvalItems(std::istream& in);

std::vector<PredictionRecord> ReadPredictionsFile(
    const std::filesystem::path& path);
std::vector<RatingRecord> ReadRatingsFile(const std::filesystem::path& path);
std::vector<EvalItem> ReadEvalItemsFile(const std::filesystem::path& path);

void WriteJsonl(std::ostream& out, const std::vector<PredictionRecord>& r);
void WriteJsonl(std::ostream& out, const std::vector<RatingRecord>& r);
void WriteJsonl(std::ostream& out, const std::vector<EvalItem>& r);

// "1".."5" or "idk"; throws Error for anything else.
int ParseScore(std::string_view text);
std::string ScoreToString(int score);

// Collapses an append-only ratings log: the last record for each
// (item_id, annotator_id) wins. Output keeps first-appearance order.
std::vector<RatingRecord> MaterializeRatings(
    const std::vector<RatingRecord>& log);

}  // namespace dialect

#endif  // DIALECT_RECORDS_H_
