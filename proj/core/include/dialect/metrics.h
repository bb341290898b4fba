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

#ifndef DIALECT_METRICS_H_
#define DIALECT_METRICS_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dialect/rule_engine.h"

namespace dialect {

// Fraction of exact label matches. Throws Error on empty input or length
// mismatch.
double IntentAccuracy(std::span<const std::string> gold,
                      std::span<const std::string> predicted);

struct SpanScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long true_positives = 0;
  long predicted_spans = 0;
  long gold_spans = 0;
};

using Labels = std::vector<std::string>;

// Micro-averaged exact-match span F1: a predicted span counts only if type,
// start and end all match a gold span. Zero denominators give 0. `sent_ids`
// (optional, parallel to gold) names the sentence in length-mismatch errors.
SpanScore SpanF1(std::span<const Labels> gold, std::span<const Labels> predicted,
                 std::span<const std::string> sent_ids = {});

// Per-sentence tables keyed by sent_id.
using IntentTable = std::map<std::string, std::string>;
using SlotTable = std::map<std::string, Labels>;

// Share of applied sentences whose intent was right on the intact sentence
// and wrong after perturbation. 0 when nothing was applied. Throws Error if an
// applied sentence lacks a gold label or a prediction.
double SuccessRate(const IntentTable& gold, const IntentTable& intact,
                   const IntentTable& perturbed,
                   std::span<const std::string> applied);

// Same, with "right" meaning the predicted span set equals the gold span set.
// Gold differs between the intact and the perturbed sentence.
double SlotSuccessRate(const SlotTable& gold_intact, const SlotTable& intact,
                       const SlotTable& gold_perturbed,
                       const SlotTable& perturbed,
                       std::span<const std::string> applied);

struct PairScore {
  std::string sent_id;
  std::string rule;
  double pppl_intact = 0.0;
  double pppl_perturbed = 0.0;
};

// Share of pairs where the intact sentence has the lower pseudo-perplexity;
// ties count one half. Throws Error on empty input.
double PreferenceAccuracy(std::span<const PairScore> pairs);

struct RuleDelta {
  std::string rule;
  double delta_f1 = 0.0;
  int n_perturbed = 0;
};

struct CategoryDelta {
  Category category;
  double mean_delta_f1 = 0.0;
  int n_rules = 0;
};

// Mean delta F1 per category over rules that perturbed at least one sentence.
// Categories without such rules are omitted; rows follow enum order. Throws
// Error for rules missing from the registry.
std::vector<CategoryDelta> AggregateByCategory(std::span<const RuleDelta> rules,
                                               const RuleRegistry& registry);

// Scores of one variant under one run seed. Deltas are intact minus variant.
struct VariantScores {
  std::string variant;
  std::optional<long> run_seed;  // nullopt for the seed mean
  int n_sentences = 0;
  double intent_accuracy = 0.0;
  SpanScore slots;
  double delta_accuracy = 0.0;
  double delta_f1 = 0.0;
  double success_rate = 0.0;
  double slot_success_rate = 0.0;
  int n_perturbed = 0;
  int vetoes = 0;
  std::optional<double> preference_accuracy;
};

// Arithmetic mean over seeds of every rate; counts are taken from the first
// row. Throws Error on empty input or mixed variants.
VariantScores MeanOverSeeds(std::span<const VariantScores> per_seed);

}  // namespace dialect

#endif  // DIALECT_METRICS_H_
