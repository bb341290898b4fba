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

#ifndef DIALECT_EVALUATION_H_
#define DIALECT_EVALUATION_H_

#include <string>
#include <vector>

#include "dialect/conllu.h"
#include "dialect/metrics.h"
#include "dialect/records.h"
#include "dialect/rule_engine.h"

namespace dialect {

inline constexpr std::string_view kIntactVariant = "intact";

// A perturbed gold corpus: the output of `perturb` for one rule or for all.
struct VariantCorpus {
  std::string name;
  std::vector<Sentence> sentences;
};

struct EvalReport {
  // One row per (variant, seed), intact first, then variants in input order.
  std::vector<VariantScores> per_seed;
  // Seed means, same variant order.
  std::vector<VariantScores> means;
  // Over the seed means of variants that are registry rules.
  std::vector<CategoryDelta> categories;
};

// Scores every (variant, seed) pair found in `predictions` against the gold
// corpora. Every sentence of every variant needs a prediction for every seed;
// gaps throw Error listing the missing (sent_id, variant, seed) triples.
EvalReport Evaluate(const std::vector<Sentence>& intact,
                    const std::vector<VariantCorpus>& variants,
                    const std::vector<PredictionRecord>& predictions,
                    const RuleRegistry& registry);

}  // namespace dialect

#endif  // DIALECT_EVALUATION_H_
