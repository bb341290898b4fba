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

// A deliberately trivial "model" for dry runs: it memorizes the intact gold
// corpus and predicts from lookups, so it is perfect on the intact sentences
// and degrades exactly where perturbations change surface forms or order.

#ifndef DIALECT_TOOLS_MEMO_PREDICTOR_H_
#define DIALECT_TOOLS_MEMO_PREDICTOR_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dialect/conllu.h"
#include "dialect/records.h"

namespace dialect::tools {

class MemoPredictor {
 public:
  explicit MemoPredictor(std::span<const Sentence> training);

  // Intent: the intent of a training sentence with identical text, else of
  // the training sentence with the highest Jaccard overlap of lowercased
  // forms (earliest wins ties).
  std::string PredictIntent(const Sentence& s) const;
  // Slots: label seen for (previous form, form), else the most frequent label
  // of the form, else O; then BIO repair.
  std::vector<std::string> PredictSlots(const Sentence& s) const;
  // Add-one smoothed bigram pseudo-perplexity over lowercased forms.
  double Perplexity(const Sentence& s) const;

  PredictionRecord Predict(const Sentence& s, const std::string& variant,
                           long run_seed) const;

 private:
  struct Memory {
    std::set<std::string> forms;
    std::string intent;
  };

  std::map<std::string, std::string> intent_by_text_;
  std::vector<Memory> memories_;
  std::map<std::pair<std::string, std::string>, std::string> bigram_label_;
  std::map<std::string, std::map<std::string, int>> unigram_labels_;
  std::map<std::pair<std::string, std::string>, int> bigram_count_;
  std::map<std::string, int> context_count_;
  std::size_t vocabulary_ = 1;
};

}  // namespace dialect::tools

#endif  // DIALECT_TOOLS_MEMO_PREDICTOR_H_
