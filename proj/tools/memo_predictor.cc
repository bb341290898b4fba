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

#include "memo_predictor.h"

#include <algorithm>
#include <cmath>

namespace dialect::tools {
namespace {

constexpr char kBos[] = "<s>";

std::string Lower(std::string s) {
  // ASCII only; umlauts stay as they are, which is fine for a lookup key.
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

std::set<std::string> FormSet(const Sentence& s) {
  std::set<std::string> out;
  for (const Token& t : s.tokens) out.insert(Lower(t.form));
  return out;
}

}  // namespace

MemoPredictor::MemoPredictor(std::span<const Sentence> training) {
  std::set<std::string> vocab;
  for (const Sentence& s : training) {
    intent_by_text_.emplace(s.text, s.intent);
    memories_.push_back({FormSet(s), s.intent});
    std::string prev = kBos;
    for (const Token& t : s.tokens) {
      const std::string form = Lower(t.form);
      bigram_label_.emplace(std::pair(prev, form), t.slot);
      ++unigram_labels_[form][t.slot];
      ++bigram_count_[{prev, form}];
      ++context_count_[prev];
      vocab.insert(form);
      prev = form;
    }
  }
  vocabulary_ = vocab.size() + 1;  // + unknown
}

std::string MemoPredictor::PredictIntent(const Sentence& s) const {
  if (auto it = intent_by_text_.find(s.text); it != intent_by_text_.end()) {
    return it->second;
  }
  const auto forms = FormSet(s);
  double best = -1.0;
  std::string intent;
  for (const Memory& m : memories_) {
    std::size_t common = 0;
    for (const auto& f : forms) common += m.forms.count(f);
    const std::size_t uni = forms.size() + m.forms.size() - common;
    const double score = uni == 0 ? 0.0 : double(common) / uni;
    if (score > best) {
      best = score;
      intent = m.intent;
    }
  }
  return intent;
}

std::vector<std::string> MemoPredictor::PredictSlots(const Sentence& s) const {
  std::vector<std::string> labels;
  std::string prev = kBos;
  for (const Token& t : s.tokens) {
    const std::string form = Lower(t.form);
    std::string label = "O";
    if (auto it = bigram_label_.find({prev, form}); it != bigram_label_.end()) {
      label = it->second;
    } else if (auto u = unigram_labels_.find(form); u != unigram_labels_.end()) {
      // Most frequent, alphabetical on ties.
      label = std::max_element(u->second.begin(), u->second.end(),
                               [](const auto& a, const auto& b) {
                                 return a.second < b.second;
                               })
                  ->first;
    }
    labels.push_back(label);
    prev = form;
  }
  return NormalizeBio(labels);
}

double MemoPredictor::Perplexity(const Sentence& s) const {
  if (s.tokens.empty()) return 1.0;
  double log_sum = 0.0;
  std::string prev = kBos;
  for (const Token& t : s.tokens) {
    const std::string form = Lower(t.form);
    auto b = bigram_count_.find({prev, form});
    auto c = context_count_.find(prev);
    const double num = (b == bigram_count_.end() ? 0 : b->second) + 1.0;
    const double den =
        (c == context_count_.end() ? 0 : c->second) + double(vocabulary_);
    log_sum += std::log(num / den);
    prev = form;
  }
  return std::exp(-log_sum / double(s.tokens.size()));
}

PredictionRecord MemoPredictor::Predict(const Sentence& s,
                                        const std::string& variant,
                                        long run_seed) const {
  return {s.sent_id, variant,          run_seed,
          PredictIntent(s), PredictSlots(s), Perplexity(s)};
}

}  // namespace dialect::tools
