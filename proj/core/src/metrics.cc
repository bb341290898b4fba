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

#include "dialect/metrics.h"

#include <fmt/format.h>

#include <algorithm>

#include "dialect/conllu.h"

namespace dialect {
namespace {

double Ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

template <typename Table>
const typename Table::mapped_type& Lookup(const Table& table,
                                          const std::string& id,
                                          std::string_view what) {
  auto it = table.find(id);
  if (it == table.end()) {
    throw Error(fmt::format("no {} for applied sentence {}", what, id));
  }
  return it->second;
}

bool SameSpans(const Labels& a, const Labels& b) {
  return ExtractSpans(a) == ExtractSpans(b);
}

}  // namespace

double IntentAccuracy(std::span<const std::string> gold,
                      std::span<const std::string> predicted) {
  if (gold.size() != predicted.size()) {
    throw Error(fmt::format("intent accuracy: {} gold vs {} predicted labels",
                            gold.size(), predicted.size()));
  }
  if (gold.empty()) throw Error("intent accuracy: empty input");
  long correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == predicted[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(gold.size());
}

SpanScore SpanF1(std::span<const Labels> gold, std::span<const Labels> predicted,
                 std::span<const std::string> sent_ids) {
  if (gold.size() != predicted.size()) {
    throw Error(fmt::format("span F1: {} gold vs {} predicted sentences",
                            gold.size(), predicted.size()));
  }
  SpanScore s;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].size() != predicted[i].size()) {
      const std::string id =
          i < sent_ids.size() ? sent_ids[i] : fmt::format("#{}", i);
      throw Error(fmt::format(
          "span F1: sentence {} has {} gold but {} predicted labels", id,
          gold[i].size(), predicted[i].size()));
    }
    auto g = ExtractSpans(gold[i]);
    auto p = ExtractSpans(predicted[i]);
    s.gold_spans += static_cast<long>(g.size());
    s.predicted_spans += static_cast<long>(p.size());
    // Extraction order is positional; set_intersection needs operator< order.
    std::sort(g.begin(), g.end());
    std::sort(p.begin(), p.end());
    std::vector<SlotSpan> common;
    std::set_intersection(g.begin(), g.end(), p.begin(), p.end(),
                          std::back_inserter(common));
    s.true_positives += static_cast<long>(common.size());
  }
  s.precision = Ratio(s.true_positives, s.predicted_spans);
  s.recall = Ratio(s.true_positives, s.gold_spans);
  s.f1 = Ratio(2 * s.precision * s.recall, s.precision + s.recall);
  return s;
}

double SuccessRate(const IntentTable& gold, const IntentTable& intact,
                   const IntentTable& perturbed,
                   std::span<const std::string> applied) {
  if (applied.empty()) return 0.0;
  long flipped = 0;
  for (const std::string& id : applied) {
    const std::string& g = Lookup(gold, id, "gold intent");
    const bool before = Lookup(intact, id, "intact prediction") == g;
    const bool after = Lookup(perturbed, id, "perturbed prediction") == g;
    if (before && !after) ++flipped;
  }
  return static_cast<double>(flipped) / static_cast<double>(applied.size());
}

double SlotSuccessRate(const SlotTable& gold_intact, const SlotTable& intact,
                       const SlotTable& gold_perturbed,
                       const SlotTable& perturbed,
                       std::span<const std::string> applied) {
  if (applied.empty()) return 0.0;
  long flipped = 0;
  for (const std::string& id : applied) {
    const bool before = SameSpans(Lookup(gold_intact, id, "gold slots"),
                                  Lookup(intact, id, "intact prediction"));
    const bool after =
        SameSpans(Lookup(gold_perturbed, id, "perturbed gold slots"),
                  Lookup(perturbed, id, "perturbed prediction"));
    if (before && !after) ++flipped;
  }
  return static_cast<double>(flipped) / static_cast<double>(applied.size());
}

double PreferenceAccuracy(std::span<const PairScore> pairs) {
  if (pairs.empty()) throw Error("preference accuracy: no pairs");
  double credit = 0.0;
  for (const PairScore& p : pairs) {
    if (p.pppl_intact < p.pppl_perturbed) {
      credit += 1.0;
    } else if (p.pppl_intact == p.pppl_perturbed) {
      credit += 0.5;
    }
  }
  return credit / static_cast<double>(pairs.size());
}

std::vector<CategoryDelta> AggregateByCategory(std::span<const RuleDelta> rules,
                                               const RuleRegistry& registry) {
  std::vector<double> sum(kCategoryCount, 0.0);
  std::vector<int> count(kCategoryCount, 0);
  for (const RuleDelta& r : rules) {
    const Category c = registry.Find(r.rule).category;
    if (r.n_perturbed == 0) continue;
    sum[static_cast<int>(c)] += r.delta_f1;
    ++count[static_cast<int>(c)];
  }
  std::vector<CategoryDelta> out;
  for (int c = 0; c < kCategoryCount; ++c) {
    if (count[c] == 0) continue;
    out.push_back({static_cast<Category>(c), sum[c] / count[c], count[c]});
  }
  return out;
}

VariantScores MeanOverSeeds(std::span<const VariantScores> per_seed) {
  if (per_seed.empty()) throw Error("seed mean: no rows");
  VariantScores m;
  m.variant = per_seed[0].variant;
  m.n_sentences = per_seed[0].n_sentences;
  m.n_perturbed = per_seed[0].n_perturbed;
  m.vetoes = per_seed[0].vetoes;
  const double n = static_cast<double>(per_seed.size());
  bool all_pref = true;
  double pref = 0.0;
  for (const VariantScores& r : per_seed) {
    if (r.variant != m.variant) {
      throw Error(fmt::format("seed mean: mixed variants {} and {}", m.variant,
                              r.variant));
    }
    m.intent_accuracy += r.intent_accuracy / n;
    m.slots.precision += r.slots.precision / n;
    m.slots.recall += r.slots.recall / n;
    m.slots.f1 += r.slots.f1 / n;
    m.slots.true_positives += r.slots.true_positives;
    m.slots.predicted_spans += r.slots.predicted_spans;
    m.slots.gold_spans += r.slots.gold_spans;
    m.delta_accuracy += r.delta_accuracy / n;
    m.delta_f1 += r.delta_f1 / n;
    m.success_rate += r.success_rate / n;
    m.slot_success_rate += r.slot_success_rate / n;
    if (r.preference_accuracy) {
      pref += *r.preference_accuracy / n;
    } else {
      all_pref = false;
    }
  }
  if (all_pref) m.preference_accuracy = pref;
  return m;
}

}  // namespace dialect
