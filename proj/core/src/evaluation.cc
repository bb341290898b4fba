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

#include "dialect/evaluation.h"

#include <fmt/format.h>

#include <map>
#include <set>
#include <tuple>

namespace dialect {
namespace {

// (variant, seed, sent_id) -> prediction.
using PredictionIndex =
    std::map<std::tuple<std::string, long, std::string>, const PredictionRecord*>;

struct Gold {
  std::vector<std::string> ids;
  IntentTable intents;
  SlotTable slots;
  std::vector<std::string> applied;
  int vetoes = 0;
};

Gold MakeGold(const std::vector<Sentence>& corpus) {
  Gold g;
  for (const Sentence& s : corpus) {
    g.ids.push_back(s.sent_id);
    g.intents[s.sent_id] = s.intent;
    g.slots[s.sent_id] = SlotLabels(s);
    switch (ReadPerturbationStatus(s)) {
      case PerturbationStatus::kApplied:
        g.applied.push_back(s.sent_id);
        break;
      case PerturbationStatus::kVetoed:
        ++g.vetoes;
        break;
      case PerturbationStatus::kUnchanged:
        break;
    }
  }
  return g;
}

struct Predicted {
  IntentTable intents;
  SlotTable slots;
  std::map<std::string, std::optional<double>> pppl;
};

Predicted Collect(const PredictionIndex& index, const std::string& variant,
                  long seed, const Gold& gold) {
  Predicted p;
  for (const std::string& id : gold.ids) {
    const PredictionRecord* r = index.at({variant, seed, id});
    p.intents[id] = r->intent;
    p.slots[id] = r->slots;
    p.pppl[id] = r->pppl;
  }
  return p;
}

struct Basic {
  double accuracy;
  SpanScore slots;
};

Basic Score(const Gold& gold, const Predicted& pred) {
  std::vector<std::string> gi, pi;
  std::vector<Labels> gs, ps;
  for (const std::string& id : gold.ids) {
    gi.push_back(gold.intents.at(id));
    pi.push_back(pred.intents.at(id));
    gs.push_back(gold.slots.at(id));
    ps.push_back(pred.slots.at(id));
  }
  return {IntentAccuracy(gi, pi), SpanF1(gs, ps, gold.ids)};
}

}  // namespace

EvalReport Evaluate(const std::vector<Sentence>& intact,
                    const std::vector<VariantCorpus>& variants,
                    const std::vector<PredictionRecord>& predictions,
                    const RuleRegistry& registry) {
  if (intact.empty()) throw Error("evaluate: empty intact corpus");
  PredictionIndex index;
  std::set<long> seeds;
  for (const PredictionRecord& r : predictions) {
    auto [it, fresh] = index.emplace(std::tuple(r.variant, r.run_seed, r.sent_id), &r);
    if (!fresh) {
      throw Error(fmt::format("duplicate prediction for ({}, {}, {})",
                              r.sent_id, r.variant, r.run_seed));
    }
    seeds.insert(r.run_seed);
  }
  if (seeds.empty()) throw Error("evaluate: no predictions");

  const Gold intact_gold = MakeGold(intact);
  std::vector<std::pair<std::string, Gold>> golds;
  golds.emplace_back(std::string(kIntactVariant), intact_gold);
  for (const VariantCorpus& v : variants) {
    Gold g = MakeGold(v.sentences);
    if (g.ids != intact_gold.ids) {
      throw Error(fmt::format(
          "variant {} does not contain the intact sentences in order", v.name));
    }
    golds.emplace_back(v.name, std::move(g));
  }

  std::vector<std::string> missing;
  for (const auto& [name, gold] : golds) {
    for (long seed : seeds) {
      for (const std::string& id : gold.ids) {
        if (!index.contains({name, seed, id})) {
          missing.push_back(fmt::format("({}, {}, {})", id, name, seed));
        }
      }
    }
  }
  if (!missing.empty()) {
    constexpr std::size_t kShown = 20;
    std::string list;
    for (std::size_t i = 0; i < missing.size() && i < kShown; ++i) {
      list += (i ? ", " : "") + missing[i];
    }
    if (missing.size() > kShown) {
      list += fmt::format(" and {} more", missing.size() - kShown);
    }
    throw Error(fmt::format("missing predictions: {}", list));
  }

  EvalReport report;
  for (const auto& [name, gold] : golds) {
    std::vector<VariantScores> rows;
    for (long seed : seeds) {
      const Predicted base = Collect(index, std::string(kIntactVariant), seed,
                                     intact_gold);
      const Basic before = Score(intact_gold, base);
      const Predicted pred = Collect(index, name, seed, gold);
      const Basic after = Score(gold, pred);
      VariantScores row;
      row.variant = name;
      row.run_seed = seed;
      row.n_sentences = static_cast<int>(gold.ids.size());
      row.intent_accuracy = after.accuracy;
      row.slots = after.slots;
      row.delta_accuracy = before.accuracy - after.accuracy;
      row.delta_f1 = before.slots.f1 - after.slots.f1;
      row.n_perturbed = static_cast<int>(gold.applied.size());
      row.vetoes = gold.vetoes;
      row.success_rate = SuccessRate(intact_gold.intents, base.intents,
                                     pred.intents, gold.applied);
      row.slot_success_rate = SlotSuccessRate(
          intact_gold.slots, base.slots, gold.slots, pred.slots, gold.applied);
      std::vector<PairScore> pairs;
      bool complete = !gold.applied.empty();
      for (const std::string& id : gold.applied) {
        const auto& a = base.pppl.at(id);
        const auto& b = pred.pppl.at(id);
        if (!a || !b) {
          complete = false;
          break;
        }
        pairs.push_back({id, name, *a, *b});
      }
      if (complete) row.preference_accuracy = PreferenceAccuracy(pairs);
      rows.push_back(row);
    }
    report.per_seed.insert(report.per_seed.end(), rows.begin(), rows.end());
    report.means.push_back(MeanOverSeeds(rows));
  }

  std::vector<RuleDelta> deltas;
  for (const VariantScores& m : report.means) {
    if (!registry.Contains(m.variant)) continue;
    deltas.push_back({m.variant, m.delta_f1, m.n_perturbed});
  }
  report.categories = AggregateByCategory(deltas, registry);
  return report;
}

}  // namespace dialect
