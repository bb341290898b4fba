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

#include "dialect/sampler.h"

#include <fmt/format.h>

#include <algorithm>
#include <map>

namespace dialect {

std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error("UniformBelow: empty range");
  // Reject the low values that would make the modulo uneven.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

EvalSet BuildEvalSet(std::span<const Sentence> corpus,
                     std::span<const PerturbationRule* const> rules, int cap,
                     std::uint64_t seed) {
  if (corpus.empty()) throw Error("cannot sample from an empty corpus");
  if (cap < 1) throw Error(fmt::format("per-rule cap must be >= 1, got {}", cap));
  std::mt19937_64 rng(seed);
  EvalSet set;
  for (const PerturbationRule* rule : rules) {
    std::map<std::string, std::vector<EvalItem>> by_dataset;
    for (const Sentence& s : corpus) {
      by_dataset[s.dataset];  // every dataset gets a stratum row
      PerturbationResult r = ApplyRule(*rule, s);
      if (!r.applied || r.sentence.text == s.text) continue;
      by_dataset[s.dataset].push_back(
          {fmt::format("{}/{}/{}", s.dataset, rule->name, s.sent_id),
           s.sent_id, s.dataset, rule->name, s.text, r.sentence.text});
    }
    for (auto& [dataset, pool] : by_dataset) {
      const int k = static_cast<int>(pool.size());
      const int take = std::min(cap, k);
      // Partial Fisher-Yates: the first `take` slots are a uniform sample.
      for (int i = 0; i < take; ++i) {
        std::swap(pool[i], pool[i + UniformBelow(rng, k - i)]);
      }
      set.strata.push_back({rule->name, dataset, k, take});
      set.items.insert(set.items.end(), pool.begin(), pool.begin() + take);
    }
  }
  Shuffle(set.items, rng);
  return set;
}

}  // namespace dialect
