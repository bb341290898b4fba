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

#ifndef DIALECT_SAMPLER_H_
#define DIALECT_SAMPLER_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dialect/conllu.h"
#include "dialect/records.h"
#include "dialect/rule_engine.h"

namespace dialect {

inline constexpr int kDefaultPerRuleCap = 8;

// Uniform integer in [0, bound) without modulo bias. Spelled out rather than
// using std::uniform_int_distribution, whose output is implementation
// defined; eval sets must not depend on the standard library in use.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound);

// Fisher-Yates with UniformBelow.
template <typename T>
void Shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[UniformBelow(rng, i)]);
  }
}

struct StratumCount {
  std::string rule;
  std::string dataset;
  int available = 0;
  int selected = 0;
};

struct EvalSet {
  std::vector<EvalItem> items;  // presentation order
  std::vector<StratumCount> strata;
};

// For every (rule, dataset) stratum, picks min(cap, k) of the k sentences the
// rule actually changed, uniformly without replacement, then shuffles the
// whole set. Item ids are "<dataset>/<rule>/<sent_id>". Throws Error when the
// corpus is empty or cap < 1.
EvalSet BuildEvalSet(std::span<const Sentence> corpus,
                     std::span<const PerturbationRule* const> rules, int cap,
                     std::uint64_t seed);

}  // namespace dialect

#endif  // DIALECT_SAMPLER_H_
