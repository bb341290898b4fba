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

#ifndef DIALECT_AGREEMENT_H_
#define DIALECT_AGREEMENT_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "dialect/records.h"

namespace dialect {

// {1,2} -> 0, {3,4,5} -> 1. Throws Error outside 1..5.
int Binarize(int score);
std::vector<int> Binarize(std::span<const int> scores);

// Pearson correlation; NaN when either side has fewer than two distinct
// values. Throws Error on length mismatch.
double PearsonR(std::span<const double> x, std::span<const double> y);

// Cohen's kappa for two raters over categorical labels, with expected
// agreement from the product of marginals. When expected agreement is 1 the
// result is 1 for identical vectors and NaN otherwise.
double CohensKappa(std::span<const int> a, std::span<const int> b);

struct RuleAgreement {
  std::string rule;
  int n_items = 0;
  double mean_a = 0.0;
  double mean_b = 0.0;
  double disparity = 0.0;  // |mean_a - mean_b|
};

struct AgreementReport {
  std::string annotator_a;  // lexicographically first
  std::string annotator_b;
  int n_items = 0;  // items rated by both with no idk
  int n_idk_excluded = 0;
  double exact_match_pct = 0.0;
  double pearson_r = 0.0;
  double binarized_exact_match_pct = 0.0;
  double cohens_kappa = 0.0;
  double mean_a = 0.0;
  double mean_b = 0.0;
  // Present only when item -> rule information was supplied.
  std::vector<RuleAgreement> per_rule;
};

// Ratings must come from exactly two annotators and every item must be rated
// by both (already materialized: one record per item and annotator). Items
// where either annotator chose idk are dropped from every statistic and
// counted. `item_rules` maps item_id to rule name for the per-rule table.
AgreementReport ComputeAgreement(
    std::span<const RatingRecord> ratings,
    const std::map<std::string, std::string>& item_rules = {});

}  // namespace dialect

#endif  // DIALECT_AGREEMENT_H_
