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

#include "dialect/agreement.h"

#include <fmt/format.h>

#include <cmath>
#include <limits>
#include <set>

#include "dialect/error.h"
#include "text_util.h"

namespace dialect {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double Mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? kNaN : s / static_cast<double>(v.size());
}

}  // namespace

int Binarize(int score) {
  if (score < 1 || score > 5) {
    throw Error(fmt::format("cannot binarize score {}", score));
  }
  return score >= 3 ? 1 : 0;
}

std::vector<int> Binarize(std::span<const int> scores) {
  std::vector<int> out;
  out.reserve(scores.size());
  for (int s : scores) out.push_back(Binarize(s));
  return out;
}

double PearsonR(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("pearson: length mismatch");
  if (std::set<double>(x.begin(), x.end()).size() < 2 ||
      std::set<double>(y.begin(), y.end()).size() < 2) {
    return kNaN;
  }
  const double mx = Mean(x);
  const double my = Mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

double CohensKappa(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw Error("kappa: length mismatch");
  if (a.empty()) return kNaN;
  const double n = static_cast<double>(a.size());
  std::map<int, double> ma, mb;
  double agree = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma[a[i]] += 1.0;
    mb[b[i]] += 1.0;
    if (a[i] == b[i]) agree += 1.0;
  }
  const double p_o = agree / n;
  double p_e = 0.0;
  for (const auto& [label, count] : ma) {
    if (auto it = mb.find(label); it != mb.end()) {
      p_e += (count / n) * (it->second / n);
    }
  }
  if (p_e == 1.0) return p_o == 1.0 ? 1.0 : kNaN;
  return (p_o - p_e) / (1.0 - p_e);
}

AgreementReport ComputeAgreement(
    std::span<const RatingRecord> ratings,
    const std::map<std::string, std::string>& item_rules) {
  std::set<std::string> annotators;
  for (const RatingRecord& r : ratings) annotators.insert(r.annotator_id);
  if (annotators.size() != 2) {
    throw Error(fmt::format("agreement needs exactly 2 annotators, found {}",
                            annotators.size()));
  }
  AgreementReport rep;
  rep.annotator_a = *annotators.begin();
  rep.annotator_b = *annotators.rbegin();

  // item -> (score_a, score_b); -1 marks "not rated".
  std::map<std::string, std::pair<int, int>> by_item;
  std::vector<std::string> order;
  for (const RatingRecord& r : ratings) {
    auto [it, fresh] = by_item.emplace(r.item_id, std::pair(-1, -1));
    if (fresh) order.push_back(r.item_id);
    (r.annotator_id == rep.annotator_a ? it->second.first
                                       : it->second.second) = r.score;
  }
  std::vector<std::string> single;
  for (const std::string& id : order) {
    const auto [a, b] = by_item[id];
    if (a < 0 || b < 0) single.push_back(id);
  }
  if (!single.empty()) {
    throw Error(fmt::format("items rated by only one annotator: {}",
                            internal::Join(single, ", ")));
  }

  std::vector<double> xa, xb;
  std::vector<int> ba, bb;
  int exact = 0;
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>>
      rule_scores;
  for (const std::string& id : order) {
    const auto [a, b] = by_item[id];
    if (a == RatingRecord::kIdk || b == RatingRecord::kIdk) {
      ++rep.n_idk_excluded;
      continue;
    }
    xa.push_back(a);
    xb.push_back(b);
    ba.push_back(Binarize(a));
    bb.push_back(Binarize(b));
    if (a == b) ++exact;
    if (auto it = item_rules.find(id); it != item_rules.end()) {
      rule_scores[it->second].first.push_back(a);
      rule_scores[it->second].second.push_back(b);
    }
  }
  rep.n_items = static_cast<int>(xa.size());
  if (rep.n_items == 0) throw Error("agreement: no items without idk");
  const double n = rep.n_items;
  rep.exact_match_pct = 100.0 * exact / n;
  int bin_exact = 0;
  for (std::size_t i = 0; i < ba.size(); ++i) bin_exact += ba[i] == bb[i];
  rep.binarized_exact_match_pct = 100.0 * bin_exact / n;
  rep.pearson_r = PearsonR(xa, xb);
  rep.cohens_kappa = CohensKappa(ba, bb);
  rep.mean_a = Mean(xa);
  rep.mean_b = Mean(xb);
  for (const auto& [rule, scores] : rule_scores) {
    RuleAgreement ra;
    ra.rule = rule;
    ra.n_items = static_cast<int>(scores.first.size());
    ra.mean_a = Mean(scores.first);
    ra.mean_b = Mean(scores.second);
    ra.disparity = std::abs(ra.mean_a - ra.mean_b);
    rep.per_rule.push_back(std::move(ra));
  }
  return rep;
}

}  // namespace dialect
