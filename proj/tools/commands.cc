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

#include "commands.h"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "dialect/agreement.h"
#include "dialect/evaluation.h"
#include "dialect/records.h"
#include "dialect/sampler.h"
#include "json.hpp"

namespace dialect::tools {
namespace {

std::ofstream OpenOutput(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  return out;
}

std::string Num(double v) {
  return std::isnan(v) ? "NA" : fmt::format("{:.6f}", v);
}

nlohmann::json JsonNum(double v) {
  return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v);
}

void WriteSummary(std::ostream& out, const std::vector<PerturbSummaryRow>& rows) {
  out << "variant\tsentences\tapplied\tvetoes\n";
  for (const auto& r : rows) {
    fmt::print(out, "{}\t{}\t{}\t{}\n", r.variant, r.sentences, r.applied,
               r.vetoes);
  }
}

PerturbSummaryRow WriteVariant(const std::string& name,
                               const std::vector<PerturbationResult>& results,
                               const fs::path& path) {
  PerturbSummaryRow row{name, static_cast<int>(results.size()), 0, 0};
  std::vector<Sentence> sentences;
  sentences.reserve(results.size());
  for (const PerturbationResult& r : results) {
    row.applied += r.applied ? 1 : 0;
    row.vetoes += r.vetoes;
    sentences.push_back(MarkedSentence(r));
  }
  WriteConlluFile(path, sentences);
  return row;
}

}  // namespace

std::vector<fs::path> ExpandCorpusPaths(const std::vector<fs::path>& paths) {
  std::vector<fs::path> out;
  for (const fs::path& p : paths) {
    if (!fs::is_directory(p)) {
      if (!fs::exists(p)) throw Error(fmt::format("no such file: {}", p.string()));
      out.push_back(p);
      continue;
    }
    std::vector<fs::path> inside;
    for (const auto& entry : fs::directory_iterator(p)) {
      if (entry.path().extension() == ".conllu") inside.push_back(entry.path());
    }
    std::sort(inside.begin(), inside.end());
    out.insert(out.end(), inside.begin(), inside.end());
  }
  return out;
}

void ListRules(const RuleRegistry& registry, std::ostream& out) {
  for (const PerturbationRule& rule : registry.rules()) {
    fmt::print(out, "{}\t{}\n", rule.name, ToString(rule.category));
  }
}

std::vector<PerturbSummaryRow> Perturb(const PerturbOptions& options,
                                       const RuleRegistry& registry,
                                       std::ostream& out) {
  if (options.rules.empty() && !options.all) {
    throw Error("nothing to do: pass --rules and/or --all");
  }
  // Resolve names before touching the input so typos fail fast.
  const auto selected = registry.Select(options.rules);
  const std::vector<Sentence> corpus = ReadConlluFile(options.input);
  fs::create_directories(options.out_dir);

  std::vector<PerturbSummaryRow> rows;
  for (const PerturbationRule* rule : selected) {
    std::vector<PerturbationResult> results;
    for (const Sentence& s : corpus) results.push_back(ApplyRule(*rule, s));
    rows.push_back(WriteVariant(rule->name, results,
                                options.out_dir / (rule->name + ".conllu")));
  }
  if (options.all) {
    const auto every = registry.All();
    std::vector<PerturbationResult> results;
    for (const Sentence& s : corpus) results.push_back(ApplyAll(every, s));
    const std::string name(kAllRulesVariant);
    rows.push_back(
        WriteVariant(name, results, options.out_dir / (name + ".conllu")));
  }

  auto report = OpenOutput(options.report.value_or(options.out_dir / "summary.tsv"));
  WriteSummary(report, rows);
  WriteSummary(out, rows);
  return rows;
}

void Evaluate(const EvaluateOptions& options, const RuleRegistry& registry,
              std::ostream& out) {
  const std::vector<Sentence> intact = ReadConlluFile(options.intact);
  std::vector<VariantCorpus> variants;
  for (const fs::path& p : ExpandCorpusPaths(options.variants)) {
    if (fs::equivalent(p, options.intact)) continue;
    variants.push_back({p.stem().string(), ReadConlluFile(p)});
  }
  const auto predictions = ReadPredictionsFile(options.predictions);
  const EvalReport report =
      ::dialect::Evaluate(intact, variants, predictions, registry);

  fs::create_directories(options.out_dir);
  {
    auto f = OpenOutput(options.out_dir / "variants.tsv");
    f << "variant\trun_seed\tn_sentences\tn_perturbed\tvetoes\tintent_accuracy"
         "\tslot_precision\tslot_recall\tslot_f1\tdelta_accuracy\tdelta_f1"
         "\tsuccess_rate\tslot_success_rate\tpreference_accuracy\n";
    auto row = [&f](const VariantScores& v) {
      fmt::print(f, "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                 v.variant,
                 v.run_seed ? std::to_string(*v.run_seed) : std::string("mean"),
                 v.n_sentences, v.n_perturbed, v.vetoes, Num(v.intent_accuracy),
                 Num(v.slots.precision), Num(v.slots.recall), Num(v.slots.f1),
                 Num(v.delta_accuracy), Num(v.delta_f1), Num(v.success_rate),
                 Num(v.slot_success_rate),
                 v.preference_accuracy ? Num(*v.preference_accuracy) : "NA");
    };
    for (const auto& v : report.per_seed) row(v);
    for (const auto& v : report.means) row(v);
  }
  {
    auto f = OpenOutput(options.out_dir / "rules.tsv");
    f << "rule\tcategory\tn_perturbed\tvetoes\tsuccess_rate"
         "\tslot_success_rate\tdelta_accuracy\tdelta_f1\n";
    for (const VariantScores& m : report.means) {
      if (!registry.Contains(m.variant)) continue;
      fmt::print(f, "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n", m.variant,
                 ToString(registry.Find(m.variant).category), m.n_perturbed,
                 m.vetoes, Num(m.success_rate), Num(m.slot_success_rate),
                 Num(m.delta_accuracy), Num(m.delta_f1));
    }
  }
  {
    auto f = OpenOutput(options.out_dir / "categories.tsv");
    f << "category\tn_rules\tmean_delta_f1\n";
    for (const CategoryDelta& c : report.categories) {
      fmt::print(f, "{}\t{}\t{}\n", ToString(c.category), c.n_rules,
                 Num(c.mean_delta_f1));
    }
  }

  fmt::print(out, "{:<20} {:>6} {:>9} {:>9} {:>9} {:>9} {:>8}\n", "variant",
             "n_pert", "accuracy", "slot_f1", "d_acc", "d_f1", "success");
  for (const VariantScores& m : report.means) {
    fmt::print(out, "{:<20} {:>6} {:>9.4f} {:>9.4f} {:>9.4f} {:>9.4f} {:>8.4f}\n",
               m.variant, m.n_perturbed, m.intent_accuracy, m.slots.f1,
               m.delta_accuracy, m.delta_f1, m.success_rate);
  }
}

void Agreement(const AgreementOptions& options, std::ostream& out) {
  const auto ratings = MaterializeRatings(ReadRatingsFile(options.ratings));
  std::map<std::string, std::string> item_rules;
  if (options.items) {
    for (const EvalItem& item : ReadEvalItemsFile(*options.items)) {
      item_rules[item.item_id] = item.rule;
    }
  }
  const AgreementReport r = ComputeAgreement(ratings, item_rules);

  fmt::print(out, "annotators\t{}\t{}\n", r.annotator_a, r.annotator_b);
  fmt::print(out, "n_items\t{}\nn_idk_excluded\t{}\n", r.n_items,
             r.n_idk_excluded);
  fmt::print(out, "exact_match_pct\t{}\n", Num(r.exact_match_pct));
  fmt::print(out, "pearson_r\t{}\n", Num(r.pearson_r));
  fmt::print(out, "binarized_exact_match_pct\t{}\n",
             Num(r.binarized_exact_match_pct));
  fmt::print(out, "cohens_kappa\t{}\n", Num(r.cohens_kappa));
  fmt::print(out, "mean_score\t{}\t{}\n", Num(r.mean_a), Num(r.mean_b));
  if (!r.per_rule.empty()) {
    out << "\nrule\tn_items\tmean_a\tmean_b\tdisparity\n";
    for (const RuleAgreement& pr : r.per_rule) {
      fmt::print(out, "{}\t{}\t{}\t{}\t{}\n", pr.rule, pr.n_items,
                 Num(pr.mean_a), Num(pr.mean_b), Num(pr.disparity));
    }
  }

  if (!options.out) return;
  nlohmann::json j = {
      {"annotator_a", r.annotator_a},
      {"annotator_b", r.annotator_b},
      {"n_items", r.n_items},
      {"n_idk_excluded", r.n_idk_excluded},
      {"exact_match_pct", JsonNum(r.exact_match_pct)},
      {"pearson_r", JsonNum(r.pearson_r)},
      {"binarized_exact_match_pct", JsonNum(r.binarized_exact_match_pct)},
      {"cohens_kappa", JsonNum(r.cohens_kappa)},
      {"mean_a", JsonNum(r.mean_a)},
      {"mean_b", JsonNum(r.mean_b)},
      {"per_rule", nlohmann::json::array()}};
  for (const RuleAgreement& pr : r.per_rule) {
    j["per_rule"].push_back({{"rule", pr.rule},
                             {"n_items", pr.n_items},
                             {"mean_a", JsonNum(pr.mean_a)},
                             {"mean_b", JsonNum(pr.mean_b)},
                             {"disparity", JsonNum(pr.disparity)}});
  }
  auto f = OpenOutput(*options.out);
  f << j.dump(2) << '\n';
}

void Sample(const SampleOptions& options, const RuleRegistry& registry,
            std::ostream& out) {
  std::vector<Sentence> corpus;
  std::set<std::pair<std::string, std::string>> seen;
  for (const fs::path& p : ExpandCorpusPaths(options.corpora)) {
    for (Sentence& s : ReadConlluFile(p)) {
      if (!seen.emplace(s.dataset, s.sent_id).second) {
        throw Error(fmt::format("duplicate sentence {}/{} in {}", s.dataset,
                                s.sent_id, p.string()));
      }
      corpus.push_back(std::move(s));
    }
  }
  const auto rules =
      options.rules.empty() ? registry.All() : registry.Select(options.rules);
  const EvalSet set = BuildEvalSet(corpus, rules, options.cap, options.seed);

  auto f = OpenOutput(options.out);
  WriteJsonl(f, set.items);

  out << "rule\tdataset\tavailable\tselected\n";
  for (const StratumCount& s : set.strata) {
    fmt::print(out, "{}\t{}\t{}\t{}\n", s.rule, s.dataset, s.available,
               s.selected);
  }
  fmt::print(out, "total\t\t\t{}\n", set.items.size());
}

}  // namespace dialect::tools
