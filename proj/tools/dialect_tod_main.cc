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

// dialect-tod: perturb gold corpora, score model predictions against them,
// and run the human fluency evaluation.

#include <csignal>
#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "dialect/records.h"
#include "dialect/rules_de.h"
#include "dialect/sampler.h"
#include "rating_service.h"

namespace {

using dialect::tools::fs::path;

dialect::tools::RatingService* g_service = nullptr;

void HandleSignal(int) {
  if (g_service != nullptr) g_service->Stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"German dialect perturbations for task-oriented dialogue"};
  app.require_subcommand(1);

  std::string names_file;
  app.add_option("--names", names_file,
                 "first-name lexicon (<Name>\\t<Masc|Fem> per line)")
      ->check(CLI::ExistingFile);

  auto* rules_cmd = app.add_subcommand("rules", "inspect the rule catalog");
  rules_cmd->require_subcommand(1);
  auto* rules_list = rules_cmd->add_subcommand("list", "rule names and categories");

  dialect::tools::PerturbOptions perturb;
  std::string perturb_report;
  auto* perturb_cmd = app.add_subcommand("perturb", "write perturbed corpora");
  perturb_cmd->add_option("input", perturb.input, "gold CoNLL-U corpus")
      ->required()
      ->check(CLI::ExistingFile);
  perturb_cmd->add_option("--rules", perturb.rules, "rules, one corpus each")
      ->delimiter(',');
  perturb_cmd->add_flag("--all", perturb.all, "also apply every rule at once");
  perturb_cmd->add_option("--out", perturb.out_dir, "output directory")->required();
  perturb_cmd->add_option("--report", perturb_report,
                          "summary table (default <out>/summary.tsv)");

  dialect::tools::EvaluateOptions evaluate;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "score predictions");
  evaluate_cmd->add_option("--intact", evaluate.intact, "intact gold corpus")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate_cmd
      ->add_option("--variants", evaluate.variants,
                   "perturbed corpora or directories of them")
      ->required();
  evaluate_cmd->add_option("--predictions", evaluate.predictions,
                           "prediction records, one JSON object per line")
      ->required();
  evaluate_cmd->add_option("--out", evaluate.out_dir, "report directory")
      ->required();

  dialect::tools::AgreementOptions agreement;
  std::string agreement_items, agreement_out;
  auto* agreement_cmd =
      app.add_subcommand("agreement", "inter-annotator agreement");
  agreement_cmd->add_option("ratings", agreement.ratings, "ratings log")
      ->required();
  agreement_cmd->add_option("--items", agreement_items,
                            "eval set, enables the per-rule table");
  agreement_cmd->add_option("--out", agreement_out, "JSON report");

  dialect::tools::SampleOptions sample;
  sample.cap = dialect::kDefaultPerRuleCap;
  auto* sample_cmd = app.add_subcommand("sample", "build the human eval set");
  sample_cmd->add_option("corpora", sample.corpora,
                         "intact corpora or directories")
      ->required();
  sample_cmd->add_option("--rules", sample.rules, "default: every rule")
      ->delimiter(',');
  sample_cmd->add_option("--cap", sample.cap, "items per rule and dataset")
      ->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", sample.seed, "sampling seed");
  sample_cmd->add_option("--out", sample.out, "eval set (JSON lines)")->required();

  std::string serve_items, serve_ratings, serve_static;
  std::string bind = "127.0.0.1:8080";
  auto* serve_cmd = app.add_subcommand("serve", "run the rating service");
  serve_cmd->add_option("--items", serve_items, "eval set")
      ->required()
      ->check(CLI::ExistingFile);
  serve_cmd->add_option("--ratings", serve_ratings, "ratings log")->required();
  serve_cmd->add_option("--bind", bind, "host:port")->capture_default_str();
  serve_cmd->add_option("--static", serve_static, "UI bundle directory")
      ->check(CLI::ExistingDirectory);

  CLI11_PARSE(app, argc, argv);

  try {
    const dialect::NameLexicon lexicon =
        names_file.empty() ? dialect::NameLexicon::Bundled()
                           : dialect::NameLexicon::Load(names_file);
    const dialect::RuleRegistry registry = dialect::MakeGermanRegistry(lexicon);

    if (rules_list->parsed()) {
      dialect::tools::ListRules(registry, std::cout);
    } else if (perturb_cmd->parsed()) {
      if (!perturb_report.empty()) perturb.report = perturb_report;
      dialect::tools::Perturb(perturb, registry, std::cout);
    } else if (evaluate_cmd->parsed()) {
      dialect::tools::Evaluate(evaluate, registry, std::cout);
    } else if (agreement_cmd->parsed()) {
      if (!agreement_items.empty()) agreement.items = agreement_items;
      if (!agreement_out.empty()) agreement.out = agreement_out;
      dialect::tools::Agreement(agreement, std::cout);
    } else if (sample_cmd->parsed()) {
      dialect::tools::Sample(sample, registry, std::cout);
    } else if (serve_cmd->parsed()) {
      const auto [host, port] = dialect::tools::ParseBindAddress(bind);
      dialect::tools::ServiceOptions options;
      options.ratings_log = serve_ratings;
      if (!serve_static.empty()) options.static_dir = serve_static;
      dialect::tools::RatingService service(
          dialect::ReadEvalItemsFile(serve_items), options);
      g_service = &service;
      std::signal(SIGINT, HandleSignal);
      std::signal(SIGTERM, HandleSignal);
      std::cerr << "serving on " << host << ":" << port << "\n";
      if (!service.Listen(host, port)) {
        std::cerr << "error: cannot bind " << bind << "\n";
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
