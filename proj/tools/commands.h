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

// Subcommands of dialect-tod as plain functions. Each one writes its tables
// to `out` and files under the given paths, and throws dialect::Error on bad
// input so that callers (the CLI, tests) decide how to report it.

#ifndef DIALECT_TOOLS_COMMANDS_H_
#define DIALECT_TOOLS_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dialect/rule_engine.h"

namespace dialect::tools {

namespace fs = std::filesystem;

void ListRules(const RuleRegistry& registry, std::ostream& out);

struct PerturbOptions {
  fs::path input;
  // One output corpus per named rule.
  std::vector<std::string> rules;
  // Additionally (or only) one corpus with every rule composed.
  bool all = false;
  fs::path out_dir;
  // Defaults to <out_dir>/summary.tsv.
  std::optional<fs::path> report;
};

struct PerturbSummaryRow {
  std::string variant;
  int sentences = 0;
  int applied = 0;
  int vetoes = 0;
};

// Writes <out_dir>/<rule>.conllu per rule and all.conllu for `all`, plus a
// summary table (variant, sentences, applied, vetoes).
std::vector<PerturbSummaryRow> Perturb(const PerturbOptions& options,
                                       const RuleRegistry& registry,
                                       std::ostream& out);

struct EvaluateOptions {
  fs::path intact;
  // Perturbed corpora; a directory stands for every *.conllu inside it. The
  // variant name is the file stem.
  std::vector<fs::path> variants;
  fs::path predictions;
  fs::path out_dir;
};

// Writes variants.tsv (per seed and seed-mean rows), rules.tsv (one row per
// registry rule) and categories.tsv.
void Evaluate(const EvaluateOptions& options, const RuleRegistry& registry,
              std::ostream& out);

struct AgreementOptions {
  fs::path ratings;  // append-only log; last write wins
  // Eval set, for the per-rule table.
  std::optional<fs::path> items;
  std::optional<fs::path> out;  // JSON report
};

void Agreement(const AgreementOptions& options, std::ostream& out);

struct SampleOptions {
  std::vector<fs::path> corpora;
  std::vector<std::string> rules;  // empty = every rule
  int cap = 0;
  std::uint64_t seed = 0;
  fs::path out;
};

void Sample(const SampleOptions& options, const RuleRegistry& registry,
            std::ostream& out);

// Expands directories to their *.conllu files, sorted by name.
std::vector<fs::path> ExpandCorpusPaths(const std::vector<fs::path>& paths);

}  // namespace dialect::tools

#endif  // DIALECT_TOOLS_COMMANDS_H_
