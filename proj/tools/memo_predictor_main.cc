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

// memo-predictor: writes prediction records for the intact corpus and any
// number of perturbed variants, memorizing the intact gold corpus.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "dialect/evaluation.h"
#include "memo_predictor.h"

int main(int argc, char** argv) {
  CLI::App app{"Memorizing baseline predictor for dry runs"};
  std::string intact, out;
  std::vector<std::string> variants;
  std::vector<long> seeds = {0};
  app.add_option("--intact", intact, "intact gold corpus (also the memory)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--variants", variants, "perturbed corpora or directories");
  app.add_option("--seeds", seeds, "run seeds to label the records with")
      ->delimiter(',');
  app.add_option("--out", out, "prediction records")->required();
  CLI11_PARSE(app, argc, argv);

  try {
    const auto gold = dialect::ReadConlluFile(intact);
    const dialect::tools::MemoPredictor model(gold);
    std::vector<dialect::PredictionRecord> records;
    auto predict = [&](const std::string& name,
                       const std::vector<dialect::Sentence>& corpus) {
      // The model is deterministic; seeds only label repeated runs.
      for (long seed : seeds) {
        for (const auto& s : corpus) records.push_back(model.Predict(s, name, seed));
      }
    };
    predict(std::string(dialect::kIntactVariant), gold);
    std::vector<dialect::tools::fs::path> paths(variants.begin(), variants.end());
    for (const auto& p : dialect::tools::ExpandCorpusPaths(paths)) {
      if (dialect::tools::fs::equivalent(p, intact)) continue;
      predict(p.stem().string(), dialect::ReadConlluFile(p));
    }
    std::ofstream f(out);
    if (!f) throw dialect::Error("cannot write " + out);
    dialect::WriteJsonl(f, records);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
