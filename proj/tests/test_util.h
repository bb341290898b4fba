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

#ifndef DIALECT_TESTS_TEST_UTIL_H_
#define DIALECT_TESTS_TEST_UTIL_H_

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dialect/conllu.h"

namespace dialect::testing {

inline std::filesystem::path DataDir() { return DIALECT_TEST_DATA_DIR; }

inline const std::vector<Sentence>& MiniCorpus() {
  static const std::vector<Sentence> corpus =
      ReadConlluFile(DataDir() / "mini_corpus.conllu");
  return corpus;
}

inline const Sentence& MiniSentence(const std::string& sent_id) {
  for (const Sentence& s : MiniCorpus()) {
    if (s.sent_id == sent_id) return s;
  }
  throw Error("no sentence " + sent_id);
}

// One line of a golden file: sent_id, applied|unchanged, text, slots.
struct GoldenLine {
  std::string sent_id;
  bool applied = false;
  std::string text;
  std::string slots;
};

inline std::vector<GoldenLine> ReadGolden(const std::string& name) {
  std::ifstream in(DataDir() / "golden" / (name + ".tsv"));
  if (!in) throw Error("no golden file for " + name);
  std::vector<GoldenLine> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    GoldenLine g;
    std::string status;
    std::getline(fields, g.sent_id, '\t');
    std::getline(fields, status, '\t');
    std::getline(fields, g.text, '\t');
    std::getline(fields, g.slots, '\t');
    g.applied = status == "applied";
    out.push_back(g);
  }
  return out;
}

inline std::string JoinLabels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ' ';
    out += l;
  }
  return out;
}

// Builds a sentence from "form/upos" pairs for quick morphology-free tests.
inline Sentence Flat(const std::vector<std::string>& forms,
                     const std::vector<std::string>& slots = {}) {
  Sentence s;
  s.sent_id = "t";
  s.intent = "test/intent";
  for (std::size_t i = 0; i < forms.size(); ++i) {
    Token t;
    t.index = static_cast<int>(i) + 1;
    t.form = forms[i];
    t.lemma = forms[i];
    t.upos = "X";
    t.head = i == 0 ? 0 : 1;
    t.deprel = i == 0 ? "root" : "dep";
    t.provenance = Provenance::Source(t.index);
    if (i < slots.size()) t.slot = slots[i];
    s.tokens.push_back(t);
  }
  s.text = Detokenize(s.tokens);
  return s;
}

}  // namespace dialect::testing

#endif  // DIALECT_TESTS_TEST_UTIL_H_
