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

#ifndef DIALECT_CONLLU_H_
#define DIALECT_CONLLU_H_

#include <compare>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dialect/error.h"

namespace dialect {

// Where a token came from: a 1-based index into the intact sentence, or a
// token that a perturbation inserted.
class Provenance {
 public:
  static Provenance Source(int index) { return Provenance(index); }
  static Provenance Inserted() { return Provenance(0); }

  bool inserted() const { return source_ == 0; }
  // Only meaningful when !inserted().
  int source() const { return source_; }

  friend bool operator==(Provenance, Provenance) = default;

 private:
  explicit Provenance(int source) : source_(source) {}
  int source_;
};

struct Token {
  int index = 0;  // 1-based
  std::string form;
  std::string lemma;
  std::string upos;
  std::optional<std::string> xpos;
  std::map<std::string, std::string> feats;
  int head = 0;  // 0 = root
  std::string deprel;
  std::string deps = "_";
  std::string slot = "O";
  bool space_after = true;
  Provenance provenance = Provenance::Inserted();
  // MISC entries other than SpaceAfter, Slot and Provenance, in input order.
  std::vector<std::string> misc_extra;

  // Value of a morphological feature, or "" when absent.
  std::string_view Feat(std::string_view key) const;
  bool HasFeat(std::string_view key, std::string_view value) const {
    return Feat(key) == value;
  }

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::string sent_id;
  std::string dataset;
  std::string text;
  std::string intent;
  std::vector<Token> tokens;
  // Comment lines other than sent_id/dataset/intent/text, without the "# ".
  std::vector<std::string> extra_comments;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Half-open token range [start, end) carrying one slot type.
struct SlotSpan {
  std::string slot_type;
  int start = 0;
  int end = 0;

  friend auto operator<=>(const SlotSpan&, const SlotSpan&) = default;
};

std::vector<Sentence> ParseConllu(std::istream& in);
std::vector<Sentence> ParseConlluString(std::string_view text);
std::vector<Sentence> ReadConlluFile(const std::filesystem::path& path);

std::string WriteConllu(std::span<const Sentence> sentences);
void WriteConlluFile(const std::filesystem::path& path,
                     std::span<const Sentence> sentences);

// Maximal BIO spans. An I-x that does not continue a span of type x opens a
// new span, i.e. it is read as B-x.
std::vector<SlotSpan> ExtractSpans(std::span<const std::string> labels);

// Inverse of ExtractSpans on well-formed input. Throws Error when spans
// overlap, are unsorted or fall outside [0, length).
std::vector<std::string> SpansToBio(std::span<const SlotSpan> spans,
                                    int length);

// Applies the I-x repair so that the sequence is well-formed BIO.
std::vector<std::string> NormalizeBio(std::span<const std::string> labels);

bool IsValidSlotLabel(std::string_view label);

// Forms joined by single spaces, except after tokens with space_after=false.
std::string Detokenize(std::span<const Token> tokens);

std::vector<std::string> SlotLabels(const Sentence& sentence);

// Checks every Token/Sentence invariant; throws Error naming the sentence.
void ValidateSentence(const Sentence& sentence);

}  // namespace dialect

#endif  // DIALECT_CONLLU_H_
