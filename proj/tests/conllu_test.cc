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

#include "dialect/conllu.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "test_util.h"

namespace dialect {
namespace {

using ::testing::HasSubstr;
using ::testing::ElementsAre;

constexpr char kThreeTokens[] =
    "# sent_id = a1\n"
    "# intent = calling/make_call\n"
    "# text = Ruf Paul an\n"
    "1\tRuf\trufen\tVERB\t_\tMood=Imp\t0\troot\t_\t_\n"
    "2\tPaul\tPaul\tPROPN\t_\t_\t1\tobj\t_\tSlot=B-person\n"
    "3\tan\tan\tADP\t_\t_\t1\tcompound:prt\t_\t_\n"
    "\n";

std::string Replace(std::string s, const std::string& from,
                    const std::string& to) {
  s.replace(s.find(from), from.size(), to);
  return s;
}

TEST(ParseConlluTest, MapsFieldsAndSlots) {
  const auto sentences = ParseConlluString(kThreeTokens);
  ASSERT_EQ(sentences.size(), 1u);
  const Sentence& s = sentences[0];
  EXPECT_EQ(s.sent_id, "a1");
  EXPECT_EQ(s.intent, "calling/make_call");
  EXPECT_EQ(s.tokens[0].Feat("Mood"), "Imp");
  EXPECT_EQ(s.tokens[2].deprel, "compound:prt");
  EXPECT_THAT(ExtractSpans(SlotLabels(s)),
              ElementsAre(SlotSpan{"person", 1, 2}));
}

TEST(ParseConlluTest, MiscWithoutSlotDefaultsToO) {
  const auto s = ParseConlluString(kThreeTokens)[0];
  EXPECT_EQ(s.tokens[0].slot, "O");
  EXPECT_EQ(s.tokens[2].slot, "O");
}

TEST(ParseConlluTest, MissingIntentIsAnError) {
  const std::string text =
      Replace(kThreeTokens, "# intent = calling/make_call\n", "");
  try {
    ParseConlluString(text);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_THAT(e.what(), HasSubstr("missing intent"));
    EXPECT_EQ(e.sent_id(), "a1");
  }
}

TEST(ParseConlluTest, WrongColumnCountNamesSentenceAndLine) {
  const std::string text = Replace(kThreeTokens, "\t1\tobj\t_\t", "\t1\tobj\t");
  try {
    ParseConlluString(text);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.sent_id(), "a1");
    EXPECT_EQ(e.line(), 5);
    EXPECT_THAT(e.what(), HasSubstr("columns"));
  }
}

TEST(ParseConlluTest, RejectsIllFormedHeads) {
  EXPECT_THROW(ParseConlluString(Replace(kThreeTokens, "\t1\tobj", "\t7\tobj")),
               ParseError);
  EXPECT_THROW(ParseConlluString(Replace(kThreeTokens, "\t1\tobj", "\t2\tobj")),
               ParseError);
  EXPECT_THROW(ParseConlluString(Replace(kThreeTokens, "\t1\tobj", "\tx\tobj")),
               ParseError);
}

TEST(ParseConlluTest, RejectsMultiwordTokensAndEmptyNodes) {
  EXPECT_THROW(
      ParseConlluString(Replace(kThreeTokens, "1\tRuf", "1-2\tRuf\t_\t_\t_\t_\t_\t_\t_\t_\n1\tRuf")),
      ParseError);
  EXPECT_THROW(ParseConlluString(Replace(kThreeTokens, "3\tan", "2.1\tan")),
               ParseError);
}

TEST(ParseConlluTest, RejectsBadSlotLabelsAndTextMismatch) {
  EXPECT_THROW(ParseConlluString(Replace(kThreeTokens, "B-person", "X-person")),
               ParseError);
  EXPECT_THROW(ParseConlluString(Replace(kThreeTokens, "Ruf Paul an", "Ruf an")),
               ParseError);
}

TEST(ParseConlluTest, RepairsDanglingInsideLabel) {
  const auto s =
      ParseConlluString(Replace(kThreeTokens, "Slot=B-person", "Slot=I-person"))[0];
  EXPECT_EQ(s.tokens[1].slot, "B-person");
}

TEST(WriteConlluTest, EmptyListGivesEmptyOutput) {
  EXPECT_EQ(WriteConllu({}), "");
}

TEST(WriteConlluTest, SingleSentenceEndsInOneBlankLine) {
  const auto s = ParseConlluString(kThreeTokens);
  const std::string out = WriteConllu(s);
  EXPECT_EQ(out, kThreeTokens);
  EXPECT_TRUE(out.ends_with("\n\n"));
  EXPECT_FALSE(out.ends_with("\n\n\n"));
}

TEST(WriteConlluTest, InsertedTokenCarriesProvenanceMarker) {
  auto s = ParseConlluString(kThreeTokens)[0];
  Token ins = s.tokens[1];
  ins.form = "den";
  ins.provenance = Provenance::Inserted();
  ins.slot = "O";
  s.tokens.insert(s.tokens.begin() + 1, ins);
  for (int i = 0; i < 4; ++i) s.tokens[i].index = i + 1;
  s.tokens[2].provenance = Provenance::Source(2);
  s.tokens[3].provenance = Provenance::Source(3);
  s.text = Detokenize(s.tokens);
  std::vector<Sentence> one = {s};
  const std::string out = WriteConllu(one);
  EXPECT_THAT(out, HasSubstr("Provenance=INS"));
  EXPECT_THAT(out, HasSubstr("Slot=B-person|Provenance=2"));
  EXPECT_EQ(ParseConlluString(out), one);
}

TEST(WriteConlluTest, MiniCorpusRoundTripsByteForByte) {
  std::ifstream in(testing::DataDir() / "mini_corpus.conllu");
  std::stringstream raw;
  raw << in.rdbuf();
  EXPECT_EQ(WriteConllu(testing::MiniCorpus()), raw.str());
  EXPECT_EQ(testing::MiniCorpus().size(), 20u);
}

TEST(ExtractSpansTest, Examples) {
  using L = std::vector<std::string>;
  EXPECT_THAT(ExtractSpans(L{"B-person", "I-person", "O"}),
              ElementsAre(SlotSpan{"person", 0, 2}));
  EXPECT_THAT(ExtractSpans(L{"I-loc"}), ElementsAre(SlotSpan{"loc", 0, 1}));
  EXPECT_TRUE(ExtractSpans(L{}).empty());
  EXPECT_THAT(ExtractSpans(L{"B-a", "I-b", "B-a", "B-a"}),
              ElementsAre(SlotSpan{"a", 0, 1}, SlotSpan{"b", 1, 2},
                          SlotSpan{"a", 2, 3}, SlotSpan{"a", 3, 4}));
}

TEST(SpansToBioTest, Examples) {
  std::vector<SlotSpan> one = {{"person", 0, 2}};
  EXPECT_THAT(SpansToBio(one, 3), ElementsAre("B-person", "I-person", "O"));
  EXPECT_THAT(SpansToBio({}, 2), ElementsAre("O", "O"));
  std::vector<SlotSpan> overlap = {{"a", 0, 2}, {"b", 1, 3}};
  EXPECT_THROW(SpansToBio(overlap, 3), Error);
  std::vector<SlotSpan> outside = {{"a", 2, 4}};
  EXPECT_THROW(SpansToBio(outside, 3), Error);
}

TEST(DetokenizeTest, Examples) {
  auto s = testing::Flat({"Wie", "spät", "ist", "es", "?"});
  s.tokens[3].space_after = false;
  EXPECT_EQ(Detokenize(s.tokens), "Wie spät ist es?");

  auto clitic = testing::Flat({"ist", "'s"});
  clitic.tokens[0].space_after = false;
  EXPECT_EQ(Detokenize(clitic.tokens), "ist's");

  EXPECT_EQ(Detokenize(testing::Flat({"Hallo"}).tokens), "Hallo");
}

TEST(ValidateSentenceTest, CatchesBrokenInvariants) {
  auto s = ParseConlluString(kThreeTokens)[0];
  EXPECT_NO_THROW(ValidateSentence(s));
  auto bad_index = s;
  bad_index.tokens[2].index = 5;
  EXPECT_THROW(ValidateSentence(bad_index), Error);
  auto dup_source = s;
  dup_source.tokens[2].provenance = Provenance::Source(1);
  EXPECT_THROW(ValidateSentence(dup_source), Error);
  auto bad_text = s;
  bad_text.text = "Ruf";
  EXPECT_THROW(ValidateSentence(bad_text), Error);
}

}  // namespace
}  // namespace dialect
