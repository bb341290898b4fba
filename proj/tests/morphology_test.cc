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

#include "dialect/morphology.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <sstream>

namespace dialect {
namespace {

TEST(ElideSchwaTest, DropsFinalE) {
  EXPECT_EQ(ElideSchwa("habe"), "hab");
  EXPECT_EQ(ElideSchwa("gehe"), "geh");
  EXPECT_EQ(ElideSchwa("glühe"), "glüh");
}

TEST(ElideSchwaTest, RejectsNonElidableForms) {
  try {
    ElideSchwa("hab");
    FAIL();
  } catch (const Error& e) {
    EXPECT_THAT(e.what(), ::testing::HasSubstr("not elidable"));
  }
  EXPECT_THROW(ElideSchwa("se"), Error);
  EXPECT_FALSE(IsSchwaElidable(""));
}

TEST(ElideSchwaTest, IsLossless) {
  for (const char* form : {"habe", "suche", "kenne", "bleibe", "wandere"}) {
    EXPECT_EQ(ElideSchwa(form) + "e", form);
  }
}

// All 16 cells: 3 genders x 4 cases in the singular, 4 cases in the plural.
TEST(DefiniteArticleTest, FullParadigm) {
  struct Cell {
    Gender g;
    Case c;
    Number n;
    const char* want;
  };
  const Cell cells[] = {
      {Gender::kMasc, Case::kNom, Number::kSing, "der"},
      {Gender::kMasc, Case::kAcc, Number::kSing, "den"},
      {Gender::kMasc, Case::kDat, Number::kSing, "dem"},
      {Gender::kMasc, Case::kGen, Number::kSing, "des"},
      {Gender::kFem, Case::kNom, Number::kSing, "die"},
      {Gender::kFem, Case::kAcc, Number::kSing, "die"},
      {Gender::kFem, Case::kDat, Number::kSing, "der"},
      {Gender::kFem, Case::kGen, Number::kSing, "der"},
      {Gender::kNeut, Case::kNom, Number::kSing, "das"},
      {Gender::kNeut, Case::kAcc, Number::kSing, "das"},
      {Gender::kNeut, Case::kDat, Number::kSing, "dem"},
      {Gender::kNeut, Case::kGen, Number::kSing, "des"},
      {Gender::kUnknown, Case::kNom, Number::kPlur, "die"},
      {Gender::kMasc, Case::kAcc, Number::kPlur, "die"},
      {Gender::kFem, Case::kDat, Number::kPlur, "den"},
      {Gender::kNeut, Case::kGen, Number::kPlur, "der"},
  };
  for (const Cell& c : cells) {
    EXPECT_EQ(DefiniteArticle(c.g, c.c, c.n), c.want)
        << ToString(c.g) << " " << ToString(c.c) << " " << ToString(c.n);
  }
}

TEST(DefiniteArticleTest, SingularNeedsGender) {
  try {
    DefiniteArticle(Gender::kUnknown, Case::kNom, Number::kSing);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "gender required");
  }
}

TEST(ConjugateSeinTest, Paradigm) {
  EXPECT_EQ(ConjugateSein(Person::kFirst, Number::kSing), "bin");
  EXPECT_EQ(ConjugateSein(Person::kSecond, Number::kSing), "bist");
  EXPECT_EQ(ConjugateSein(Person::kThird, Number::kSing), "ist");
  EXPECT_EQ(ConjugateSein(Person::kFirst, Number::kPlur), "sind");
  EXPECT_EQ(ConjugateSein(Person::kSecond, Number::kPlur), "seid");
  EXPECT_EQ(ConjugateSein(Person::kThird, Number::kPlur), "sind");
}

TEST(NominalizeInfinitiveTest, CapitalizesInfinitives) {
  EXPECT_EQ(NominalizeInfinitive("lesen"), "Lesen");
  EXPECT_EQ(NominalizeInfinitive("warten"), "Warten");
  EXPECT_EQ(NominalizeInfinitive("üben"), "Üben");
  EXPECT_THROW(NominalizeInfinitive("geh"), Error);
  EXPECT_THROW(NominalizeInfinitive("Lesen"), Error);
}

TEST(TunImperativeTest, NumberAndCasing) {
  EXPECT_EQ(TunImperative(Number::kSing), "Tu");
  EXPECT_EQ(TunImperative(Number::kPlur), "Tut");
  EXPECT_EQ(TunImperative(Number::kSing, /*sentence_initial=*/false), "tu");
}

TEST(NameLexiconTest, BundledLookups) {
  const NameLexicon& names = NameLexicon::Bundled();
  EXPECT_EQ(NameGender("Angela", names), Gender::kFem);
  EXPECT_EQ(NameGender("Paul", names), Gender::kMasc);
  EXPECT_EQ(NameGender("Zzyx", names), Gender::kUnknown);
  EXPECT_EQ(NameGender("angela", names), Gender::kUnknown);
  EXPECT_EQ(NameGender("Berlin", names), Gender::kUnknown);
  EXPECT_GT(names.size(), 40u);
}

TEST(NameLexiconTest, ParsesFileFormat) {
  std::istringstream in("# comment\nJonas\tMasc\n\nLea\tFem\n");
  const NameLexicon names = NameLexicon::Parse(in);
  EXPECT_EQ(names.size(), 2u);
  EXPECT_EQ(names.Lookup("Lea"), Gender::kFem);
  std::istringstream bad("Jonas\tNeut\n");
  EXPECT_THROW(NameLexicon::Parse(bad), Error);
}

TEST(KinTermGenderTest, Table) {
  EXPECT_EQ(KinTermGender("Papa"), Gender::kMasc);
  EXPECT_EQ(KinTermGender("Oma"), Gender::kFem);
  EXPECT_EQ(KinTermGender("Mann"), Gender::kUnknown);
}

}  // namespace
}  // namespace dialect
