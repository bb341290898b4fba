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

#include "dialect/evaluation.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "dialect/rules_de.h"
#include "test_util.h"

namespace dialect {
namespace {

using ::testing::HasSubstr;
using ::testing::ThrowsMessage;

VariantCorpus PerturbCorpus(const std::string& rule,
                            const std::vector<Sentence>& corpus) {
  VariantCorpus v{rule, {}};
  for (const Sentence& s : corpus) {
    v.sentences.push_back(
        MarkedSentence(ApplyRule(GermanRegistry().Find(rule), s)));
  }
  return v;
}

// Gold-copying predictions for one corpus.
void AddOracle(const std::string& variant, long seed,
               const std::vector<Sentence>& corpus,
               std::vector<PredictionRecord>& out) {
  for (const Sentence& s : corpus) {
    out.push_back({s.sent_id, variant, seed, s.intent, SlotLabels(s), {}});
  }
}

TEST(EvaluateTest, GoldPredictionsGiveZeroDeltas) {
  const auto& intact = testing::MiniCorpus();
  std::vector<VariantCorpus> variants;
  for (std::string_view rule : kGermanRuleNames) {
    variants.push_back(PerturbCorpus(std::string(rule), intact));
  }
  std::vector<PredictionRecord> preds;
  for (long seed : {1L, 2L}) {
    AddOracle("intact", seed, intact, preds);
    for (const auto& v : variants) AddOracle(v.name, seed, v.sentences, preds);
  }
  const EvalReport r = Evaluate(intact, variants, preds, GermanRegistry());
  ASSERT_EQ(r.means.size(), 15u);
  ASSERT_EQ(r.per_seed.size(), 30u);
  EXPECT_EQ(r.means[0].variant, "intact");
  for (const VariantScores& m : r.means) {
    EXPECT_EQ(m.intent_accuracy, 1.0) << m.variant;
    EXPECT_EQ(m.slots.f1, 1.0) << m.variant;
    EXPECT_EQ(m.delta_accuracy, 0.0) << m.variant;
    EXPECT_EQ(m.delta_f1, 0.0) << m.variant;
    EXPECT_EQ(m.success_rate, 0.0) << m.variant;
    EXPECT_FALSE(m.preference_accuracy.has_value());
  }
  const auto by_name = [&](const std::string& n) {
    return *std::find_if(r.means.begin(), r.means.end(),
                         [&](const auto& m) { return m.variant == n; });
  };
  EXPECT_EQ(by_name("article_name").n_perturbed, 7);
  EXPECT_EQ(by_name("intact").n_perturbed, 0);
  // Every category with an applied rule shows up, each with delta 0.
  EXPECT_FALSE(r.categories.empty());
  for (const CategoryDelta& c : r.categories) EXPECT_EQ(c.mean_delta_f1, 0.0);
}

// Ten sentences; the variant marks all as applied and the model flips two.
struct FlipFixture {
  std::vector<Sentence> intact;
  VariantCorpus variant{"word_order", {}};
  std::vector<PredictionRecord> preds;

  FlipFixture() {
    for (int i = 0; i < 10; ++i) {
      Sentence s = testing::Flat({"Wecker", "stellen"}, {"O", "O"});
      s.sent_id = "f" + std::to_string(i);
      s.intent = "alarm/set";
      intact.push_back(s);
      PerturbationResult applied;
      applied.applied = true;
      applied.sentence = s;
      variant.sentences.push_back(MarkedSentence(applied));
    }
    AddOracle("intact", 0, intact, preds);
    AddOracle("word_order", 0, variant.sentences, preds);
    preds[10 + 2].intent = "alarm/cancel";
    preds[10 + 5].intent = "alarm/cancel";
  }
};

TEST(EvaluateTest, TwoFlipsGiveSuccessRateOneFifth) {
  FlipFixture f;
  const EvalReport r =
      Evaluate(f.intact, {f.variant}, f.preds, GermanRegistry());
  const VariantScores& row = r.means[1];
  EXPECT_EQ(row.variant, "word_order");
  EXPECT_EQ(row.n_perturbed, 10);
  EXPECT_EQ(row.success_rate, 0.2);
  EXPECT_DOUBLE_EQ(row.delta_accuracy, 0.2);
  EXPECT_EQ(row.delta_f1, 0.0);  // no spans on either side
}

TEST(EvaluateTest, PreferenceAccuracyWhenPerplexitiesPresent) {
  FlipFixture f;
  for (int i = 0; i < 10; ++i) {
    f.preds[i].pppl = 10.0;
    f.preds[10 + i].pppl = i < 6 ? 20.0 : 10.0;  // 6 preferred, 4 tied
  }
  const EvalReport r =
      Evaluate(f.intact, {f.variant}, f.preds, GermanRegistry());
  ASSERT_TRUE(r.means[1].preference_accuracy.has_value());
  EXPECT_DOUBLE_EQ(*r.means[1].preference_accuracy, 0.8);
}

TEST(EvaluateTest, SeedMeanIsArithmeticMean) {
  FlipFixture f;
  // Seed 1 flips nothing.
  AddOracle("intact", 1, f.intact, f.preds);
  AddOracle("word_order", 1, f.variant.sentences, f.preds);
  const EvalReport r =
      Evaluate(f.intact, {f.variant}, f.preds, GermanRegistry());
  ASSERT_EQ(r.per_seed.size(), 4u);
  const VariantScores& s0 = r.per_seed[2];
  const VariantScores& s1 = r.per_seed[3];
  EXPECT_EQ(*s0.run_seed, 0);
  EXPECT_EQ(*s1.run_seed, 1);
  EXPECT_NEAR(r.means[1].success_rate, (s0.success_rate + s1.success_rate) / 2,
              1e-12);
  EXPECT_NEAR(r.means[1].intent_accuracy,
              (s0.intent_accuracy + s1.intent_accuracy) / 2, 1e-12);
  ASSERT_EQ(r.categories.size(), 1u);
  EXPECT_EQ(r.categories[0].category, Category::kDiscourseWordOrder);
}

TEST(EvaluateTest, MissingPredictionsAreListed) {
  FlipFixture f;
  f.preds.erase(f.preds.begin() + 13);
  EXPECT_THAT(
      [&] { Evaluate(f.intact, {f.variant}, f.preds, GermanRegistry()); },
      ThrowsMessage<Error>(HasSubstr("(f3, word_order, 0)")));
}

TEST(EvaluateTest, DuplicatePredictionsAndMisalignedVariantsThrow) {
  FlipFixture f;
  auto dup = f.preds;
  dup.push_back(dup[0]);
  EXPECT_THROW(Evaluate(f.intact, {f.variant}, dup, GermanRegistry()), Error);
  auto shuffled = f.variant;
  std::swap(shuffled.sentences[0], shuffled.sentences[1]);
  EXPECT_THROW(Evaluate(f.intact, {shuffled}, f.preds, GermanRegistry()),
               Error);
  EXPECT_THROW(Evaluate({}, {}, f.preds, GermanRegistry()), Error);
}

}  // namespace
}  // namespace dialect
