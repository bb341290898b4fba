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

// Randomized and corpus-wide properties of span handling and of every rule.

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "dialect/metrics.h"
#include "dialect/rules_de.h"
#include "test_util.h"

namespace dialect {
namespace {

constexpr int kRandomCases = 1000;
const char* const kTypes[] = {"person", "time", "location", "artist", "event"};

std::vector<std::string> RandomBio(std::mt19937& rng, int length) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> type(0, 4);
  std::vector<std::string> out;
  for (int i = 0; i < length; ++i) {
    const int k = kind(rng);
    out.push_back(k == 0 ? std::string("O")
                         : std::string(k == 1 ? "B-" : "I-") + kTypes[type(rng)]);
  }
  return out;
}

// Independent reading of BIO: a span starts wherever a label is not the
// continuation of the previous label's span and runs while I- of the same
// type follows.
std::set<std::tuple<std::string, int, int>> OracleSpans(
    const std::vector<std::string>& labels) {
  std::set<std::tuple<std::string, int, int>> out;
  const int n = static_cast<int>(labels.size());
  for (int start = 0; start < n; ++start) {
    if (labels[start] == "O") continue;
    const std::string type = labels[start].substr(2);
    const bool continues = labels[start][0] == 'I' && start > 0 &&
                           labels[start - 1] != "O" &&
                           labels[start - 1].substr(2) == type;
    if (continues) continue;
    int end = start + 1;
    while (end < n && labels[end] == "I-" + type) ++end;
    out.emplace(type, start, end);
  }
  return out;
}

TEST(BioPropertyTest, ExtractSpansMatchesOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 30);
  for (int c = 0; c < kRandomCases; ++c) {
    const auto labels = RandomBio(rng, len(rng));
    std::set<std::tuple<std::string, int, int>> got;
    for (const SlotSpan& s : ExtractSpans(labels)) {
      got.emplace(s.slot_type, s.start, s.end);
    }
    ASSERT_EQ(got, OracleSpans(labels)) << testing::JoinLabels(labels);
  }
}

TEST(BioPropertyTest, SpansAndBioAreInverse) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(0, 30);
  for (int c = 0; c < kRandomCases; ++c) {
    const auto labels = RandomBio(rng, len(rng));
    const auto spans = ExtractSpans(labels);
    const auto bio = SpansToBio(spans, static_cast<int>(labels.size()));
    ASSERT_EQ(ExtractSpans(bio), spans);
    ASSERT_EQ(bio, NormalizeBio(labels));
  }
}

TEST(SpanF1PropertyTest, MatchesBruteForceOracle) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> len(1, 30);
  for (int c = 0; c < kRandomCases; ++c) {
    const int n = len(rng);
    const std::vector<Labels> gold = {RandomBio(rng, n)};
    const std::vector<Labels> pred = {RandomBio(rng, n)};
    const auto g = OracleSpans(gold[0]);
    const auto p = OracleSpans(pred[0]);
    long tp = 0;
    for (const auto& s : p) tp += g.count(s);
    const double precision = p.empty() ? 0.0 : double(tp) / p.size();
    const double recall = g.empty() ? 0.0 : double(tp) / g.size();
    const double f1 = precision + recall == 0
                          ? 0.0
                          : 2 * precision * recall / (precision + recall);
    const SpanScore s = SpanF1(gold, pred);
    ASSERT_EQ(s.true_positives, tp);
    ASSERT_EQ(s.precision, precision);
    ASSERT_EQ(s.recall, recall);
    ASSERT_EQ(s.f1, f1);
  }
}

// ---------------------------------------------------------------------------
// Every rule on every mini-corpus sentence.

class RulePropertyTest : public ::testing::TestWithParam<std::string> {
 protected:
  const PerturbationRule& rule() const { return GermanRegistry().Find(GetParam()); }
};

std::multiset<std::string> SpanTypes(const Sentence& s) {
  std::multiset<std::string> out;
  for (const SlotSpan& span : ExtractSpans(SlotLabels(s))) {
    out.insert(span.slot_type);
  }
  return out;
}

std::multiset<std::string> SpanContentLemmas(const Sentence& s) {
  static const std::set<std::string> kContent = {"NOUN", "PROPN", "VERB",
                                                 "ADJ",  "ADV",   "NUM"};
  std::multiset<std::string> out;
  for (const Token& t : s.tokens) {
    if (t.slot != "O" && !t.provenance.inserted() && kContent.contains(t.upos)) {
      out.insert(t.lemma);
    }
  }
  return out;
}

TEST_P(RulePropertyTest, NonApplicationIsByteIdentity) {
  for (const Sentence& s : testing::MiniCorpus()) {
    const auto r = ApplyRule(rule(), s);
    if (r.applied) continue;
    const std::vector<Sentence> in = {s}, out = {r.sentence};
    EXPECT_EQ(WriteConllu(out), WriteConllu(in)) << s.sent_id;
    EXPECT_TRUE(r.script.empty());
  }
}

TEST_P(RulePropertyTest, ScriptReproducesOutput) {
  for (const Sentence& s : testing::MiniCorpus()) {
    const auto r = ApplyRule(rule(), s);
    if (!r.applied) continue;
    ASSERT_NO_THROW(ValidateScript(r.script, static_cast<int>(s.tokens.size())));
    auto rebuilt = Reconstruct(s.tokens, r.script);
    ASSERT_EQ(rebuilt.size(), r.sentence.tokens.size());
    for (std::size_t i = 0; i < rebuilt.size(); ++i) {
      rebuilt[i].slot = r.sentence.tokens[i].slot;
    }
    EXPECT_EQ(rebuilt, r.sentence.tokens) << s.sent_id;
  }
}

TEST_P(RulePropertyTest, LabelsSurviveProjection) {
  for (const Sentence& s : testing::MiniCorpus()) {
    const auto r = ApplyRule(rule(), s);
    if (!r.applied) continue;
    EXPECT_EQ(SpanTypes(r.sentence), SpanTypes(s)) << s.sent_id;
    EXPECT_EQ(ExtractSpans(SlotLabels(r.sentence)).size(),
              ExtractSpans(SlotLabels(s)).size())
        << s.sent_id;
    EXPECT_EQ(SpanContentLemmas(r.sentence), SpanContentLemmas(s)) << s.sent_id;
    EXPECT_EQ(r.sentence.intent, s.intent);
    // Kept tokens stay in a span of the same type.
    for (const Token& t : r.sentence.tokens) {
      if (t.provenance.inserted()) continue;
      const std::string& before = s.tokens[t.provenance.source() - 1].slot;
      EXPECT_EQ(t.slot == "O", before == "O") << s.sent_id;
      if (t.slot != "O") EXPECT_EQ(t.slot.substr(2), before.substr(2));
    }
  }
}

// name_order is an involution and is checked separately.
class FixedPointTest : public RulePropertyTest {};

TEST_P(FixedPointTest, RepeatedApplicationReachesFixedPoint) {
  // Insertion rules rewrite the first site per pass, so a sentence with k
  // sites needs k passes; no rule may keep firing on its own output.
  for (const Sentence& s : testing::MiniCorpus()) {
    Sentence current = s;
    int passes = 0;
    while (ApplyRule(rule(), current).applied) {
      current = ApplyRule(rule(), current).sentence;
      ASSERT_LE(++passes, 3) << s.sent_id << ": " << current.text;
    }
  }
}

TEST(NameOrderPropertyTest, SecondApplicationRestoresInput) {
  const PerturbationRule& rule = GermanRegistry().Find("name_order");
  for (const Sentence& s : testing::MiniCorpus()) {
    const auto once = ApplyRule(rule, s);
    if (!once.applied) continue;
    const auto twice = ApplyRule(rule, once.sentence);
    ASSERT_TRUE(twice.applied);
    EXPECT_EQ(twice.sentence.text, s.text) << s.sent_id;
    EXPECT_EQ(SlotLabels(twice.sentence), SlotLabels(s)) << s.sent_id;
  }
}

TEST_P(RulePropertyTest, TokenCountChangesByDocumentedAmount) {
  static const std::map<std::string, std::set<int>> kDelta = {
      {"article_name", {1}},   {"progressive", {2}},
      {"negative_concord", {1}}, {"relative_pron", {1}},
      {"location", {1}},       {"name_order", {0}},
      {"verb_clusters", {0}},  {"word_order", {0}},
      {"schwa_elision", {0}},  {"es_contraction", {0}},
      {"comparative", {0}},    {"direction", {0, -1}},
      {"tun_imperative", {0, 1}}, {"pronominal_adverbs", {1}},
  };
  for (const Sentence& s : testing::MiniCorpus()) {
    const auto r = ApplyRule(rule(), s);
    if (!r.applied) continue;
    const int delta = static_cast<int>(r.sentence.tokens.size()) -
                      static_cast<int>(s.tokens.size());
    EXPECT_TRUE(kDelta.at(GetParam()).contains(delta))
        << s.sent_id << " changed by " << delta;
  }
}

class FormRulePropertyTest : public RulePropertyTest {};

TEST_P(FormRulePropertyTest, OnlyNamedTokensChangeForm) {
  // Form-level rules keep every other token byte-identical and in order.
  for (const Sentence& s : testing::MiniCorpus()) {
    const auto r = ApplyRule(rule(), s);
    if (!r.applied) continue;
    ASSERT_EQ(r.sentence.tokens.size(), s.tokens.size());
    int changed = 0;
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      const Token& a = s.tokens[i];
      const Token& b = r.sentence.tokens[i];
      EXPECT_EQ(a.head, b.head);
      if (a.form != b.form) {
        ++changed;
      } else {
        EXPECT_EQ(a.lemma, b.lemma);
      }
    }
    EXPECT_GE(changed, 1);
  }
}

TEST_P(RulePropertyTest, Deterministic) {
  for (const Sentence& s : testing::MiniCorpus()) {
    const auto a = ApplyRule(rule(), s);
    const auto b = ApplyRule(rule(), s);
    EXPECT_EQ(a.sentence, b.sentence);
    EXPECT_EQ(a.script, b.script);
  }
}

INSTANTIATE_TEST_SUITE_P(
    AllRules, RulePropertyTest,
    ::testing::ValuesIn(std::vector<std::string>(kGermanRuleNames.begin(),
                                                 kGermanRuleNames.end())),
    [](const auto& info) { return info.param; });

INSTANTIATE_TEST_SUITE_P(
    FormRules, FormRulePropertyTest,
    ::testing::Values("schwa_elision", "comparative", "es_contraction"),
    [](const auto& info) { return info.param; });

std::vector<std::string> AllButNameOrder() {
  std::vector<std::string> out;
  for (std::string_view n : kGermanRuleNames) {
    if (n != "name_order") out.emplace_back(n);
  }
  return out;
}

INSTANTIATE_TEST_SUITE_P(
    NonInvolutions, FixedPointTest, ::testing::ValuesIn(AllButNameOrder()),
    [](const auto& info) { return info.param; });

TEST(ApplyAllPropertyTest, ComposedScriptEqualsStepwiseResult) {
  for (const Sentence& s : testing::MiniCorpus()) {
    const auto r = ApplyAll(GermanRegistry().All(), s);
    ASSERT_TRUE(r.applied) << s.sent_id;
    auto rebuilt = Reconstruct(s.tokens, r.script);
    ASSERT_EQ(rebuilt.size(), r.sentence.tokens.size()) << s.sent_id;
    for (std::size_t i = 0; i < rebuilt.size(); ++i) {
      rebuilt[i].slot = r.sentence.tokens[i].slot;
    }
    EXPECT_EQ(rebuilt, r.sentence.tokens) << s.sent_id;
    EXPECT_EQ(SpanTypes(r.sentence), SpanTypes(s)) << s.sent_id;
  }
}

}  // namespace
}  // namespace dialect
