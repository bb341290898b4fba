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

#ifndef DIALECT_RULES_DE_H_
#define DIALECT_RULES_DE_H_

#include <array>
#include <string_view>

#include "dialect/morphology.h"
#include "dialect/rule_engine.h"

namespace dialect {

// Stable public rule identifiers, in application order: word-order rules,
// then insertion rules, then form-level rules.
inline constexpr std::array<std::string_view, 14> kGermanRuleNames = {
    "word_order",      "verb_clusters",      "tun_imperative",
    "name_order",      "article_name",       "progressive",
    "negative_concord", "pronominal_adverbs", "relative_pron",
    "location",        "direction",          "comparative",
    "schwa_elision",   "es_contraction",
};

// Each factory returns one rule. Rules that consult first names keep a
// reference to `names`, which must outlive the rule.
PerturbationRule WordOrderRule();
PerturbationRule VerbClustersRule();
PerturbationRule TunImperativeRule();
PerturbationRule NameOrderRule(const NameLexicon& names);
PerturbationRule ArticleNameRule(const NameLexicon& names);
PerturbationRule ProgressiveRule();
PerturbationRule NegativeConcordRule();
PerturbationRule PronominalAdverbsRule();
PerturbationRule RelativePronRule();
PerturbationRule LocationRule();
PerturbationRule DirectionRule(const NameLexicon& names);
PerturbationRule ComparativeRule();
PerturbationRule SchwaElisionRule();
PerturbationRule EsContractionRule();

RuleRegistry MakeGermanRegistry(const NameLexicon& names);
// Registry over the bundled name lexicon.
const RuleRegistry& GermanRegistry();

}  // namespace dialect

#endif  // DIALECT_RULES_DE_H_
