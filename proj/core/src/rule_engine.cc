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

#include "dialect/rule_engine.h"

#include <algorithm>
#include <array>

#include "dialect/label_projection.h"
#include "fmt/format.h"

namespace dialect {
namespace {

constexpr std::array<std::string_view, kCategoryCount> kCategoryNames = {
    "Pronouns",
    "NounPhrase",
    "TenseAspect",
    "ModalVerbs",
    "VerbMorphology",
    "Negation",
    "Agreement",
    "Relativization",
    "Complementation",
    "AdverbialSubordination",
    "AdverbsPrepositions",
    "DiscourseWordOrder",
};

PerturbationResult Unchanged(std::string_view rule_name,
                             const Sentence& sentence) {
  PerturbationResult r;
  r.rule_name = std::string(rule_name);
  r.sentence = sentence;
  return r;
}

}  // namespace

std::string_view ToString(Category category) {
  return kCategoryNames[static_cast<std::size_t>(category)];
}

std::optional<Category> ParseCategory(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  }
  return std::nullopt;
}

void RuleRegistry::Register(PerturbationRule rule) {
  if (Contains(rule.name)) {
    throw Error(fmt::format("duplicate rule name '{}'", rule.name));
  }
  rules_.push_back(std::move(rule));
}

const PerturbationRule& RuleRegistry::Find(std::string_view name) const {
  for (const auto& r : rules_) {
    if (r.name == name) return r;
  }
  throw Error(fmt::format("unknown rule '{}'", name));
}

bool RuleRegistry::Contains(std::string_view name) const {
  return std::any_of(rules_.begin(), rules_.end(),
                     [name](const PerturbationRule& r) { return r.name == name; });
}

std::vector<const PerturbationRule*> RuleRegistry::Select(
    std::span<const std::string> names) const {
  for (const auto& n : names) Find(n);
  std::vector<const PerturbationRule*> out;
  for (const auto& r : rules_) {
    if (std::find(names.begin(), names.end(), r.name) != names.end()) {
      out.push_back(&r);
    }
  }
  return out;
}

std::vector<const PerturbationRule*> RuleRegistry::All() const {
  std::vector<const PerturbationRule*> out;
  for (const auto& r : rules_) out.push_back(&r);
  return out;
}

PerturbationResult ApplyRule(const PerturbationRule& rule,
                             const Sentence& sentence) {
  if (!rule.trigger(sentence)) return Unchanged(rule.name, sentence);

  TransformOutcome outcome = rule.transform(sentence);
  if (outcome.kind() == TransformOutcome::Kind::kDecline) {
    return Unchanged(rule.name, sentence);
  }
  if (outcome.kind() == TransformOutcome::Kind::kVeto) {
    PerturbationResult r = Unchanged(rule.name, sentence);
    r.vetoes = 1;
    r.veto_reason = outcome.reason();
    return r;
  }

  const std::span<const Token> source(sentence.tokens);
  EditScript script;
  std::vector<Token> tokens;
  try {
    script = NormalizeSpacing(source, outcome.script());
    tokens = Reconstruct(source, script);
  } catch (const Error& e) {
    throw Error(fmt::format("rule {} produced an invalid edit script on {}: {}",
                            rule.name, sentence.sent_id, e.what()));
  }

  auto same_surface = [&] {
    if (tokens.size() != sentence.tokens.size()) return false;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].form != sentence.tokens[i].form ||
          tokens[i].space_after != sentence.tokens[i].space_after ||
          tokens[i].provenance != sentence.tokens[i].provenance) {
        return false;
      }
    }
    return true;
  };
  if (same_surface()) return Unchanged(rule.name, sentence);

  LabelProjection projection = ProjectLabels(script, SlotLabels(sentence));
  if (projection.vetoed) {
    PerturbationResult r = Unchanged(rule.name, sentence);
    r.vetoes = 1;
    r.veto_reason = projection.veto_reason;
    return r;
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    tokens[i].slot = projection.labels[i];
  }

  PerturbationResult r;
  r.rule_name = rule.name;
  r.applied = true;
  r.sentence = sentence;
  r.sentence.tokens = std::move(tokens);
  r.sentence.text = Detokenize(r.sentence.tokens);
  r.sentence.intent = ProjectIntent(script, sentence.intent);
  try {
    ValidateSentence(r.sentence);
  } catch (const Error& e) {
    throw Error(fmt::format("rule {} produced an invalid sentence: {}",
                            rule.name, e.what()));
  }
  r.script = std::move(script);
  r.applied_rules.push_back(rule.name);
  return r;
}

PerturbationResult ApplyAll(std::span<const PerturbationRule* const> rules,
                            const Sentence& sentence) {
  PerturbationResult total = Unchanged(kAllRulesVariant, sentence);
  std::optional<EditScript> composed;
  for (const PerturbationRule* rule : rules) {
    PerturbationResult step = ApplyRule(*rule, total.sentence);
    total.vetoes += step.vetoes;
    if (step.vetoes > 0 && total.veto_reason.empty()) {
      total.veto_reason = fmt::format("{}: {}", rule->name, step.veto_reason);
    }
    if (!step.applied) continue;
    composed = composed ? Compose(sentence.tokens, *composed, step.script)
                        : step.script;
    total.sentence = std::move(step.sentence);
    total.applied = true;
    total.applied_rules.push_back(rule->name);
  }
  if (composed) total.script = std::move(*composed);
  return total;
}

namespace {
constexpr std::string_view kStatusPrefix = "perturbation = ";
}  // namespace

std::string_view ToString(PerturbationStatus status) {
  switch (status) {
    case PerturbationStatus::kApplied:
      return "applied";
    case PerturbationStatus::kUnchanged:
      return "unchanged";
    case PerturbationStatus::kVetoed:
      return "vetoed";
  }
  return "unchanged";
}

PerturbationStatus StatusOf(const PerturbationResult& result) {
  if (result.applied) return PerturbationStatus::kApplied;
  return result.vetoes > 0 ? PerturbationStatus::kVetoed
                           : PerturbationStatus::kUnchanged;
}

Sentence MarkedSentence(const PerturbationResult& result) {
  Sentence s = result.sentence;
  // Untouched sentences stay byte-identical to the input.
  if (StatusOf(result) == PerturbationStatus::kUnchanged) return s;
  std::erase_if(s.extra_comments, [](const std::string& c) {
    return c.starts_with(kStatusPrefix);
  });
  s.extra_comments.push_back(
      fmt::format("{}{}", kStatusPrefix, ToString(StatusOf(result))));
  return s;
}

PerturbationStatus ReadPerturbationStatus(const Sentence& sentence) {
  for (const std::string& c : sentence.extra_comments) {
    if (!c.starts_with(kStatusPrefix)) continue;
    const std::string_view v = std::string_view(c).substr(kStatusPrefix.size());
    if (v == "applied") return PerturbationStatus::kApplied;
    if (v == "vetoed") return PerturbationStatus::kVetoed;
    if (v == "unchanged") return PerturbationStatus::kUnchanged;
    throw Error(fmt::format("sentence {}: unknown perturbation status '{}'",
                            sentence.sent_id, v));
  }
  return PerturbationStatus::kUnchanged;
}

}  // namespace dialect
