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

#ifndef DIALECT_RULE_ENGINE_H_
#define DIALECT_RULE_ENGINE_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dialect/conllu.h"
#include "dialect/edit_script.h"

namespace dialect {

// eWAVE feature areas used to group perturbations.
enum class Category {
  kPronouns,
  kNounPhrase,
  kTenseAspect,
  kModalVerbs,
  kVerbMorphology,
  kNegation,
  kAgreement,
  kRelativization,
  kComplementation,
  kAdverbialSubordination,
  kAdverbsPrepositions,
  kDiscourseWordOrder,
};

inline constexpr int kCategoryCount = 12;

std::string_view ToString(Category category);
std::optional<Category> ParseCategory(std::string_view name);

// What a rule's transform decided for one sentence.
class TransformOutcome {
 public:
  enum class Kind { kApply, kDecline, kVeto };

  static TransformOutcome Apply(EditScript script) {
    return TransformOutcome(Kind::kApply, std::move(script), {});
  }
  // The rule does not apply after all (e.g. unknown name gender).
  static TransformOutcome Decline(std::string reason = {}) {
    return TransformOutcome(Kind::kDecline, {}, std::move(reason));
  }
  // The rule applies but cannot produce a well-formed rewrite.
  static TransformOutcome Veto(std::string reason) {
    return TransformOutcome(Kind::kVeto, {}, std::move(reason));
  }

  Kind kind() const { return kind_; }
  const EditScript& script() const { return script_; }
  const std::string& reason() const { return reason_; }

 private:
  TransformOutcome(Kind kind, EditScript script, std::string reason)
      : kind_(kind), script_(std::move(script)), reason_(std::move(reason)) {}

  Kind kind_;
  EditScript script_;
  std::string reason_;
};

struct PerturbationRule {
  std::string name;
  Category category;
  std::function<bool(const Sentence&)> trigger;
  std::function<TransformOutcome(const Sentence&)> transform;
};

struct PerturbationResult {
  std::string rule_name;
  bool applied = false;
  // Number of rule applications refused (label fragmentation or rule veto).
  int vetoes = 0;
  std::string veto_reason;
  Sentence sentence;
  // Empty when nothing was applied.
  EditScript script;
  // Rules that fired, in application order.
  std::vector<std::string> applied_rules;
};

// Ordered, name-unique collection of rules. Order is the application order
// used by ApplyAll.
class RuleRegistry {
 public:
  // Throws Error on a duplicate name.
  void Register(PerturbationRule rule);
  // Throws Error for an unknown name.
  const PerturbationRule& Find(std::string_view name) const;
  bool Contains(std::string_view name) const;
  // Named rules in registry order; throws Error for unknown names.
  std::vector<const PerturbationRule*> Select(
      std::span<const std::string> names) const;
  std::vector<const PerturbationRule*> All() const;

  std::span<const PerturbationRule> rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }

 private:
  std::vector<PerturbationRule> rules_;
};

// Applies one rule. Sentences failing the trigger, declined or vetoed come
// back byte-identical with applied=false. A transform that yields an invalid
// edit script throws Error naming the rule.
PerturbationResult ApplyRule(const PerturbationRule& rule,
                             const Sentence& sentence);

// Left-to-right composition; `script` of the result is the composition of the
// per-step scripts relative to the input sentence.
PerturbationResult ApplyAll(std::span<const PerturbationRule* const> rules,
                            const Sentence& sentence);

// Name reported for the all-rules condition.
inline constexpr std::string_view kAllRulesVariant = "all";

// Perturbed corpora record per sentence whether the rule fired, in a
// "# perturbation = applied|unchanged|vetoed" comment.
enum class PerturbationStatus { kApplied, kUnchanged, kVetoed };

std::string_view ToString(PerturbationStatus status);
PerturbationStatus StatusOf(const PerturbationResult& result);
// Returns result.sentence with the status comment set, replacing any previous
// one. Unchanged sentences are returned as they are.
Sentence MarkedSentence(const PerturbationResult& result);
// Status stored in a sentence; kUnchanged when the comment is absent.
PerturbationStatus ReadPerturbationStatus(const Sentence& sentence);

}  // namespace dialect

#endif  // DIALECT_RULE_ENGINE_H_
