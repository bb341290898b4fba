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

#ifndef DIALECT_DEPENDENCY_VIEW_H_
#define DIALECT_DEPENDENCY_VIEW_H_

#include <optional>
#include <string_view>
#include <vector>

#include "dialect/conllu.h"

namespace dialect {

// Read-only tree queries over one sentence. Positions are 0-based.
//
// A clause is headed by the root, or by a token attached with a clausal
// relation (advcl, ccomp, csubj, acl, parataxis, conj of a verb). Its tokens
// are the head's subtree minus the subtrees of nested clauses.
class DependencyView {
 public:
  explicit DependencyView(const Sentence& sentence);

  int size() const { return static_cast<int>(tokens_.size()); }
  const Token& token(int pos) const { return tokens_[pos]; }
  // Parent position, or nullopt for the root.
  std::optional<int> Parent(int pos) const;
  const std::vector<int>& Children(int pos) const { return children_[pos]; }
  std::optional<int> ChildWithRelation(int pos, std::string_view deprel) const;
  bool HasChildWithRelation(int pos, std::string_view deprel) const {
    return ChildWithRelation(pos, deprel).has_value();
  }
  // Sorted positions of pos and all its descendants.
  std::vector<int> Subtree(int pos) const;

  bool IsPunct(int pos) const { return tokens_[pos].upos == "PUNCT"; }
  bool IsVerbal(int pos) const;
  bool IsFinite(int pos) const;

  bool IsClauseHead(int pos) const;
  // Nearest clause head at or above pos.
  int ClauseHeadOf(int pos) const;
  // Clause heads attached by a subordinating relation (not root/conj/
  // parataxis).
  bool IsSubordinateClause(int head) const;
  std::vector<int> ClauseTokens(int head) const;

  // Last non-punctuation position in the clause, ignoring `skip`.
  std::optional<int> ClauseEnd(int head, std::optional<int> skip = {}) const;
  // First position of the clause-final verb group: the trailing run of verbal
  // tokens. In main clauses the finite verb in second position does not
  // belong to it.
  std::optional<int> RightBracketStart(int head,
                                       std::optional<int> skip = {}) const;
  // Finite verb of a clause: the head if finite, else a finite aux/cop child.
  std::optional<int> FiniteVerb(int head) const;

 private:
  const std::vector<Token>& tokens_;
  std::vector<std::vector<int>> children_;
};

// Relation without its subtype ("acl:relcl" -> "acl").
std::string_view BaseRelation(std::string_view deprel);

}  // namespace dialect

#endif  // DIALECT_DEPENDENCY_VIEW_H_
