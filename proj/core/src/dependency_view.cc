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

#include "dialect/dependency_view.h"

#include <algorithm>

namespace dialect {

std::string_view BaseRelation(std::string_view deprel) {
  return deprel.substr(0, deprel.find(':'));
}

DependencyView::DependencyView(const Sentence& sentence)
    : tokens_(sentence.tokens), children_(sentence.tokens.size()) {
  for (int i = 0; i < size(); ++i) {
    if (auto p = Parent(i)) children_[*p].push_back(i);
  }
}

std::optional<int> DependencyView::Parent(int pos) const {
  const int h = tokens_[pos].head;
  if (h <= 0 || h > size() || h == pos + 1) return std::nullopt;
  return h - 1;
}

std::optional<int> DependencyView::ChildWithRelation(
    int pos, std::string_view deprel) const {
  for (int c : children_[pos]) {
    if (tokens_[c].deprel == deprel || BaseRelation(tokens_[c].deprel) == deprel) {
      return c;
    }
  }
  return std::nullopt;
}

std::vector<int> DependencyView::Subtree(int pos) const {
  std::vector<int> out;
  std::vector<bool> seen(size(), false);
  std::vector<int> stack = {pos};
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    if (seen[p]) continue;
    seen[p] = true;
    out.push_back(p);
    for (int c : children_[p]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool DependencyView::IsVerbal(int pos) const {
  return tokens_[pos].upos == "VERB" || tokens_[pos].upos == "AUX";
}

bool DependencyView::IsFinite(int pos) const {
  return IsVerbal(pos) && tokens_[pos].HasFeat("VerbForm", "Fin");
}

bool DependencyView::IsClauseHead(int pos) const {
  if (!Parent(pos)) return true;
  const std::string_view rel = BaseRelation(tokens_[pos].deprel);
  if (rel == "advcl" || rel == "ccomp" || rel == "csubj" || rel == "acl" ||
      rel == "parataxis") {
    return true;
  }
  return rel == "conj" && IsVerbal(pos);
}

int DependencyView::ClauseHeadOf(int pos) const {
  for (int steps = 0; steps <= size(); ++steps) {
    if (IsClauseHead(pos)) return pos;
    pos = *Parent(pos);
  }
  return pos;
}

bool DependencyView::IsSubordinateClause(int head) const {
  if (!Parent(head)) return false;
  const std::string_view rel = BaseRelation(tokens_[head].deprel);
  return rel == "advcl" || rel == "ccomp" || rel == "csubj" || rel == "acl";
}

std::vector<int> DependencyView::ClauseTokens(int head) const {
  std::vector<int> out;
  std::vector<int> stack = {head};
  std::vector<bool> seen(size(), false);
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    if (seen[p]) continue;
    seen[p] = true;
    out.push_back(p);
    for (int c : children_[p]) {
      if (!IsClauseHead(c)) stack.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> DependencyView::ClauseEnd(int head,
                                             std::optional<int> skip) const {
  std::vector<int> toks = ClauseTokens(head);
  for (auto it = toks.rbegin(); it != toks.rend(); ++it) {
    if (*it == skip || IsPunct(*it)) continue;
    return *it;
  }
  return std::nullopt;
}

std::optional<int> DependencyView::RightBracketStart(
    int head, std::optional<int> skip) const {
  std::vector<int> toks = ClauseTokens(head);
  const bool subordinate = IsSubordinateClause(head);
  std::optional<int> start;
  for (auto it = toks.rbegin(); it != toks.rend(); ++it) {
    const int p = *it;
    if (p == skip) continue;
    if (IsPunct(p) && !start) continue;
    if (!IsVerbal(p)) break;
    if (!subordinate && IsFinite(p)) break;
    start = p;
  }
  return start;
}

std::optional<int> DependencyView::FiniteVerb(int head) const {
  if (IsFinite(head)) return head;
  for (int c : children_[head]) {
    const std::string_view rel = BaseRelation(tokens_[c].deprel);
    if ((rel == "aux" || rel == "cop") && IsFinite(c)) return c;
  }
  return std::nullopt;
}

}  // namespace dialect
