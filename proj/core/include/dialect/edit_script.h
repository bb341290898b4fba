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

#ifndef DIALECT_EDIT_SCRIPT_H_
#define DIALECT_EDIT_SCRIPT_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dialect/conllu.h"

namespace dialect {

enum class EditKind { kKeep, kDelete, kInsert, kReplace };

std::string_view ToString(EditKind kind);

// One step of an edit script. `src` is a 1-based index into the script's
// input sentence. Insert/Replace payloads carry their head already expressed
// in output indices; Keep tokens have their heads remapped on reconstruction.
struct EditOp {
  EditKind kind = EditKind::kKeep;
  std::optional<int> src;
  std::optional<Token> token;

  static EditOp Keep(int src) { return {EditKind::kKeep, src, std::nullopt}; }
  static EditOp Delete(int src) {
    return {EditKind::kDelete, src, std::nullopt};
  }
  static EditOp Insert(Token token) {
    return {EditKind::kInsert, std::nullopt, std::move(token)};
  }
  static EditOp Replace(int src, Token token) {
    return {EditKind::kReplace, src, std::move(token)};
  }

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

// Output order is op order with deletes skipped.
struct EditScript {
  std::vector<EditOp> ops;

  bool empty() const { return ops.empty(); }
  int OutputLength() const;
  friend bool operator==(const EditScript&, const EditScript&) = default;
};

EditScript IdentityScript(int length);

// Throws Error unless every source index 1..length appears in exactly one
// Keep/Delete/Replace op and payloads are present where required.
void ValidateScript(const EditScript& script, int length);

// Output tokens: renumbered, heads remapped, provenance carried from the
// source token (or Inserted). Slot labels are copied from the source/payload;
// use ProjectLabels for gold projection.
std::vector<Token> Reconstruct(std::span<const Token> source,
                               const EditScript& script);

// Script equivalent to applying `first` to `source` and then `second` to the
// result.
EditScript Compose(std::span<const Token> source, const EditScript& first,
                   const EditScript& second);

// Fixes space_after where a token gets a new right neighbour: it keeps a space
// unless the new neighbour was attached without a space in the source.
// Affected Keep ops become Replace ops.
EditScript NormalizeSpacing(std::span<const Token> source,
                            const EditScript& script);

// Convenience for rule authors. Positions are 0-based source positions; the
// head of an inserted payload is a 1-based source index (0 = root). Build()
// turns everything into a valid EditScript.
class EditBuilder {
 public:
  explicit EditBuilder(std::span<const Token> source);

  void Replace(int pos, Token payload);
  void ReplaceForm(int pos, std::string form);
  void Delete(int pos);
  void InsertBefore(int pos, Token payload);
  void InsertAfter(int pos, Token payload);
  // Moves source token `pos` directly before/after source token `anchor`.
  void MoveBefore(int pos, int anchor);
  void MoveAfter(int pos, int anchor);
  void Swap(int a, int b);

  EditScript Build() const;

 private:
  struct Slot {
    int pos = -1;  // -1 for inserted
    bool deleted = false;
    std::optional<Token> payload;
  };
  std::vector<Slot>::iterator Find(int pos);

  std::span<const Token> source_;
  std::vector<Slot> order_;
};

// A token suitable as an insertion payload.
Token MakeToken(std::string form, std::string lemma, std::string upos,
                int head_src, std::string deprel);

}  // namespace dialect

#endif  // DIALECT_EDIT_SCRIPT_H_
