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

#include "dialect/edit_script.h"

#include <algorithm>

#include "fmt/format.h"

namespace dialect {
namespace {

// Maps 1-based source indices to 1-based output indices (0 = dropped) and
// resolves heads of dropped tokens by climbing to the nearest kept ancestor.
class HeadMap {
 public:
  HeadMap(std::span<const Token> source, const EditScript& script)
      : source_(source), out_(source.size() + 1, 0) {
    int k = 0;
    for (const EditOp& op : script.ops) {
      if (op.kind == EditKind::kDelete) continue;
      ++k;
      if (op.src) out_[*op.src] = k;
    }
  }

  int Remap(int head) const {
    // Bounded climb: a malformed tree must not loop forever.
    for (std::size_t steps = 0; head != 0 && steps <= source_.size(); ++steps) {
      if (head < 0 || head > static_cast<int>(source_.size())) return 0;
      if (out_[head] != 0) return out_[head];
      head = source_[head - 1].head;
    }
    return 0;
  }

 private:
  std::span<const Token> source_;
  std::vector<int> out_;
};

}  // namespace

std::string_view ToString(EditKind kind) {
  switch (kind) {
    case EditKind::kKeep: return "keep";
    case EditKind::kDelete: return "delete";
    case EditKind::kInsert: return "insert";
    case EditKind::kReplace: break;
  }
  return "replace";
}

int EditScript::OutputLength() const {
  return static_cast<int>(std::count_if(ops.begin(), ops.end(), [](const EditOp& op) {
    return op.kind != EditKind::kDelete;
  }));
}

EditScript IdentityScript(int length) {
  EditScript script;
  script.ops.reserve(length);
  for (int i = 1; i <= length; ++i) script.ops.push_back(EditOp::Keep(i));
  return script;
}

void ValidateScript(const EditScript& script, int length) {
  std::vector<int> seen(length + 1, 0);
  for (const EditOp& op : script.ops) {
    const bool needs_src = op.kind != EditKind::kInsert;
    const bool needs_token =
        op.kind == EditKind::kInsert || op.kind == EditKind::kReplace;
    if (needs_src != op.src.has_value()) {
      throw Error(fmt::format("{} op with{} source index", ToString(op.kind),
                              op.src ? "" : "out"));
    }
    if (needs_token != op.token.has_value()) {
      throw Error(fmt::format("{} op with{} payload", ToString(op.kind),
                              op.token ? "" : "out"));
    }
    if (op.kind == EditKind::kInsert && !op.token->provenance.inserted()) {
      throw Error("insert payload must have inserted provenance");
    }
    if (op.src) {
      if (*op.src < 1 || *op.src > length) {
        throw Error(fmt::format("source index {} out of range 1..{}", *op.src,
                                length));
      }
      if (++seen[*op.src] > 1) {
        throw Error(fmt::format("source index {} used twice", *op.src));
      }
    }
  }
  for (int i = 1; i <= length; ++i) {
    if (seen[i] == 0) {
      throw Error(fmt::format("source index {} not accounted for", i));
    }
  }
}

std::vector<Token> Reconstruct(std::span<const Token> source,
                               const EditScript& script) {
  ValidateScript(script, static_cast<int>(source.size()));
  HeadMap heads(source, script);
  const int out_len = script.OutputLength();
  std::vector<Token> out;
  out.reserve(out_len);
  for (const EditOp& op : script.ops) {
    Token t;
    switch (op.kind) {
      case EditKind::kDelete:
        continue;
      case EditKind::kKeep:
        t = source[*op.src - 1];
        t.head = heads.Remap(t.head);
        break;
      case EditKind::kReplace:
        t = *op.token;
        t.provenance = source[*op.src - 1].provenance;
        break;
      case EditKind::kInsert:
        t = *op.token;
        t.provenance = Provenance::Inserted();
        break;
    }
    t.index = static_cast<int>(out.size()) + 1;
    if (t.head < 0 || t.head > out_len || t.head == t.index) t.head = 0;
    out.push_back(std::move(t));
  }
  return out;
}

EditScript Compose(std::span<const Token> source, const EditScript& first,
                   const EditScript& second) {
  std::vector<Token> mid = Reconstruct(source, first);
  ValidateScript(second, static_cast<int>(mid.size()));
  HeadMap second_heads(mid, second);

  std::vector<const EditOp*> mid_ops;
  for (const EditOp& op : first.ops) {
    if (op.kind != EditKind::kDelete) mid_ops.push_back(&op);
  }

  EditScript out;
  for (const EditOp& op : second.ops) {
    switch (op.kind) {
      case EditKind::kKeep: {
        const EditOp& base = *mid_ops[*op.src - 1];
        if (base.kind == EditKind::kKeep) {
          out.ops.push_back(base);
        } else {
          EditOp carried = base;
          carried.token->head = second_heads.Remap(carried.token->head);
          out.ops.push_back(std::move(carried));
        }
        break;
      }
      case EditKind::kReplace: {
        const EditOp& base = *mid_ops[*op.src - 1];
        out.ops.push_back(base.kind == EditKind::kInsert
                              ? EditOp::Insert(*op.token)
                              : EditOp::Replace(*base.src, *op.token));
        if (base.kind == EditKind::kInsert) {
          out.ops.back().token->provenance = Provenance::Inserted();
        }
        break;
      }
      case EditKind::kInsert:
        out.ops.push_back(op);
        break;
      case EditKind::kDelete: {
        const EditOp& base = *mid_ops[*op.src - 1];
        if (base.src) out.ops.push_back(EditOp::Delete(*base.src));
        break;
      }
    }
  }
  for (const EditOp& op : first.ops) {
    if (op.kind == EditKind::kDelete) out.ops.push_back(op);
  }
  return out;
}

EditScript NormalizeSpacing(std::span<const Token> source,
                            const EditScript& script) {
  ValidateScript(script, static_cast<int>(source.size()));
  HeadMap heads(source, script);
  EditScript out = script;
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < out.ops.size(); ++i) {
    if (out.ops[i].kind != EditKind::kDelete) live.push_back(i);
  }
  for (std::size_t k = 0; k + 1 < live.size(); ++k) {
    EditOp& left = out.ops[live[k]];
    const EditOp& right = out.ops[live[k + 1]];
    const bool neighbours_kept = left.kind != EditKind::kInsert &&
                                 right.kind != EditKind::kInsert &&
                                 *right.src == *left.src + 1;
    if (neighbours_kept) continue;
    const bool glued = right.kind != EditKind::kInsert && *right.src > 1 &&
                       !source[*right.src - 2].space_after;
    const bool want = !glued;
    const bool current = left.kind == EditKind::kKeep
                             ? source[*left.src - 1].space_after
                             : left.token->space_after;
    if (current == want) continue;
    if (left.kind == EditKind::kKeep) {
      Token t = source[*left.src - 1];
      t.head = heads.Remap(t.head);
      left = EditOp::Replace(*left.src, std::move(t));
    }
    left.token->space_after = want;
  }
  return out;
}

EditBuilder::EditBuilder(std::span<const Token> source) : source_(source) {
  order_.reserve(source.size());
  for (int i = 0; i < static_cast<int>(source.size()); ++i) {
    order_.push_back(Slot{i, false, std::nullopt});
  }
}

std::vector<EditBuilder::Slot>::iterator EditBuilder::Find(int pos) {
  auto it = std::find_if(order_.begin(), order_.end(),
                         [pos](const Slot& s) { return s.pos == pos; });
  if (it == order_.end()) {
    throw Error(fmt::format("edit builder: no source position {}", pos));
  }
  return it;
}

void EditBuilder::Replace(int pos, Token payload) {
  Find(pos)->payload = std::move(payload);
}

void EditBuilder::ReplaceForm(int pos, std::string form) {
  auto it = Find(pos);
  Token t = it->payload ? *it->payload : source_[pos];
  t.form = std::move(form);
  it->payload = std::move(t);
}

void EditBuilder::Delete(int pos) { Find(pos)->deleted = true; }

void EditBuilder::InsertBefore(int pos, Token payload) {
  payload.provenance = Provenance::Inserted();
  order_.insert(Find(pos), Slot{-1, false, std::move(payload)});
}

void EditBuilder::InsertAfter(int pos, Token payload) {
  payload.provenance = Provenance::Inserted();
  order_.insert(std::next(Find(pos)), Slot{-1, false, std::move(payload)});
}

void EditBuilder::MoveBefore(int pos, int anchor) {
  if (pos == anchor) return;
  auto it = Find(pos);
  Slot moved = std::move(*it);
  order_.erase(it);
  order_.insert(Find(anchor), std::move(moved));
}

void EditBuilder::MoveAfter(int pos, int anchor) {
  if (pos == anchor) return;
  auto it = Find(pos);
  Slot moved = std::move(*it);
  order_.erase(it);
  order_.insert(std::next(Find(anchor)), std::move(moved));
}

void EditBuilder::Swap(int a, int b) { std::iter_swap(Find(a), Find(b)); }

EditScript EditBuilder::Build() const {
  EditScript script;
  for (const Slot& s : order_) {
    if (s.pos < 0) {
      script.ops.push_back(EditOp::Insert(*s.payload));
    } else if (s.deleted) {
      script.ops.push_back(EditOp::Delete(s.pos + 1));
    } else if (s.payload) {
      script.ops.push_back(EditOp::Replace(s.pos + 1, *s.payload));
    } else {
      script.ops.push_back(EditOp::Keep(s.pos + 1));
    }
  }
  // Payload heads arrive as source indices; express them in output indices.
  HeadMap heads(source_, script);
  for (EditOp& op : script.ops) {
    if (!op.token) continue;
    int src_head = op.kind == EditKind::kReplace ? source_[*op.src - 1].head
                                                  : op.token->head;
    op.token->head = heads.Remap(src_head);
  }
  return script;
}

Token MakeToken(std::string form, std::string lemma, std::string upos,
                int head_src, std::string deprel) {
  Token t;
  t.form = std::move(form);
  t.lemma = std::move(lemma);
  t.upos = std::move(upos);
  t.head = head_src;
  t.deprel = std::move(deprel);
  t.provenance = Provenance::Inserted();
  return t;
}

}  // namespace dialect
