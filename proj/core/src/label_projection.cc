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

#include "dialect/label_projection.h"

#include "fmt/format.h"

namespace dialect {

LabelProjection ProjectLabels(const EditScript& script,
                              std::span<const std::string> gold) {
  ValidateScript(script, static_cast<int>(gold.size()));
  const std::vector<SlotSpan> spans = ExtractSpans(gold);
  std::vector<int> span_of(gold.size(), -1);
  for (int s = 0; s < static_cast<int>(spans.size()); ++s) {
    for (int i = spans[s].start; i < spans[s].end; ++i) span_of[i] = s;
  }

  // Span id per output position; -2 marks an inserted token still to resolve.
  constexpr int kPending = -2;
  std::vector<int> member;
  for (const EditOp& op : script.ops) {
    if (op.kind == EditKind::kDelete) continue;
    member.push_back(op.src ? span_of[*op.src - 1] : kPending);
  }
  const int n = static_cast<int>(member.size());
  std::vector<int> resolved = member;
  for (int i = 0; i < n; ++i) {
    if (member[i] != kPending) continue;
    int left = i - 1;
    while (left >= 0 && member[left] == kPending) --left;
    int right = i + 1;
    while (right < n && member[right] == kPending) ++right;
    const bool inside = left >= 0 && right < n && member[left] >= 0 &&
                        member[left] == member[right];
    resolved[i] = inside ? member[left] : -1;
  }

  LabelProjection out;
  std::vector<int> first(spans.size(), -1);
  std::vector<int> last(spans.size(), -1);
  std::vector<int> count(spans.size(), 0);
  for (int i = 0; i < n; ++i) {
    const int s = resolved[i];
    if (s < 0) continue;
    if (first[s] < 0) first[s] = i;
    last[s] = i;
    ++count[s];
  }
  for (std::size_t s = 0; s < spans.size(); ++s) {
    if (count[s] == 0) {
      out.vetoed = true;
      out.veto_reason = fmt::format("span {}@{} removed", spans[s].slot_type,
                                    spans[s].start);
      return out;
    }
    if (last[s] - first[s] + 1 != count[s]) {
      out.vetoed = true;
      out.veto_reason = fmt::format("span {}@{} fragmented",
                                    spans[s].slot_type, spans[s].start);
      return out;
    }
  }
  out.labels.assign(n, "O");
  for (int i = 0; i < n; ++i) {
    const int s = resolved[i];
    if (s < 0) continue;
    out.labels[i] = (i == first[s] ? "B-" : "I-") + spans[s].slot_type;
  }
  return out;
}

}  // namespace dialect
