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

#ifndef DIALECT_LABEL_PROJECTION_H_
#define DIALECT_LABEL_PROJECTION_H_

#include <span>
#include <string>
#include <vector>

#include "dialect/edit_script.h"

namespace dialect {

// Gold BIO labels carried through an edit script.
//
// Fixed policy, identical for every corpus:
//   - kept, replaced and moved tokens keep the span they belonged to;
//   - an inserted token joins a span only when its nearest surviving
//     neighbours on both sides belong to that same span, otherwise it is O;
//   - B-/I- prefixes are re-derived from span membership in output order;
//   - a span whose tokens end up non-adjacent, or that loses all of its
//     tokens, vetoes the projection.
struct LabelProjection {
  std::vector<std::string> labels;
  bool vetoed = false;
  std::string veto_reason;
};

LabelProjection ProjectLabels(const EditScript& script,
                              std::span<const std::string> gold);

// Intent labels never change under perturbation.
inline const std::string& ProjectIntent(const EditScript& /*script*/,
                                        const std::string& intent) {
  return intent;
}

}  // namespace dialect

#endif  // DIALECT_LABEL_PROJECTION_H_
