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

#include "text_util.h"

#include <array>
#include <utility>

namespace dialect::internal {
namespace {

// Two-byte UTF-8 lower/upper pairs for the German umlauts.
constexpr std::array<std::pair<std::string_view, std::string_view>, 3>
    kUmlauts = {{{"ä", "Ä"}, {"ö", "Ö"}, {"ü", "Ü"}}};

}  // namespace

std::string UpperFirst(std::string_view s) {
  if (s.empty()) return {};
  for (const auto& [lower, upper] : kUmlauts) {
    if (s.starts_with(lower)) {
      return std::string(upper) + std::string(s.substr(lower.size()));
    }
  }
  std::string out(s);
  if (out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 32);
  return out;
}

std::string LowerFirst(std::string_view s) {
  if (s.empty()) return {};
  for (const auto& [lower, upper] : kUmlauts) {
    if (s.starts_with(upper)) {
      return std::string(lower) + std::string(s.substr(upper.size()));
    }
  }
  std::string out(s);
  if (out[0] >= 'A' && out[0] <= 'Z') out[0] = static_cast<char>(out[0] + 32);
  return out;
}

bool StartsUpper(std::string_view s) {
  if (s.empty()) return false;
  for (const auto& [lower, upper] : kUmlauts) {
    if (s.starts_with(upper)) return true;
  }
  return s[0] >= 'A' && s[0] <= 'Z';
}

std::string ToLower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    bool replaced = false;
    for (const auto& [lower, upper] : kUmlauts) {
      if (s.substr(i).starts_with(upper)) {
        out += lower;
        i += upper.size();
        replaced = true;
        break;
      }
    }
    if (replaced) continue;
    char c = s[i++];
    out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
  }
  return out;
}

}  // namespace dialect::internal
