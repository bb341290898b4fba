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

#include "dialect/conllu.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <utility>

#include "fmt/format.h"
#include "text_util.h"

namespace dialect {

using internal::Split;

ParseError::ParseError(std::string sent_id, int line,
                       const std::string& message)
    : Error(fmt::format("{} (sent_id {}, line {})", message,
                        sent_id.empty() ? "?" : sent_id, line)),
      sent_id_(std::move(sent_id)),
      line_(line) {}

std::string_view Token::Feat(std::string_view key) const {
  auto it = feats.find(std::string(key));
  return it == feats.end() ? std::string_view() : std::string_view(it->second);
}

namespace {

constexpr int kColumns = 10;

std::optional<int> ParseInt(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

struct PendingSentence {
  Sentence sentence;
  bool has_sent_id = false;
  bool has_text = false;
  bool has_intent = false;
  int first_line = 0;
  std::vector<int> token_lines;
};

class Parser {
 public:
  std::vector<Sentence> Run(std::istream& in) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (internal::Trim(line).empty()) {
        Flush(line_no);
        continue;
      }
      if (!open_) {
        pending_ = PendingSentence();
        pending_.first_line = line_no;
        open_ = true;
      }
      if (line[0] == '#') {
        Comment(line, line_no);
      } else {
        TokenLine(line, line_no);
      }
    }
    Flush(line_no + 1);
    return std::move(out_);
  }

 private:
  void Comment(std::string_view line, int line_no) {
    std::string_view body = internal::Trim(line.substr(1));
    auto take = [&](std::string_view key) -> std::optional<std::string> {
      if (!body.starts_with(key)) return std::nullopt;
      std::string_view rest = body.substr(key.size());
      rest = internal::Trim(rest);
      if (!rest.starts_with('=')) return std::nullopt;
      return std::string(internal::Trim(rest.substr(1)));
    };
    Sentence& s = pending_.sentence;
    if (auto v = take("sent_id")) {
      s.sent_id = *v;
      pending_.has_sent_id = true;
    } else if (auto v = take("text")) {
      s.text = *v;
      pending_.has_text = true;
    } else if (auto v = take("intent")) {
      if (v->empty()) throw ParseError(s.sent_id, line_no, "empty intent");
      s.intent = *v;
      pending_.has_intent = true;
    } else if (auto v = take("dataset")) {
      s.dataset = *v;
    } else {
      s.extra_comments.emplace_back(body);
    }
  }

  void TokenLine(std::string_view line, int line_no) {
    const std::string& sid = pending_.sentence.sent_id;
    auto cols = Split(line, '\t');
    if (cols.size() != kColumns) {
      throw ParseError(sid, line_no,
                       fmt::format("expected {} columns, found {}", kColumns,
                                   cols.size()));
    }
    if (cols[0].find('-') != std::string_view::npos) {
      throw ParseError(sid, line_no, "multiword token ranges are not supported");
    }
    if (cols[0].find('.') != std::string_view::npos) {
      throw ParseError(sid, line_no, "empty nodes are not supported");
    }
    std::vector<Token>& tokens = pending_.sentence.tokens;
    Token tok;
    auto id = ParseInt(cols[0]);
    if (!id || *id != static_cast<int>(tokens.size()) + 1) {
      throw ParseError(sid, line_no, fmt::format("bad token id '{}'", cols[0]));
    }
    tok.index = *id;
    tok.provenance = Provenance::Source(tok.index);
    tok.form = cols[1];
    tok.lemma = cols[2];
    tok.upos = cols[3];
    if (cols[4] != "_") tok.xpos = std::string(cols[4]);
    if (cols[5] != "_") {
      for (std::string_view kv : Split(cols[5], '|')) {
        auto eq = kv.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == kv.size()) {
          throw ParseError(sid, line_no, fmt::format("bad feature '{}'", kv));
        }
        tok.feats.emplace(kv.substr(0, eq), kv.substr(eq + 1));
      }
    }
    auto head = ParseInt(cols[6]);
    if (!head || *head < 0) {
      throw ParseError(sid, line_no, fmt::format("bad head '{}'", cols[6]));
    }
    tok.head = *head;
    tok.deprel = cols[7];
    tok.deps = cols[8];
    if (cols[9] != "_") {
      for (std::string_view entry : Split(cols[9], '|')) {
        if (entry == "SpaceAfter=No") {
          tok.space_after = false;
        } else if (entry.starts_with("Slot=")) {
          tok.slot = entry.substr(5);
          if (!IsValidSlotLabel(tok.slot)) {
            throw ParseError(sid, line_no,
                             fmt::format("bad slot label '{}'", tok.slot));
          }
        } else if (entry.starts_with("Provenance=")) {
          std::string_view v = entry.substr(11);
          if (v == "INS") {
            tok.provenance = Provenance::Inserted();
          } else if (auto src = ParseInt(v); src && *src > 0) {
            tok.provenance = Provenance::Source(*src);
          } else {
            throw ParseError(sid, line_no,
                             fmt::format("bad provenance '{}'", v));
          }
        } else {
          tok.misc_extra.emplace_back(entry);
        }
      }
    }
    tokens.push_back(std::move(tok));
    pending_.token_lines.push_back(line_no);
  }

  void Flush(int line_no) {
    if (!open_) return;
    open_ = false;
    Sentence& s = pending_.sentence;
    if (!pending_.has_sent_id) {
      throw ParseError("", pending_.first_line, "missing sent_id");
    }
    if (!pending_.has_intent) {
      throw ParseError(s.sent_id, pending_.first_line, "missing intent");
    }
    if (!pending_.has_text) {
      throw ParseError(s.sent_id, pending_.first_line, "missing text");
    }
    if (s.tokens.empty()) {
      throw ParseError(s.sent_id, line_no, "sentence has no tokens");
    }
    const int n = static_cast<int>(s.tokens.size());
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      const Token& t = s.tokens[i];
      if (t.head > n || t.head == t.index) {
        throw ParseError(s.sent_id, pending_.token_lines[i],
                         fmt::format("ill-formed head index {}", t.head));
      }
    }
    std::vector<std::string> labels = SlotLabels(s);
    std::vector<std::string> repaired = NormalizeBio(labels);
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      s.tokens[i].slot = std::move(repaired[i]);
    }
    if (Detokenize(s.tokens) != s.text) {
      throw ParseError(s.sent_id, pending_.first_line,
                       "text comment does not match tokens");
    }
    out_.push_back(std::move(s));
  }

  bool open_ = false;
  PendingSentence pending_;
  std::vector<Sentence> out_;
};

std::string FormatMisc(const Token& t) {
  std::vector<std::string> parts;
  if (!t.space_after) parts.emplace_back("SpaceAfter=No");
  if (t.slot != "O") parts.push_back("Slot=" + t.slot);
  if (t.provenance.inserted()) {
    parts.emplace_back("Provenance=INS");
  } else if (t.provenance.source() != t.index) {
    parts.push_back(fmt::format("Provenance={}", t.provenance.source()));
  }
  for (const auto& e : t.misc_extra) parts.push_back(e);
  return parts.empty() ? "_" : internal::Join(parts, "|");
}

std::string FormatFeats(const Token& t) {
  if (t.feats.empty()) return "_";
  std::vector<std::string> parts;
  for (const auto& [k, v] : t.feats) parts.push_back(k + "=" + v);
  return internal::Join(parts, "|");
}

}  // namespace

std::vector<Sentence> ParseConllu(std::istream& in) {
  return Parser().Run(in);
}

std::vector<Sentence> ParseConlluString(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseConllu(in);
}

std::vector<Sentence> ReadConlluFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open {}", path.string()));
  return ParseConllu(in);
}

std::string WriteConllu(std::span<const Sentence> sentences) {
  std::string out;
  for (const Sentence& s : sentences) {
    out += fmt::format("# sent_id = {}\n", s.sent_id);
    if (!s.dataset.empty()) out += fmt::format("# dataset = {}\n", s.dataset);
    out += fmt::format("# intent = {}\n", s.intent);
    out += fmt::format("# text = {}\n", s.text);
    for (const auto& c : s.extra_comments) out += fmt::format("# {}\n", c);
    for (const Token& t : s.tokens) {
      out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n", t.index,
                         t.form, t.lemma, t.upos, t.xpos.value_or("_"),
                         FormatFeats(t), t.head, t.deprel, t.deps,
                         FormatMisc(t));
    }
    out += "\n";
  }
  return out;
}

void WriteConlluFile(const std::filesystem::path& path,
                     std::span<const Sentence> sentences) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  out << WriteConllu(sentences);
  if (!out) throw Error(fmt::format("write failed: {}", path.string()));
}

bool IsValidSlotLabel(std::string_view label) {
  if (label == "O") return true;
  return (label.starts_with("B-") || label.starts_with("I-")) &&
         label.size() > 2;
}

std::vector<SlotSpan> ExtractSpans(std::span<const std::string> labels) {
  std::vector<SlotSpan> spans;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    std::string_view label = labels[i];
    if (label == "O" || !IsValidSlotLabel(label)) continue;
    std::string_view type = label.substr(2);
    bool continues = label[0] == 'I' && !spans.empty() &&
                     spans.back().end == i && spans.back().slot_type == type;
    if (continues) {
      spans.back().end = i + 1;
    } else {
      spans.push_back(SlotSpan{std::string(type), i, i + 1});
    }
  }
  return spans;
}

std::vector<std::string> SpansToBio(std::span<const SlotSpan> spans,
                                    int length) {
  std::vector<std::string> labels(length, "O");
  int prev_end = 0;
  for (const SlotSpan& s : spans) {
    if (s.slot_type.empty() || s.start >= s.end) {
      throw Error(fmt::format("empty span ({},{},{})", s.slot_type, s.start,
                              s.end));
    }
    if (s.start < prev_end) {
      throw Error(fmt::format("overlapping or unsorted span ({},{},{})",
                              s.slot_type, s.start, s.end));
    }
    if (s.end > length) {
      throw Error(fmt::format("span ({},{},{}) exceeds length {}", s.slot_type,
                              s.start, s.end, length));
    }
    labels[s.start] = "B-" + s.slot_type;
    for (int i = s.start + 1; i < s.end; ++i) labels[i] = "I-" + s.slot_type;
    prev_end = s.end;
  }
  return labels;
}

std::vector<std::string> NormalizeBio(std::span<const std::string> labels) {
  return SpansToBio(ExtractSpans(labels), static_cast<int>(labels.size()));
}

std::string Detokenize(std::span<const Token> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out += tokens[i].form;
    if (i + 1 < tokens.size() && tokens[i].space_after) out += ' ';
  }
  return out;
}

std::vector<std::string> SlotLabels(const Sentence& sentence) {
  std::vector<std::string> labels;
  labels.reserve(sentence.tokens.size());
  for (const Token& t : sentence.tokens) labels.push_back(t.slot);
  return labels;
}

void ValidateSentence(const Sentence& s) {
  auto fail = [&](const std::string& what) {
    throw Error(fmt::format("invalid sentence {}: {}", s.sent_id, what));
  };
  if (s.intent.empty()) fail("missing intent");
  const int n = static_cast<int>(s.tokens.size());
  std::vector<bool> seen_source;
  for (int i = 0; i < n; ++i) {
    const Token& t = s.tokens[i];
    if (t.index != i + 1) fail(fmt::format("token {} has index {}", i + 1, t.index));
    if (t.head < 0 || t.head > n || t.head == t.index) {
      fail(fmt::format("token {} has head {}", t.index, t.head));
    }
    if (!IsValidSlotLabel(t.slot)) fail("bad slot label " + t.slot);
    if (!t.provenance.inserted()) {
      int src = t.provenance.source();
      if (src >= static_cast<int>(seen_source.size())) seen_source.resize(src + 1);
      if (seen_source[src]) fail(fmt::format("duplicate provenance {}", src));
      seen_source[src] = true;
    }
  }
  std::vector<std::string> labels = SlotLabels(s);
  if (NormalizeBio(labels) != labels) fail("ill-formed BIO sequence");
  if (Detokenize(s.tokens) != s.text) fail("text does not match tokens");
}

}  // namespace dialect
