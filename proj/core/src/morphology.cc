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

#include "dialect/morphology.h"

#include <array>
#include <fstream>
#include <istream>
#include <sstream>

#include "dialect/error.h"
#include "fmt/format.h"
#include "text_util.h"

namespace dialect {

namespace internal {
extern const std::string_view kBundledFirstNames;
}  // namespace internal

std::string_view ToString(Number n) {
  return n == Number::kSing ? "Sing" : "Plur";
}

std::string_view ToString(Gender g) {
  switch (g) {
    case Gender::kMasc: return "Masc";
    case Gender::kFem: return "Fem";
    case Gender::kNeut: return "Neut";
    case Gender::kUnknown: break;
  }
  return "Unknown";
}

std::string_view ToString(Case c) {
  switch (c) {
    case Case::kNom: return "Nom";
    case Case::kAcc: return "Acc";
    case Case::kDat: return "Dat";
    case Case::kGen: break;
  }
  return "Gen";
}

std::optional<Person> ParsePerson(std::string_view ud) {
  if (ud == "1") return Person::kFirst;
  if (ud == "2") return Person::kSecond;
  if (ud == "3") return Person::kThird;
  return std::nullopt;
}

std::optional<Number> ParseNumber(std::string_view ud) {
  if (ud == "Sing") return Number::kSing;
  if (ud == "Plur") return Number::kPlur;
  return std::nullopt;
}

std::optional<Gender> ParseGender(std::string_view ud) {
  if (ud == "Masc") return Gender::kMasc;
  if (ud == "Fem") return Gender::kFem;
  if (ud == "Neut") return Gender::kNeut;
  return std::nullopt;
}

std::optional<Case> ParseCase(std::string_view ud) {
  if (ud == "Nom") return Case::kNom;
  if (ud == "Acc") return Case::kAcc;
  if (ud == "Dat") return Case::kDat;
  if (ud == "Gen") return Case::kGen;
  return std::nullopt;
}

bool IsSchwaElidable(std::string_view form) {
  return form.ends_with('e') && internal::Utf8Length(form) >= 3;
}

std::string ElideSchwa(std::string_view form) {
  if (!IsSchwaElidable(form)) {
    throw Error(fmt::format("not elidable: '{}'", form));
  }
  return std::string(form.substr(0, form.size() - 1));
}

std::string DefiniteArticle(Gender gender, Case c, Number number) {
  // Rows: Nom, Acc, Dat, Gen.
  static constexpr std::array<std::string_view, 4> kMasc = {"der", "den", "dem", "des"};
  static constexpr std::array<std::string_view, 4> kFem = {"die", "die", "der", "der"};
  static constexpr std::array<std::string_view, 4> kNeut = {"das", "das", "dem", "des"};
  static constexpr std::array<std::string_view, 4> kPlur = {"die", "die", "den", "der"};
  const auto row = static_cast<std::size_t>(c);
  if (number == Number::kPlur) return std::string(kPlur[row]);
  switch (gender) {
    case Gender::kMasc: return std::string(kMasc[row]);
    case Gender::kFem: return std::string(kFem[row]);
    case Gender::kNeut: return std::string(kNeut[row]);
    case Gender::kUnknown: break;
  }
  throw Error("gender required");
}

std::string ConjugateSein(Person person, Number number) {
  if (number == Number::kSing) {
    switch (person) {
      case Person::kFirst: return "bin";
      case Person::kSecond: return "bist";
      case Person::kThird: return "ist";
    }
  }
  return person == Person::kSecond ? "seid" : "sind";
}

std::string NominalizeInfinitive(std::string_view lemma) {
  if (!lemma.ends_with('n') || internal::Utf8Length(lemma) < 3 ||
      internal::StartsUpper(lemma)) {
    throw Error(fmt::format("not an infinitive: '{}'", lemma));
  }
  return internal::UpperFirst(lemma);
}

std::string TunImperative(Number number, bool sentence_initial) {
  std::string form = number == Number::kSing ? "tu" : "tut";
  return sentence_initial ? internal::UpperFirst(form) : form;
}

Gender KinTermGender(std::string_view lemma) {
  if (lemma == "Papa" || lemma == "Opa") return Gender::kMasc;
  if (lemma == "Mama" || lemma == "Oma") return Gender::kFem;
  return Gender::kUnknown;
}

NameLexicon NameLexicon::Parse(std::istream& in) {
  NameLexicon lex;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view v = internal::Trim(line);
    if (v.empty() || v.starts_with('#')) continue;
    auto cols = internal::Split(v, '\t');
    std::optional<Gender> g;
    if (cols.size() == 2) g = ParseGender(internal::Trim(cols[1]));
    if (!g || *g == Gender::kNeut || internal::Trim(cols[0]).empty()) {
      throw Error(fmt::format("name lexicon line {}: expected <Name>\\t<Masc|Fem>",
                              line_no));
    }
    lex.Add(std::string(internal::Trim(cols[0])), *g);
  }
  return lex;
}

NameLexicon NameLexicon::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open {}", path.string()));
  return Parse(in);
}

const NameLexicon& NameLexicon::Bundled() {
  static const NameLexicon lexicon = [] {
    std::istringstream in{std::string(internal::kBundledFirstNames)};
    return Parse(in);
  }();
  return lexicon;
}

void NameLexicon::Add(std::string name, Gender gender) {
  names_[std::move(name)] = gender;
}

Gender NameLexicon::Lookup(std::string_view first_name) const {
  auto it = names_.find(std::string(first_name));
  return it == names_.end() ? Gender::kUnknown : it->second;
}

}  // namespace dialect
