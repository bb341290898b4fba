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

#ifndef DIALECT_MORPHOLOGY_H_
#define DIALECT_MORPHOLOGY_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "dialect/error.h"

namespace dialect {

enum class Person { kFirst = 1, kSecond = 2, kThird = 3 };
enum class Number { kSing, kPlur };
enum class Gender { kMasc, kFem, kNeut, kUnknown };
enum class Case { kNom, kAcc, kDat, kGen };

std::string_view ToString(Number n);
std::string_view ToString(Gender g);
std::string_view ToString(Case c);

// UD feature values ("1", "Sing", "Masc", "Dat", ...) to enums.
std::optional<Person> ParsePerson(std::string_view ud);
std::optional<Number> ParseNumber(std::string_view ud);
std::optional<Gender> ParseGender(std::string_view ud);
std::optional<Case> ParseCase(std::string_view ud);

struct MorphRequest {
  std::string lemma;
  Person person = Person::kThird;
  Number number = Number::kSing;
  Gender gender = Gender::kUnknown;
  Case grammatical_case = Case::kNom;
};

// Drops the final "e" of an inflected verb form ("habe" -> "hab"). Throws
// Error("not elidable") unless the form ends in "e" and has at least three
// letters.
std::string ElideSchwa(std::string_view form);
bool IsSchwaElidable(std::string_view form);

// Definite article. Gender is ignored in the plural; an unknown gender in the
// singular throws Error("gender required").
std::string DefiniteArticle(Gender gender, Case c, Number number);

std::string ConjugateSein(Person person, Number number);

// "lesen" -> "Lesen". Throws Error unless the lemma looks like an infinitive
// (ends in "n", at least three letters, lowercase initial).
std::string NominalizeInfinitive(std::string_view lemma);

// "Tu"/"Tut", lowercased when the form is not sentence-initial.
std::string TunImperative(Number number, bool sentence_initial = true);

// Gender of the kin terms the rules treat like names (Papa, Mama, Oma, Opa).
Gender KinTermGender(std::string_view lemma);

// First-name -> gender map. Lookups are case-sensitive; unknown names map to
// Gender::kUnknown.
class NameLexicon {
 public:
  NameLexicon() = default;

  // Format: one "<Name>\t<Masc|Fem>" per line; '#' starts a comment line.
  static NameLexicon Parse(std::istream& in);
  static NameLexicon Load(const std::filesystem::path& path);
  // The list shipped with the library.
  static const NameLexicon& Bundled();

  void Add(std::string name, Gender gender);
  Gender Lookup(std::string_view first_name) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::unordered_map<std::string, Gender> names_;
};

inline Gender NameGender(std::string_view first_name,
                         const NameLexicon& lexicon) {
  return lexicon.Lookup(first_name);
}

}  // namespace dialect

#endif  // DIALECT_MORPHOLOGY_H_
