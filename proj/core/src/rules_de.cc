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

#include "dialect/rules_de.h"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dialect/dependency_view.h"
#include "dialect/edit_script.h"
#include "text_util.h"

namespace dialect {
namespace {

using internal::LowerFirst;
using internal::StartsUpper;
using internal::ToLower;
using internal::UpperFirst;

bool In(std::string_view s, std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

std::string MatchCase(std::string_view like, std::string_view form) {
  return StartsUpper(like) ? UpperFirst(form) : std::string(form);
}

TransformOutcome ApplyBuilder(const EditBuilder& builder) {
  return TransformOutcome::Apply(builder.Build());
}

// Inserts `payload` at the end of the clause headed by `head`: before the
// clause-final verb group if there is one, else after the last word.
void InsertClauseFinal(EditBuilder& b, const DependencyView& v, int head,
                       Token payload, std::optional<int> skip = {}) {
  if (auto rb = v.RightBracketStart(head, skip)) {
    b.InsertBefore(*rb, std::move(payload));
  } else {
    b.InsertAfter(*v.ClauseEnd(head, skip), std::move(payload));
  }
}

// Last position of a noun phrase: the noun's subtree without nested clauses
// and punctuation.
int PhraseEnd(const DependencyView& v, int noun) {
  int end = noun;
  for (int p : v.ClauseTokens(noun)) {
    if (!v.IsPunct(p)) end = std::max(end, p);
  }
  return end;
}

// Persons a name-like rule can talk about: a listed first name or a kin term.
Gender PersonGender(const Token& t, const NameLexicon& names) {
  if (t.upos == "NOUN") return KinTermGender(t.lemma);
  if (t.upos == "PROPN") return names.Lookup(t.form);
  return Gender::kUnknown;
}

// ---------------------------------------------------------------------------
// word_order: "weil ich keine Zeit habe" -> "weil ich habe keine Zeit".

struct VerbSecondSite {
  int verb;
  int after;
};

std::optional<VerbSecondSite> FindVerbSecond(const Sentence& s) {
  DependencyView v(s);
  for (int m = 0; m < v.size(); ++m) {
    const Token& t = v.token(m);
    if (!In(ToLower(t.form), {"weil", "obwohl"})) continue;
    if (BaseRelation(t.deprel) != "mark" || !v.Parent(m)) continue;
    const int head = *v.Parent(m);
    const auto finite = v.FiniteVerb(head);
    if (!finite || v.ClauseEnd(head) != *finite) continue;
    const auto subj = v.ChildWithRelation(head, "nsubj");
    if (!subj) continue;
    const int subj_end = v.Subtree(*subj).back();
    if (subj_end >= *finite || subj_end < m) continue;
    return VerbSecondSite{*finite, subj_end};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// verb_clusters: "ob sie kommen will" -> "ob sie will kommen".

std::optional<std::pair<int, int>> FindCluster(const Sentence& s) {
  DependencyView v(s);
  for (int h = 0; h < v.size(); ++h) {
    if (!v.IsClauseHead(h)) continue;
    if (!v.IsSubordinateClause(h) && !v.HasChildWithRelation(h, "mark")) {
      continue;
    }
    std::vector<int> words;
    for (int p : v.ClauseTokens(h)) {
      if (!v.IsPunct(p)) words.push_back(p);
    }
    if (words.size() < 2) continue;
    const int a = words[words.size() - 2];
    const int b = words.back();
    if (v.IsVerbal(a) && v.token(a).HasFeat("VerbForm", "Inf") &&
        v.IsFinite(b)) {
      return std::pair{a, b};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// tun_imperative: "Ruf Oma an" -> "Tu Oma anrufen".

bool TunTrigger(const Sentence& s) {
  if (s.tokens.empty()) return false;
  const Token& first = s.tokens[0];
  if (first.upos != "VERB" || !first.HasFeat("Mood", "Imp")) return false;
  if (first.lemma == "tun") return false;
  return std::none_of(s.tokens.begin(), s.tokens.end(),
                      [](const Token& t) { return t.upos == "AUX"; });
}

TransformOutcome TunTransform(const Sentence& s) {
  DependencyView v(s);
  const Token& verb = s.tokens[0];
  if (verb.lemma.empty() || verb.lemma == "_") {
    return TransformOutcome::Veto("infinitive lemma missing");
  }
  std::string infinitive = verb.lemma;
  const auto particle = v.ChildWithRelation(0, "compound:prt");
  if (particle) infinitive = ToLower(v.token(*particle).form) + infinitive;
  if (infinitive.size() < 3 || infinitive.back() != 'n' ||
      StartsUpper(infinitive)) {
    return TransformOutcome::Veto("lemma is not an infinitive");
  }
  const Number number =
      ParseNumber(verb.Feat("Number")).value_or(Number::kSing);

  EditBuilder b(s.tokens);
  Token tu = verb;
  tu.form = TunImperative(number, StartsUpper(verb.form));
  tu.lemma = "tun";
  b.Replace(0, std::move(tu));
  if (particle) b.Delete(*particle);

  Token inf = MakeToken(infinitive, infinitive, "VERB", 1, "xcomp");
  inf.xpos = "VVINF";
  inf.feats = {{"VerbForm", "Inf"}};
  const int head = v.ClauseHeadOf(0);
  auto rb = v.RightBracketStart(head, particle);
  if (rb && *rb != 0) {
    b.InsertBefore(*rb, std::move(inf));
  } else {
    const auto end = v.ClauseEnd(head, particle);
    if (!end) return TransformOutcome::Veto("empty clause");
    b.InsertAfter(*end, std::move(inf));
  }
  return ApplyBuilder(b);
}

// ---------------------------------------------------------------------------
// name_order: "Angela Merkel" -> "Merkel Angela". Matches the pair in either
// orientation, so applying it twice restores the input.

std::optional<int> FindNamePair(const Sentence& s, const NameLexicon& names) {
  const auto& t = s.tokens;
  for (int i = 0; i + 1 < static_cast<int>(t.size()); ++i) {
    if (t[i].upos != "PROPN" || t[i + 1].upos != "PROPN") continue;
    const bool forward =
        t[i + 1].head == i + 1 && BaseRelation(t[i + 1].deprel) == "flat";
    const bool backward =
        t[i].head == i + 2 && BaseRelation(t[i].deprel) == "flat";
    if (!forward && !backward) continue;
    const int first_name = forward ? i : i + 1;
    if (names.Lookup(t[first_name].form) == Gender::kUnknown) continue;
    return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// article_name: "Papa" -> "den Papa".

struct ArticleSite {
  int insert_before;
  int head;
  Token article;
};

std::optional<Case> NameCase(const DependencyView& v, int pos) {
  const std::string_view rel = BaseRelation(v.token(pos).deprel);
  if (rel == "nsubj") return Case::kNom;
  if (rel == "obj") return Case::kAcc;
  if (rel == "iobj") return Case::kDat;
  if (rel == "nmod" || rel == "obl") {
    for (int c : v.Children(pos)) {
      if (BaseRelation(v.token(c).deprel) != "case") continue;
      if (In(ToLower(v.token(c).form),
             {"von", "mit", "zu", "bei", "aus", "nach", "seit", "gegenüber",
              "außer"})) {
        return Case::kDat;
      }
    }
  }
  return std::nullopt;
}

std::optional<ArticleSite> FindArticleSite(const Sentence& s,
                                           const NameLexicon& names) {
  DependencyView v(s);
  for (int i = 0; i < v.size(); ++i) {
    const Token& t = v.token(i);
    if (t.upos != "PROPN" && t.upos != "NOUN") continue;
    const std::string_view rel = BaseRelation(t.deprel);
    if (rel == "flat" || rel == "compound") continue;
    if (v.HasChildWithRelation(i, "det")) continue;
    const Gender gender = PersonGender(t, names);
    if (gender == Gender::kUnknown) continue;
    const auto c = NameCase(v, i);
    if (!c) continue;
    int first = i;
    for (int ch : v.Children(i)) {
      if (BaseRelation(v.token(ch).deprel) == "flat") first = std::min(first, ch);
    }
    if (first > 0 && v.token(first - 1).upos == "DET") continue;
    std::string form = DefiniteArticle(gender, *c, Number::kSing);
    if (first == 0) form = UpperFirst(form);
    Token article = MakeToken(std::move(form), "der", "DET", i + 1, "det");
    article.xpos = "ART";
    article.feats = {{"Case", std::string(ToString(*c))},
                     {"Definite", "Def"},
                     {"Gender", std::string(ToString(gender))},
                     {"Number", "Sing"},
                     {"PronType", "Art"}};
    return ArticleSite{first, i, std::move(article)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// progressive: "Ich lese" -> "Ich bin am Lesen".

std::optional<int> FindProgressiveVerb(const Sentence& s) {
  DependencyView v(s);
  for (int i = 0; i < v.size(); ++i) {
    const Token& t = v.token(i);
    if (t.upos != "VERB" || !t.HasFeat("VerbForm", "Fin") ||
        !t.HasFeat("Tense", "Pres") || !t.HasFeat("Mood", "Ind")) {
      continue;
    }
    if (v.HasChildWithRelation(i, "obj")) continue;
    return i;
  }
  return std::nullopt;
}

TransformOutcome ProgressiveTransform(const Sentence& s) {
  DependencyView v(s);
  const int verb = *FindProgressiveVerb(s);
  const Token& t = v.token(verb);
  const auto person = ParsePerson(t.Feat("Person"));
  const auto number = ParseNumber(t.Feat("Number"));
  if (!person || !number) {
    return TransformOutcome::Veto("person or number missing");
  }
  std::string noun;
  try {
    noun = NominalizeInfinitive(t.lemma);
  } catch (const Error&) {
    return TransformOutcome::Veto("lemma is not an infinitive");
  }

  EditBuilder b(s.tokens);
  Token sein = t;
  sein.form = ConjugateSein(*person, *number);
  if (StartsUpper(t.form)) sein.form = UpperFirst(sein.form);
  sein.lemma = "sein";
  sein.upos = "AUX";
  sein.xpos = "VAFIN";
  b.Replace(verb, std::move(sein));

  Token am = MakeToken("am", "an", "ADP", verb + 1, "case");
  am.xpos = "APPRART";
  // The nominalization keeps the verb lemma so later rules still see the
  // lexical verb.
  Token nominal = MakeToken(std::move(noun), t.lemma, "NOUN", verb + 1, "obl");
  nominal.xpos = "NN";
  nominal.feats = {{"Case", "Dat"}, {"Gender", "Neut"}, {"Number", "Sing"}};

  const int head = v.ClauseHeadOf(verb);
  if (v.IsSubordinateClause(head) && v.ClauseEnd(head) == verb) {
    b.InsertBefore(verb, std::move(am));
    b.InsertBefore(verb, std::move(nominal));
  } else if (auto rb = v.RightBracketStart(head)) {
    b.InsertBefore(*rb, std::move(am));
    b.InsertBefore(*rb, std::move(nominal));
  } else {
    const int end = *v.ClauseEnd(head);
    b.InsertAfter(end, std::move(nominal));
    b.InsertAfter(end, std::move(am));
  }
  return ApplyBuilder(b);
}

// ---------------------------------------------------------------------------
// negative_concord: "Ich habe nichts gesehen" -> "... nichts nicht gesehen".

bool IsNegativeWord(const Token& t) {
  const std::string lemma = ToLower(t.lemma);
  return In(lemma, {"niemand", "nichts", "nie", "niemals", "kein"});
}

bool IsNicht(const Token& t) {
  return ToLower(t.form) == "nicht" || t.lemma == "nicht";
}

std::optional<int> FindNegationClause(const Sentence& s) {
  DependencyView v(s);
  for (int i = 0; i < v.size(); ++i) {
    if (!IsNegativeWord(v.token(i))) continue;
    const int head = v.ClauseHeadOf(i);
    const auto toks = v.ClauseTokens(head);
    if (std::any_of(toks.begin(), toks.end(),
                    [&](int p) { return IsNicht(v.token(p)); })) {
      continue;
    }
    return head;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// pronominal_adverbs: "Davon weiß ich nichts" -> "Da weiß ich nichts von".

std::optional<std::string_view> SplitPronominalAdverb(std::string_view lower) {
  struct Entry {
    std::string_view adverb;
    std::string_view prep;
  };
  static constexpr Entry kTable[] = {
      {"dabei", "bei"},     {"dadurch", "durch"}, {"dafür", "für"},
      {"dagegen", "gegen"}, {"dahinter", "hinter"}, {"damit", "mit"},
      {"danach", "nach"},   {"daneben", "neben"}, {"daran", "an"},
      {"darauf", "auf"},    {"daraus", "aus"},    {"darin", "in"},
      {"darüber", "über"},  {"darum", "um"},      {"darunter", "unter"},
      {"davon", "von"},     {"davor", "vor"},     {"dazu", "zu"},
      {"dazwischen", "zwischen"},
  };
  for (const Entry& e : kTable) {
    if (e.adverb == lower) return e.prep;
  }
  return std::nullopt;
}

std::optional<int> FindPronominalAdverb(const Sentence& s) {
  for (int i = 0; i < static_cast<int>(s.tokens.size()); ++i) {
    if (SplitPronominalAdverb(ToLower(s.tokens[i].form))) return i;
  }
  return std::nullopt;
}

TransformOutcome PronominalAdverbsTransform(const Sentence& s) {
  DependencyView v(s);
  const int adv = *FindPronominalAdverb(s);
  const Token& t = v.token(adv);
  const std::string prep(*SplitPronominalAdverb(ToLower(t.form)));
  const int head = v.ClauseHeadOf(adv);
  const auto clause = v.ClauseTokens(head);
  int first_word = -1;
  for (int p : clause) {
    if (!v.IsPunct(p)) {
      first_word = p;
      break;
    }
  }

  Token prep_token = MakeToken(prep, prep, "ADP", t.head, "case");
  prep_token.xpos = "APPR";
  EditBuilder b(s.tokens);
  if (adv == first_word || v.IsSubordinateClause(head)) {
    Token da = t;
    da.form = MatchCase(t.form, "da");
    da.lemma = "da";
    da.xpos = "ADV";
    b.Replace(adv, std::move(da));
    InsertClauseFinal(b, v, head, std::move(prep_token));
    return ApplyBuilder(b);
  }

  const auto finite = v.FiniteVerb(head);
  if (!finite || *finite > adv) return TransformOutcome::Decline();
  Token da = MakeToken("da", "da", "ADV", t.head, "advmod");
  da.xpos = "ADV";
  b.InsertAfter(*finite, std::move(da));
  Token moved = t;
  moved.form = prep;
  moved.lemma = prep;
  moved.upos = "ADP";
  moved.xpos = "APPR";
  b.Replace(adv, std::move(moved));
  if (auto rb = v.RightBracketStart(head, adv)) {
    b.MoveBefore(adv, *rb);
  } else if (auto end = v.ClauseEnd(head, adv); end && *end > adv) {
    b.MoveAfter(adv, *end);
  }
  return ApplyBuilder(b);
}

// ---------------------------------------------------------------------------
// relative_pron: "der singt" -> "der wo singt".

std::optional<int> FindRelativePronoun(const Sentence& s) {
  const auto& t = s.tokens;
  for (int i = 0; i < static_cast<int>(t.size()); ++i) {
    if (!t[i].HasFeat("PronType", "Rel")) continue;
    if (!t[i].HasFeat("Case", "Nom") && BaseRelation(t[i].deprel) != "nsubj") {
      continue;
    }
    if (i + 1 < static_cast<int>(t.size()) && ToLower(t[i + 1].form) == "wo") {
      continue;
    }
    return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// location: "in Berlin" -> "in Berlin drin".

std::optional<int> FindLocationNoun(const Sentence& s) {
  DependencyView v(s);
  for (int i = 0; i < v.size(); ++i) {
    const Token& a = v.token(i);
    if (!In(ToLower(a.form), {"in", "im"})) continue;
    if (BaseRelation(a.deprel) != "case" || !v.Parent(i)) continue;
    const int noun = *v.Parent(i);
    const Token& n = v.token(noun);
    if (n.HasFeat("Case", "Acc")) continue;
    if (n.upos != "PROPN" && !(n.upos == "NOUN" && n.HasFeat("Case", "Dat"))) {
      continue;
    }
    const int end = PhraseEnd(v, noun);
    if (end + 1 < v.size() && ToLower(v.token(end + 1).form) == "drin") {
      continue;
    }
    const auto kids = v.Children(noun);
    if (std::any_of(kids.begin(), kids.end(), [&v](int c) {
          return v.token(c).lemma == "drin";
        })) {
      continue;
    }
    return noun;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// direction: "zu Paul fahren" -> "nach Paul fahren".

struct DirectionSite {
  int prep;
  std::optional<int> det;
};

std::optional<DirectionSite> FindDirection(const Sentence& s,
                                           const NameLexicon& names) {
  const auto& t = s.tokens;
  const bool motion = std::any_of(t.begin(), t.end(), [](const Token& tok) {
    return In(tok.lemma, {"gehen", "fahren", "kommen", "laufen", "fliegen",
                          "reisen", "rennen", "ziehen", "wandern", "radeln"});
  });
  if (!motion) return std::nullopt;
  const int n = static_cast<int>(t.size());
  for (int i = 0; i + 1 < n; ++i) {
    const std::string form = ToLower(t[i].form);
    if (!In(form, {"zu", "zum", "zur"})) continue;
    int target = i + 1;
    std::optional<int> det;
    if (form == "zu" && t[target].upos == "DET" &&
        t[target].lemma == "der" && target + 1 < n) {
      det = target;
      ++target;
    }
    if (PersonGender(t[target], names) == Gender::kUnknown) continue;
    return DirectionSite{i, det};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// comparative: "wärmer als" -> "wärmer wie".

std::optional<int> FindComparativeAls(const Sentence& s) {
  const auto& t = s.tokens;
  for (int i = 0; i + 1 < static_cast<int>(t.size()); ++i) {
    if (t[i].HasFeat("Degree", "Cmp") && ToLower(t[i + 1].form) == "als") {
      return i + 1;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// schwa_elision: "ich habe" -> "ich hab".

std::vector<int> SchwaSites(const Sentence& s) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(s.tokens.size()); ++i) {
    const Token& t = s.tokens[i];
    if (t.upos != "VERB" && t.upos != "AUX") continue;
    if (t.HasFeat("Person", "1") && t.HasFeat("Number", "Sing") &&
        t.HasFeat("Tense", "Pres") && t.HasFeat("Mood", "Ind") &&
        IsSchwaElidable(t.form)) {
      out.push_back(i);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// es_contraction: "mag es" -> "mag's".

std::vector<int> EsSites(const Sentence& s) {
  std::vector<int> out;
  for (int i = 1; i < static_cast<int>(s.tokens.size()); ++i) {
    const Token& t = s.tokens[i];
    if (t.form == "es" && t.upos == "PRON" && s.tokens[i - 1].upos != "PUNCT") {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace

PerturbationRule WordOrderRule() {
  return {"word_order", Category::kDiscourseWordOrder,
          [](const Sentence& s) {
            DependencyView v(s);
            for (int m = 0; m < v.size(); ++m) {
              if (In(ToLower(v.token(m).form), {"weil", "obwohl"}) &&
                  BaseRelation(v.token(m).deprel) == "mark") {
                return true;
              }
            }
            return false;
          },
          [](const Sentence& s) {
            // A verb already next to the subject leaves nothing to move.
            const auto site = FindVerbSecond(s);
            if (!site) return TransformOutcome::Decline("verb already second");
            EditBuilder b(s.tokens);
            b.MoveAfter(site->verb, site->after);
            return ApplyBuilder(b);
          }};
}

PerturbationRule VerbClustersRule() {
  return {"verb_clusters", Category::kComplementation,
          [](const Sentence& s) { return FindCluster(s).has_value(); },
          [](const Sentence& s) {
            const auto [a, b] = *FindCluster(s);
            EditBuilder builder(s.tokens);
            builder.Swap(a, b);
            return ApplyBuilder(builder);
          }};
}

PerturbationRule TunImperativeRule() {
  return {"tun_imperative", Category::kTenseAspect, TunTrigger, TunTransform};
}

PerturbationRule NameOrderRule(const NameLexicon& names) {
  return {"name_order", Category::kDiscourseWordOrder,
          [&names](const Sentence& s) {
            return FindNamePair(s, names).has_value();
          },
          [&names](const Sentence& s) {
            const int i = *FindNamePair(s, names);
            EditBuilder b(s.tokens);
            b.Swap(i, i + 1);
            return ApplyBuilder(b);
          }};
}

PerturbationRule ArticleNameRule(const NameLexicon& names) {
  return {"article_name", Category::kNounPhrase,
          [&names](const Sentence& s) {
            return FindArticleSite(s, names).has_value();
          },
          [&names](const Sentence& s) {
            auto site = *FindArticleSite(s, names);
            EditBuilder b(s.tokens);
            b.InsertBefore(site.insert_before, std::move(site.article));
            return ApplyBuilder(b);
          }};
}

PerturbationRule ProgressiveRule() {
  return {"progressive", Category::kTenseAspect,
          [](const Sentence& s) { return FindProgressiveVerb(s).has_value(); },
          ProgressiveTransform};
}

PerturbationRule NegativeConcordRule() {
  return {"negative_concord", Category::kNegation,
          [](const Sentence& s) { return FindNegationClause(s).has_value(); },
          [](const Sentence& s) {
            DependencyView v(s);
            const int head = *FindNegationClause(s);
            Token nicht = MakeToken("nicht", "nicht", "PART", head + 1, "advmod");
            nicht.xpos = "PTKNEG";
            nicht.feats = {{"Polarity", "Neg"}};
            EditBuilder b(s.tokens);
            InsertClauseFinal(b, v, head, std::move(nicht));
            return ApplyBuilder(b);
          }};
}

PerturbationRule PronominalAdverbsRule() {
  return {"pronominal_adverbs", Category::kAdverbsPrepositions,
          [](const Sentence& s) { return FindPronominalAdverb(s).has_value(); },
          PronominalAdverbsTransform};
}

PerturbationRule RelativePronRule() {
  return {"relative_pron", Category::kRelativization,
          [](const Sentence& s) { return FindRelativePronoun(s).has_value(); },
          [](const Sentence& s) {
            const int rel = *FindRelativePronoun(s);
            Token wo = MakeToken("wo", "wo", "ADV", s.tokens[rel].head, "mark");
            wo.xpos = "PWAV";
            EditBuilder b(s.tokens);
            b.InsertAfter(rel, std::move(wo));
            return ApplyBuilder(b);
          }};
}

PerturbationRule LocationRule() {
  return {"location", Category::kAdverbsPrepositions,
          [](const Sentence& s) { return FindLocationNoun(s).has_value(); },
          [](const Sentence& s) {
            DependencyView v(s);
            const int noun = *FindLocationNoun(s);
            Token drin = MakeToken("drin", "drin", "ADV", noun + 1, "advmod");
            drin.xpos = "ADV";
            EditBuilder b(s.tokens);
            b.InsertAfter(PhraseEnd(v, noun), std::move(drin));
            return ApplyBuilder(b);
          }};
}

PerturbationRule DirectionRule(const NameLexicon& names) {
  return {"direction", Category::kAdverbsPrepositions,
          [&names](const Sentence& s) {
            return FindDirection(s, names).has_value();
          },
          [&names](const Sentence& s) {
            const auto site = *FindDirection(s, names);
            Token nach = s.tokens[site.prep];
            nach.form = MatchCase(nach.form, "nach");
            nach.lemma = "nach";
            nach.xpos = "APPR";
            EditBuilder b(s.tokens);
            b.Replace(site.prep, std::move(nach));
            if (site.det) b.Delete(*site.det);
            return ApplyBuilder(b);
          }};
}

PerturbationRule ComparativeRule() {
  return {"comparative", Category::kNounPhrase,
          [](const Sentence& s) { return FindComparativeAls(s).has_value(); },
          [](const Sentence& s) {
            const int als = *FindComparativeAls(s);
            Token wie = s.tokens[als];
            wie.form = MatchCase(wie.form, "wie");
            wie.lemma = "wie";
            EditBuilder b(s.tokens);
            b.Replace(als, std::move(wie));
            return ApplyBuilder(b);
          }};
}

PerturbationRule SchwaElisionRule() {
  return {"schwa_elision", Category::kVerbMorphology,
          [](const Sentence& s) { return !SchwaSites(s).empty(); },
          [](const Sentence& s) {
            EditBuilder b(s.tokens);
            for (int i : SchwaSites(s)) {
              b.ReplaceForm(i, ElideSchwa(s.tokens[i].form));
            }
            return ApplyBuilder(b);
          }};
}

PerturbationRule EsContractionRule() {
  return {"es_contraction", Category::kPronouns,
          [](const Sentence& s) { return !EsSites(s).empty(); },
          [](const Sentence& s) {
            EditBuilder b(s.tokens);
            for (int i : EsSites(s)) {
              Token host = s.tokens[i - 1];
              host.space_after = false;
              b.Replace(i - 1, std::move(host));
              b.ReplaceForm(i, "'s");
            }
            return ApplyBuilder(b);
          }};
}

RuleRegistry MakeGermanRegistry(const NameLexicon& names) {
  RuleRegistry r;
  r.Register(WordOrderRule());
  r.Register(VerbClustersRule());
  r.Register(TunImperativeRule());
  r.Register(NameOrderRule(names));
  r.Register(ArticleNameRule(names));
  r.Register(ProgressiveRule());
  r.Register(NegativeConcordRule());
  r.Register(PronominalAdverbsRule());
  r.Register(RelativePronRule());
  r.Register(LocationRule());
  r.Register(DirectionRule(names));
  r.Register(ComparativeRule());
  r.Register(SchwaElisionRule());
  r.Register(EsContractionRule());
  return r;
}

const RuleRegistry& GermanRegistry() {
  static const RuleRegistry registry =
      MakeGermanRegistry(NameLexicon::Bundled());
  return registry;
}

}  // namespace dialect
