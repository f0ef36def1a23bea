// Copyright 2026 The voxaudit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Rule-based two-way variety classifiers driven by editable marker lexicons:
// Norwegian Bokmål/Nynorsk (whole-word markers plus suffix counts), Arabic
// Fusha/dialect (substring markers), and Cantonese/Standard Written Chinese
// (character containment). One comparator covers all of them: more class-A
// evidence -> ClassA, more class-B -> ClassB, equal nonzero -> Mixed,
// no evidence -> Unmarked.

#ifndef VOXAUDIT_VARIETY_HPP_
#define VOXAUDIT_VARIETY_HPP_

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "voxaudit/error.hpp"
#include "voxaudit/unicode.hpp"

namespace voxaudit {

enum class VarietyCategory { ClassA, ClassB, Mixed, Unmarked };

inline constexpr std::array<VarietyCategory, 4> kVarietyCategories = {
    VarietyCategory::ClassA, VarietyCategory::ClassB, VarietyCategory::Mixed,
    VarietyCategory::Unmarked};

enum class MatchMode {
  WholeWord,   // marker must equal a maximal letter run
  Substring,   // marker found anywhere in the sentence
};

struct SuffixRule {
  std::string suffix;           // lowercase, matched against word endings
  VarietyCategory target;       // ClassA or ClassB
};

struct MarkerLexicon {
  std::string name;
  std::set<std::string> class_a_markers;
  std::set<std::string> class_b_markers;
  std::vector<SuffixRule> suffix_rules;

  bool empty() const {
    return class_a_markers.empty() && class_b_markers.empty() &&
           suffix_rules.empty();
  }

  void validate() const {
    auto check = [&](const std::set<std::string>& markers) {
      for (const std::string& m : markers) {
        if (m.empty()) throw ConfigError("lexicon " + name + ": empty marker");
        for (uni::CodePoint c : uni::decode_utf8(m)) {
          if (uni::is_space(c)) {
            throw ConfigError("lexicon " + name + ": marker '" + m +
                              "' contains whitespace");
          }
        }
      }
    };
    check(class_a_markers);
    check(class_b_markers);
    for (const std::string& m : class_a_markers) {
      if (class_b_markers.count(m)) {
        throw ConfigError("lexicon " + name + ": marker '" + m +
                          "' appears in both classes");
      }
    }
    for (const SuffixRule& r : suffix_rules) {
      if (r.suffix.empty()) {
        throw ConfigError("lexicon " + name + ": empty suffix rule");
      }
      if (r.target != VarietyCategory::ClassA &&
          r.target != VarietyCategory::ClassB) {
        throw ConfigError("lexicon " + name + ": suffix rules must target a class");
      }
    }
  }
};

struct MarkerHit {
  std::string marker;  // suffix hits are recorded as "-<suffix>"
  VarietyCategory target;
};

struct VarietyVerdict {
  VarietyCategory category = VarietyCategory::Unmarked;
  int a_score = 0;
  int b_score = 0;
  std::vector<MarkerHit> matched_markers;
};

namespace detail {

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Maximal runs of letter characters in the lowercased sentence.
inline std::vector<std::string> letter_words(std::string_view lowered) {
  std::vector<std::string> words;
  std::string current;
  for (uni::CodePoint c : uni::decode_utf8(lowered)) {
    if (uni::is_letter(c)) {
      uni::append_utf8(current, c);
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

inline VarietyCategory compare_scores(int a, int b) {
  if (a > b) return VarietyCategory::ClassA;
  if (b > a) return VarietyCategory::ClassB;
  if (a > 0) return VarietyCategory::Mixed;
  return VarietyCategory::Unmarked;
}

}  // namespace detail

// Each marker contributes at most one point regardless of how often it
// occurs; suffix rules count every matching word.
inline VarietyVerdict classify_two_way(std::string_view sentence,
                                       const MarkerLexicon& lexicon,
                                       MatchMode mode = MatchMode::WholeWord) {
  if (lexicon.empty()) {
    throw ConfigError("lexicon " + lexicon.name + " has no markers");
  }
  const std::string lowered = uni::lowercase(sentence);
  std::vector<std::string> words;
  std::unordered_set<std::string_view> word_set;
  if (mode == MatchMode::WholeWord || !lexicon.suffix_rules.empty()) {
    words = detail::letter_words(lowered);
    for (const std::string& w : words) word_set.insert(w);
  }

  VarietyVerdict verdict;
  auto scan_markers = [&](const std::set<std::string>& markers,
                          VarietyCategory target, int& score) {
    for (const std::string& marker : markers) {
      bool hit = mode == MatchMode::WholeWord
                     ? word_set.count(marker) > 0
                     : lowered.find(marker) != std::string::npos;
      if (hit) {
        ++score;
        verdict.matched_markers.push_back({marker, target});
      }
    }
  };
  scan_markers(lexicon.class_a_markers, VarietyCategory::ClassA,
               verdict.a_score);
  scan_markers(lexicon.class_b_markers, VarietyCategory::ClassB,
               verdict.b_score);

  for (const SuffixRule& rule : lexicon.suffix_rules) {
    for (const std::string& w : words) {
      if (detail::ends_with(w, rule.suffix)) {
        if (rule.target == VarietyCategory::ClassA) {
          ++verdict.a_score;
        } else {
          ++verdict.b_score;
        }
        verdict.matched_markers.push_back({"-" + rule.suffix, rule.target});
      }
    }
  }
  verdict.category = detail::compare_scores(verdict.a_score, verdict.b_score);
  return verdict;
}

// Cantonese vs Standard Written Chinese: markers are single Han characters
// or longer strings, matched by containment. ClassA is SWC, ClassB Cantonese.
inline VarietyVerdict classify_cantonese(std::string_view sentence,
                                         const MarkerLexicon& lexicon) {
  return classify_two_way(sentence, lexicon, MatchMode::Substring);
}

// --------------------------------------------------------------------------
// Corpus-level tallies.

struct CategoryTally {
  std::array<size_t, 4> counts{};  // indexed by VarietyCategory
  size_t total = 0;

  size_t count(VarietyCategory c) const {
    return counts[static_cast<size_t>(c)];
  }
  // Full-precision percentage; render with one decimal for display.
  double percentage(VarietyCategory c) const {
    return total == 0 ? 0.0
                      : 100.0 * static_cast<double>(count(c)) /
                            static_cast<double>(total);
  }
  void add(VarietyCategory c) {
    ++counts[static_cast<size_t>(c)];
    ++total;
  }
  void merge(const CategoryTally& other) {
    for (size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
    total += other.total;
  }
};

// Round half away from zero to one decimal, the display convention for
// tally percentages.
inline double round1(double x) { return std::round(x * 10.0) / 10.0; }

inline CategoryTally classify_corpus(std::span<const std::string> sentences,
                                     const MarkerLexicon& lexicon,
                                     MatchMode mode = MatchMode::WholeWord) {
  if (sentences.empty()) {
    throw EmptyInputError("classify_corpus on empty list");
  }
  CategoryTally tally;
  for (const std::string& s : sentences) {
    tally.add(classify_two_way(s, lexicon, mode).category);
  }
  return tally;
}

// --------------------------------------------------------------------------
// Lexicon file format: UTF-8, one marker per line, sections [class_a],
// [class_b], [suffix_a], [suffix_b]; '#' starts a comment. Markers are
// lowercased on load.

inline MarkerLexicon parse_lexicon(std::istream& in, std::string name) {
  MarkerLexicon lex;
  lex.name = std::move(name);
  enum class Section { None, ClassA, ClassB, SuffixA, SuffixB };
  Section section = Section::None;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim ascii + unicode whitespace at both ends
    {
      std::vector<uni::CodePoint> cps = uni::decode_utf8(line);
      size_t lo = 0, hi = cps.size();
      while (lo < hi && uni::is_space(cps[lo])) ++lo;
      while (hi > lo && uni::is_space(cps[hi - 1])) --hi;
      line = uni::encode_utf8(
          std::vector<uni::CodePoint>(cps.begin() + static_cast<long>(lo),
                                      cps.begin() + static_cast<long>(hi)));
    }
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line == "[class_a]") {
        section = Section::ClassA;
      } else if (line == "[class_b]") {
        section = Section::ClassB;
      } else if (line == "[suffix_a]") {
        section = Section::SuffixA;
      } else if (line == "[suffix_b]") {
        section = Section::SuffixB;
      } else {
        throw ConfigError("lexicon " + lex.name + ": unknown section " + line +
                          " at line " + std::to_string(line_no));
      }
      continue;
    }
    std::string marker = uni::lowercase(line);
    switch (section) {
      case Section::ClassA:
        lex.class_a_markers.insert(marker);
        break;
      case Section::ClassB:
        lex.class_b_markers.insert(marker);
        break;
      case Section::SuffixA:
        lex.suffix_rules.push_back({marker, VarietyCategory::ClassA});
        break;
      case Section::SuffixB:
        lex.suffix_rules.push_back({marker, VarietyCategory::ClassB});
        break;
      case Section::None:
        throw ConfigError("lexicon " + lex.name + ": marker before any section at line " +
                          std::to_string(line_no));
    }
  }
  lex.validate();
  return lex;
}

inline MarkerLexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon: " + path.string());
  return parse_lexicon(in, path.filename().string());
}

// --------------------------------------------------------------------------
// Built-in lexicons.

// Norwegian: whole-word markers for Nynorsk (class A) and Bokmål (class B),
// plus the word-final 'a' (Nynorsk) / 'en' (Bokmål) suffix counts.
inline const MarkerLexicon& norwegian_lexicon() {
  static const MarkerLexicon kLex = [] {
    MarkerLexicon lex;
    lex.name = "norwegian-default";
    lex.class_a_markers = {"ikkje", "eg",   "eit",  "eitt",  "me",
                           "ho",    "hjå",  "kva",  "kven",  "noko",
                           "nokre", "sjå",  "skule", "kor",  "fyrst",
                           "mykje", "òg",   "medan"};
    lex.class_b_markers = {"ikke", "jeg",  "et",    "en",   "vi",
                           "hun",  "hos",  "hva",   "hvem", "noe",
                           "noen", "se",   "skole", "hvor", "først",
                           "mye",  "også", "mens"};
    lex.suffix_rules = {{"a", VarietyCategory::ClassA},
                        {"en", VarietyCategory::ClassB}};
    lex.validate();
    return lex;
  }();
  return kLex;
}

// Arabic: Fusha (class A) vs dialect (class B), substring-matched. This is a
// small in-house default for smoke checks, not an authoritative list; real
// audits should supply a curated lexicon file.
inline const MarkerLexicon& arabic_lexicon() {
  static const MarkerLexicon kLex = [] {
    MarkerLexicon lex;
    lex.name = "arabic-default";
    lex.class_a_markers = {"الذي", "التي",  "الذين", "اللواتي",
                           "ليس",  "ليست",  "سوف",   "لقد",
                           "هذا",  "هذه",   "ذلك",   "تلك",
                           "حيث",  "عندما", "كذلك",  "أيضا"};
    lex.class_b_markers = {"اللي", "مش",    "ازاي", "ايه",  "ليه",
                           "فين",  "دلوقتي", "عايز", "عاوز", "كده",
                           "برضه", "ليش",   "هاد",  "هيك",  "وين",
                           "بدي"};
    lex.validate();
    return lex;
  }();
  return kLex;
}

// Cantonese: Standard Written Chinese (class A) vs Written Vernacular
// Cantonese (class B), character containment. Same caveat as the Arabic
// default: an editable starting point, not ground truth.
inline const MarkerLexicon& cantonese_lexicon() {
  static const MarkerLexicon kLex = [] {
    MarkerLexicon lex;
    lex.name = "cantonese-default";
    lex.class_a_markers = {"的", "是", "了", "他", "她", "它", "們", "這",
                           "那", "沒", "甚", "看", "說", "給"};
    lex.class_b_markers = {"嘅", "咗", "喺", "唔", "佢", "哋", "冇", "嚟",
                           "乜", "嗰", "咁", "啲", "睇", "攞", "俾", "嘢",
                           "咩", "㗎"};
    lex.validate();
    return lex;
  }();
  return kLex;
}

}  // namespace voxaudit

#endif  // VOXAUDIT_VARIETY_HPP_
