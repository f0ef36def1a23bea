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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "voxaudit/text_metrics.hpp"

using namespace voxaudit;

TEST_CASE("whitespace tokenizer lowercases and strips edge punctuation") {
  auto toks = tokenize("Har eg dekt meg.", TokenizerMode::Whitespace);
  CHECK(toks == std::vector<std::string>{"har", "eg", "dekt", "meg"});

  toks = tokenize("No he anat mai a Agost.", TokenizerMode::Whitespace);
  CHECK(toks.size() == 6);
  CHECK(toks.back() == "agost");

  toks = tokenize("  \"quoted,\"  (word)  tik-lâm-tìn ",
                  TokenizerMode::Whitespace);
  CHECK(toks == std::vector<std::string>{"quoted", "word",
                                         "tik-lâm-tìn"});
  CHECK(tokenize("", TokenizerMode::Whitespace).empty());
  CHECK(tokenize("...", TokenizerMode::Whitespace).empty());
}

TEST_CASE("per-character cjk tokenizer") {
  CHECK(tokenize("竹南鎮", TokenizerMode::PerCharacterCJK).size() == 3);
  auto toks = tokenize("竹南鎮（Tik-lâm-tìn）",
                       TokenizerMode::PerCharacterCJK);
  REQUIRE(toks.size() == 4);
  CHECK(toks[0] == "竹");
  CHECK(toks[3] == "tik-lâm-tìn");
  toks = tokenize("hello 世界 x", TokenizerMode::PerCharacterCJK);
  CHECK(toks == std::vector<std::string>{"hello", "世", "界", "x"});
}

TEST_CASE("sentence normalization") {
  CHECK(normalize_sentence("No he anat mai a Agost.") == "no he anat mai a agost");
  CHECK(normalize_sentence("  A,  B!  ") == "a b");
  CHECK(normalize_sentence("竹南鎮（X）") == "竹南鎮x");
}

TEST_CASE("template detection finds the shared-prefix cluster") {
  std::vector<std::string> corpus;
  for (int i = 0; i < 30; ++i) {
    corpus.push_back("No he anat mai a Lloc" + std::to_string(i) + ".");
  }
  auto clusters = detect_templates(corpus);
  REQUIRE(clusters.size() == 1);
  CHECK(clusters[0].key_prefix ==
        std::vector<std::string>{"no", "he", "anat", "mai"});
  CHECK(clusters[0].size == 30);
  CHECK(clusters[0].mean_similarity >= 0.7);
  CHECK(clusters[0].sample_sentences.size() == 10);
  CHECK(clusters[0].sample_sentences[0] == corpus[0]);
}

TEST_CASE("unrelated sentences produce no clusters") {
  std::vector<std::string> corpus;
  for (int i = 0; i < 30; ++i) {
    corpus.push_back("alpha" + std::to_string(i) + " beta" + std::to_string(i) +
                     " gamma" + std::to_string(i) + " delta" +
                     std::to_string(i) + " epsilon");
  }
  CHECK(detect_templates(corpus).empty());
}

TEST_CASE("min_cluster boundary is exact") {
  auto make = [](int n) {
    std::vector<std::string> corpus;
    for (int i = 0; i < n; ++i) {
      corpus.push_back("No he anat mai a Lloc" + std::to_string(i) + ".");
    }
    return corpus;
  };
  CHECK(detect_templates(make(19)).empty());
  auto clusters = detect_templates(make(20));
  REQUIRE(clusters.size() == 1);
  CHECK(clusters[0].size == 20);
}

TEST_CASE("similarity confirmation rejects shared-prefix dissimilar tails") {
  std::vector<std::string> corpus;
  std::mt19937_64 rng(4);
  for (int i = 0; i < 25; ++i) {
    std::string tail;
    for (int w = 0; w < 20; ++w) {
      tail += " w" + std::to_string(rng() % 100000);
    }
    corpus.push_back("the same four words" + tail);
  }
  TemplateParams params;
  params.min_similarity = 0.9;
  CHECK(detect_templates(corpus, params).empty());
}

TEST_CASE("clusters partition the input") {
  std::mt19937_64 rng(8);
  std::vector<std::string> corpus;
  for (int group = 0; group < 4; ++group) {
    for (int i = 0; i < 25; ++i) {
      corpus.push_back("group" + std::to_string(group) + " common stem text item" +
                       std::to_string(i));
    }
  }
  for (int i = 0; i < 37; ++i) {
    corpus.push_back("solo" + std::to_string(rng() % 100000) + " filler words here");
  }
  TemplateParams params;
  params.min_cluster = 10;
  auto clusters = detect_templates(corpus, params);
  size_t total = 0;
  std::vector<std::vector<std::string>> keys;
  for (const auto& c : clusters) {
    total += c.size;
    keys.push_back(c.key_prefix);
  }
  CHECK(total <= corpus.size());
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
  REQUIRE(clusters.size() == 4);
  for (size_t i = 1; i < clusters.size(); ++i) {
    CHECK(clusters[i - 1].size >= clusters[i].size);
  }
}

TEST_CASE("dual script detection on dictionary-style prompts") {
  DualScriptVerdict v = detect_dual_script("竹南鎮（Tik-lâm-tìn）");
  CHECK(v.dual);
  CHECK(v.base_script == uni::Script::Han);
  CHECK(v.paren_script == uni::Script::Latin);

  // Multi-variant parenthetical, with a superscript-n code point.
  v = detect_dual_script(
      "竹坑口（Tik-khinn-kháu | Tek-khiⁿ-kháu）");
  CHECK(v.dual);
  CHECK(v.base_script == uni::Script::Han);
  CHECK(v.paren_script == uni::Script::Latin);

  CHECK_FALSE(detect_dual_script("hello (world)").dual);
  CHECK_FALSE(detect_dual_script("plain sentence").dual);
  CHECK_FALSE(detect_dual_script("(only parens)").dual);
  CHECK_FALSE(detect_dual_script("竹南鎮").dual);
}

TEST_CASE("dual script detection ignores paren style and outer whitespace") {
  const char* ascii = "竹南鎮(Tik-lâm-tìn)";
  const char* fullwidth = "竹南鎮（Tik-lâm-tìn）";
  const char* padded = "  竹南鎮(Tik-lâm-tìn)  ";
  CHECK(detect_dual_script(ascii).dual);
  CHECK(detect_dual_script(fullwidth).dual);
  CHECK(detect_dual_script(padded).dual);
  CHECK(strip_cross_script_parenthetical(ascii) == "竹南鎮");
  CHECK(strip_cross_script_parenthetical(fullwidth) == "竹南鎮");
  CHECK(strip_cross_script_parenthetical("hello (world)") == "hello (world)");
}

TEST_CASE("cyrillic base with latin romanization is dual script") {
  CHECK(detect_dual_script("Београд (Beograd)").dual);
}

TEST_CASE("prompt shape: exact duplicate fraction") {
  std::vector<std::string> prompts = {"a b", "a b", "c"};
  PromptShapeStats s = prompt_shape_stats(prompts);
  CHECK(s.exact_duplicate_fraction == doctest::Approx(2.0 / 3.0));
  CHECK(s.counting_mode == TokenizerMode::Whitespace);
  CHECK(s.n == 3);
}

TEST_CASE("prompt shape: script-stripped duplicates collapse romanization variants") {
  std::vector<std::string> prompts = {
      "竹南鎮（Tek-lâm-tìn）",
      "竹南鎮（Tik-lâm-tìn）",
      "竹仔蓮（Tik-á-nâ）",
  };
  PromptShapeStats s = prompt_shape_stats(prompts);
  CHECK(s.exact_duplicate_fraction == 0.0);
  CHECK(s.script_stripped_duplicate_fraction == doctest::Approx(2.0 / 3.0));
  CHECK(s.dual_script_fraction == doctest::Approx(1.0));
}

TEST_CASE("prompt shape: dictionary-style corpora have tiny medians") {
  std::vector<std::string> prompts;
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    std::string p = "word" + std::to_string(i);
    if (rng() % 2 == 0) p += " extra";
    prompts.push_back(p);
  }
  PromptShapeStats s = prompt_shape_stats(prompts);
  CHECK(s.median_word_count <= 2.0);
  CHECK(s.median_char_count <= 12.0);
}

TEST_CASE("prompt shape fractions are permutation invariant") {
  std::vector<std::string> prompts = {
      "one two three", "one two three", "four five", "six", "six",
      "竹南鎮（Tik-lâm-tìn）", "seven eight nine ten"};
  PromptShapeStats a = prompt_shape_stats(prompts);
  std::mt19937_64 rng(12);
  std::shuffle(prompts.begin(), prompts.end(), rng);
  PromptShapeStats b = prompt_shape_stats(prompts);
  CHECK(a.exact_duplicate_fraction == b.exact_duplicate_fraction);
  CHECK(a.script_stripped_duplicate_fraction ==
        b.script_stripped_duplicate_fraction);
  CHECK(a.dual_script_fraction == b.dual_script_fraction);
  CHECK(a.median_word_count == b.median_word_count);
  CHECK(a.median_char_count == b.median_char_count);
}

TEST_CASE("han-dominant corpora switch to per-character counting") {
  std::vector<std::string> prompts = {"竹南鎮", "竹東",
                                      "竹田鄉"};
  PromptShapeStats s = prompt_shape_stats(prompts);
  CHECK(s.counting_mode == TokenizerMode::PerCharacterCJK);
  CHECK(s.median_word_count == doctest::Approx(3.0));

  CHECK_THROWS_AS(prompt_shape_stats(std::vector<std::string>{}),
                  EmptyInputError);
}

TEST_CASE("edit distance and similarity helpers") {
  CHECK(normalized_similarity("abc", "abc") == doctest::Approx(1.0));
  CHECK(normalized_similarity("", "") == doctest::Approx(1.0));
  CHECK(normalized_similarity("abc", "") == doctest::Approx(0.0));
  CHECK(normalized_similarity("kitten", "sitting") ==
        doctest::Approx(1.0 - 3.0 / 7.0));
}

TEST_CASE("per-character mode treats kana like han") {
  auto toks = tokenize("かなカナ", TokenizerMode::PerCharacterCJK);
  CHECK(toks.size() == 4);
  // Hangul stays a whitespace-run token.
  toks = tokenize("한국어 ok", TokenizerMode::PerCharacterCJK);
  CHECK(toks.size() == 2);
}
