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

#include <string>
#include <vector>

#include "voxaudit/script.hpp"

using namespace voxaudit;

TEST_CASE("single-script profiles") {
  ScriptProfile p = detect_script("hello");
  CHECK(p.dominant == uni::Script::Latin);
  CHECK(p.verdict == ScriptProfile::Verdict::SingleScript);
  CHECK(p.total_letters == 5);
  CHECK(p.secondary_fraction == 0.0);

  p = detect_script("привет мир");
  CHECK(p.dominant == uni::Script::Cyrillic);
  CHECK(p.verdict == ScriptProfile::Verdict::SingleScript);
  CHECK(p.total_letters == 9);
}

TEST_CASE("dictionary-style dual prompt profiles as mixed latin") {
  // 3 Han letters, 9 Latin letters; digits/punct/hyphens don't count.
  ScriptProfile p = detect_script("竹南鎮（Tik-lâm-tìn）");
  CHECK(p.total_letters == 12);
  CHECK(p.per_script_letter_counts.at(uni::Script::Han) == 3);
  CHECK(p.per_script_letter_counts.at(uni::Script::Latin) == 9);
  CHECK(p.dominant == uni::Script::Latin);
  CHECK(p.secondary_fraction == doctest::Approx(0.25));
  CHECK(p.verdict == ScriptProfile::Verdict::MixedScript);
}

TEST_CASE("no letters and threshold boundary") {
  ScriptProfile p = detect_script("123 .,!");
  CHECK(p.verdict == ScriptProfile::Verdict::NoLetters);
  CHECK(p.dominant == uni::Script::Unknown);
  CHECK(p.total_letters == 0);

  // 10% secondary exactly is still single-script (strict > threshold).
  std::string s = "я";  // 1 Cyrillic letter
  for (int i = 0; i < 9; ++i) s += "a";
  p = detect_script(s, 0.10);
  CHECK(p.verdict == ScriptProfile::Verdict::SingleScript);
  p = detect_script(s, 0.09);
  CHECK(p.verdict == ScriptProfile::Verdict::MixedScript);
}

TEST_CASE("ties resolve alphabetically by script name") {
  // 2 Cyrillic vs 2 Latin letters: Cyrillic < Latin alphabetically.
  ScriptProfile p = detect_script("ab аб", 0.9);
  CHECK(p.dominant == uni::Script::Cyrillic);
}

TEST_CASE("letter totals match the letter count of the input") {
  std::string mixed = "abc аб 竹 123 ... א";
  size_t expected = 0;
  for (uni::CodePoint c : uni::decode_utf8(mixed)) {
    if (uni::is_letter(c)) ++expected;
  }
  ScriptProfile p = detect_script(mixed);
  CHECK(p.total_letters == expected);
  size_t from_counts = 0;
  for (const auto& [script, count] : p.per_script_letter_counts) {
    from_counts += count;
  }
  CHECK(from_counts == p.total_letters);
}

TEST_CASE("script conformance fractions") {
  std::vector<std::string> all_latin(40, "plain latin text");
  ScriptConformance c = check_script_expectation(all_latin, "Latin");
  CHECK(c.fraction == 1.0);
  CHECK(c.offenders.empty());

  std::vector<std::string> half;
  for (int i = 0; i < 30; ++i) half.push_back("latin sentence");
  for (int i = 0; i < 30; ++i) {
    half.push_back("српски текст");
  }
  c = check_script_expectation(half, "Cyrillic");
  CHECK(c.fraction == doctest::Approx(0.5));
  CHECK(c.n == 60);
  CHECK(c.conforming == 30);

  // Dual-script prompts never conform to a Han expectation.
  std::vector<std::string> dual(25, "竹南鎮（Tik-lâm-tìn）");
  c = check_script_expectation(dual, "Han");
  CHECK(c.fraction == 0.0);
}

TEST_CASE("offender sampling is capped and deterministic") {
  std::vector<std::string> corpus;
  for (int i = 0; i < 100; ++i) {
    corpus.push_back(i % 2 == 0 ? "latin text here"
                                : "кирилица");
  }
  ScriptConformance a = check_script_expectation(corpus, "Latin", 0.10, 7);
  ScriptConformance b = check_script_expectation(corpus, "Latin", 0.10, 7);
  REQUIRE(a.offenders.size() == 20);
  for (size_t i = 0; i < a.offenders.size(); ++i) {
    CHECK(a.offenders[i].index == b.offenders[i].index);
    CHECK(a.offenders[i].index % 2 == 1);  // only Cyrillic rows offend
  }
  for (size_t i = 1; i < a.offenders.size(); ++i) {
    CHECK(a.offenders[i - 1].index < a.offenders[i].index);
  }
}

TEST_CASE("unknown expected script is a configuration error") {
  std::vector<std::string> corpus = {"x"};
  CHECK_THROWS_AS(check_script_expectation(corpus, "Klingon"), ConfigError);
}
