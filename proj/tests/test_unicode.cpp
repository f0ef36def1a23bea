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

#include "voxaudit/unicode.hpp"

using namespace voxaudit;

TEST_CASE("utf8 round trip") {
  std::string s = "héllo 竹南鎮 الذي";
  auto cps = uni::decode_utf8(s);
  CHECK(uni::encode_utf8(cps) == s);
  CHECK(uni::is_valid_utf8(s));
}

TEST_CASE("invalid utf8 is detected and replaced") {
  std::string bad = "ab\xC3(";
  CHECK_FALSE(uni::is_valid_utf8(bad));
  auto cps = uni::decode_utf8(bad);
  REQUIRE(cps.size() == 4);
  CHECK(cps[2] == uni::kReplacementChar);
  // overlong encoding of '/'
  CHECK_FALSE(uni::is_valid_utf8(std::string("\xC0\xAF")));
  // truncated 3-byte sequence
  CHECK_FALSE(uni::is_valid_utf8(std::string("\xE4\xB8")));
}

TEST_CASE("lowercase folding") {
  CHECK(uni::lowercase("HAR JEG DEKKET") == "har jeg dekket");
  CHECK(uni::lowercase("ÒG") == "òg");          // ÒG -> òg
  CHECK(uni::lowercase("FØRST") == "først");    // FØRST
  CHECK(uni::lowercase("ЖИВ") == "жив");  // ЖИВ
  CHECK(uni::lowercase("ΑΩ") == "αω");  // ΑΩ
  CHECK(uni::lowercase("ŠKOLA") == "škola");      // ŠKOLA
  // Han text passes through untouched.
  CHECK(uni::lowercase("竹南鎮") == "竹南鎮");
}

TEST_CASE("script classification") {
  CHECK(uni::script_of(U'a') == uni::Script::Latin);
  CHECK(uni::script_of(U'â') == uni::Script::Latin);   // â
  CHECK(uni::script_of(U'ⁿ') == uni::Script::Latin);   // superscript n
  CHECK(uni::script_of(U'п') == uni::Script::Cyrillic);
  CHECK(uni::script_of(U'ا') == uni::Script::Arabic);
  CHECK(uni::script_of(U'竹') == uni::Script::Han);
  CHECK(uni::script_of(U'あ') == uni::Script::Hiragana);
  CHECK(uni::script_of(U'カ') == uni::Script::Katakana);
  CHECK(uni::script_of(U'가') == uni::Script::Hangul);
  CHECK(uni::script_of(U'ਅ') == uni::Script::Gurmukhi);
  CHECK(uni::script_of(U'ⴰ') == uni::Script::Tifinagh);
  CHECK(uni::script_of(U'ᠠ') == uni::Script::Mongolian);
  CHECK(uni::script_of(U'ߊ') == uni::Script::Nko);
  CHECK(uni::script_of(U'\U0001E900') == uni::Script::Adlam);
  CHECK(uni::script_of(U'क') == uni::Script::Devanagari);
  CHECK(uni::script_of(U'α') == uni::Script::Greek);
  CHECK(uni::script_of(U'א') == uni::Script::Hebrew);
  CHECK(uni::script_of(U'ก') == uni::Script::Thai);
  // Non-letters carry no script.
  CHECK(uni::script_of(U'0') == uni::Script::Unknown);
  CHECK(uni::script_of(U'$') == uni::Script::Unknown);
  CHECK(uni::script_of(U'-') == uni::Script::Unknown);
  CHECK(uni::script_of(U' ') == uni::Script::Unknown);
  CHECK(uni::script_of(U'。') == uni::Script::Unknown);  // 。
}

TEST_CASE("script names round trip") {
  for (size_t i = 0; i < uni::kNumScripts; ++i) {
    auto s = static_cast<uni::Script>(i);
    auto back = uni::script_from_name(uni::script_name(s));
    REQUIRE(back.has_value());
    CHECK(*back == s);
  }
  CHECK_FALSE(uni::script_from_name("Klingon").has_value());
  CHECK_FALSE(uni::script_from_name("none").has_value());
}

TEST_CASE("punctuation and whitespace predicates") {
  for (char c : std::string(".,!?;:()[]{}\"'")) {
    CHECK(uni::is_punct(static_cast<uni::CodePoint>(c)));
  }
  CHECK(uni::is_punct(U'（'));  // （
  CHECK(uni::is_punct(U'）'));  // ）
  CHECK(uni::is_punct(U'。'));  // 。
  CHECK(uni::is_punct(U'’'));  // ’
  CHECK_FALSE(uni::is_punct(U'|'));
  CHECK_FALSE(uni::is_punct(U'$'));
  CHECK_FALSE(uni::is_punct(U'a'));
  CHECK(uni::is_space(U' '));
  CHECK(uni::is_space(U'\t'));
  CHECK(uni::is_space(U'　'));
  CHECK_FALSE(uni::is_space(U'_'));
}
