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
// Unicode-script profiling: tallies letters per script, flags mixed-script
// text, and checks a corpus against an expected script.

#ifndef VOXAUDIT_SCRIPT_HPP_
#define VOXAUDIT_SCRIPT_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "voxaudit/error.hpp"
#include "voxaudit/unicode.hpp"

namespace voxaudit {

struct ScriptProfile {
  enum class Verdict { SingleScript, MixedScript, NoLetters };

  std::map<uni::Script, size_t> per_script_letter_counts;  // letters only
  size_t total_letters = 0;
  uni::Script dominant = uni::Script::Unknown;  // Unknown == "none"
  double secondary_fraction = 0.0;  // letters outside the dominant script
  Verdict verdict = Verdict::NoLetters;

  static const char* verdict_name(Verdict v) {
    switch (v) {
      case Verdict::SingleScript: return "single_script";
      case Verdict::MixedScript: return "mixed_script";
      case Verdict::NoLetters: return "no_letters";
    }
    return "no_letters";
  }
};

// Ties on the max count resolve alphabetically by script name (the Script
// enum is declared in alphabetical order).
inline ScriptProfile detect_script(std::string_view text,
                                   double mixed_threshold = 0.10) {
  ScriptProfile profile;
  for (uni::CodePoint c : uni::decode_utf8(text)) {
    uni::Script s = uni::script_of(c);
    if (s == uni::Script::Unknown) continue;
    ++profile.per_script_letter_counts[s];
    ++profile.total_letters;
  }
  if (profile.total_letters == 0) return profile;
  size_t best = 0;
  for (const auto& [script, count] : profile.per_script_letter_counts) {
    if (count > best) {
      best = count;
      profile.dominant = script;
    }
  }
  profile.secondary_fraction =
      static_cast<double>(profile.total_letters - best) /
      static_cast<double>(profile.total_letters);
  profile.verdict = profile.secondary_fraction > mixed_threshold
                        ? ScriptProfile::Verdict::MixedScript
                        : ScriptProfile::Verdict::SingleScript;
  return profile;
}

struct ScriptOffender {
  size_t index = 0;
  std::string text;
};

struct ScriptConformance {
  std::string expected_script;
  size_t n = 0;
  size_t conforming = 0;
  double fraction = 0.0;
  std::vector<ScriptOffender> offenders;  // deterministic sample, by index
};

// A sentence conforms when its dominant script matches the expectation and
// its profile is single-script. Up to `max_offenders` counterexamples are
// sampled with the given seed and reported in index order.
inline ScriptConformance check_script_expectation(
    std::span<const std::string> sentences, std::string_view expected_script,
    double mixed_threshold = 0.10, uint64_t seed = 0,
    size_t max_offenders = 20) {
  auto expected = uni::script_from_name(expected_script);
  if (!expected) {
    throw ConfigError("unknown expected script: " + std::string(expected_script));
  }
  ScriptConformance result;
  result.expected_script = std::string(expected_script);
  result.n = sentences.size();
  std::vector<size_t> offender_indices;
  for (size_t i = 0; i < sentences.size(); ++i) {
    ScriptProfile p = detect_script(sentences[i], mixed_threshold);
    if (p.verdict == ScriptProfile::Verdict::SingleScript &&
        p.dominant == *expected) {
      ++result.conforming;
    } else {
      offender_indices.push_back(i);
    }
  }
  result.fraction = result.n == 0 ? 0.0
                                  : static_cast<double>(result.conforming) /
                                        static_cast<double>(result.n);
  if (offender_indices.size() > max_offenders) {
    std::mt19937_64 rng(seed);
    for (size_t i = 0; i < max_offenders; ++i) {
      size_t j = i + static_cast<size_t>(rng() % (offender_indices.size() - i));
      std::swap(offender_indices[i], offender_indices[j]);
    }
    offender_indices.resize(max_offenders);
    std::sort(offender_indices.begin(), offender_indices.end());
  }
  for (size_t idx : offender_indices) {
    result.offenders.push_back({idx, sentences[idx]});
  }
  return result;
}

}  // namespace voxaudit

#endif  // VOXAUDIT_SCRIPT_HPP_
