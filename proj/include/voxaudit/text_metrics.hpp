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
// Text-side prompt metrics: tokenization, template-cluster detection via
// normalized-prefix bucketing, dual-script (base + romanization) detection,
// and duplicate/shape statistics.

#ifndef VOXAUDIT_TEXT_METRICS_HPP_
#define VOXAUDIT_TEXT_METRICS_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "voxaudit/audio_metrics.hpp"  // percentile_sorted
#include "voxaudit/error.hpp"
#include "voxaudit/unicode.hpp"

namespace voxaudit {

enum class TokenizerMode { Whitespace, PerCharacterCJK };

inline const char* tokenizer_mode_name(TokenizerMode m) {
  return m == TokenizerMode::Whitespace ? "whitespace" : "per_character_cjk";
}

namespace detail {

inline std::string finish_token(std::vector<uni::CodePoint>& run) {
  // Strip leading/trailing punctuation, keep interior (hyphens, apostrophes).
  size_t lo = 0, hi = run.size();
  while (lo < hi && uni::is_punct(run[lo])) ++lo;
  while (hi > lo && uni::is_punct(run[hi - 1])) --hi;
  std::string out;
  for (size_t i = lo; i < hi; ++i) uni::append_utf8(out, run[i]);
  run.clear();
  return out;
}

}  // namespace detail

// Whitespace mode splits on Unicode whitespace and strips edge punctuation
// per token. PerCharacterCJK yields one token per Han/Kana character and
// whitespace-splits embedded non-CJK runs. Both modes lowercase.
inline std::vector<std::string> tokenize(std::string_view text,
                                         TokenizerMode mode) {
  std::vector<uni::CodePoint> cps = uni::decode_utf8(text);
  std::vector<std::string> tokens;
  std::vector<uni::CodePoint> run;
  auto flush = [&] {
    if (run.empty()) return;
    std::string tok = detail::finish_token(run);
    if (!tok.empty()) tokens.push_back(std::move(tok));
  };
  for (uni::CodePoint raw : cps) {
    uni::CodePoint c = uni::to_lower(raw);
    if (uni::is_space(c)) {
      flush();
    } else if (mode == TokenizerMode::PerCharacterCJK && uni::is_han_or_kana(c)) {
      flush();
      std::string tok;
      uni::append_utf8(tok, c);
      tokens.push_back(std::move(tok));
    } else {
      run.push_back(c);
    }
  }
  flush();
  return tokens;
}

// Lowercases, removes punctuation outright, and collapses whitespace runs.
inline std::string normalize_sentence(std::string_view text) {
  std::vector<uni::CodePoint> cps = uni::decode_utf8(text);
  std::string out;
  bool pending_space = false;
  for (uni::CodePoint raw : cps) {
    uni::CodePoint c = uni::to_lower(raw);
    if (uni::is_punct(c)) continue;
    if (uni::is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    uni::append_utf8(out, c);
  }
  return out;
}

// Levenshtein distance over code points.
inline size_t edit_distance_u32(const std::vector<uni::CodePoint>& a,
                                const std::vector<uni::CodePoint>& b) {
  const size_t n = a.size(), m = b.size();
  std::vector<size_t> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = j;
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= m; ++j) {
      size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

// 1 - dist/maxlen; two empty strings are identical.
inline double normalized_similarity(std::string_view a, std::string_view b) {
  std::vector<uni::CodePoint> ua = uni::decode_utf8(a);
  std::vector<uni::CodePoint> ub = uni::decode_utf8(b);
  size_t maxlen = std::max(ua.size(), ub.size());
  if (maxlen == 0) return 1.0;
  return 1.0 -
         static_cast<double>(edit_distance_u32(ua, ub)) /
             static_cast<double>(maxlen);
}

struct TemplateParams {
  size_t k_prefix = 4;
  size_t min_cluster = 20;
  double min_similarity = 0.7;
  size_t similarity_sample = 50;  // pairwise-similarity sample cap
  uint64_t seed = 0;
};

struct TemplateCluster {
  std::vector<std::string> key_prefix;  // normalized leading tokens
  size_t size = 0;
  std::vector<std::string> sample_sentences;  // up to 10 originals
  double mean_similarity = 0.0;
};

// Buckets sentences by their first k_prefix normalized tokens; a bucket is a
// template cluster when it is large enough and a deterministic sample of its
// members has high mean pairwise edit similarity. Buckets partition the
// input, so clusters are disjoint by construction.
inline std::vector<TemplateCluster> detect_templates(
    std::span<const std::string> transcripts, const TemplateParams& params = {}) {
  struct Bucket {
    std::vector<size_t> members;
  };
  std::map<std::vector<std::string>, Bucket> buckets;
  std::vector<std::string> normalized(transcripts.size());
  for (size_t i = 0; i < transcripts.size(); ++i) {
    normalized[i] = normalize_sentence(transcripts[i]);
    std::vector<std::string> toks = tokenize(normalized[i], TokenizerMode::Whitespace);
    if (toks.empty()) continue;
    if (toks.size() > params.k_prefix) toks.resize(params.k_prefix);
    buckets[std::move(toks)].members.push_back(i);
  }

  std::vector<TemplateCluster> clusters;
  for (auto& [key, bucket] : buckets) {
    if (bucket.members.size() < std::max<size_t>(params.min_cluster, 1)) {
      continue;
    }
    std::vector<size_t> sample = bucket.members;
    if (sample.size() > params.similarity_sample) {
      std::mt19937_64 rng(params.seed);
      for (size_t i = 0; i < params.similarity_sample; ++i) {
        size_t j = i + static_cast<size_t>(rng() % (sample.size() - i));
        std::swap(sample[i], sample[j]);
      }
      sample.resize(params.similarity_sample);
    }
    double sim_sum = 0.0;
    size_t pairs = 0;
    for (size_t i = 0; i < sample.size(); ++i) {
      for (size_t j = i + 1; j < sample.size(); ++j) {
        sim_sum += normalized_similarity(normalized[sample[i]],
                                         normalized[sample[j]]);
        ++pairs;
      }
    }
    double mean_sim = pairs > 0 ? sim_sum / static_cast<double>(pairs) : 1.0;
    if (mean_sim < params.min_similarity) continue;

    TemplateCluster cluster;
    cluster.key_prefix = key;
    cluster.size = bucket.members.size();
    cluster.mean_similarity = mean_sim;
    for (size_t i = 0; i < bucket.members.size() && i < 10; ++i) {
      cluster.sample_sentences.push_back(transcripts[bucket.members[i]]);
    }
    clusters.push_back(std::move(cluster));
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const TemplateCluster& a, const TemplateCluster& b) {
              if (a.size != b.size) return a.size > b.size;
              return a.key_prefix < b.key_prefix;
            });
  return clusters;
}

// --------------------------------------------------------------------------
// Dual-script prompts: a base-script run followed by a parenthesized run
// whose letters are predominantly in a different script, the shape of
// dictionary-style "word (romanization)" entries.

struct DualScriptVerdict {
  bool dual = false;
  uni::Script base_script = uni::Script::Unknown;
  uni::Script paren_script = uni::Script::Unknown;
};

namespace detail {

inline uni::Script dominant_script(const std::vector<uni::CodePoint>& cps,
                                   size_t* total_letters_out = nullptr,
                                   size_t* dominant_count_out = nullptr) {
  std::array<size_t, uni::kNumScripts> counts{};
  size_t total = 0;
  for (uni::CodePoint c : cps) {
    uni::Script s = uni::script_of(c);
    if (s == uni::Script::Unknown) continue;
    ++counts[static_cast<size_t>(s)];
    ++total;
  }
  uni::Script best = uni::Script::Unknown;
  size_t best_count = 0;
  for (size_t i = 0; i < uni::kNumScripts; ++i) {
    if (counts[i] > best_count) {  // enum order is alphabetical; ties keep first
      best_count = counts[i];
      best = static_cast<uni::Script>(i);
    }
  }
  if (total_letters_out) *total_letters_out = total;
  if (dominant_count_out) *dominant_count_out = best_count;
  return best;
}

inline bool is_open_paren(uni::CodePoint c) { return c == '(' || c == 0xFF08; }
inline bool is_close_paren(uni::CodePoint c) { return c == ')' || c == 0xFF09; }

// Splits "base（paren）" at the final parenthesized run; returns false when
// the text does not end with one.
inline bool split_trailing_parenthetical(std::string_view text,
                                         std::vector<uni::CodePoint>& base,
                                         std::vector<uni::CodePoint>& paren) {
  std::vector<uni::CodePoint> cps = uni::decode_utf8(text);
  size_t end = cps.size();
  while (end > 0 && uni::is_space(cps[end - 1])) --end;
  if (end == 0 || !is_close_paren(cps[end - 1])) return false;
  size_t open = end - 1;
  while (open > 0 && !is_open_paren(cps[open - 1])) --open;
  if (open == 0) return false;  // no opening paren
  base.assign(cps.begin(), cps.begin() + static_cast<long>(open - 1));
  paren.assign(cps.begin() + static_cast<long>(open), cps.begin() + static_cast<long>(end - 1));
  return true;
}

}  // namespace detail

inline DualScriptVerdict detect_dual_script(std::string_view text) {
  std::vector<uni::CodePoint> base, paren;
  if (!detail::split_trailing_parenthetical(text, base, paren)) return {};
  size_t base_total = 0, paren_total = 0, paren_dom_count = 0;
  uni::Script base_script = detail::dominant_script(base, &base_total);
  uni::Script paren_script =
      detail::dominant_script(paren, &paren_total, &paren_dom_count);
  if (base_total == 0 || paren_total == 0) return {};
  if (paren_script == base_script) return {};
  if (static_cast<double>(paren_dom_count) <
      0.9 * static_cast<double>(paren_total)) {
    return {};
  }
  return {true, base_script, paren_script};
}

// Removes the trailing cross-script parenthetical when present, so that
// "word（romanization）" variants collapse onto the same base text.
inline std::string strip_cross_script_parenthetical(std::string_view text) {
  if (!detect_dual_script(text).dual) return std::string(text);
  std::vector<uni::CodePoint> base, paren;
  detail::split_trailing_parenthetical(text, base, paren);
  while (!base.empty() && uni::is_space(base.back())) base.pop_back();
  return uni::encode_utf8(base);
}

// --------------------------------------------------------------------------
// Prompt shape statistics.

struct PromptShapeStats {
  size_t n = 0;
  TokenizerMode counting_mode = TokenizerMode::Whitespace;
  double median_word_count = 0.0;
  double median_char_count = 0.0;
  double dual_script_fraction = 0.0;
  double exact_duplicate_fraction = 0.0;
  double script_stripped_duplicate_fraction = 0.0;
};

// Word-vs-character counting switches to per-character mode when at least
// half of all letters in a bounded sample are Han.
inline bool han_dominant(std::span<const std::string> transcripts,
                         size_t sample_limit = 1000) {
  size_t letters = 0, han = 0;
  size_t n = std::min(transcripts.size(), sample_limit);
  for (size_t i = 0; i < n; ++i) {
    for (uni::CodePoint c : uni::decode_utf8(transcripts[i])) {
      if (!uni::is_letter(c)) continue;
      ++letters;
      if (uni::is_han(c)) ++han;
    }
  }
  return letters > 0 &&
         static_cast<double>(han) >= 0.5 * static_cast<double>(letters);
}

namespace detail {

inline double duplicate_fraction(const std::vector<std::string>& keys) {
  std::unordered_map<std::string, size_t> counts;
  for (const std::string& k : keys) ++counts[k];
  size_t members = 0;
  for (const auto& [k, c] : counts) {
    if (c >= 2) members += c;
  }
  return static_cast<double>(members) / static_cast<double>(keys.size());
}

inline double median_of_counts(std::vector<double>& values) {
  std::sort(values.begin(), values.end());
  return percentile_sorted(values, 0.5);
}

}  // namespace detail

inline PromptShapeStats prompt_shape_stats(
    std::span<const std::string> transcripts, std::string_view locale = {}) {
  (void)locale;  // reserved; counting mode is decided from the text itself
  if (transcripts.empty()) {
    throw EmptyInputError("prompt_shape_stats on empty list");
  }
  PromptShapeStats stats;
  stats.n = transcripts.size();
  stats.counting_mode = han_dominant(transcripts)
                            ? TokenizerMode::PerCharacterCJK
                            : TokenizerMode::Whitespace;

  std::vector<double> word_counts, char_counts;
  word_counts.reserve(stats.n);
  char_counts.reserve(stats.n);
  std::vector<std::string> exact_keys, stripped_keys;
  exact_keys.reserve(stats.n);
  stripped_keys.reserve(stats.n);
  size_t dual = 0;
  for (const std::string& t : transcripts) {
    word_counts.push_back(
        static_cast<double>(tokenize(t, stats.counting_mode).size()));
    char_counts.push_back(static_cast<double>(uni::decode_utf8(t).size()));
    if (detect_dual_script(t).dual) ++dual;
    exact_keys.push_back(normalize_sentence(t));
    stripped_keys.push_back(
        normalize_sentence(strip_cross_script_parenthetical(t)));
  }
  stats.median_word_count = detail::median_of_counts(word_counts);
  stats.median_char_count = detail::median_of_counts(char_counts);
  stats.dual_script_fraction =
      static_cast<double>(dual) / static_cast<double>(stats.n);
  stats.exact_duplicate_fraction = detail::duplicate_fraction(exact_keys);
  stats.script_stripped_duplicate_fraction =
      detail::duplicate_fraction(stripped_keys);
  return stats;
}

}  // namespace voxaudit

#endif  // VOXAUDIT_TEXT_METRICS_HPP_
