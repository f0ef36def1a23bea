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
// Token alignment and WER with substitution/deletion/insertion breakdown.
// Unit costs; the backtrace prefers match > substitution > deletion >
// insertion scanning from the sequence ends, so alignments and therefore
// the S/D/I decomposition are deterministic.

#ifndef VOXAUDIT_WER_HPP_
#define VOXAUDIT_WER_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "voxaudit/error.hpp"

namespace voxaudit {

enum class EditOp { Match, Sub, Del, Ins };

struct AlignmentStep {
  EditOp op = EditOp::Match;
  std::string ref_token;  // empty for insertions
  std::string hyp_token;  // empty for deletions
};

struct AlignmentResult {
  size_t n_ref = 0;
  size_t n_hyp = 0;
  size_t hits = 0;
  size_t substitutions = 0;
  size_t deletions = 0;
  size_t insertions = 0;
  // Unset when n_ref == 0 and the hypothesis is non-empty (undefined WER).
  std::optional<double> wer;
  std::vector<AlignmentStep> alignment;

  size_t edit_distance() const { return substitutions + deletions + insertions; }
};

inline AlignmentResult align(std::span<const std::string> ref,
                             std::span<const std::string> hyp) {
  const size_t n = ref.size(), m = hyp.size();
  // d[(m+1)*i + j] = edit distance between ref[0,i) and hyp[0,j).
  std::vector<size_t> d((n + 1) * (m + 1));
  auto at = [&](size_t i, size_t j) -> size_t& { return d[(m + 1) * i + j]; };
  for (size_t i = 0; i <= n; ++i) at(i, 0) = i;
  for (size_t j = 0; j <= m; ++j) at(0, j) = j;
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      size_t diag = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      size_t del = at(i - 1, j) + 1;
      size_t ins = at(i, j - 1) + 1;
      at(i, j) = std::min({diag, del, ins});
    }
  }

  AlignmentResult result;
  result.n_ref = n;
  result.n_hyp = m;
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] &&
        at(i, j) == at(i - 1, j - 1)) {
      result.alignment.push_back({EditOp::Match, ref[i - 1], hyp[j - 1]});
      ++result.hits;
      --i;
      --j;
    } else if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) + 1) {
      result.alignment.push_back({EditOp::Sub, ref[i - 1], hyp[j - 1]});
      ++result.substitutions;
      --i;
      --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      result.alignment.push_back({EditOp::Del, ref[i - 1], {}});
      ++result.deletions;
      --i;
    } else {
      result.alignment.push_back({EditOp::Ins, {}, hyp[j - 1]});
      ++result.insertions;
      --j;
    }
  }
  std::reverse(result.alignment.begin(), result.alignment.end());
  if (n > 0) {
    result.wer = static_cast<double>(result.edit_distance()) /
                 static_cast<double>(n);
  } else if (m == 0) {
    result.wer = 0.0;
  }
  return result;
}

// Aggregate over a corpus of (ref, hyp) token-sequence pairs. Counts sum;
// WER = sum(S+D+I) / sum(n_ref). Component rates sum to the total WER
// exactly before any display rounding.
struct CorpusWer {
  size_t n_pairs = 0;
  size_t n_ref = 0;
  size_t n_hyp = 0;
  size_t hits = 0;
  size_t substitutions = 0;
  size_t deletions = 0;
  size_t insertions = 0;
  std::optional<double> wer;  // unset when all references are empty
  // ref->hyp substitution histogram, for inspecting orthographic variants.
  std::map<std::pair<std::string, std::string>, size_t> substitution_pairs;

  double sub_rate() const { return rate(substitutions); }
  double del_rate() const { return rate(deletions); }
  double ins_rate() const { return rate(insertions); }

  std::vector<std::pair<std::pair<std::string, std::string>, size_t>>
  top_substitutions(size_t limit) const {
    std::vector<std::pair<std::pair<std::string, std::string>, size_t>> out(
        substitution_pairs.begin(), substitution_pairs.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) {
                       return a.second > b.second;  // count desc, then key asc
                     });
    if (out.size() > limit) out.resize(limit);
    return out;
  }

 private:
  double rate(size_t count) const {
    return n_ref == 0 ? 0.0
                      : static_cast<double>(count) / static_cast<double>(n_ref);
  }
};

using TokenPair = std::pair<std::vector<std::string>, std::vector<std::string>>;

inline CorpusWer corpus_wer(std::span<const TokenPair> pairs) {
  if (pairs.empty()) throw EmptyInputError("corpus_wer on empty list");
  CorpusWer total;
  total.n_pairs = pairs.size();
  for (const TokenPair& p : pairs) {
    AlignmentResult r = align(p.first, p.second);
    total.n_ref += r.n_ref;
    total.n_hyp += r.n_hyp;
    total.hits += r.hits;
    total.substitutions += r.substitutions;
    total.deletions += r.deletions;
    total.insertions += r.insertions;
    for (const AlignmentStep& step : r.alignment) {
      if (step.op == EditOp::Sub) {
        ++total.substitution_pairs[{step.ref_token, step.hyp_token}];
      }
    }
  }
  if (total.n_ref > 0) {
    total.wer = static_cast<double>(total.substitutions + total.deletions +
                                    total.insertions) /
                static_cast<double>(total.n_ref);
  } else if (total.n_hyp == 0) {
    total.wer = 0.0;
  }
  return total;
}

}  // namespace voxaudit

#endif  // VOXAUDIT_WER_HPP_
