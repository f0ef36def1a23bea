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
// Per-utterance audio statistics: a deterministic energy VAD (frame RMS
// against a percentile noise floor plus margin, with gap/island smoothing),
// a segmentation-based SNR estimate, and duration distribution stats.

#ifndef VOXAUDIT_AUDIO_METRICS_HPP_
#define VOXAUDIT_AUDIO_METRICS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "voxaudit/error.hpp"

namespace voxaudit {

struct VadConfig {
  double frame_ms = 25.0;
  double hop_ms = 10.0;
  double relative_margin_db = 12.0;   // above the percentile noise floor
  double absolute_floor_dbfs = -60.0;
  double min_speech_ms = 100.0;       // shorter speech islands are dropped
  double max_gap_ms = 150.0;          // shorter non-speech gaps are merged
  double noise_floor_percentile = 0.20;

  void validate() const {
    if (!(hop_ms > 0) || !(frame_ms >= hop_ms)) {
      throw ConfigError("vad: need frame_ms >= hop_ms > 0");
    }
    if (!(noise_floor_percentile > 0) || !(noise_floor_percentile < 1)) {
      throw ConfigError("vad: noise_floor_percentile must be in (0,1)");
    }
    if (!(relative_margin_db > 0)) {
      throw ConfigError("vad: relative_margin_db must be positive");
    }
    if (min_speech_ms < 0 || max_gap_ms < 0) {
      throw ConfigError("vad: smoothing windows must be non-negative");
    }
  }
};

struct SpeechSegment {
  double start_s = 0.0;
  double end_s = 0.0;
};

struct VadSegmentation {
  std::vector<bool> frame_decisions;  // post-smoothing, one per analysis frame
  double frame_s = 0.0;
  double hop_s = 0.0;
  double speech_s = 0.0;
  double total_s = 0.0;
  double speech_proportion = 0.0;
  std::vector<SpeechSegment> segments;  // disjoint, sorted, within [0,total_s]
};

// Percentile by linear interpolation between order statistics (inclusive).
// `sorted` must be ascending and non-empty.
inline double percentile_sorted(std::span<const double> sorted, double p) {
  const size_t n = sorted.size();
  if (n == 1) return sorted[0];
  double h = p * static_cast<double>(n - 1);
  size_t lo = static_cast<size_t>(h);
  if (lo >= n - 1) return sorted[n - 1];
  double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

namespace detail {

// Frame mean-square energies via a prefix sum over x^2. Throws on NaN/Inf.
inline std::vector<double> frame_mean_squares(std::span<const double> samples,
                                              size_t frame_len, size_t hop) {
  std::vector<double> prefix(samples.size() + 1, 0.0);
  for (size_t i = 0; i < samples.size(); ++i) {
    double x = samples[i];
    if (!std::isfinite(x)) {
      throw InvalidAudioError("non-finite sample at index " +
                              std::to_string(i));
    }
    prefix[i + 1] = prefix[i] + x * x;
  }
  const size_t n_frames = (samples.size() - frame_len) / hop + 1;
  std::vector<double> ms(n_frames);
  for (size_t f = 0; f < n_frames; ++f) {
    size_t start = f * hop;
    ms[f] = (prefix[start + frame_len] - prefix[start]) /
            static_cast<double>(frame_len);
  }
  return ms;
}

inline double power_db(double mean_square) {
  // Digital silence clamps to -300 dB instead of -inf.
  return 10.0 * std::log10(std::max(mean_square, 1e-30));
}

}  // namespace detail

// Labels each frame speech/non-speech, then smooths: gaps shorter than
// max_gap_ms between speech islands are merged first, then islands still
// shorter than min_speech_ms are dropped. Merging precedes dropping so that
// dense bursts of short voiced frames survive as one span; this order also
// keeps the result monotone in the detection threshold.
inline VadSegmentation segment_speech(std::span<const double> samples,
                                      int sample_rate,
                                      const VadConfig& config = {}) {
  config.validate();
  if (sample_rate < 8000) {
    throw ConfigError("sample rate below 8000 Hz: " +
                      std::to_string(sample_rate));
  }
  const size_t frame_len =
      static_cast<size_t>(config.frame_ms * sample_rate / 1000.0);
  const size_t hop = static_cast<size_t>(config.hop_ms * sample_rate / 1000.0);
  if (samples.size() < frame_len) {
    throw TooShortAudioError("audio shorter than one frame (" +
                             std::to_string(samples.size()) + " samples)");
  }

  std::vector<double> ms = detail::frame_mean_squares(samples, frame_len, hop);
  const size_t n_frames = ms.size();
  std::vector<double> db(n_frames);
  for (size_t f = 0; f < n_frames; ++f) db[f] = detail::power_db(ms[f]);

  std::vector<double> sorted_db = db;
  std::sort(sorted_db.begin(), sorted_db.end());
  double noise_floor = percentile_sorted(sorted_db, config.noise_floor_percentile);
  double threshold =
      std::max(noise_floor + config.relative_margin_db, config.absolute_floor_dbfs);

  std::vector<bool> speech(n_frames);
  for (size_t f = 0; f < n_frames; ++f) speech[f] = db[f] > threshold;

  const size_t max_gap_frames =
      static_cast<size_t>(config.max_gap_ms / config.hop_ms);
  const size_t min_speech_frames =
      static_cast<size_t>(std::ceil(config.min_speech_ms / config.hop_ms));

  // Merge short gaps.
  long last_speech = -1;
  for (size_t f = 0; f < n_frames; ++f) {
    if (!speech[f]) continue;
    if (last_speech >= 0) {
      size_t gap = f - static_cast<size_t>(last_speech) - 1;
      if (gap > 0 && gap < max_gap_frames) {
        for (size_t g = static_cast<size_t>(last_speech) + 1; g < f; ++g) {
          speech[g] = true;
        }
      }
    }
    last_speech = static_cast<long>(f);
  }
  // Drop short islands.
  size_t f = 0;
  while (f < n_frames) {
    if (!speech[f]) {
      ++f;
      continue;
    }
    size_t start = f;
    while (f < n_frames && speech[f]) ++f;
    if (f - start < min_speech_frames) {
      for (size_t g = start; g < f; ++g) speech[g] = false;
    }
  }

  VadSegmentation seg;
  seg.frame_decisions = speech;
  seg.frame_s = static_cast<double>(frame_len) / sample_rate;
  seg.hop_s = static_cast<double>(hop) / sample_rate;
  seg.total_s = static_cast<double>(samples.size()) / sample_rate;
  size_t n_speech = 0;
  f = 0;
  while (f < n_frames) {
    if (!speech[f]) {
      ++f;
      continue;
    }
    size_t start = f;
    while (f < n_frames && speech[f]) ++f;
    n_speech += f - start;
    seg.segments.push_back({static_cast<double>(start) * seg.hop_s,
                            static_cast<double>(f) * seg.hop_s});
  }
  seg.speech_s = static_cast<double>(n_speech) * seg.hop_s;
  seg.speech_proportion = seg.total_s > 0 ? seg.speech_s / seg.total_s : 0.0;
  return seg;
}

struct SnrEstimate {
  enum class Status { Ok, NoSpeech, NoNoiseReference };
  Status status = Status::Ok;
  double db = 0.0;  // meaningful only when status == Ok

  static const char* status_name(Status s) {
    switch (s) {
      case Status::Ok: return "ok";
      case Status::NoSpeech: return "no-speech";
      case Status::NoNoiseReference: return "no-noise-reference";
    }
    return "ok";
  }
};

// 10*log10(mean speech-frame power / mean non-speech-frame power) over the
// smoothed frame decisions. `segmentation` must come from the same samples.
inline SnrEstimate estimate_snr(std::span<const double> samples,
                                int sample_rate,
                                const VadSegmentation& segmentation) {
  const size_t frame_len =
      static_cast<size_t>(std::llround(segmentation.frame_s * sample_rate));
  const size_t hop =
      static_cast<size_t>(std::llround(segmentation.hop_s * sample_rate));
  std::vector<double> ms = detail::frame_mean_squares(samples, frame_len, hop);
  if (ms.size() != segmentation.frame_decisions.size()) {
    throw InvalidAudioError("segmentation does not match samples");
  }
  double speech_power = 0.0, noise_power = 0.0;
  size_t n_speech = 0, n_noise = 0;
  for (size_t f = 0; f < ms.size(); ++f) {
    if (segmentation.frame_decisions[f]) {
      speech_power += ms[f];
      ++n_speech;
    } else {
      noise_power += ms[f];
      ++n_noise;
    }
  }
  if (n_speech == 0) return {SnrEstimate::Status::NoSpeech, 0.0};
  if (n_noise == 0) return {SnrEstimate::Status::NoNoiseReference, 0.0};
  speech_power /= static_cast<double>(n_speech);
  noise_power /= static_cast<double>(n_noise);
  return {SnrEstimate::Status::Ok,
          10.0 * std::log10(std::max(speech_power, 1e-30) /
                            std::max(noise_power, 1e-30))};
}

struct DurationStats {
  size_t n = 0;
  double median_s = 0.0;
  double p99_s = 0.0;
  double mean_s = 0.0;
  double min_s = 0.0;
  double max_s = 0.0;
  double under_10s_fraction = 0.0;
};

inline DurationStats duration_stats(std::span<const double> durations) {
  if (durations.empty()) {
    throw EmptyInputError("duration_stats on empty list");
  }
  std::vector<double> sorted(durations.begin(), durations.end());
  for (double d : sorted) {
    if (!std::isfinite(d) || !(d > 0)) {
      throw InvalidAudioError("duration must be finite and positive");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  DurationStats stats;
  stats.n = sorted.size();
  stats.median_s = percentile_sorted(sorted, 0.5);
  stats.p99_s = percentile_sorted(sorted, 0.99);
  stats.min_s = sorted.front();
  stats.max_s = sorted.back();
  double sum = 0.0;
  size_t under_10 = 0;
  for (double d : sorted) {
    sum += d;
    if (d < 10.0) ++under_10;
  }
  stats.mean_s = sum / static_cast<double>(stats.n);
  stats.under_10s_fraction =
      static_cast<double>(under_10) / static_cast<double>(stats.n);
  return stats;
}

inline double usable_hours(double total_hours, double speech_proportion) {
  return total_hours * speech_proportion;
}

}  // namespace voxaudit

#endif  // VOXAUDIT_AUDIO_METRICS_HPP_
