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
// End-to-end audit: manifest -> per-utterance audio analysis (worker pool,
// merged by record index) -> corpus text metrics and classifiers -> flags.
// Identical inputs and config produce byte-identical reports at any
// parallelism; all aggregation runs in record order.

#ifndef VOXAUDIT_AUDIT_HPP_
#define VOXAUDIT_AUDIT_HPP_

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "voxaudit/audio_metrics.hpp"
#include "voxaudit/config.hpp"
#include "voxaudit/error.hpp"
#include "voxaudit/manifest.hpp"
#include "voxaudit/report.hpp"
#include "voxaudit/script.hpp"
#include "voxaudit/text_metrics.hpp"
#include "voxaudit/variety.hpp"
#include "voxaudit/wav.hpp"

namespace voxaudit {

struct ClassifierInfo {
  const char* id;
  MatchMode mode;
  const char* label_a;
  const char* label_b;
  const MarkerLexicon& (*builtin)();
};

inline const ClassifierInfo* find_classifier(std::string_view id) {
  static constexpr ClassifierInfo kRegistry[] = {
      {"no", MatchMode::WholeWord, "Nynorsk", "Bokmål", &norwegian_lexicon},
      {"ar", MatchMode::Substring, "Fusha", "Dialect", &arabic_lexicon},
      {"yue", MatchMode::Substring, "SWC", "Cantonese", &cantonese_lexicon},
  };
  for (const ClassifierInfo& info : kRegistry) {
    if (id == info.id) return &info;
  }
  return nullptr;
}

namespace detail {

struct AudioOutcome {
  std::optional<double> duration_s;
  std::optional<double> speech_s;
  std::optional<double> total_s;
  std::optional<double> proportion;
  std::optional<SnrEstimate> snr;
  std::optional<std::string> error;
};

inline AudioOutcome analyze_clip(const std::filesystem::path& audio,
                                 const VadConfig& vad,
                                 const AudioDecoder& decoder) {
  AudioOutcome out;
  if (!std::filesystem::exists(audio)) {
    out.error = "audio file missing";
    return out;
  }
  WavData wav;
  try {
    wav = decoder ? decoder(audio) : read_wav(audio);
  } catch (const Error& e) {
    out.error = e.what();
    return out;
  }
  if (wav.samples.empty() || wav.sample_rate <= 0) {
    out.error = "empty audio";
    return out;
  }
  out.duration_s = wav.duration_s();
  try {
    VadSegmentation seg = segment_speech(wav.samples, wav.sample_rate, vad);
    out.speech_s = seg.speech_s;
    out.total_s = seg.total_s;
    out.proportion = seg.speech_proportion;
    out.snr = estimate_snr(wav.samples, wav.sample_rate, seg);
  } catch (const AudioError& e) {
    out.error = e.what();
  }
  return out;
}

inline double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return percentile_sorted(values, 0.5);
}

}  // namespace detail

// Runs the full audit over a manifest. Throws ConfigError/IoError/
// EmptyInputError for unusable setups; per-clip problems are recorded in the
// report instead of aborting.
inline AuditReport run_audit(const std::filesystem::path& manifest_path,
                             const AuditConfig& config,
                             const AudioDecoder& decoder = nullptr) {
  config.validate();

  DatasetManifest manifest = parse_manifest(
      manifest_path, config.source_kind,
      config.column_map.empty() ? nullptr : &config.column_map);

  AuditReport report;
  report.locale = !config.locale.empty() ? config.locale : manifest.locale;
  report.record_count = manifest.records.size();
  report.data_rows = manifest.data_rows;
  report.rejects = manifest.rejects;
  report.config_fingerprint = config_fingerprint(config);

  const size_t n = manifest.records.size();

  if (config.duration_source == "decode_audio" && n > 0) {
    std::filesystem::path root(config.audio_root);
    if (config.audio_root.empty() || !std::filesystem::is_directory(root)) {
      throw ConfigError("audio root is not a directory: " + config.audio_root);
    }
    std::vector<detail::AudioOutcome> outcomes(n);
    const size_t workers =
        std::min<size_t>(static_cast<size_t>(config.parallelism), n);
    std::atomic<size_t> next{0};
    auto work = [&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= n) break;
        outcomes[i] = detail::analyze_clip(
            root / manifest.records[i].audio_path, config.vad, decoder);
      }
    };
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
      for (std::thread& t : pool) t.join();
    }

    // Merge in record order so aggregation is order-deterministic.
    std::vector<double> durations, proportions, snrs;
    double speech_sum = 0.0, total_sum = 0.0;
    SpeechStats speech;
    for (size_t i = 0; i < n; ++i) {
      const detail::AudioOutcome& out = outcomes[i];
      if (out.duration_s) {
        manifest.records[i].duration_s = out.duration_s;
        durations.push_back(*out.duration_s);
      } else {
        ++report.unresolved_durations;
      }
      if (out.proportion) {
        ++speech.n_with_audio;
        speech_sum += *out.speech_s;
        total_sum += *out.total_s;
        proportions.push_back(*out.proportion);
      }
      if (out.snr) {
        switch (out.snr->status) {
          case SnrEstimate::Status::Ok:
            snrs.push_back(out.snr->db);
            break;
          case SnrEstimate::Status::NoSpeech:
            ++speech.snr_no_speech;
            break;
          case SnrEstimate::Status::NoNoiseReference:
            ++speech.snr_no_noise_reference;
            break;
        }
      }
    }
    if (!durations.empty()) {
      report.durations = duration_stats(durations);
      double total_h = 0.0;
      for (double d : durations) total_h += d / 3600.0;
      report.total_hours = total_h;
    }
    if (speech.n_with_audio > 0 && total_sum > 0) {
      speech.overall_proportion = speech_sum / total_sum;
      speech.median_proportion = detail::median_of(proportions);
      double mean = 0.0;
      for (double p : proportions) mean += p;
      speech.mean_proportion = mean / static_cast<double>(proportions.size());
      if (!snrs.empty()) speech.median_snr_db = detail::median_of(snrs);
      report.speech = speech;
      if (report.total_hours) {
        report.usable_hours = usable_hours(*report.total_hours,
                                           speech.overall_proportion);
      }
    }
  } else if (config.duration_source == "sidecar_tsv" && n > 0) {
    DurationSource source{DurationSource::Kind::SidecarTsv,
                          config.sidecar_path};
    std::vector<UnresolvedDuration> unresolved =
        attach_durations(manifest, source);
    report.unresolved_durations = unresolved.size();
    std::vector<double> durations;
    for (const UtteranceRecord& rec : manifest.records) {
      if (rec.duration_s) durations.push_back(*rec.duration_s);
    }
    if (!durations.empty()) {
      report.durations = duration_stats(durations);
      double total_h = 0.0;
      for (double d : durations) total_h += d / 3600.0;
      report.total_hours = total_h;
    }
  }

  report.speakers = speaker_stats(manifest.records);

  if (n > 0) {
    std::vector<std::string> transcripts;
    transcripts.reserve(n);
    for (const UtteranceRecord& rec : manifest.records) {
      transcripts.push_back(rec.transcript);
    }

    report.prompts = prompt_shape_stats(transcripts, report.locale);
    TokenCountStats tokens;
    tokens.mode = report.prompts->counting_mode;
    for (const std::string& t : transcripts) {
      tokens.total_tokens += tokenize(t, tokens.mode).size();
    }
    report.tokens = tokens;

    TemplateParams tp = config.template_params;
    tp.seed = config.seed;
    report.template_clusters = detect_templates(transcripts, tp);

    for (const ClassifierSpec& spec : config.classifiers) {
      const ClassifierInfo* info = find_classifier(spec.id);
      if (info == nullptr) throw ConfigError("unknown classifier id: " + spec.id);
      MarkerLexicon file_lexicon;
      const MarkerLexicon* lexicon = nullptr;
      if (spec.lexicon_path.empty()) {
        lexicon = &info->builtin();
      } else {
        file_lexicon = load_lexicon(spec.lexicon_path);
        lexicon = &file_lexicon;
      }
      VarietyTallyEntry entry;
      entry.classifier_id = spec.id;
      entry.lexicon_name = lexicon->name;
      entry.label_a = info->label_a;
      entry.label_b = info->label_b;
      entry.tally = classify_corpus(transcripts, *lexicon, info->mode);
      report.variety_tallies.push_back(std::move(entry));

      if (!spec.expected_script.empty()) {
        report.script_conformance.push_back(check_script_expectation(
            transcripts, spec.expected_script, config.script_mixed_threshold,
            config.seed));
      }
    }
  }

  report.flags = apply_flags(report, config.thresholds, &report.skipped_checks);
  return report;
}

}  // namespace voxaudit

#endif  // VOXAUDIT_AUDIT_HPP_
