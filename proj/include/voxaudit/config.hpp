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
// Audit configuration: a single JSON file (// comments tolerated) holding
// every knob that affects report content, so that a config fingerprint pins
// a report to the exact settings that produced it.

#ifndef VOXAUDIT_CONFIG_HPP_
#define VOXAUDIT_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "voxaudit/audio_metrics.hpp"
#include "voxaudit/error.hpp"
#include "voxaudit/manifest.hpp"
#include "voxaudit/report.hpp"
#include "voxaudit/text_metrics.hpp"
#include "voxaudit/variety.hpp"

namespace voxaudit {

struct ClassifierSpec {
  std::string id;            // "no", "ar", "yue"
  std::string lexicon_path;  // empty -> built-in default lexicon
  std::string expected_script;  // empty -> no script conformance check
};

struct OutputSpec {
  std::string path;             // empty -> stdout
  std::string format = "json";  // "json" | "markdown"
};

struct AuditConfig {
  SourceKind source_kind = SourceKind::CommonVoiceTsv;
  std::string locale;      // overrides the locale derived from the manifest
  std::string audio_root;  // required for duration_source == decode_audio
  std::string duration_source = "decode_audio";  // | "sidecar_tsv" | "none"
  std::string sidecar_path;
  ColumnMap column_map;  // optional source column overrides

  VadConfig vad;
  FlagThresholds thresholds;
  TemplateParams template_params;
  double script_mixed_threshold = 0.10;
  std::vector<ClassifierSpec> classifiers;

  uint64_t seed = 0;
  int parallelism = 1;
  OutputSpec output;

  std::string data_statement_path;  // empty -> no data statement emitted
  std::map<std::string, std::string> data_statement_decisions;

  void validate() const {
    if (parallelism < 1) throw ConfigError("parallelism must be >= 1");
    vad.validate();
    thresholds.validate();
    if (duration_source != "decode_audio" && duration_source != "sidecar_tsv" &&
        duration_source != "none") {
      throw ConfigError("unknown duration_source: " + duration_source);
    }
    if (duration_source == "sidecar_tsv" && sidecar_path.empty()) {
      throw ConfigError("duration_source sidecar_tsv needs sidecar_path");
    }
    if (output.format != "json" && output.format != "markdown") {
      throw ConfigError("unknown output format: " + output.format);
    }
    if (!(script_mixed_threshold >= 0 && script_mixed_threshold < 1)) {
      throw ConfigError("script_mixed_threshold must be in [0,1)");
    }
    for (const ClassifierSpec& c : classifiers) {
      if (c.id != "no" && c.id != "ar" && c.id != "yue") {
        throw ConfigError("unknown classifier id: " + c.id);
      }
      if (!c.lexicon_path.empty() &&
          !std::filesystem::exists(c.lexicon_path)) {
        throw ConfigError("lexicon file not found: " + c.lexicon_path);
      }
      if (!c.expected_script.empty() &&
          !uni::script_from_name(c.expected_script)) {
        throw ConfigError("unknown expected script: " + c.expected_script);
      }
    }
  }
};

inline ordered_json config_to_json(const AuditConfig& c) {
  ordered_json j;
  j["schema_version"] = 1;
  j["source_kind"] = source_kind_name(c.source_kind);
  j["locale"] = c.locale;
  j["audio_root"] = c.audio_root;
  j["duration_source"] = c.duration_source;
  j["sidecar_path"] = c.sidecar_path;
  ordered_json cm = ordered_json::object();
  for (const auto& [k, v] : c.column_map) cm[k] = v;
  j["column_map"] = std::move(cm);

  // Frame-energy speech detector settings; dB values are 10*log10(power).
  ordered_json vad;
  vad["frame_ms"] = c.vad.frame_ms;
  vad["hop_ms"] = c.vad.hop_ms;
  vad["relative_margin_db"] = c.vad.relative_margin_db;
  vad["absolute_floor_dbfs"] = c.vad.absolute_floor_dbfs;
  vad["min_speech_ms"] = c.vad.min_speech_ms;
  vad["max_gap_ms"] = c.vad.max_gap_ms;
  vad["noise_floor_percentile"] = c.vad.noise_floor_percentile;
  j["vad"] = std::move(vad);

  // Flag cutoffs. A locale is flagged when the observed metric crosses the
  // corresponding threshold; every value here is overridable.
  ordered_json th;
  th["short_utterance_median_s"] = c.thresholds.short_utterance_median_s;
  th["extreme_short_median_s"] = c.thresholds.extreme_short_median_s;
  th["extreme_short_p99_s"] = c.thresholds.extreme_short_p99_s;
  th["low_speech_proportion"] = c.thresholds.low_speech_proportion;
  th["speaker_top_share"] = c.thresholds.speaker_top_share;
  th["speaker_avg_hours"] = c.thresholds.speaker_avg_hours;
  th["dual_script_fraction"] = c.thresholds.dual_script_fraction;
  th["dictionary_dump_median_words"] =
      c.thresholds.dictionary_dump_median_words;
  th["dictionary_dump_duplicate_fraction"] =
      c.thresholds.dictionary_dump_duplicate_fraction;
  th["mixed_orthography_minority_share"] =
      c.thresholds.mixed_orthography_minority_share;
  th["script_conformance_min"] = c.thresholds.script_conformance_min;
  ordered_json sev = ordered_json::object();
  for (const auto& [k, v] : c.thresholds.severity_overrides) sev[k] = v;
  th["severity_overrides"] = std::move(sev);
  j["thresholds"] = std::move(th);

  ordered_json tp;
  tp["k_prefix"] = c.template_params.k_prefix;
  tp["min_cluster"] = c.template_params.min_cluster;
  tp["min_similarity"] = c.template_params.min_similarity;
  tp["similarity_sample"] = c.template_params.similarity_sample;
  j["template_detection"] = std::move(tp);

  j["script_mixed_threshold"] = c.script_mixed_threshold;

  ordered_json cls = ordered_json::array();
  for (const ClassifierSpec& spec : c.classifiers) {
    cls.push_back({{"id", spec.id},
                   {"lexicon", spec.lexicon_path},
                   {"expected_script", spec.expected_script}});
  }
  j["classifiers"] = std::move(cls);

  j["seed"] = c.seed;
  j["parallelism"] = c.parallelism;
  j["output"] = {{"path", c.output.path}, {"format", c.output.format}};
  j["data_statement"] = {{"path", c.data_statement_path}};
  ordered_json dec = ordered_json::object();
  for (const auto& [k, v] : c.data_statement_decisions) dec[k] = v;
  j["data_statement"]["decisions"] = std::move(dec);
  return j;
}

inline AuditConfig config_from_json(const ordered_json& j) {
  AuditConfig c;
  if (j.contains("source_kind")) {
    auto kind = source_kind_from_name(j.at("source_kind").get<std::string>());
    if (!kind) {
      throw ConfigError("unknown source_kind: " +
                        j.at("source_kind").get<std::string>());
    }
    c.source_kind = *kind;
  }
  c.locale = j.value("locale", c.locale);
  c.audio_root = j.value("audio_root", c.audio_root);
  c.duration_source = j.value("duration_source", c.duration_source);
  c.sidecar_path = j.value("sidecar_path", c.sidecar_path);
  if (j.contains("column_map")) {
    for (const auto& [k, v] : j.at("column_map").items()) {
      c.column_map[k] = v.get<std::string>();
    }
  }
  if (j.contains("vad")) {
    const auto& v = j.at("vad");
    c.vad.frame_ms = v.value("frame_ms", c.vad.frame_ms);
    c.vad.hop_ms = v.value("hop_ms", c.vad.hop_ms);
    c.vad.relative_margin_db =
        v.value("relative_margin_db", c.vad.relative_margin_db);
    c.vad.absolute_floor_dbfs =
        v.value("absolute_floor_dbfs", c.vad.absolute_floor_dbfs);
    c.vad.min_speech_ms = v.value("min_speech_ms", c.vad.min_speech_ms);
    c.vad.max_gap_ms = v.value("max_gap_ms", c.vad.max_gap_ms);
    c.vad.noise_floor_percentile =
        v.value("noise_floor_percentile", c.vad.noise_floor_percentile);
  }
  if (j.contains("thresholds")) {
    const auto& t = j.at("thresholds");
    auto& th = c.thresholds;
    th.short_utterance_median_s =
        t.value("short_utterance_median_s", th.short_utterance_median_s);
    th.extreme_short_median_s =
        t.value("extreme_short_median_s", th.extreme_short_median_s);
    th.extreme_short_p99_s =
        t.value("extreme_short_p99_s", th.extreme_short_p99_s);
    th.low_speech_proportion =
        t.value("low_speech_proportion", th.low_speech_proportion);
    th.speaker_top_share = t.value("speaker_top_share", th.speaker_top_share);
    th.speaker_avg_hours = t.value("speaker_avg_hours", th.speaker_avg_hours);
    th.dual_script_fraction =
        t.value("dual_script_fraction", th.dual_script_fraction);
    th.dictionary_dump_median_words = t.value(
        "dictionary_dump_median_words", th.dictionary_dump_median_words);
    th.dictionary_dump_duplicate_fraction =
        t.value("dictionary_dump_duplicate_fraction",
                th.dictionary_dump_duplicate_fraction);
    th.mixed_orthography_minority_share =
        t.value("mixed_orthography_minority_share",
                th.mixed_orthography_minority_share);
    th.script_conformance_min =
        t.value("script_conformance_min", th.script_conformance_min);
    if (t.contains("severity_overrides")) {
      for (const auto& [k, v] : t.at("severity_overrides").items()) {
        th.severity_overrides[k] = v.get<std::string>();
      }
    }
  }
  if (j.contains("template_detection")) {
    const auto& t = j.at("template_detection");
    c.template_params.k_prefix = t.value("k_prefix", c.template_params.k_prefix);
    c.template_params.min_cluster =
        t.value("min_cluster", c.template_params.min_cluster);
    c.template_params.min_similarity =
        t.value("min_similarity", c.template_params.min_similarity);
    c.template_params.similarity_sample =
        t.value("similarity_sample", c.template_params.similarity_sample);
  }
  c.script_mixed_threshold =
      j.value("script_mixed_threshold", c.script_mixed_threshold);
  if (j.contains("classifiers")) {
    for (const auto& entry : j.at("classifiers")) {
      ClassifierSpec spec;
      spec.id = entry.value("id", std::string());
      spec.lexicon_path = entry.value("lexicon", std::string());
      spec.expected_script = entry.value("expected_script", std::string());
      c.classifiers.push_back(std::move(spec));
    }
  }
  c.seed = j.value("seed", c.seed);
  c.parallelism = j.value("parallelism", c.parallelism);
  if (j.contains("output")) {
    c.output.path = j.at("output").value("path", c.output.path);
    c.output.format = j.at("output").value("format", c.output.format);
  }
  if (j.contains("data_statement")) {
    const auto& ds = j.at("data_statement");
    c.data_statement_path = ds.value("path", c.data_statement_path);
    if (ds.contains("decisions")) {
      for (const auto& [k, v] : ds.at("decisions").items()) {
        c.data_statement_decisions[k] = v.get<std::string>();
      }
    }
  }
  c.template_params.seed = c.seed;
  c.validate();
  return c;
}

inline AuditConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config: " + path.string());
  ordered_json j;
  try {
    j = ordered_json::parse(in, nullptr, /*allow_exceptions=*/true,
                            /*ignore_comments=*/true);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config parse error in " + path.string() + ": " +
                      e.what());
  }
  return config_from_json(j);
}

// FNV-1a over the canonical JSON form, minus fields that cannot affect
// report content (parallelism, output routing). Reports from the same data
// and the same analysis settings carry the same fingerprint at any worker
// count.
inline std::string config_fingerprint(const AuditConfig& c) {
  ordered_json j = config_to_json(c);
  j.erase("parallelism");
  j.erase("output");
  j.erase("data_statement");
  std::string dump = j.dump();
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char byte : dump) {
    h ^= byte;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace voxaudit

#endif  // VOXAUDIT_CONFIG_HPP_
