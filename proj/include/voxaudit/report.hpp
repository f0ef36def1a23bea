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
// Per-locale audit reports: speaker statistics, threshold-driven quality
// flags, canonical JSON / Markdown emission, and data-statement skeletons.
// Flags are a pure function of (report metrics, thresholds) so a report is
// self-evidencing: re-running apply_flags on an emitted report reproduces
// its flag list.

#ifndef VOXAUDIT_REPORT_HPP_
#define VOXAUDIT_REPORT_HPP_

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "voxaudit/audio_metrics.hpp"
#include "voxaudit/error.hpp"
#include "voxaudit/manifest.hpp"
#include "voxaudit/script.hpp"
#include "voxaudit/text_metrics.hpp"
#include "voxaudit/variety.hpp"
#include "voxaudit/version.hpp"

namespace voxaudit {

using ordered_json = nlohmann::ordered_json;

// --------------------------------------------------------------------------
// Speaker statistics.

struct SpeakerStats {
  bool available = false;  // false when no record carries speaker + duration
  size_t unique_speakers = 0;
  double total_hours = 0.0;
  double avg_hours_per_speaker = 0.0;
  double top_speaker_share = 0.0;
  bool single_speaker = false;
};

inline SpeakerStats speaker_stats(std::span<const UtteranceRecord> records) {
  std::map<std::string, double> hours_by_speaker;
  for (const UtteranceRecord& rec : records) {
    if (rec.speaker_id.empty() || !rec.duration_s) continue;
    hours_by_speaker[rec.speaker_id] += *rec.duration_s / 3600.0;
  }
  SpeakerStats stats;
  if (hours_by_speaker.empty()) return stats;
  stats.available = true;
  stats.unique_speakers = hours_by_speaker.size();
  double top = 0.0;
  for (const auto& [id, h] : hours_by_speaker) {
    stats.total_hours += h;
    top = std::max(top, h);
  }
  stats.avg_hours_per_speaker =
      stats.total_hours / static_cast<double>(stats.unique_speakers);
  stats.top_speaker_share =
      stats.total_hours > 0 ? top / stats.total_hours : 1.0;
  stats.single_speaker = stats.unique_speakers == 1;
  return stats;
}

// --------------------------------------------------------------------------
// Quality flags.

enum class FlagCode {
  ShortUtterances,
  ExtremeShortUtterances,
  LowSpeechProportion,
  SingleSpeaker,
  SpeakerConcentration,
  TemplateRepetition,
  DualScriptPrompts,
  MixedOrthography,
  ScriptMismatch,
  DictionaryDump,
};

inline const char* flag_code_name(FlagCode c) {
  switch (c) {
    case FlagCode::ShortUtterances: return "ShortUtterances";
    case FlagCode::ExtremeShortUtterances: return "ExtremeShortUtterances";
    case FlagCode::LowSpeechProportion: return "LowSpeechProportion";
    case FlagCode::SingleSpeaker: return "SingleSpeaker";
    case FlagCode::SpeakerConcentration: return "SpeakerConcentration";
    case FlagCode::TemplateRepetition: return "TemplateRepetition";
    case FlagCode::DualScriptPrompts: return "DualScriptPrompts";
    case FlagCode::MixedOrthography: return "MixedOrthography";
    case FlagCode::ScriptMismatch: return "ScriptMismatch";
    case FlagCode::DictionaryDump: return "DictionaryDump";
  }
  return "ShortUtterances";
}

enum class Severity { Warn, Fail };

inline const char* severity_name(Severity s) {
  return s == Severity::Fail ? "fail" : "warn";
}

struct QualityFlag {
  FlagCode code = FlagCode::ShortUtterances;
  Severity severity = Severity::Warn;
  // Metric name -> value, insertion-ordered; every threshold that fired is
  // echoed here next to the observed value.
  std::vector<std::pair<std::string, double>> evidence;
};

struct FlagThresholds {
  double short_utterance_median_s = 4.0;
  double extreme_short_median_s = 3.0;
  double extreme_short_p99_s = 7.0;
  double low_speech_proportion = 0.50;
  double speaker_top_share = 0.5;
  double speaker_avg_hours = 1.0;
  double dual_script_fraction = 0.10;
  double dictionary_dump_median_words = 3.0;
  double dictionary_dump_duplicate_fraction = 0.20;
  double mixed_orthography_minority_share = 0.05;
  double script_conformance_min = 0.90;
  // Flag code name -> "warn" | "fail"; unlisted codes use built-in defaults.
  std::map<std::string, std::string> severity_overrides;

  Severity severity_for(FlagCode code) const {
    auto it = severity_overrides.find(flag_code_name(code));
    if (it != severity_overrides.end()) {
      if (it->second == "fail") return Severity::Fail;
      if (it->second == "warn") return Severity::Warn;
      throw ConfigError("bad severity '" + it->second + "' for flag " +
                        flag_code_name(code));
    }
    switch (code) {
      case FlagCode::ExtremeShortUtterances:
      case FlagCode::LowSpeechProportion:
      case FlagCode::SingleSpeaker:
      case FlagCode::ScriptMismatch:
      case FlagCode::DictionaryDump:
        return Severity::Fail;
      default:
        return Severity::Warn;
    }
  }

  void validate() const {
    for (const auto& [code, sev] : severity_overrides) {
      bool known = false;
      static constexpr FlagCode kAll[] = {
          FlagCode::ShortUtterances,   FlagCode::ExtremeShortUtterances,
          FlagCode::LowSpeechProportion, FlagCode::SingleSpeaker,
          FlagCode::SpeakerConcentration, FlagCode::TemplateRepetition,
          FlagCode::DualScriptPrompts, FlagCode::MixedOrthography,
          FlagCode::ScriptMismatch,    FlagCode::DictionaryDump};
      for (FlagCode c : kAll) {
        if (code == flag_code_name(c)) known = true;
      }
      if (!known) throw ConfigError("unknown flag code in severities: " + code);
      if (sev != "warn" && sev != "fail") {
        throw ConfigError("bad severity '" + sev + "' for flag " + code);
      }
    }
  }
};

// --------------------------------------------------------------------------
// Report aggregate.

struct SpeechStats {
  size_t n_with_audio = 0;
  double overall_proportion = 0.0;  // sum(speech_s) / sum(total_s)
  double median_proportion = 0.0;
  double mean_proportion = 0.0;
  std::optional<double> median_snr_db;
  size_t snr_no_speech = 0;
  size_t snr_no_noise_reference = 0;
};

struct VarietyTallyEntry {
  std::string classifier_id;
  std::string lexicon_name;
  std::string label_a;
  std::string label_b;
  CategoryTally tally;
};

struct SkippedCheck {
  std::string flag;
  std::string reason;
};

struct TokenCountStats {
  size_t total_tokens = 0;
  TokenizerMode mode = TokenizerMode::Whitespace;
};

struct AuditReport {
  std::string locale;
  size_t record_count = 0;
  long data_rows = 0;
  RejectReport rejects;
  size_t unresolved_durations = 0;

  std::optional<DurationStats> durations;
  std::optional<double> total_hours;   // from attached durations
  std::optional<SpeechStats> speech;
  std::optional<double> usable_hours;  // total_hours * overall proportion
  SpeakerStats speakers;
  std::optional<PromptShapeStats> prompts;
  std::optional<TokenCountStats> tokens;
  std::vector<TemplateCluster> template_clusters;
  std::vector<VarietyTallyEntry> variety_tallies;
  std::vector<ScriptConformance> script_conformance;

  std::vector<QualityFlag> flags;
  std::vector<SkippedCheck> skipped_checks;  // flags not evaluable + why

  std::string tool_version = kVersion;
  std::string config_fingerprint;
};

// Evaluates every threshold the report's metrics allow; absent metrics are
// reported through `skipped` instead of guessing. ExtremeShortUtterances
// subsumes ShortUtterances so a locale gets one duration verdict.
inline std::vector<QualityFlag> apply_flags(
    const AuditReport& report, const FlagThresholds& thresholds,
    std::vector<SkippedCheck>* skipped = nullptr) {
  thresholds.validate();
  std::vector<QualityFlag> flags;
  auto add = [&](FlagCode code,
                 std::vector<std::pair<std::string, double>> evidence) {
    flags.push_back({code, thresholds.severity_for(code), std::move(evidence)});
  };
  auto skip = [&](FlagCode code, const char* reason) {
    if (skipped) skipped->push_back({flag_code_name(code), reason});
  };

  if (report.durations) {
    const DurationStats& d = *report.durations;
    if (d.median_s < thresholds.extreme_short_median_s &&
        d.p99_s < thresholds.extreme_short_p99_s) {
      add(FlagCode::ExtremeShortUtterances,
          {{"median_s", d.median_s},
           {"p99_s", d.p99_s},
           {"threshold_median_s", thresholds.extreme_short_median_s},
           {"threshold_p99_s", thresholds.extreme_short_p99_s}});
    } else if (d.median_s < thresholds.short_utterance_median_s) {
      add(FlagCode::ShortUtterances,
          {{"median_s", d.median_s},
           {"threshold_median_s", thresholds.short_utterance_median_s}});
    }
  } else {
    skip(FlagCode::ShortUtterances, "duration stats unavailable");
    skip(FlagCode::ExtremeShortUtterances, "duration stats unavailable");
  }

  if (report.speech) {
    if (report.speech->overall_proportion < thresholds.low_speech_proportion) {
      add(FlagCode::LowSpeechProportion,
          {{"speech_proportion", report.speech->overall_proportion},
           {"threshold_proportion", thresholds.low_speech_proportion}});
    }
  } else {
    skip(FlagCode::LowSpeechProportion, "speech segmentation unavailable");
  }

  if (report.speakers.available) {
    if (report.speakers.single_speaker) {
      add(FlagCode::SingleSpeaker,
          {{"unique_speakers", 1.0}, {"top_speaker_share", 1.0}});
    } else if (report.speakers.top_speaker_share > thresholds.speaker_top_share ||
               report.speakers.avg_hours_per_speaker > thresholds.speaker_avg_hours) {
      add(FlagCode::SpeakerConcentration,
          {{"unique_speakers",
            static_cast<double>(report.speakers.unique_speakers)},
           {"top_speaker_share", report.speakers.top_speaker_share},
           {"avg_hours_per_speaker", report.speakers.avg_hours_per_speaker},
           {"threshold_top_share", thresholds.speaker_top_share},
           {"threshold_avg_hours", thresholds.speaker_avg_hours}});
    }
  } else {
    skip(FlagCode::SingleSpeaker, "speaker ids unavailable");
    skip(FlagCode::SpeakerConcentration, "speaker ids unavailable");
  }

  if (report.prompts) {
    const PromptShapeStats& p = *report.prompts;
    if (p.dual_script_fraction > thresholds.dual_script_fraction) {
      add(FlagCode::DualScriptPrompts,
          {{"dual_script_fraction", p.dual_script_fraction},
           {"threshold_fraction", thresholds.dual_script_fraction}});
    }
    double dup = std::max(p.exact_duplicate_fraction,
                          p.script_stripped_duplicate_fraction);
    if (p.median_word_count <= thresholds.dictionary_dump_median_words &&
        dup >= thresholds.dictionary_dump_duplicate_fraction) {
      add(FlagCode::DictionaryDump,
          {{"median_word_count", p.median_word_count},
           {"duplicate_fraction", dup},
           {"threshold_median_words", thresholds.dictionary_dump_median_words},
           {"threshold_duplicate_fraction",
            thresholds.dictionary_dump_duplicate_fraction}});
    }
  } else {
    skip(FlagCode::DualScriptPrompts, "prompt stats unavailable");
    skip(FlagCode::DictionaryDump, "prompt stats unavailable");
  }

  if (!report.template_clusters.empty()) {
    add(FlagCode::TemplateRepetition,
        {{"cluster_count",
          static_cast<double>(report.template_clusters.size())},
         {"largest_cluster_size",
          static_cast<double>(report.template_clusters.front().size)}});
  }

  for (const VarietyTallyEntry& entry : report.variety_tallies) {
    if (entry.tally.total == 0) continue;
    double a = static_cast<double>(entry.tally.count(VarietyCategory::ClassA));
    double b = static_cast<double>(entry.tally.count(VarietyCategory::ClassB));
    double minority = std::min(a, b) / static_cast<double>(entry.tally.total);
    if (minority > thresholds.mixed_orthography_minority_share) {
      add(FlagCode::MixedOrthography,
          {{"class_a_count", a},
           {"class_b_count", b},
           {"minority_share", minority},
           {"threshold_minority_share",
            thresholds.mixed_orthography_minority_share}});
    }
  }

  for (const ScriptConformance& sc : report.script_conformance) {
    if (sc.fraction < thresholds.script_conformance_min) {
      add(FlagCode::ScriptMismatch,
          {{"conformance_fraction", sc.fraction},
           {"threshold_fraction", thresholds.script_conformance_min}});
    }
  }
  return flags;
}

inline bool has_fail_flag(const AuditReport& report) {
  for (const QualityFlag& f : report.flags) {
    if (f.severity == Severity::Fail) return true;
  }
  return false;
}

// --------------------------------------------------------------------------
// JSON emission. Key order is fixed by construction; two identical reports
// serialize to identical bytes.

inline ordered_json report_to_json(const AuditReport& r) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = "voxaudit";
  j["tool_version"] = r.tool_version;
  j["config_fingerprint"] = r.config_fingerprint;
  j["locale"] = r.locale;

  ordered_json records;
  records["count"] = r.record_count;
  records["data_rows"] = r.data_rows;
  ordered_json rejected;
  rejected["total"] = r.rejects.total;
  ordered_json listed = ordered_json::array();
  for (const RejectedRow& row : r.rejects.listed) {
    listed.push_back({{"row", row.row}, {"reason", row.reason}});
  }
  rejected["listed"] = std::move(listed);
  records["rejected"] = std::move(rejected);
  records["unresolved_durations"] = r.unresolved_durations;
  j["records"] = std::move(records);

  if (r.durations) {
    ordered_json d;
    d["n"] = r.durations->n;
    d["median_s"] = r.durations->median_s;
    d["p99_s"] = r.durations->p99_s;
    d["mean_s"] = r.durations->mean_s;
    d["min_s"] = r.durations->min_s;
    d["max_s"] = r.durations->max_s;
    d["under_10s_fraction"] = r.durations->under_10s_fraction;
    d["total_hours"] = r.total_hours ? ordered_json(*r.total_hours)
                                     : ordered_json(nullptr);
    j["durations"] = std::move(d);
  } else {
    j["durations"] = nullptr;
  }

  if (r.speech) {
    ordered_json s;
    s["n_with_audio"] = r.speech->n_with_audio;
    s["overall_proportion"] = r.speech->overall_proportion;
    s["median_proportion"] = r.speech->median_proportion;
    s["mean_proportion"] = r.speech->mean_proportion;
    // Reserved for three-class detectors; the energy detector is binary.
    s["other_proportion"] = nullptr;
    s["median_snr_db"] = r.speech->median_snr_db
                             ? ordered_json(*r.speech->median_snr_db)
                             : ordered_json(nullptr);
    s["snr_undefined"] = {{"no_speech", r.speech->snr_no_speech},
                          {"no_noise_reference", r.speech->snr_no_noise_reference}};
    s["usable_hours"] = r.usable_hours ? ordered_json(*r.usable_hours)
                                       : ordered_json(nullptr);
    j["speech"] = std::move(s);
  } else {
    j["speech"] = nullptr;
  }

  ordered_json sp;
  sp["available"] = r.speakers.available;
  if (r.speakers.available) {
    sp["unique_speakers"] = r.speakers.unique_speakers;
    sp["total_hours"] = r.speakers.total_hours;
    sp["avg_hours_per_speaker"] = r.speakers.avg_hours_per_speaker;
    sp["top_speaker_share"] = r.speakers.top_speaker_share;
    sp["single_speaker"] = r.speakers.single_speaker;
  }
  j["speakers"] = std::move(sp);

  if (r.prompts) {
    ordered_json p;
    p["n"] = r.prompts->n;
    p["counting_mode"] = tokenizer_mode_name(r.prompts->counting_mode);
    p["median_word_count"] = r.prompts->median_word_count;
    p["median_char_count"] = r.prompts->median_char_count;
    p["dual_script_fraction"] = r.prompts->dual_script_fraction;
    p["exact_duplicate_fraction"] = r.prompts->exact_duplicate_fraction;
    p["script_stripped_duplicate_fraction"] =
        r.prompts->script_stripped_duplicate_fraction;
    p["total_tokens"] =
        r.tokens ? ordered_json(r.tokens->total_tokens) : ordered_json(nullptr);
    j["prompts"] = std::move(p);
  } else {
    j["prompts"] = nullptr;
  }

  ordered_json clusters = ordered_json::array();
  for (const TemplateCluster& c : r.template_clusters) {
    ordered_json cj;
    cj["key_prefix"] = c.key_prefix;
    cj["size"] = c.size;
    cj["mean_similarity"] = c.mean_similarity;
    cj["samples"] = c.sample_sentences;
    clusters.push_back(std::move(cj));
  }
  j["template_clusters"] = std::move(clusters);

  ordered_json varieties = ordered_json::array();
  for (const VarietyTallyEntry& entry : r.variety_tallies) {
    ordered_json v;
    v["classifier"] = entry.classifier_id;
    v["lexicon"] = entry.lexicon_name;
    v["labels"] = {{"class_a", entry.label_a},
                   {"class_b", entry.label_b},
                   {"mixed", "Mixed"},
                   {"unmarked", "Unmarked"}};
    ordered_json tally;
    const char* keys[] = {"class_a", "class_b", "mixed", "unmarked"};
    for (size_t i = 0; i < 4; ++i) {
      VarietyCategory cat = kVarietyCategories[i];
      // Raw counts plus display-precision percentages; full precision is
      // derivable from count/total.
      tally[keys[i]] = {{"count", entry.tally.count(cat)},
                        {"percent", round1(entry.tally.percentage(cat))}};
    }
    tally["total"] = entry.tally.total;
    v["tally"] = std::move(tally);
    varieties.push_back(std::move(v));
  }
  j["variety"] = std::move(varieties);

  ordered_json conformance = ordered_json::array();
  for (const ScriptConformance& sc : r.script_conformance) {
    ordered_json c;
    c["expected_script"] = sc.expected_script;
    c["n"] = sc.n;
    c["conforming"] = sc.conforming;
    c["fraction"] = sc.fraction;
    ordered_json offenders = ordered_json::array();
    for (const ScriptOffender& o : sc.offenders) {
      offenders.push_back({{"index", o.index}, {"text", o.text}});
    }
    c["offenders"] = std::move(offenders);
    conformance.push_back(std::move(c));
  }
  j["script_conformance"] = std::move(conformance);

  ordered_json flags = ordered_json::array();
  for (const QualityFlag& f : r.flags) {
    ordered_json fj;
    fj["code"] = flag_code_name(f.code);
    fj["severity"] = severity_name(f.severity);
    ordered_json ev = ordered_json::object();
    for (const auto& [k, v] : f.evidence) ev[k] = v;
    fj["evidence"] = std::move(ev);
    flags.push_back(std::move(fj));
  }
  j["flags"] = std::move(flags);

  ordered_json skipped = ordered_json::array();
  for (const SkippedCheck& s : r.skipped_checks) {
    skipped.push_back({{"flag", s.flag}, {"reason", s.reason}});
  }
  j["skipped_checks"] = std::move(skipped);
  return j;
}

inline std::string emit_report_json(const AuditReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

// --------------------------------------------------------------------------
// Markdown rendering, from the JSON form so saved reports re-render without
// loss. Tallies print as "count (pct%)" with one decimal.

namespace detail {

inline std::string pct1(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", value);
  return std::string(buf);
}

inline std::string num(double value, int decimals = 3) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return std::string(buf);
}

}  // namespace detail

inline std::string emit_report_markdown(const ordered_json& j) {
  std::string md;
  auto line = [&](const std::string& s) {
    md += s;
    md += '\n';
  };
  line("# Audit report: " + j.value("locale", std::string("(unknown)")));
  line("");
  line("- tool: voxaudit " + j.value("tool_version", std::string()));
  line("- config fingerprint: `" +
       j.value("config_fingerprint", std::string()) + "`");
  const auto& records = j.at("records");
  line("- records: " + std::to_string(records.at("count").get<long>()) +
       " accepted of " + std::to_string(records.at("data_rows").get<long>()) +
       " data rows (" +
       std::to_string(records.at("rejected").at("total").get<long>()) +
       " rejected)");
  line("");

  if (!j.at("durations").is_null()) {
    const auto& d = j.at("durations");
    line("## Durations");
    line("");
    line("| metric | value |");
    line("|---|---|");
    line("| utterances | " + std::to_string(d.at("n").get<long>()) + " |");
    line("| median | " + detail::num(d.at("median_s").get<double>(), 2) + " s |");
    line("| p99 | " + detail::num(d.at("p99_s").get<double>(), 2) + " s |");
    line("| mean | " + detail::num(d.at("mean_s").get<double>(), 2) + " s |");
    line("| min / max | " + detail::num(d.at("min_s").get<double>(), 2) + " / " +
         detail::num(d.at("max_s").get<double>(), 2) + " s |");
    line("| under 10 s | " +
         detail::pct1(100.0 * d.at("under_10s_fraction").get<double>()) + "% |");
    if (!d.at("total_hours").is_null()) {
      line("| total hours | " +
           detail::num(d.at("total_hours").get<double>(), 2) + " h |");
    }
    line("");
  }

  if (!j.at("speech").is_null()) {
    const auto& s = j.at("speech");
    line("## Speech content");
    line("");
    line("| metric | value |");
    line("|---|---|");
    line("| clips analyzed | " +
         std::to_string(s.at("n_with_audio").get<long>()) + " |");
    line("| speech proportion (overall) | " +
         detail::pct1(100.0 * s.at("overall_proportion").get<double>()) + "% |");
    line("| speech proportion (median clip) | " +
         detail::pct1(100.0 * s.at("median_proportion").get<double>()) + "% |");
    if (!s.at("median_snr_db").is_null()) {
      line("| median SNR | " +
           detail::num(s.at("median_snr_db").get<double>(), 1) + " dB |");
    }
    if (!s.at("usable_hours").is_null()) {
      line("| estimated usable hours | " +
           detail::num(s.at("usable_hours").get<double>(), 2) + " h |");
    }
    line("");
  }

  if (j.at("speakers").value("available", false)) {
    const auto& sp = j.at("speakers");
    line("## Speakers");
    line("");
    line("| metric | value |");
    line("|---|---|");
    line("| unique speakers | " +
         std::to_string(sp.at("unique_speakers").get<long>()) + " |");
    line("| total hours | " +
         detail::num(sp.at("total_hours").get<double>(), 2) + " |");
    line("| avg hours per speaker | " +
         detail::num(sp.at("avg_hours_per_speaker").get<double>(), 2) + " |");
    line("| top speaker share | " +
         detail::pct1(100.0 * sp.at("top_speaker_share").get<double>()) + "% |");
    line("");
  }

  if (!j.at("prompts").is_null()) {
    const auto& p = j.at("prompts");
    line("## Prompts");
    line("");
    line("| metric | value |");
    line("|---|---|");
    line("| counting mode | " +
         p.at("counting_mode").get<std::string>() + " |");
    line("| median word count | " +
         detail::num(p.at("median_word_count").get<double>(), 1) + " |");
    line("| median char count | " +
         detail::num(p.at("median_char_count").get<double>(), 1) + " |");
    line("| dual-script prompts | " +
         detail::pct1(100.0 * p.at("dual_script_fraction").get<double>()) + "% |");
    line("| exact duplicates | " +
         detail::pct1(100.0 * p.at("exact_duplicate_fraction").get<double>()) +
         "% |");
    line("| duplicates after script-stripping | " +
         detail::pct1(100.0 *
                      p.at("script_stripped_duplicate_fraction").get<double>()) +
         "% |");
    line("");
  }

  if (!j.at("template_clusters").empty()) {
    line("## Template clusters");
    line("");
    line("| prefix | size | mean similarity |");
    line("|---|---|---|");
    for (const auto& c : j.at("template_clusters")) {
      std::string prefix;
      for (const auto& tok : c.at("key_prefix")) {
        if (!prefix.empty()) prefix += ' ';
        prefix += tok.get<std::string>();
      }
      line("| " + prefix + " | " + std::to_string(c.at("size").get<long>()) +
           " | " + detail::num(c.at("mean_similarity").get<double>(), 2) + " |");
    }
    line("");
  }

  for (const auto& v : j.at("variety")) {
    line("## Variety classification (" +
         v.at("classifier").get<std::string>() + ", lexicon " +
         v.at("lexicon").get<std::string>() + ")");
    line("");
    line("| class | count (share) |");
    line("|---|---|");
    const auto& labels = v.at("labels");
    const auto& tally = v.at("tally");
    const std::pair<const char*, const char*> rows[] = {
        {"class_a", "class_a"}, {"class_b", "class_b"},
        {"mixed", "mixed"},     {"unmarked", "unmarked"}};
    for (const auto& [label_key, tally_key] : rows) {
      const auto& cell = tally.at(tally_key);
      line("| " + labels.at(label_key).get<std::string>() + " | " +
           std::to_string(cell.at("count").get<long>()) + " (" +
           detail::pct1(cell.at("percent").get<double>()) + "%) |");
    }
    line("| Total | " + std::to_string(tally.at("total").get<long>()) + " |");
    line("");
  }

  for (const auto& sc : j.at("script_conformance")) {
    line("## Script conformance (expected " +
         sc.at("expected_script").get<std::string>() + ")");
    line("");
    line("- conforming: " + std::to_string(sc.at("conforming").get<long>()) +
         " / " + std::to_string(sc.at("n").get<long>()) + " (" +
         detail::pct1(100.0 * sc.at("fraction").get<double>()) + "%)");
    if (!sc.at("offenders").empty()) {
      line("- sample offenders:");
      for (const auto& o : sc.at("offenders")) {
        line("  - [" + std::to_string(o.at("index").get<long>()) + "] " +
             o.at("text").get<std::string>());
      }
    }
    line("");
  }

  line("## Flags");
  line("");
  if (j.at("flags").empty()) {
    line("No quality flags raised.");
  } else {
    line("| flag | severity | evidence |");
    line("|---|---|---|");
    for (const auto& f : j.at("flags")) {
      std::string ev;
      for (const auto& [k, v] : f.at("evidence").items()) {
        if (!ev.empty()) ev += ", ";
        ev += k + "=" + detail::num(v.get<double>(), 3);
      }
      line("| " + f.at("code").get<std::string>() + " | " +
           f.at("severity").get<std::string>() + " | " + ev + " |");
    }
  }
  if (!j.at("skipped_checks").empty()) {
    line("");
    line("Skipped checks:");
    for (const auto& s : j.at("skipped_checks")) {
      line("- " + s.at("flag").get<std::string>() + ": " +
           s.at("reason").get<std::string>());
    }
  }
  return md;
}

// --------------------------------------------------------------------------
// Data statement skeleton.

// Languages commonly written in more than one script, keyed by primary
// language subtag; used to pre-fill the digraphia section.
inline const std::vector<std::pair<std::string, std::string>>&
digraphia_inventory() {
  static const std::vector<std::pair<std::string, std::string>> kInventory = {
      {"ckb", "Cyrillic, Hawar (Latin), Sorani (Arabic)"},
      {"dyu", "Latin, N'Ko"},
      {"ff", "Adlam, Ajami (Arabic), Latin"},
      {"kmr", "Cyrillic, Hawar (Latin), Sorani (Arabic)"},
      {"mn", "Cyrillic, Mongolian (Bichig)"},
      {"ms", "Jawi (Arabic), Latin"},
      {"pa", "Gurmukhi, Shahmukhi (Arabic)"},
      {"sr", "Cyrillic, Latin"},
      {"uz", "Arabic, Cyrillic, Latin"},
      {"vot", "Cyrillic, Latin"},
      {"zgh", "Arabic, Latin, Tifinagh"},
  };
  return kInventory;
}

inline std::string primary_subtag(std::string_view locale) {
  std::string lower = uni::lowercase(locale);
  size_t cut = lower.find_first_of("-_");
  return cut == std::string::npos ? lower : lower.substr(0, cut);
}

inline std::optional<std::string> digraphia_note_for(std::string_view locale) {
  std::string tag = primary_subtag(locale);
  for (const auto& [code, note] : digraphia_inventory()) {
    if (code == tag) return note;
  }
  return std::nullopt;
}

// Markdown skeleton for dataset documentation. `decisions` carries planning
// decisions to render verbatim (keys: language, scripts,
// orthography_standard, register, dialect_scope, speaker_demographics,
// notes); anything missing becomes a TODO. When a report is supplied its
// flag list fills the quality summary.
inline std::string emit_data_statement(
    std::string_view locale,
    const std::map<std::string, std::string>& decisions,
    const ordered_json* report = nullptr) {
  std::string md;
  auto line = [&](const std::string& s) {
    md += s;
    md += '\n';
  };
  auto decided = [&](const char* key, const char* todo) {
    auto it = decisions.find(key);
    line(it != decisions.end() ? it->second : "TODO: " + std::string(todo));
    line("");
  };

  line("# Data statement: " + std::string(locale));
  line("");
  line("## Language and locale");
  line("");
  line("- locale tag: `" + std::string(locale) + "`");
  decided("language", "full language name and variety covered");
  line("## Script(s) and orthography standard");
  line("");
  decided("scripts", "script(s) used and the orthography standard chosen");
  line("## Register scope (High / Low variety)");
  line("");
  decided("register",
          "register recorded (formal/High, vernacular/Low, or both)");
  line("## Dialect continuum scope");
  line("");
  decided("dialect_scope", "dialects included and excluded");
  line("## Speaker demographics");
  line("");
  decided("speaker_demographics",
          "speaker counts, gender/age balance, recruitment");
  line("## Digraphia / diglossia notes");
  line("");
  if (auto note = digraphia_note_for(locale)) {
    line("Known script inventory for this language: " + *note + ".");
  }
  auto it = decisions.find("notes");
  if (it != decisions.end()) {
    line(it->second);
  } else if (!digraphia_note_for(locale)) {
    line("TODO: document digraphia/diglossia considerations.");
  }
  line("");
  line("## Quality flag summary");
  line("");
  if (report != nullptr && report->contains("flags")) {
    const auto& flags = report->at("flags");
    if (flags.empty()) {
      line("No quality flags raised by the audit.");
    } else {
      for (const auto& f : flags) {
        line("- " + f.at("code").get<std::string>() + " (" +
             f.at("severity").get<std::string>() + ")");
      }
    }
  } else {
    line("TODO: run `voxaudit audit` and summarize the flags here.");
  }
  return md;
}

}  // namespace voxaudit

#endif  // VOXAUDIT_REPORT_HPP_
