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
// Manifest parsing: turns Common Voice TSV, FLEURS-style positional TSV and
// generic header CSV into a uniform utterance stream. Malformed rows are
// collected with their line numbers, never silently dropped.

#ifndef VOXAUDIT_MANIFEST_HPP_
#define VOXAUDIT_MANIFEST_HPP_

#include <cmath>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "voxaudit/error.hpp"
#include "voxaudit/unicode.hpp"
#include "voxaudit/wav.hpp"

namespace voxaudit {

enum class SourceKind { CommonVoiceTsv, FleursTsv, GenericCsv };

inline const char* source_kind_name(SourceKind k) {
  switch (k) {
    case SourceKind::CommonVoiceTsv: return "common_voice_tsv";
    case SourceKind::FleursTsv: return "fleurs_tsv";
    case SourceKind::GenericCsv: return "generic_csv";
  }
  return "common_voice_tsv";
}

inline std::optional<SourceKind> source_kind_from_name(std::string_view s) {
  if (s == "common_voice_tsv") return SourceKind::CommonVoiceTsv;
  if (s == "fleurs_tsv") return SourceKind::FleursTsv;
  if (s == "generic_csv") return SourceKind::GenericCsv;
  return std::nullopt;
}

struct UtteranceRecord {
  std::string utterance_id;
  std::string speaker_id;  // may be empty
  std::string audio_path;  // relative to the audio root
  std::string transcript;
  std::string locale;
  std::optional<double> duration_s;
  // Unrecognized columns, in file order.
  std::vector<std::pair<std::string, std::string>> extra;
};

struct RejectedRow {
  long row = 0;  // physical 1-based line number in the manifest file
  std::string reason;
};

// Bounded reject list: at most kMaxListed entries are kept, the total is
// always exact.
struct RejectReport {
  static constexpr size_t kMaxListed = 1000;
  long total = 0;
  std::vector<RejectedRow> listed;

  void add(long row, std::string reason) {
    ++total;
    if (listed.size() < kMaxListed) listed.push_back({row, std::move(reason)});
  }
};

struct DatasetManifest {
  std::vector<UtteranceRecord> records;
  std::string locale;
  SourceKind source_kind = SourceKind::CommonVoiceTsv;
  // header name (or position as a string, for headerless sources) -> role
  std::vector<std::pair<std::string, std::string>> column_map;
  RejectReport rejects;
  long data_rows = 0;  // records.size() + rejects.total
};

// Role names understood by the parser.
//   utterance_id speaker_id audio_path transcript locale duration_ms ignore
using ColumnMap = std::map<std::string, std::string>;

namespace detail {

inline std::vector<std::string> split_tsv(std::string_view line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      break;
    }
    out.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return out;
}

// Minimal RFC 4180-style CSV: double quotes wrap fields, "" escapes a quote.
inline std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(std::move(field));
  return out;
}

inline void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

inline bool parse_double(std::string_view s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

struct ColumnRoles {
  // index in the row -> role name; unmapped indices land in extra.
  std::vector<std::string> roles;
  std::vector<std::string> names;  // header names / positional labels
};

inline const ColumnMap& common_voice_columns() {
  static const ColumnMap kMap = {
      {"client_id", "speaker_id"}, {"path", "audio_path"},
      {"sentence", "transcript"},  {"locale", "locale"},
  };
  return kMap;
}

inline const ColumnMap& fleurs_default_columns() {
  // FLEURS ships headerless TSVs; positions are addressed by index strings.
  static const ColumnMap kMap = {
      {"0", "utterance_id"}, {"1", "audio_path"}, {"2", "transcript"},
  };
  return kMap;
}

}  // namespace detail

// Parses a dataset manifest. `column_map` overrides the per-source default
// mapping (header name -> role for header sources, position string -> role
// for FLEURS-style positional files).
inline DatasetManifest parse_manifest(const std::filesystem::path& path,
                                      SourceKind kind,
                                      const ColumnMap* column_map = nullptr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open manifest: " + path.string());

  DatasetManifest manifest;
  manifest.source_kind = kind;
  const bool csv = kind == SourceKind::GenericCsv;
  const bool has_header = kind != SourceKind::FleursTsv;
  auto split = [&](std::string_view line) {
    return csv ? detail::split_csv(line) : detail::split_tsv(line);
  };

  const ColumnMap* mapping = column_map;
  if (mapping == nullptr) {
    switch (kind) {
      case SourceKind::CommonVoiceTsv:
        mapping = &detail::common_voice_columns();
        break;
      case SourceKind::FleursTsv:
        mapping = &detail::fleurs_default_columns();
        break;
      case SourceKind::GenericCsv:
        mapping = nullptr;  // roles are taken verbatim from header names
        break;
    }
  }

  detail::ColumnRoles cols;
  long line_no = 0;
  std::string line;

  if (has_header) {
    if (!std::getline(in, line)) {
      throw EmptyInputError("manifest has no header row: " + path.string());
    }
    ++line_no;
    detail::strip_cr(line);
    std::vector<std::string> headers = split(line);
    for (const std::string& h : headers) {
      std::string role;
      if (mapping != nullptr) {
        auto it = mapping->find(h);
        if (it != mapping->end()) role = it->second;
      } else {
        static const char* kRoles[] = {"utterance_id", "speaker_id",
                                       "audio_path",   "transcript",
                                       "locale",       "duration_ms"};
        for (const char* r : kRoles) {
          if (h == r) role = r;
        }
      }
      cols.roles.push_back(role);
      cols.names.push_back(h);
    }
    if (kind == SourceKind::CommonVoiceTsv && column_map == nullptr) {
      for (const char* required : {"client_id", "path", "sentence"}) {
        bool found = false;
        for (const std::string& h : cols.names) {
          if (h == required) found = true;
        }
        if (!found) {
          throw ConfigError("manifest " + path.string() +
                            " is missing required column '" + required + "'");
        }
      }
    }
    for (size_t i = 0; i < cols.names.size(); ++i) {
      manifest.column_map.emplace_back(cols.names[i],
                                       cols.roles[i].empty() ? "extra"
                                                             : cols.roles[i]);
    }
  }

  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (line.empty()) continue;  // blank lines are not data rows
    ++manifest.data_rows;

    std::vector<std::string> fields = split(line);
    if (!has_header && cols.roles.empty()) {
      // Positional source: derive roles from the first data row's width.
      for (size_t i = 0; i < fields.size(); ++i) {
        std::string key = std::to_string(i);
        std::string role;
        if (mapping != nullptr) {
          auto it = mapping->find(key);
          if (it != mapping->end()) role = it->second;
        }
        cols.roles.push_back(role);
        cols.names.push_back("col" + key);
        manifest.column_map.emplace_back(cols.names.back(),
                                         role.empty() ? "extra" : role);
      }
    }
    if (fields.size() != cols.roles.size()) {
      manifest.rejects.add(line_no, "expected " +
                                        std::to_string(cols.roles.size()) +
                                        " columns, got " +
                                        std::to_string(fields.size()));
      continue;
    }

    UtteranceRecord rec;
    bool bad = false;
    std::string reason;
    for (size_t i = 0; i < fields.size(); ++i) {
      const std::string& role = cols.roles[i];
      std::string& value = fields[i];
      if (!uni::is_valid_utf8(value)) {
        bad = true;
        reason = "invalid UTF-8 in column '" + cols.names[i] + "'";
        break;
      }
      if (role == "utterance_id") {
        rec.utterance_id = value;
      } else if (role == "speaker_id") {
        rec.speaker_id = value;
      } else if (role == "audio_path") {
        rec.audio_path = value;
        if (rec.utterance_id.empty()) rec.utterance_id = value;
      } else if (role == "transcript") {
        rec.transcript = value;
      } else if (role == "locale") {
        rec.locale = value;
      } else if (role == "duration_ms") {
        double ms = 0;
        if (!detail::parse_double(value, ms) || !(ms > 0) ||
            !std::isfinite(ms)) {
          bad = true;
          reason = "bad duration value '" + value + "'";
          break;
        }
        rec.duration_s = ms / 1000.0;
      } else if (role == "ignore") {
        // dropped on purpose
      } else {
        rec.extra.emplace_back(cols.names[i], value);
      }
    }
    if (bad) {
      manifest.rejects.add(line_no, reason);
      continue;
    }
    if (rec.transcript.empty()) {
      manifest.rejects.add(line_no, "empty transcript");
      continue;
    }
    if (rec.utterance_id.empty()) {
      manifest.rejects.add(line_no, "empty utterance id");
      continue;
    }
    if (!rec.locale.empty()) {
      if (manifest.locale.empty()) {
        manifest.locale = rec.locale;
      } else if (rec.locale != manifest.locale) {
        manifest.rejects.add(line_no, "locale '" + rec.locale +
                                          "' differs from manifest locale '" +
                                          manifest.locale + "'");
        continue;
      }
    }
    manifest.records.push_back(std::move(rec));
  }

  if (manifest.data_rows == 0) {
    throw EmptyInputError("manifest has zero data rows: " + path.string());
  }
  for (UtteranceRecord& rec : manifest.records) {
    if (rec.locale.empty()) rec.locale = manifest.locale;
  }
  return manifest;
}

// Re-serializes a manifest in its source layout. Mapped columns and extras
// round-trip; this is the inverse of parse_manifest for well-formed input.
inline void serialize_manifest(const DatasetManifest& manifest,
                               std::ostream& out) {
  const bool csv = manifest.source_kind == SourceKind::GenericCsv;
  const char delim = csv ? ',' : '\t';
  const bool has_header = manifest.source_kind != SourceKind::FleursTsv;

  if (has_header) {
    for (size_t i = 0; i < manifest.column_map.size(); ++i) {
      if (i > 0) out << delim;
      out << manifest.column_map[i].first;
    }
    out << '\n';
  }
  for (const UtteranceRecord& rec : manifest.records) {
    size_t extra_idx = 0;
    for (size_t i = 0; i < manifest.column_map.size(); ++i) {
      if (i > 0) out << delim;
      const std::string& role = manifest.column_map[i].second;
      if (role == "speaker_id") {
        out << rec.speaker_id;
      } else if (role == "audio_path") {
        out << rec.audio_path;
      } else if (role == "transcript") {
        out << rec.transcript;
      } else if (role == "utterance_id") {
        out << rec.utterance_id;
      } else if (role == "locale") {
        out << rec.locale;
      } else if (role == "duration_ms") {
        out << (rec.duration_s ? std::to_string(*rec.duration_s * 1000.0)
                               : std::string());
      } else {
        if (extra_idx < rec.extra.size()) out << rec.extra[extra_idx++].second;
      }
    }
    out << '\n';
  }
}

// --------------------------------------------------------------------------
// Duration attachment.

struct DurationSource {
  enum class Kind { DecodeAudio, SidecarTsv };
  Kind kind = Kind::DecodeAudio;
  // DecodeAudio: audio root directory. SidecarTsv: sidecar file path.
  std::filesystem::path path;
};

struct UnresolvedDuration {
  size_t record_index = 0;
  std::string utterance_id;
  std::string reason;
};

// Sidecar format: clip_name<TAB>duration_ms, optional header line.
inline std::unordered_map<std::string, double> parse_duration_sidecar(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open duration sidecar: " + path.string());
  std::unordered_map<std::string, double> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    detail::strip_cr(line);
    if (line.empty()) continue;
    std::vector<std::string> fields = detail::split_tsv(line);
    double ms = 0;
    if (fields.size() != 2 || !detail::parse_double(fields[1], ms)) {
      if (first) {
        first = false;
        continue;  // tolerated header row
      }
      throw ConfigError("malformed sidecar row in " + path.string() + ": " +
                        line);
    }
    first = false;
    out[fields[0]] = ms / 1000.0;
  }
  return out;
}

// Fills duration_s in place. Returns the records it could not resolve;
// decode failures are recorded there and never abort the pass. Record order
// and count are untouched.
inline std::vector<UnresolvedDuration> attach_durations(
    DatasetManifest& manifest, const DurationSource& source,
    const AudioDecoder& decoder = nullptr) {
  std::vector<UnresolvedDuration> unresolved;
  if (source.kind == DurationSource::Kind::SidecarTsv) {
    auto sidecar = parse_duration_sidecar(source.path);
    for (size_t i = 0; i < manifest.records.size(); ++i) {
      UtteranceRecord& rec = manifest.records[i];
      auto it = sidecar.find(rec.audio_path);
      if (it == sidecar.end()) {
        it = sidecar.find(
            std::filesystem::path(rec.audio_path).filename().string());
      }
      if (it == sidecar.end()) {
        unresolved.push_back({i, rec.utterance_id, "not in sidecar"});
        continue;
      }
      if (!(it->second > 0) || !std::isfinite(it->second)) {
        unresolved.push_back({i, rec.utterance_id, "non-positive duration"});
        continue;
      }
      rec.duration_s = it->second;
    }
    return unresolved;
  }

  if (!std::filesystem::is_directory(source.path)) {
    throw ConfigError("audio root is not a directory: " +
                      source.path.string());
  }
  for (size_t i = 0; i < manifest.records.size(); ++i) {
    UtteranceRecord& rec = manifest.records[i];
    std::filesystem::path audio = source.path / rec.audio_path;
    if (!std::filesystem::exists(audio)) {
      unresolved.push_back({i, rec.utterance_id, "audio file missing"});
      continue;
    }
    try {
      double duration = decoder ? decoder(audio).duration_s()
                                : wav_duration_s(audio);
      if (!(duration > 0) || !std::isfinite(duration)) {
        unresolved.push_back({i, rec.utterance_id, "empty audio"});
        continue;
      }
      rec.duration_s = duration;
    } catch (const Error& e) {
      unresolved.push_back({i, rec.utterance_id, e.what()});
    }
  }
  return unresolved;
}

}  // namespace voxaudit

#endif  // VOXAUDIT_MANIFEST_HPP_
