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
// End-to-end audit fixtures: synthesized WAV corpora plus manifests and
// configs. "clean" mimics a parliament-recordings corpus (long utterances,
// mostly speech, many speakers); "nan" mimics a dictionary-dump corpus
// (2.45 s median, ~48% speech, dual-script prompts).

#ifndef VOXAUDIT_TESTS_SUPPORT_AUDIT_FIXTURES_HPP_
#define VOXAUDIT_TESTS_SUPPORT_AUDIT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "voxaudit/config.hpp"
#include "voxaudit/wav.hpp"

namespace voxtest {

struct AuditFixture {
  fs::path manifest;
  fs::path config;
  fs::path audio_root;
};

// quiet | loud | quiet clip; speech proportion ~= loud_s / duration.
inline std::vector<double> framed_clip(double duration_s, double loud_s,
                                       int rate, uint64_t seed) {
  double quiet_s = (duration_s - loud_s) / 2.0;
  std::mt19937_64 rng(seed);
  std::vector<double> samples =
      noise(static_cast<size_t>(quiet_s * rate), 1e-4, rng);
  append(samples, noise(static_cast<size_t>(loud_s * rate), 0.5, rng));
  append(samples, noise(static_cast<size_t>(quiet_s * rate), 1e-4, rng));
  return samples;
}

inline void write_config(const fs::path& path,
                         const voxaudit::AuditConfig& config) {
  write_file(path, voxaudit::config_to_json(config).dump(2) + "\n");
}

inline AuditFixture make_clean_fixture(const TempDir& dir,
                                       int parallelism = 1) {
  const int rate = 16000;
  const std::vector<double> durations = {7.5, 8.0, 8.5, 8.7, 8.9, 9.0,
                                         9.0, 9.3, 9.5, 9.8, 10.0, 10.2};
  fs::path root = dir.file("clean_audio");
  fs::create_directories(root);
  std::string tsv = "client_id\tpath\tsentence\n";
  for (size_t i = 0; i < durations.size(); ++i) {
    std::string clip = "clip" + std::to_string(i) + ".wav";
    voxaudit::write_wav_pcm16(root / clip, rate,
                              framed_clip(durations[i], durations[i] - 0.6,
                                          rate, 100 + i));
    tsv += "speaker" + std::to_string(i % 6) + "\t" + clip +
           "\tthis is session " + std::to_string(i) +
           " with plenty of ordinary words spoken at length\n";
  }
  fs::path manifest = dir.file("clean.tsv");
  write_file(manifest, tsv);

  voxaudit::AuditConfig config;
  config.locale = "xx-CLEAN";
  config.audio_root = root.string();
  // Leading/trailing silences are ~7% of each clip; the default 20th
  // percentile would land inside speech, so pin the floor lower.
  config.vad.noise_floor_percentile = 0.05;
  config.parallelism = parallelism;
  fs::path cfg = dir.file("clean_config.json");
  write_config(cfg, config);
  return {manifest, cfg, root};
}

inline AuditFixture make_nan_fixture(const TempDir& dir, int parallelism = 1,
                                     uint64_t seed = 0) {
  const int rate = 16000;
  const std::vector<std::string> prompts = {
      "竹南鎮（Tek-lâm-tìn）",
      "竹南鎮（Tik-lâm-tìn）",
      "竹東（Tik-tang）",
      "竹東（Tek-tang）",
      "竹田（Tik-tshân）",
      "竹田（Tek-tshân）",
      "竹仔蓮（Tik-á-nâ）",
      "竹仔蓮（Tek-á-nâ）",
      "竹崎鄉（Tik-kiā-hiong）",
      "竹坑口（Tik-khinn-kháu | Tek-khiⁿ-kháu）",
      "竹山（Tik-suann）",
      "竹林（Tik-nâ）",
      "竹塘（Tik-tông）",
      "竹北（Tik-pak）",
  };
  fs::path root = dir.file("nan_audio");
  fs::create_directories(root);
  std::string tsv = "client_id\tpath\tsentence\n";
  for (size_t i = 0; i < prompts.size(); ++i) {
    double duration = i < 2 ? 2.0 : 2.45;
    std::string clip = "nan" + std::to_string(i) + ".wav";
    voxaudit::write_wav_pcm16(
        root / clip, rate,
        framed_clip(duration, duration * 0.48, rate, 200 + i));
    tsv += "reader" + std::to_string(i % 3) + "\t" + clip + "\t" + prompts[i] +
           "\n";
  }
  fs::path manifest = dir.file("nan.tsv");
  write_file(manifest, tsv);

  voxaudit::AuditConfig config;
  config.locale = "nan-TW";
  config.audio_root = root.string();
  config.parallelism = parallelism;
  config.seed = seed;
  fs::path cfg = dir.file("nan_config.json");
  write_config(cfg, config);
  return {manifest, cfg, root};
}

}  // namespace voxtest

#endif  // VOXAUDIT_TESTS_SUPPORT_AUDIT_FIXTURES_HPP_
