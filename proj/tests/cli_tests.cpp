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
// Exercises the built CLI binary end to end: subcommands, exit codes and
// output formats.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "support/audit_fixtures.hpp"
#include "support/fixtures.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout (plus stderr when merged)
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(VOXAUDIT_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.output.append(buf, n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const voxtest::fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("audit: clean fixture exits 0 with no flags") {
  voxtest::TempDir dir;
  auto fixture = voxtest::make_clean_fixture(dir);
  auto report_path = dir.file("report.json");
  RunResult r = run_cli("audit " + fixture.manifest.string() + " --config " +
                        fixture.config.string() + " --output " +
                        report_path.string());
  CHECK(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(read_file(report_path));
  CHECK(j["flags"].empty());
  CHECK(j["locale"] == "xx-CLEAN");
  CHECK(j["records"]["count"] == 12);
  CHECK(j["durations"]["median_s"].get<double>() == doctest::Approx(9.0).epsilon(0.01));
  CHECK(j["speech"]["overall_proportion"].get<double>() >= 0.90);
}

TEST_CASE("audit: dictionary-dump fixture exits 2 with the expected flags") {
  voxtest::TempDir dir;
  auto fixture = voxtest::make_nan_fixture(dir);
  auto report_path = dir.file("report.json");
  RunResult r = run_cli("audit " + fixture.manifest.string() + " --config " +
                        fixture.config.string() + " --output " +
                        report_path.string());
  CHECK(r.exit_code == 2);
  auto j = nlohmann::ordered_json::parse(read_file(report_path));
  std::set<std::string> codes;
  for (const auto& f : j["flags"]) codes.insert(f["code"].get<std::string>());
  CHECK(codes.count("ExtremeShortUtterances") == 1);
  CHECK(codes.count("LowSpeechProportion") == 1);
  CHECK(codes.count("DualScriptPrompts") == 1);
  CHECK(codes.count("DictionaryDump") == 1);
  CHECK(j["speech"]["overall_proportion"].get<double>() < 0.5);
}

TEST_CASE("audit: missing audio root exits 1") {
  voxtest::TempDir dir;
  auto fixture = voxtest::make_clean_fixture(dir);
  voxtest::fs::remove_all(fixture.audio_root);
  RunResult r = run_cli("audit " + fixture.manifest.string() + " --config " +
                            fixture.config.string(),
                        true);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("audio root") != std::string::npos);
}

TEST_CASE("audit: markdown output and data statement") {
  voxtest::TempDir dir;
  auto fixture = voxtest::make_nan_fixture(dir);
  auto md_path = dir.file("report.md");
  auto ds_path = dir.file("statement.md");
  RunResult r = run_cli("audit " + fixture.manifest.string() + " --config " +
                        fixture.config.string() + " --output " +
                        md_path.string() + " --format markdown" +
                        " --data-statement " + ds_path.string());
  CHECK(r.exit_code == 2);
  std::string md = read_file(md_path);
  CHECK(md.find("# Audit report: nan-TW") != std::string::npos);
  CHECK(md.find("DictionaryDump") != std::string::npos);
  std::string ds = read_file(ds_path);
  CHECK(ds.find("# Data statement: nan-TW") != std::string::npos);
  CHECK(ds.find("DualScriptPrompts") != std::string::npos);
}

TEST_CASE("classify: norwegian sentences get per-line verdicts") {
  voxtest::TempDir dir;
  voxtest::write_file(dir.file("sentences.txt"),
                      "Har eg dekt meg med song og harpespel.\n"
                      "Har jeg dekket meg med sang og harpespill.\n"
                      "Det er fint her\n");
  RunResult r = run_cli("classify " + dir.file("sentences.txt").string() +
                        " --classifier no");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "1\tNynorsk\teg");
  std::getline(lines, line);
  CHECK(line == "2\tBokmål\tjeg");
  std::getline(lines, line);
  CHECK(line == "3\tUnmarked\t");
}

TEST_CASE("classify: tally summary goes to stderr") {
  voxtest::TempDir dir;
  voxtest::write_file(dir.file("s.txt"), "ikkje\nikke\n");
  RunResult quiet = run_cli("classify " + dir.file("s.txt").string());
  CHECK(quiet.output.find("classified") == std::string::npos);
  RunResult merged =
      run_cli("classify " + dir.file("s.txt").string(), true);
  CHECK(merged.output.find("classified 2 sentences") != std::string::npos);
  CHECK(merged.output.find("Nynorsk") != std::string::npos);
}

TEST_CASE("classify: empty input, bad classifier, missing lexicon") {
  voxtest::TempDir dir;
  voxtest::write_file(dir.file("empty.txt"), "");
  RunResult r = run_cli("classify " + dir.file("empty.txt").string(), true);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("classified 0 sentences") != std::string::npos);

  voxtest::write_file(dir.file("s.txt"), "hello\n");
  CHECK(run_cli("classify " + dir.file("s.txt").string() +
                " --classifier zz").exit_code == 1);
  CHECK(run_cli("classify " + dir.file("s.txt").string() +
                " --lexicon /no/such/file.lex").exit_code == 1);
}

TEST_CASE("classify: custom lexicon file") {
  voxtest::TempDir dir;
  voxtest::write_file(dir.file("toy.lex"),
                      "[class_a]\nsunny\n[class_b]\nrainy\n");
  voxtest::write_file(dir.file("s.txt"), "a sunny day\nrainy night\n");
  RunResult r = run_cli("classify " + dir.file("s.txt").string() +
                        " --classifier no --lexicon " +
                        dir.file("toy.lex").string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1\tNynorsk\tsunny") != std::string::npos);
}

TEST_CASE("wer: orthography mismatch prints the split") {
  voxtest::TempDir dir;
  voxtest::write_file(dir.file("ref.tsv"),
                      "utt1\thar eg dekt meg med song og harpespel\n");
  voxtest::write_file(dir.file("hyp.tsv"),
                      "utt1\thar jeg dekket meg med sang og harpespill\n");
  RunResult r = run_cli("wer " + dir.file("ref.tsv").string() + " " +
                        dir.file("hyp.tsv").string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("WER 50.0 | Del 0.0 / Ins 0.0 / Sub 50.0") !=
        std::string::npos);
  CHECK(r.output.find("eg -> jeg") != std::string::npos);
}

TEST_CASE("wer: identical files score zero") {
  voxtest::TempDir dir;
  voxtest::write_file(dir.file("ref.tsv"), "u1\tsame text here\nu2\tmore\n");
  RunResult r = run_cli("wer " + dir.file("ref.tsv").string() + " " +
                        dir.file("ref.tsv").string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("WER 0.0") != std::string::npos);
}

TEST_CASE("wer: disjoint ids exit 1") {
  voxtest::TempDir dir;
  voxtest::write_file(dir.file("ref.tsv"), "a\tx\n");
  voxtest::write_file(dir.file("hyp.tsv"), "b\tx\n");
  RunResult r = run_cli("wer " + dir.file("ref.tsv").string() + " " +
                            dir.file("hyp.tsv").string(),
                        true);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("no overlapping") != std::string::npos);
}

TEST_CASE("wer: char mode") {
  voxtest::TempDir dir;
  voxtest::write_file(dir.file("ref.tsv"), "u\t竹南鎮\n");
  voxtest::write_file(dir.file("hyp.tsv"), "u\t竹東鎮\n");
  RunResult r = run_cli("wer " + dir.file("ref.tsv").string() + " " +
                        dir.file("hyp.tsv").string() + " --mode char");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("WER 33.3") != std::string::npos);
}

TEST_CASE("print-default-config emits parseable json") {
  RunResult r = run_cli("print-default-config");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.output);
  CHECK(j["vad"]["frame_ms"] == 25.0);
  CHECK(j["thresholds"]["low_speech_proportion"] == 0.5);
}

TEST_CASE("report: re-renders saved json as markdown") {
  voxtest::TempDir dir;
  auto fixture = voxtest::make_nan_fixture(dir);
  auto report_path = dir.file("report.json");
  run_cli("audit " + fixture.manifest.string() + " --config " +
          fixture.config.string() + " --output " + report_path.string());
  RunResult r = run_cli("report " + report_path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("# Audit report: nan-TW") != std::string::npos);
  CHECK(r.output.find("ExtremeShortUtterances") != std::string::npos);
}

TEST_CASE("version flag") {
  RunResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("voxaudit 0.1.0") != std::string::npos);
}
