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
// voxaudit CLI: audit speech-dataset manifests, classify text varieties,
// score WER, and render saved reports.
//
// Exit codes: 0 clean, 1 error, 2 audit raised at least one `fail` flag.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "voxaudit/audit.hpp"
#include "voxaudit/config.hpp"
#include "voxaudit/report.hpp"
#include "voxaudit/version.hpp"
#include "voxaudit/wer.hpp"

namespace {

using voxaudit::ordered_json;

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw voxaudit::IoError("cannot write output: " + path);
  out << content;
}

int run_audit_cmd(const std::string& manifest_path,
                  const std::string& config_path,
                  const std::string& output_override,
                  const std::string& format_override,
                  const std::string& data_statement_override) {
  voxaudit::AuditConfig config;
  if (!config_path.empty()) config = voxaudit::load_config(config_path);
  if (!output_override.empty()) config.output.path = output_override;
  if (!format_override.empty()) config.output.format = format_override;
  if (!data_statement_override.empty()) {
    config.data_statement_path = data_statement_override;
  }
  config.validate();

  voxaudit::AuditReport report = voxaudit::run_audit(manifest_path, config);
  ordered_json j = voxaudit::report_to_json(report);
  if (config.output.format == "markdown") {
    write_text(config.output.path, voxaudit::emit_report_markdown(j));
  } else {
    write_text(config.output.path, j.dump(2) + "\n");
  }
  if (!config.data_statement_path.empty()) {
    write_text(config.data_statement_path,
               voxaudit::emit_data_statement(
                   report.locale, config.data_statement_decisions, &j));
  }
  for (const voxaudit::QualityFlag& f : report.flags) {
    std::cerr << "flag: " << voxaudit::flag_code_name(f.code) << " ("
              << voxaudit::severity_name(f.severity) << ")\n";
  }
  return voxaudit::has_fail_flag(report) ? 2 : 0;
}

const char* category_label(voxaudit::VarietyCategory c,
                           const voxaudit::ClassifierInfo& info) {
  switch (c) {
    case voxaudit::VarietyCategory::ClassA: return info.label_a;
    case voxaudit::VarietyCategory::ClassB: return info.label_b;
    case voxaudit::VarietyCategory::Mixed: return "Mixed";
    case voxaudit::VarietyCategory::Unmarked: return "Unmarked";
  }
  return "Unmarked";
}

int run_classify_cmd(const std::string& text_path, const std::string& id,
                     const std::string& lexicon_path) {
  const voxaudit::ClassifierInfo* info = voxaudit::find_classifier(id);
  if (info == nullptr) {
    throw voxaudit::ConfigError("unknown classifier id: " + id);
  }
  voxaudit::MarkerLexicon file_lexicon;
  const voxaudit::MarkerLexicon* lexicon = &info->builtin();
  if (!lexicon_path.empty()) {
    file_lexicon = voxaudit::load_lexicon(lexicon_path);
    lexicon = &file_lexicon;
  }
  std::ifstream in(text_path, std::ios::binary);
  if (!in) throw voxaudit::IoError("cannot open text file: " + text_path);

  voxaudit::CategoryTally tally;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    voxaudit::VarietyVerdict verdict =
        voxaudit::classify_two_way(line, *lexicon, info->mode);
    tally.add(verdict.category);
    std::string markers;
    for (const voxaudit::MarkerHit& hit : verdict.matched_markers) {
      if (!markers.empty()) markers += ',';
      markers += hit.marker;
    }
    std::cout << line_no << '\t' << category_label(verdict.category, *info)
              << '\t' << markers << '\n';
  }
  auto show = [&](voxaudit::VarietyCategory c, const char* label) {
    std::fprintf(stderr, "%-10s %zu (%.1f%%)\n", label, tally.count(c),
                 tally.total == 0 ? 0.0 : voxaudit::round1(tally.percentage(c)));
  };
  std::fprintf(stderr, "classified %zu sentences with lexicon %s\n",
               tally.total, lexicon->name.c_str());
  show(voxaudit::VarietyCategory::ClassA, info->label_a);
  show(voxaudit::VarietyCategory::ClassB, info->label_b);
  show(voxaudit::VarietyCategory::Mixed, "Mixed");
  show(voxaudit::VarietyCategory::Unmarked, "Unmarked");
  return 0;
}

// id<TAB>text per line; text may itself contain tabs.
std::vector<std::pair<std::string, std::string>> load_id_text_tsv(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw voxaudit::IoError("cannot open TSV: " + path);
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      rows.emplace_back(line, "");
    } else {
      rows.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
  }
  return rows;
}

int run_wer_cmd(const std::string& ref_path, const std::string& hyp_path,
                const std::string& mode_name, size_t top_subs) {
  voxaudit::TokenizerMode mode = mode_name == "char"
                                     ? voxaudit::TokenizerMode::PerCharacterCJK
                                     : voxaudit::TokenizerMode::Whitespace;
  auto ref_rows = load_id_text_tsv(ref_path);
  auto hyp_rows = load_id_text_tsv(hyp_path);
  std::map<std::string, std::string> hyp_by_id(hyp_rows.begin(),
                                               hyp_rows.end());

  std::vector<voxaudit::TokenPair> pairs;
  size_t unmatched_ref = 0;
  std::map<std::string, bool> hyp_used;
  for (const auto& [id, text] : ref_rows) {
    auto it = hyp_by_id.find(id);
    if (it == hyp_by_id.end()) {
      ++unmatched_ref;
      continue;
    }
    hyp_used[id] = true;
    pairs.emplace_back(voxaudit::tokenize(text, mode),
                       voxaudit::tokenize(it->second, mode));
  }
  size_t unmatched_hyp = 0;
  for (const auto& [id, text] : hyp_by_id) {
    if (!hyp_used.count(id)) ++unmatched_hyp;
  }
  if (unmatched_ref > 0 || unmatched_hyp > 0) {
    std::fprintf(stderr, "unmatched ids: %zu reference-only, %zu hypothesis-only\n",
                 unmatched_ref, unmatched_hyp);
  }
  if (pairs.empty()) {
    std::fprintf(stderr, "no overlapping utterance ids\n");
    return 1;
  }

  voxaudit::CorpusWer total = voxaudit::corpus_wer(pairs);
  if (total.wer) {
    std::printf("WER %.1f | Del %.1f / Ins %.1f / Sub %.1f\n", 100.0 * *total.wer,
                100.0 * total.del_rate(), 100.0 * total.ins_rate(),
                100.0 * total.sub_rate());
  } else {
    std::printf("WER undefined (empty references) | Ins %zu\n",
                total.insertions);
  }
  std::printf("pairs %zu | ref tokens %zu | S %zu D %zu I %zu\n", total.n_pairs,
              total.n_ref, total.substitutions, total.deletions,
              total.insertions);
  auto top = total.top_substitutions(top_subs);
  if (!top.empty()) {
    std::printf("top substitutions:\n");
    for (const auto& [pair, count] : top) {
      std::printf("  %s -> %s: %zu\n", pair.first.c_str(), pair.second.c_str(),
                  count);
    }
  }
  return 0;
}

int run_report_cmd(const std::string& report_path, const std::string& output,
                   const std::string& data_statement_path) {
  std::ifstream in(report_path, std::ios::binary);
  if (!in) throw voxaudit::IoError("cannot open report: " + report_path);
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw voxaudit::ConfigError("report parse error: " + std::string(e.what()));
  }
  write_text(output, voxaudit::emit_report_markdown(j));
  if (!data_statement_path.empty()) {
    write_text(data_statement_path,
               voxaudit::emit_data_statement(
                   j.value("locale", std::string()), {}, &j));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"voxaudit: quality audits for multilingual speech datasets"};
  app.set_version_flag("--version", std::string("voxaudit ") + voxaudit::kVersion);
  app.require_subcommand(1);

  std::string manifest_path, config_path, output, format, data_statement;
  CLI::App* audit = app.add_subcommand(
      "audit", "Audit a dataset manifest and write a quality report");
  audit->add_option("manifest", manifest_path, "Manifest file (TSV/CSV)")
      ->required();
  audit->add_option("--config", config_path, "Audit config JSON");
  audit->add_option("--output", output, "Report output path (default stdout)");
  audit->add_option("--format", format, "Report format: json|markdown")
      ->check(CLI::IsMember({"json", "markdown", ""}));
  audit->add_option("--data-statement", data_statement,
                    "Also write a data-statement skeleton to this path");

  std::string text_path, classifier_id = "no", lexicon_path;
  CLI::App* classify = app.add_subcommand(
      "classify", "Classify one sentence per line into variety categories");
  classify->add_option("text", text_path, "UTF-8 text file, one sentence per line")
      ->required();
  classify->add_option("--classifier", classifier_id,
                       "Classifier id: no|ar|yue");
  classify->add_option("--lexicon", lexicon_path,
                       "Marker lexicon file (default: built-in)");

  std::string ref_path, hyp_path, wer_mode = "word";
  size_t top_subs = 10;
  CLI::App* wer = app.add_subcommand(
      "wer", "Score hypothesis TSV against reference TSV (id<TAB>text)");
  wer->add_option("ref", ref_path, "Reference TSV")->required();
  wer->add_option("hyp", hyp_path, "Hypothesis TSV")->required();
  wer->add_option("--mode", wer_mode, "Token mode: word|char")
      ->check(CLI::IsMember({"word", "char"}));
  wer->add_option("--top-subs", top_subs, "How many substitution pairs to list");

  std::string report_path, report_output, report_ds;
  CLI::App* report = app.add_subcommand(
      "report", "Re-render a JSON report as Markdown");
  report->add_option("report", report_path, "Report JSON file")->required();
  report->add_option("--output", report_output, "Markdown output (default stdout)");
  report->add_option("--data-statement", report_ds,
                     "Also write a data-statement skeleton to this path");

  CLI::App* print_config = app.add_subcommand(
      "print-default-config", "Print the default audit config as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (audit->parsed()) {
      return run_audit_cmd(manifest_path, config_path, output, format,
                           data_statement);
    }
    if (classify->parsed()) {
      return run_classify_cmd(text_path, classifier_id, lexicon_path);
    }
    if (wer->parsed()) {
      return run_wer_cmd(ref_path, hyp_path, wer_mode, top_subs);
    }
    if (report->parsed()) {
      return run_report_cmd(report_path, report_output, report_ds);
    }
    if (print_config->parsed()) {
      std::cout << voxaudit::config_to_json(voxaudit::AuditConfig{}).dump(2)
                << "\n";
      return 0;
    }
  } catch (const voxaudit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
