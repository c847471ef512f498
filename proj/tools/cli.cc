// Copyright 2026 The scriptid Authors
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

#include "cli.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scriptid/audit.h"
#include "scriptid/errors.h"
#include "scriptid/identifier.h"
#include "scriptid/metadata.h"
#include "scriptid/records.h"
#include "scriptid/script_table.h"
#include "scriptid/ucd.h"
#include "scriptid/utf8.h"
#include "scriptid/vocab.h"

namespace scriptid::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("error reading " + path);
  return ss.str();
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return in;
}

// Writes to the file at `path`, or to `out` when the path is empty or "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
      stream_ = &out;
    } else {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error("cannot write " + path);
      stream_ = &file_;
      path_ = path;
    }
  }
  std::ostream& stream() { return *stream_; }
  void close() {
    stream_->flush();
    if (!*stream_) throw Error("error writing " + (path_.empty() ? "output" : path_));
  }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
  std::string path_;
};

std::string checksum_hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

BadUtf8Policy policy_from(const std::string& name) {
  return name == "fail" ? BadUtf8Policy::kFail : BadUtf8Policy::kReplace;
}

ScriptRangeTable load_table(const std::string& path) {
  if (path.empty()) return embedded_table();
  return ScriptRangeTable::deserialize(read_file(path), path);
}

void print_identification(std::ostream& out, const IdentificationResult& r,
                          std::optional<std::size_t> line, bool pretty) {
  if (pretty) {
    if (line) out << *line << "\t";
    out << (r.main_script ? r.main_script->str() : std::string("-")) << "\t";
    char pct[16];
    std::snprintf(pct, sizeof(pct), "%.4f", r.main_fraction());
    out << pct << "\t";
    bool first = true;
    for (const auto& [code, n] : r.distribution.entries()) {
      if (!first) out << ", ";
      out << code << ":" << n;
      first = false;
    }
    out << "\n";
    return;
  }
  Json record = to_record(r);
  if (line) record["line"] = *line;
  out << record.dump() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Script identification and writing-system metadata toolkit",
               "scriptid"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version,
               "Print the Unicode version and embedded table checksum");

  // build-table
  std::string scripts_path, aliases_path, table_out;
  bool no_merge = false;
  auto* build = app.add_subcommand(
      "build-table", "Compile Scripts.txt + PropertyValueAliases.txt");
  build->add_option("--scripts", scripts_path, "UCD Scripts.txt")
      ->required()
      ->check(CLI::ExistingFile);
  build->add_option("--aliases", aliases_path, "UCD PropertyValueAliases.txt")
      ->required()
      ->check(CLI::ExistingFile);
  build->add_option("-o,--output", table_out, "Output table file (default stdout)");
  build->add_flag("--no-merge", no_merge, "Keep adjacent same-script ranges apart");

  // identify
  std::string identify_input, table_path, bad_utf8 = "replace";
  bool per_line = false, pretty = false;
  auto* ident = app.add_subcommand("identify", "Script distribution of text");
  ident->add_option("-i,--input", identify_input, "Input file (default stdin)")
      ->check(CLI::ExistingFile);
  ident->add_flag("--per-line", per_line, "One record per input line");
  ident->add_option("--table", table_path, "Serialized table (default embedded)")
      ->check(CLI::ExistingFile);
  ident->add_option("--on-bad-utf8", bad_utf8, "replace | fail")
      ->check(CLI::IsMember({"replace", "fail"}));
  ident->add_flag("--pretty", pretty, "Tab-separated human-readable output");

  // merge-metadata
  std::string langtag_path, scriptsource_path, lrec_path, wiki_path, resource_out;
  auto* merge = app.add_subcommand(
      "merge-metadata", "Compile four source tables into a resource file");
  merge->add_option("--langtag", langtag_path)->required()->check(CLI::ExistingFile);
  merge->add_option("--scriptsource", scriptsource_path)
      ->required()
      ->check(CLI::ExistingFile);
  merge->add_option("--lrec", lrec_path)->required()->check(CLI::ExistingFile);
  merge->add_option("--wikipedia", wiki_path)->required()->check(CLI::ExistingFile);
  merge->add_option("-o,--output", resource_out, "Resource file (default stdout)");

  // agreement
  std::vector<std::string> agreement_paths;
  auto* agree = app.add_subcommand("agreement",
                                   "Jaccard agreement between two source tables");
  agree->add_option("tables", agreement_paths, "Two source table files")
      ->required()
      ->expected(2)
      ->check(CLI::ExistingFile);

  // audit
  std::string corpus_path, resource_path, lang_map_path, audit_out;
  AuditOptions audit_options;
  bool include_aux = false;
  auto* aud = app.add_subcommand("audit", "Script mismatch audit of a corpus");
  aud->add_option("--corpus", corpus_path, "label<TAB>text lines")
      ->required()
      ->check(CLI::ExistingFile);
  aud->add_option("--resource", resource_path, "Resource file")
      ->required()
      ->check(CLI::ExistingFile);
  aud->add_option("--sample", audit_options.sample_size, "Sentences per language")
      ->check(CLI::PositiveNumber);
  aud->add_option("--seed", audit_options.seed, "Sampling seed");
  aud->add_flag("--include-aux", include_aux, "Accept AUXILIARY scripts too");
  aud->add_option("--length-filters", audit_options.length_fractions,
                  "Fractions of longest sentences, e.g. 0.7,0.5")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  aud->add_option("--lang-map", lang_map_path, "label<TAB>iso639 lines")
      ->check(CLI::ExistingFile);
  aud->add_option("--threads", audit_options.threads,
                  "Worker threads (0 = all cores)");
  aud->add_option("--table", table_path, "Serialized table (default embedded)")
      ->check(CLI::ExistingFile);
  aud->add_flag("--pretty", pretty, "Human-readable table");
  aud->add_option("-o,--output", audit_out, "Report file (default stdout)");

  // vocab-scripts
  std::string vocab_path, vocab_format = "lines";
  std::vector<std::string> strip_markers_list;
  bool no_default_markers = false;
  auto* vocab = app.add_subcommand("vocab-scripts",
                                   "Script profile of a tokenizer vocabulary");
  vocab->add_option("--vocab", vocab_path, "One token per line")
      ->required()
      ->check(CLI::ExistingFile);
  vocab->add_option("--format", vocab_format, "lines | tsv")
      ->check(CLI::IsMember({"lines", "tsv"}));
  vocab->add_option("--strip-markers", strip_markers_list,
                    "Extra prefixes to strip (vocabulary escapes allowed)");
  vocab->add_flag("--no-default-markers", no_default_markers,
                  "Do not strip ##, U+2581 and U+0120");
  vocab->add_option("--table", table_path, "Serialized table (default embedded)")
      ->check(CLI::ExistingFile);
  vocab->add_flag("--pretty", pretty, "Human-readable table");

  // tok-stats
  std::string docs_path, reference_doc;
  std::optional<std::string> unk_marker;
  auto* tok = app.add_subcommand("tok-stats",
                                 "Token counts and UNK rates of tokenized docs");
  tok->add_option("--docs", docs_path, "doc_id<TAB>tokens lines")
      ->required()
      ->check(CLI::ExistingFile);
  tok->add_option("--unk", unk_marker, "Unknown-token marker, e.g. <unk>");
  tok->add_option("--reference", reference_doc,
                  "Report cost ratios relative to this doc_id");
  tok->add_flag("--pretty", pretty, "Human-readable table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; anything else is a usage error.
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (show_version) {
      const auto& table = embedded_table();
      out << "scriptid " << kVersion << "\n"
          << "unicode " << table.unicode_version() << "\n"
          << "table-checksum " << checksum_hex(table.checksum()) << "\n";
      return 0;
    }

    if (*build) {
      std::string scripts = read_file(scripts_path);
      auto table = ScriptRangeTable::build(
          parse_scripts_file(scripts, scripts_path),
          parse_aliases_file(read_file(aliases_path), aliases_path),
          TableBuildOptions{.merge_adjacent = !no_merge},
          ucd_version_from_header(scripts).value_or(""));
      Sink sink(table_out, out);
      sink.stream() << table.serialize();
      sink.close();
      err << "scriptid: " << table.ranges().size() << " ranges, "
          << table.scripts().size() << " scripts, checksum "
          << checksum_hex(table.checksum()) << "\n";
      return 0;
    }

    if (*ident) {
      const ScriptRangeTable table = load_table(table_path);
      const BadUtf8Policy policy = policy_from(bad_utf8);
      std::ifstream file;
      if (!identify_input.empty()) file = open_file(identify_input);
      std::istream& src = identify_input.empty() ? in : file;
      if (per_line) {
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(src, line)) {
          ++line_no;
          if (!line.empty() && line.back() == '\r') line.pop_back();
          try {
            print_identification(out, identify_utf8(table, line, policy),
                                 line_no, pretty);
          } catch (const DecodeError& e) {
            throw ParseError(identify_input.empty() ? "<stdin>" : identify_input,
                             line_no, e.what());
          }
        }
        if (src.bad()) throw Error("error reading input");
      } else {
        std::ostringstream ss;
        ss << src.rdbuf();
        std::string text = ss.str();
        if (text.ends_with("\r\n")) {
          text.resize(text.size() - 2);
        } else if (text.ends_with('\n')) {
          text.pop_back();
        }
        print_identification(out, identify_utf8(table, text, policy),
                             std::nullopt, pretty);
      }
      return 0;
    }

    if (*merge) {
      auto langtag = parse_source_table(read_file(langtag_path), langtag_path);
      auto scriptsource =
          parse_source_table(read_file(scriptsource_path), scriptsource_path);
      auto lrec = parse_source_table(read_file(lrec_path), lrec_path);
      auto wiki = parse_source_table(read_file(wiki_path), wiki_path);
      auto expect = [](const SourceTable& t, SourceId id,
                       const std::string& path) {
        if (t.source != id) {
          throw Error(path + ": expected source " +
                      std::string(to_string(id)) + ", found " +
                      std::string(to_string(t.source)));
        }
      };
      expect(langtag, SourceId::kLangTag, langtag_path);
      expect(scriptsource, SourceId::kScriptSource, scriptsource_path);
      expect(lrec, SourceId::kLrec2800, lrec_path);
      expect(wiki, SourceId::kWikipedia, wiki_path);
      auto consolidated = consolidate_sil(langtag, scriptsource, wiki, lrec);
      auto resource = compile_resource(consolidated.sil, consolidated.sil2_aux,
                                       lrec, wiki, &langtag, &scriptsource);
      Sink sink(resource_out, out);
      sink.stream() << write_resource(resource);
      sink.close();
      return 0;
    }

    if (*agree) {
      auto a = parse_source_table(read_file(agreement_paths[0]),
                                  agreement_paths[0]);
      auto b = parse_source_table(read_file(agreement_paths[1]),
                                  agreement_paths[1]);
      Json record = to_record(agreement(a, b));
      record["pair"] = {std::string(to_string(a.source)),
                        std::string(to_string(b.source))};
      out << record.dump() << "\n";
      return 0;
    }

    if (*aud) {
      audit_options.include_aux = include_aux;
      const ScriptRangeTable table = load_table(table_path);
      auto resource = read_resource(read_file(resource_path), resource_path);
      LabelMap labels;
      if (!lang_map_path.empty()) {
        labels = LabelMap::parse(read_file(lang_map_path), lang_map_path);
      }
      CorpusNormalizer normalizer(labels);
      std::ifstream corpus = open_file(corpus_path);
      std::string line;
      std::size_t line_no = 0;
      while (std::getline(corpus, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        CorpusRow row = parse_corpus_line(line, line_no, corpus_path);
        if (!normalizer.add(row.label, row.text)) {
          err << corpus_path << ":" << line_no << ": warning: unparseable label \""
              << row.label << "\", row skipped\n";
        }
      }
      if (corpus.bad()) throw Error("error reading " + corpus_path);
      AuditReport report = audit(std::move(normalizer).finish(), resource, table,
                                 audit_options);
      Sink sink(audit_out, out);
      if (pretty) {
        sink.stream() << format_audit_table(report);
      } else {
        sink.stream() << to_record(report).dump() << "\n";
      }
      sink.close();
      return 0;
    }

    if (*vocab) {
      const ScriptRangeTable table = load_table(table_path);
      auto tokens = parse_vocab_file(
          read_file(vocab_path),
          vocab_format == "tsv" ? VocabFormat::kTsv : VocabFormat::kLines,
          vocab_path);
      MarkerConfig markers;
      if (no_default_markers) markers.prefixes.clear();
      for (const auto& m : strip_markers_list) {
        auto parsed = parse_vocab_file(m, VocabFormat::kLines, "--strip-markers");
        if (parsed.size() != 1) throw Error("bad --strip-markers value");
        markers.prefixes.push_back(parsed.front());
      }
      auto profile = vocab_script_distribution(tokens, table, markers);
      if (pretty) {
        out << format_vocab_table(profile);
      } else {
        out << to_record(profile).dump() << "\n";
      }
      return 0;
    }

    if (*tok) {
      std::vector<TokenizedDoc> docs;
      std::ifstream file = open_file(docs_path);
      std::string line;
      std::size_t line_no = 0;
      while (std::getline(file, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        docs.push_back(parse_tokenized_line(line, line_no, docs_path));
      }
      if (file.bad()) throw Error("error reading " + docs_path);
      auto stats = tokenization_stats(docs, unk_marker);
      const TokenizationStats* reference = nullptr;
      if (!reference_doc.empty()) {
        for (const auto& s : stats) {
          if (s.doc_id == reference_doc) reference = &s;
        }
        if (reference == nullptr) {
          throw Error("reference doc_id \"" + reference_doc + "\" not found");
        }
      }
      if (pretty) {
        out << format_tokenization_table(stats);
        if (reference != nullptr) {
          for (const auto& s : stats) {
            char ratio[32];
            std::snprintf(ratio, sizeof(ratio), "%.4f", cost_ratio(*reference, s));
            out << "# cost ratio " << s.doc_id << "/" << reference_doc << " "
                << ratio << "\n";
          }
        }
      } else {
        for (const auto& s : stats) {
          Json record = to_record(s);
          if (reference != nullptr) {
            record["cost_ratio"] = round4(cost_ratio(*reference, s));
          }
          out << record.dump() << "\n";
        }
      }
      return 0;
    }

    err << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "scriptid: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace scriptid::cli
