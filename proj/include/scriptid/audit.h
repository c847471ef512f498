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

#ifndef SCRIPTID_AUDIT_H_
#define SCRIPTID_AUDIT_H_

// Corpus quality audit: flags sentences whose main script is not admissible
// for the language they are labeled with, and reports per-language accuracy
// over the full sample and over its longest sentences.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scriptid/metadata.h"
#include "scriptid/script_code.h"
#include "scriptid/script_table.h"

namespace scriptid {

// Maps corpus labels ("bg", "zh") to ISO 639 codes. Labels that are already
// three-letter codes map to themselves unless the file says otherwise.
class LabelMap {
 public:
  LabelMap() = default;

  // File format: `label<TAB>iso639` per line; '#' comments and blank lines
  // skipped. Throws ParseError.
  static LabelMap parse(std::string_view text, std::string source_name = {});

  void add(std::string label, LanguageCode code);
  std::optional<LanguageCode> resolve(std::string_view label) const;

 private:
  std::map<std::string, LanguageCode, std::less<>> labels_;
};

// The unit a report is keyed by: a language, optionally pinned to a script
// by the corpus label ("bg-Latn" -> bul + Latn).
struct CorpusKey {
  LanguageCode lang;
  std::optional<ScriptCode> script_hint;

  std::string str() const;
  friend auto operator<=>(const CorpusKey&, const CorpusKey&) = default;
  friend bool operator==(const CorpusKey&, const CorpusKey&) = default;
};

// Splits "lang" or "lang-Script" and resolves lang through `labels`.
std::optional<CorpusKey> parse_label(std::string_view label,
                                     const LabelMap& labels);

struct LabeledSentence {
  std::string text;  // UTF-8, non-empty, not whitespace-only
  CorpusKey key;

  friend bool operator==(const LabeledSentence&,
                         const LabeledSentence&) = default;
};

struct CorpusRow {
  std::string label;
  std::string text;  // may hold several newline-separated sentences
};

struct NormalizedCorpus {
  std::map<CorpusKey, std::vector<LabeledSentence>> sentences;
  std::size_t skipped_rows = 0;  // rows whose label did not parse
};

// Incremental form of normalize_corpus for streaming readers.
class CorpusNormalizer {
 public:
  explicit CorpusNormalizer(const LabelMap& labels) : labels_(&labels) {}

  // Returns false (and counts the row as skipped) when the label is bad.
  bool add(std::string_view label, std::string_view text);

  NormalizedCorpus finish() &&;

 private:
  const LabelMap* labels_;
  NormalizedCorpus corpus_;
  std::map<CorpusKey, std::set<std::string, std::less<>>> seen_;
};

// Splits each row on '\n', drops empty and whitespace-only sentences, and
// removes exact duplicates within each key, keeping first occurrences.
NormalizedCorpus normalize_corpus(std::span<const CorpusRow> rows,
                                  const LabelMap& labels);

struct SampleResult {
  std::map<CorpusKey, std::vector<LabeledSentence>> selected;
  // Keys with fewer than n sentences, with how many they had.
  std::map<CorpusKey, std::size_t> excluded;
};

// Uniform sampling without replacement of exactly n sentences per key.
//
// Each key gets its own mt19937_64 seeded with seed XOR FNV-1a-64(key.str()),
// then a partial Fisher-Yates shuffle: for i in [0, n), pick j uniformly in
// [i, size) by rejection sampling on the raw 64-bit output, swap(i, j). The
// first n elements, in that order, are the sample. Keys with fewer than n
// sentences are excluded. Throws std::invalid_argument when n == 0.
SampleResult sample(const std::map<CorpusKey, std::vector<LabeledSentence>>&
                        sentences,
                    std::size_t n, std::uint64_t seed);

enum class MatchStatus {
  kMatch,
  kMismatch,
  kUnmatchable,  // no hint and the language has no resource record
};

struct MatchOutcome {
  ScriptCode main = kUnknown;
  MatchStatus status = MatchStatus::kMismatch;

  bool matched() const { return status == MatchStatus::kMatch; }
};

// With a script hint, the sentence matches iff its main script equals the
// hint. Otherwise it matches iff its main script is admissible for its
// language.
MatchOutcome match_sentence(const WritingSystemResource& resource,
                            const LabeledSentence& sentence, bool include_aux,
                            const ScriptRangeTable& table);

struct AuditOptions {
  std::size_t sample_size = 1000;
  std::uint64_t seed = 0;
  bool include_aux = false;
  std::vector<double> length_fractions = {0.7, 0.5};
  unsigned threads = 1;  // 0 means hardware concurrency
};

struct LengthFilteredAccuracy {
  double fraction = 0;
  std::size_t kept = 0;     // ceil(fraction * sampled)
  std::size_t matches = 0;

  double accuracy() const {
    return kept == 0 ? 0.0 : static_cast<double>(matches) / kept;
  }
  friend bool operator==(const LengthFilteredAccuracy&,
                         const LengthFilteredAccuracy&) = default;
};

struct LanguageAudit {
  CorpusKey key;
  std::size_t available = 0;  // sentences after normalization
  std::size_t sampled = 0;
  std::size_t matches = 0;
  std::size_t unmatchable = 0;
  std::map<ScriptCode, std::size_t> script_tally;  // main script -> sentences
  std::vector<LengthFilteredAccuracy> length_filtered;

  double accuracy() const {
    return sampled == 0 ? 0.0 : static_cast<double>(matches) / sampled;
  }
  friend bool operator==(const LanguageAudit&,
                         const LanguageAudit&) = default;
};

struct AuditReport {
  std::vector<LanguageAudit> languages;  // sorted by key
  std::map<CorpusKey, std::size_t> excluded;
  std::size_t skipped_rows = 0;
  AuditOptions options;

  friend bool operator==(const AuditReport& a, const AuditReport& b) {
    return a.languages == b.languages && a.excluded == b.excluded &&
           a.skipped_rows == b.skipped_rows;
  }
};

// Size of a length-filtered subset: ceil(fraction * sampled), computed so
// that fractions given in decimal (0.7) do not round up spuriously.
std::size_t length_subset_size(double fraction, std::size_t sampled);

// normalize -> sample -> match. Sentence length is counted in scalar values;
// the ACC-f subsets take the longest sentences, ties broken by sample order.
AuditReport audit(const NormalizedCorpus& corpus,
                  const WritingSystemResource& resource,
                  const ScriptRangeTable& table, const AuditOptions& options);

AuditReport audit(std::span<const CorpusRow> rows, const LabelMap& labels,
                  const WritingSystemResource& resource,
                  const ScriptRangeTable& table, const AuditOptions& options);

// Corpus file: `label<TAB>text` per line. Inside text, "\n" is a sentence
// break and "\\" a literal backslash; "\t" is a tab. Throws ParseError on a
// line without a tab.
CorpusRow parse_corpus_line(std::string_view line, std::size_t line_no,
                            const std::string& source_name = {});

}  // namespace scriptid

#endif  // SCRIPTID_AUDIT_H_
