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

#include "scriptid/audit.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "scriptid/errors.h"
#include "scriptid/identifier.h"
#include "scriptid/utf8.h"
#include "text_util.h"

namespace scriptid {
namespace {

bool is_white_space(char32_t cp) {
  return (cp >= 0x09 && cp <= 0x0D) || cp == 0x20 || cp == 0x85 ||
         cp == 0xA0 || cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) ||
         cp == 0x2028 || cp == 0x2029 || cp == 0x202F || cp == 0x205F ||
         cp == 0x3000;
}

bool blank(std::string_view utf8) {
  std::u32string decoded = decode_utf8(utf8);
  return std::all_of(decoded.begin(), decoded.end(), is_white_space);
}

// Uniform integer in [0, bound) from raw engine output, rejecting the
// partial top bucket so every value is equally likely.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

struct SentenceResult {
  MatchOutcome outcome;
  std::size_t length = 0;
};

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([begin, end, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& w : workers) w.join();
}

MatchOutcome match_decoded(const WritingSystemResource& resource,
                           const CorpusKey& key, std::u32string_view text,
                           bool include_aux, const ScriptRangeTable& table) {
  IdentificationResult id = identify(table, text);
  MatchOutcome outcome;
  outcome.main = id.main_script.value_or(kUnknown);
  if (key.script_hint) {
    outcome.status = outcome.main == *key.script_hint ? MatchStatus::kMatch
                                                       : MatchStatus::kMismatch;
    return outcome;
  }
  if (resource.find(key.lang) == nullptr) {
    outcome.status = MatchStatus::kUnmatchable;
    return outcome;
  }
  outcome.status =
      admissible_scripts(resource, key.lang, include_aux).contains(outcome.main)
          ? MatchStatus::kMatch
          : MatchStatus::kMismatch;
  return outcome;
}

}  // namespace

LabelMap LabelMap::parse(std::string_view text, std::string source_name) {
  LabelMap map;
  std::size_t line_no = 0;
  for_each_line(text, [&](std::string_view line) {
    ++line_no;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') return;
    auto fields = split_fields(t, '\t');
    if (fields.size() != 2 || fields[0].empty()) {
      throw ParseError(source_name, line_no, "expected `label<TAB>iso639`");
    }
    auto code = LanguageCode::parse(fields[1]);
    if (!code) {
      throw ParseError(source_name, line_no,
                       "not a three-letter ISO 639 code: \"" +
                           std::string(fields[1]) + "\"");
    }
    map.add(std::string(fields[0]), *code);
  });
  return map;
}

void LabelMap::add(std::string label, LanguageCode code) {
  labels_.insert_or_assign(std::move(label), code);
}

std::optional<LanguageCode> LabelMap::resolve(std::string_view label) const {
  if (auto it = labels_.find(label); it != labels_.end()) return it->second;
  return LanguageCode::parse(label);
}

std::string CorpusKey::str() const {
  std::string out = lang.str();
  if (script_hint) {
    out += '-';
    out += script_hint->view();
  }
  return out;
}

std::optional<CorpusKey> parse_label(std::string_view label,
                                     const LabelMap& labels) {
  label = trim(label);
  std::optional<ScriptCode> hint;
  std::string_view lang_part = label;
  if (auto dash = label.find('-'); dash != std::string_view::npos) {
    hint = ScriptCode::parse(label.substr(dash + 1));
    if (!hint) return std::nullopt;
    lang_part = label.substr(0, dash);
  }
  auto lang = labels.resolve(lang_part);
  if (!lang) return std::nullopt;
  return CorpusKey{*lang, hint};
}

bool CorpusNormalizer::add(std::string_view label, std::string_view text) {
  auto key = parse_label(label, *labels_);
  if (!key) {
    ++corpus_.skipped_rows;
    return false;
  }
  auto& seen = seen_[*key];
  auto& out = corpus_.sentences[*key];
  for (std::string_view sentence : split_raw(text, '\n')) {
    if (!sentence.empty() && sentence.back() == '\r') sentence.remove_suffix(1);
    if (blank(sentence)) continue;
    if (seen.contains(sentence)) continue;
    seen.emplace(sentence);
    out.push_back({std::string(sentence), *key});
  }
  if (out.empty()) corpus_.sentences.erase(*key);
  return true;
}

NormalizedCorpus CorpusNormalizer::finish() && {
  seen_.clear();
  return std::move(corpus_);
}

NormalizedCorpus normalize_corpus(std::span<const CorpusRow> rows,
                                  const LabelMap& labels) {
  CorpusNormalizer normalizer(labels);
  for (const auto& row : rows) normalizer.add(row.label, row.text);
  return std::move(normalizer).finish();
}

SampleResult sample(
    const std::map<CorpusKey, std::vector<LabeledSentence>>& sentences,
    std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample size must be at least 1");
  SampleResult result;
  for (const auto& [key, pool] : sentences) {
    if (pool.size() < n) {
      result.excluded.emplace(key, pool.size());
      continue;
    }
    std::mt19937_64 rng(seed ^ fnv1a64(key.str()));
    std::vector<std::size_t> order(pool.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = i + bounded(rng, order.size() - i);
      std::swap(order[i], order[j]);
    }
    auto& chosen = result.selected[key];
    chosen.reserve(n);
    for (std::size_t i = 0; i < n; ++i) chosen.push_back(pool[order[i]]);
  }
  return result;
}

MatchOutcome match_sentence(const WritingSystemResource& resource,
                            const LabeledSentence& sentence, bool include_aux,
                            const ScriptRangeTable& table) {
  return match_decoded(resource, sentence.key, decode_utf8(sentence.text),
                       include_aux, table);
}

std::size_t length_subset_size(double fraction, std::size_t sampled) {
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw std::invalid_argument("length fraction must be in (0, 1]");
  }
  // 0.55 * 100 is 55.00000000000001 in binary; shave the representation
  // error before rounding up.
  const double raw = fraction * static_cast<double>(sampled);
  const double size = std::ceil(raw - 1e-9 * std::max(1.0, raw));
  return std::min(sampled, static_cast<std::size_t>(std::max(0.0, size)));
}

AuditReport audit(const NormalizedCorpus& corpus,
                  const WritingSystemResource& resource,
                  const ScriptRangeTable& table, const AuditOptions& options) {
  for (double f : options.length_fractions) length_subset_size(f, 1);

  AuditReport report;
  report.options = options;
  report.skipped_rows = corpus.skipped_rows;
  if (corpus.sentences.empty()) return report;

  SampleResult sampled =
      sample(corpus.sentences, options.sample_size, options.seed);
  report.excluded = sampled.excluded;

  // Flatten so the parallel stage sees one index space; results land in
  // fixed slots, so aggregation is independent of scheduling.
  std::vector<const LabeledSentence*> work;
  for (const auto& [key, chosen] : sampled.selected) {
    for (const auto& s : chosen) work.push_back(&s);
  }
  std::vector<SentenceResult> results(work.size());
  parallel_for(work.size(), options.threads, [&](std::size_t i) {
    std::u32string decoded = decode_utf8(work[i]->text);
    results[i].length = decoded.size();
    results[i].outcome = match_decoded(resource, work[i]->key, decoded,
                                       options.include_aux, table);
  });

  std::size_t offset = 0;
  for (const auto& [key, chosen] : sampled.selected) {
    LanguageAudit lang;
    lang.key = key;
    lang.available = corpus.sentences.at(key).size();
    lang.sampled = chosen.size();
    std::span<const SentenceResult> slice(results.data() + offset,
                                          chosen.size());
    offset += chosen.size();
    for (const auto& r : slice) {
      ++lang.script_tally[r.outcome.main];
      if (r.outcome.matched()) ++lang.matches;
      if (r.outcome.status == MatchStatus::kUnmatchable) ++lang.unmatchable;
    }
    std::vector<std::size_t> by_length(slice.size());
    std::iota(by_length.begin(), by_length.end(), 0);
    std::stable_sort(by_length.begin(), by_length.end(),
                     [&](std::size_t a, std::size_t b) {
                       return slice[a].length > slice[b].length;
                     });
    for (double f : options.length_fractions) {
      LengthFilteredAccuracy acc;
      acc.fraction = f;
      acc.kept = length_subset_size(f, lang.sampled);
      for (std::size_t i = 0; i < acc.kept; ++i) {
        if (slice[by_length[i]].outcome.matched()) ++acc.matches;
      }
      lang.length_filtered.push_back(acc);
    }
    report.languages.push_back(std::move(lang));
  }
  return report;
}

AuditReport audit(std::span<const CorpusRow> rows, const LabelMap& labels,
                  const WritingSystemResource& resource,
                  const ScriptRangeTable& table, const AuditOptions& options) {
  return audit(normalize_corpus(rows, labels), resource, table, options);
}

CorpusRow parse_corpus_line(std::string_view line, std::size_t line_no,
                            const std::string& source_name) {
  auto tab = line.find('\t');
  if (tab == std::string_view::npos) {
    throw ParseError(source_name, line_no, "expected `label<TAB>text`");
  }
  CorpusRow row;
  row.label = std::string(trim(line.substr(0, tab)));
  std::string_view text = line.substr(tab + 1);
  row.text.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\\' && i + 1 < text.size()) {
      char next = text[i + 1];
      if (next == 'n') {
        row.text += '\n';
        ++i;
        continue;
      }
      if (next == 't') {
        row.text += '\t';
        ++i;
        continue;
      }
      if (next == '\\') {
        row.text += '\\';
        ++i;
        continue;
      }
    }
    row.text += text[i];
  }
  return row;
}

}  // namespace scriptid
