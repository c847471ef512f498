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

#ifndef SCRIPTID_VOCAB_H_
#define SCRIPTID_VOCAB_H_

// Script profiles of tokenizer vocabularies and token/UNK statistics of
// documents tokenized elsewhere.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scriptid/script_code.h"
#include "scriptid/script_table.h"

namespace scriptid {

// Subword markers removed from the front of a token before identification.
// Each prefix is tried once, in order.
struct MarkerConfig {
  std::vector<std::string> prefixes = {
      "##",            // WordPiece continuation
      "\xE2\x96\x81",  // U+2581, SentencePiece word boundary
      "\xC4\xA0",      // U+0120, byte-level BPE space
  };
};

std::string_view strip_markers(std::string_view token,
                               const MarkerConfig& markers);

// True for byte-fallback pseudo tokens such as "<0x0A>".
bool is_byte_token(std::string_view token);

struct VocabScriptProfile {
  std::map<ScriptCode, std::size_t> counts;  // tokens per main script
  std::size_t vocab_size = 0;

  double fraction(ScriptCode code) const;
  // Distinct proper scripts (Zyyy/Zinh/Zzzz not counted).
  std::size_t scripts_present() const;
};

// Each token counts once, under its main script after marker stripping.
// Tokens that are empty after stripping, and byte-fallback tokens, count as
// Zzzz.
VocabScriptProfile vocab_script_distribution(
    std::span<const std::string> vocab, const ScriptRangeTable& table,
    const MarkerConfig& markers = {});

struct TokenizedDoc {
  std::string doc_id;
  std::vector<std::string> tokens;
};

inline constexpr double kUnkExclusionThreshold = 0.05;

struct TokenizationStats {
  std::string doc_id;
  std::size_t token_count = 0;
  std::size_t unk_count = 0;

  double unk_fraction() const {
    return token_count == 0 ? 0.0
                            : static_cast<double>(unk_count) / token_count;
  }
  // Documents at or above 5% unknown tokens are excluded from comparisons.
  bool excluded() const {
    return unk_count > 0 && unk_count * 20 >= token_count;
  }
};

// Counts tokens and occurrences of `unk_marker`. Without a marker, a
// document containing a common unknown-token spelling ("<unk>", "[UNK]",
// "<UNK>") raises std::invalid_argument, since its rate would silently read
// as zero.
std::vector<TokenizationStats> tokenization_stats(
    std::span<const TokenizedDoc> docs,
    const std::optional<std::string>& unk_marker);

// b.token_count / a.token_count. Throws std::domain_error when a has no
// tokens.
double cost_ratio(const TokenizationStats& a, const TokenizationStats& b);

// Vocabulary file: one token per line. Escapes: "\\" backslash, "\n", "\t",
// "\r", "\s" space, "\uXXXX" / "\UXXXXXXXX" code points. In tsv mode only the
// first tab-separated column is the token (e.g. `token<TAB>id`). Blank lines
// are skipped. Throws ParseError on a malformed escape.
enum class VocabFormat { kLines, kTsv };
std::vector<std::string> parse_vocab_file(std::string_view text,
                                          VocabFormat format,
                                          std::string source_name = {});

// Tokenized-documents file: `doc_id<TAB>tok tok tok` per line. Tokens use the
// vocabulary escapes. Throws ParseError.
TokenizedDoc parse_tokenized_line(std::string_view line, std::size_t line_no,
                                  const std::string& source_name = {});

}  // namespace scriptid

#endif  // SCRIPTID_VOCAB_H_
