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

#include "scriptid/vocab.h"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "scriptid/errors.h"
#include "scriptid/identifier.h"
#include "scriptid/utf8.h"
#include "text_util.h"

namespace scriptid {
namespace {

bool hex_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
  }
  return !s.empty();
}

// Expands the escape table. Returns nullopt on a malformed escape.
std::optional<std::string> unescape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (i + 1 >= s.size()) return std::nullopt;
    char e = s[++i];
    switch (e) {
      case '\\':
        out += '\\';
        break;
      case 'n':
        out += '\n';
        break;
      case 't':
        out += '\t';
        break;
      case 'r':
        out += '\r';
        break;
      case 's':
        out += ' ';
        break;
      case 'u':
      case 'U': {
        std::size_t width = e == 'u' ? 4 : 8;
        std::string_view digits = s.substr(i + 1, width);
        if (digits.size() != width || !hex_digits(digits)) return std::nullopt;
        std::uint32_t cp = 0;
        std::from_chars(digits.data(), digits.data() + width, cp, 16);
        if (!is_scalar_value(cp)) return std::nullopt;
        out += encode_utf8(std::u32string(1, static_cast<char32_t>(cp)));
        i += width;
        break;
      }
      default:
        return std::nullopt;
    }
  }
  return out;
}

}  // namespace

std::string_view strip_markers(std::string_view token,
                               const MarkerConfig& markers) {
  for (const auto& prefix : markers.prefixes) {
    if (!prefix.empty() && token.starts_with(prefix)) {
      token.remove_prefix(prefix.size());
    }
  }
  return token;
}

bool is_byte_token(std::string_view token) {
  return token.size() == 6 && token.starts_with("<0x") && token[5] == '>' &&
         hex_digits(token.substr(3, 2));
}

double VocabScriptProfile::fraction(ScriptCode code) const {
  if (vocab_size == 0) return 0.0;
  auto it = counts.find(code);
  return it == counts.end()
             ? 0.0
             : static_cast<double>(it->second) / static_cast<double>(vocab_size);
}

std::size_t VocabScriptProfile::scripts_present() const {
  std::size_t n = 0;
  for (const auto& [code, count] : counts) {
    if (count > 0 && !code.is_special()) ++n;
  }
  return n;
}

VocabScriptProfile vocab_script_distribution(std::span<const std::string> vocab,
                                             const ScriptRangeTable& table,
                                             const MarkerConfig& markers) {
  VocabScriptProfile profile;
  profile.vocab_size = vocab.size();
  for (const auto& token : vocab) {
    ScriptCode main = kUnknown;
    if (!is_byte_token(token)) {
      main = identify_utf8(table, strip_markers(token, markers))
                 .main_script.value_or(kUnknown);
    }
    ++profile.counts[main];
  }
  return profile;
}

std::vector<TokenizationStats> tokenization_stats(
    std::span<const TokenizedDoc> docs,
    const std::optional<std::string>& unk_marker) {
  static constexpr std::string_view kCommonUnk[] = {"<unk>", "[UNK]", "<UNK>"};
  std::vector<TokenizationStats> out;
  out.reserve(docs.size());
  for (const auto& doc : docs) {
    TokenizationStats stats;
    stats.doc_id = doc.doc_id;
    stats.token_count = doc.tokens.size();
    for (const auto& token : doc.tokens) {
      if (unk_marker) {
        if (token == *unk_marker) ++stats.unk_count;
        continue;
      }
      for (auto unk : kCommonUnk) {
        if (token == unk) {
          throw std::invalid_argument(
              "document \"" + doc.doc_id + "\" contains \"" +
              std::string(unk) + "\" but no unknown-token marker was given");
        }
      }
    }
    out.push_back(std::move(stats));
  }
  return out;
}

double cost_ratio(const TokenizationStats& a, const TokenizationStats& b) {
  if (a.token_count == 0) {
    throw std::domain_error("cost_ratio: reference document \"" + a.doc_id +
                            "\" has no tokens");
  }
  return static_cast<double>(b.token_count) /
         static_cast<double>(a.token_count);
}

std::vector<std::string> parse_vocab_file(std::string_view text,
                                          VocabFormat format,
                                          std::string source_name) {
  std::vector<std::string> tokens;
  std::size_t line_no = 0;
  for_each_line(text, [&](std::string_view line) {
    ++line_no;
    if (line.empty()) return;
    if (format == VocabFormat::kTsv) line = line.substr(0, line.find('\t'));
    auto token = unescape(line);
    if (!token) throw ParseError(source_name, line_no, "malformed escape");
    tokens.push_back(std::move(*token));
  });
  return tokens;
}

TokenizedDoc parse_tokenized_line(std::string_view line, std::size_t line_no,
                                  const std::string& source_name) {
  auto tab = line.find('\t');
  if (tab == std::string_view::npos) {
    throw ParseError(source_name, line_no, "expected `doc_id<TAB>tokens`");
  }
  TokenizedDoc doc;
  doc.doc_id = std::string(trim(line.substr(0, tab)));
  if (doc.doc_id.empty()) throw ParseError(source_name, line_no, "empty doc_id");
  for (auto raw : split_raw(line.substr(tab + 1), ' ')) {
    if (raw.empty()) continue;
    auto token = unescape(raw);
    if (!token) throw ParseError(source_name, line_no, "malformed escape");
    doc.tokens.push_back(std::move(*token));
  }
  return doc;
}

}  // namespace scriptid
