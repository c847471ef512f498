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

#ifndef SCRIPTID_SCRIPT_TABLE_H_
#define SCRIPTID_SCRIPT_TABLE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scriptid/script_code.h"
#include "scriptid/ucd.h"

namespace scriptid {

struct ScriptRange {
  CodePoint first = 0;
  CodePoint last = 0;  // inclusive
  ScriptCode code = kUnknown;

  friend bool operator==(const ScriptRange&, const ScriptRange&) = default;
};

// A single code point whose script is forced regardless of the ranges.
struct CodePointOverride {
  CodePoint code_point = 0;
  ScriptCode code = kUnknown;

  friend bool operator==(const CodePointOverride&,
                         const CodePointOverride&) = default;
};

// U+FFFD is Common in the UCD; text identification treats it as Unknown.
inline constexpr CodePointOverride kReplacementCharacterOverride{0xFFFD,
                                                                 kUnknown};

struct TableBuildOptions {
  // Coalesce adjacent ranges that share a code. Lookups are identical either
  // way; merging only shrinks the table.
  bool merge_adjacent = true;
};

// Immutable map from code point to ISO 15924 code.
//
// Lookup order: overrides, then the sorted ranges, then Zzzz. Every uint32
// value yields a code, including surrogates and values past U+10FFFF (both
// Zzzz). Internally each code is a small index into palette(); the palette
// is sorted, so comparing indices orders codes lexicographically.
class ScriptRangeTable {
 public:
  using CodeIndex = std::uint8_t;

  // Resolves Scripts.txt entries through the alias table and installs the
  // U+FFFD override. Throws BuildError on overlapping ranges or on a
  // property value with no alias.
  static ScriptRangeTable build(std::span<const UcdScriptEntry> entries,
                                std::span<const ScriptAlias> aliases,
                                const TableBuildOptions& options = {},
                                std::string unicode_version = {});

  // Takes already-resolved ranges. Throws BuildError unless the ranges are
  // sorted, non-overlapping and within U+0000..U+10FFFF, and the overrides
  // name distinct scalar values.
  static ScriptRangeTable from_ranges(std::vector<ScriptRange> ranges,
                                      std::vector<CodePointOverride> overrides,
                                      std::string unicode_version = {});

  // Reads the text produced by serialize(). Throws ParseError.
  static ScriptRangeTable deserialize(std::string_view text,
                                      std::string source_name = {});

  ScriptCode lookup(CodePoint cp) const { return palette_[lookup_index(cp)]; }

  CodeIndex lookup_index(CodePoint cp) const {
    if (cp < kBmpSize) return bmp_[cp];
    return lookup_supplementary(cp);
  }

  std::span<const ScriptCode> palette() const { return palette_; }
  std::optional<CodeIndex> index_of(ScriptCode code) const;
  CodeIndex inherited_index() const { return inherited_index_; }
  CodeIndex unknown_index() const { return unknown_index_; }

  std::span<const ScriptRange> ranges() const { return ranges_; }
  std::span<const CodePointOverride> overrides() const { return overrides_; }
  ScriptCode default_code() const { return kUnknown; }
  const std::string& unicode_version() const { return unicode_version_; }

  // Distinct proper (non-special) scripts that own at least one range.
  std::vector<ScriptCode> scripts() const;

  // Line-oriented text form; see docs/formats.md.
  std::string serialize() const;

  // FNV-1a 64 over serialize().
  std::uint64_t checksum() const;

 private:
  static constexpr CodePoint kBmpSize = 0x10000;

  ScriptRangeTable() = default;
  void index();
  CodeIndex lookup_supplementary(CodePoint cp) const;

  std::vector<ScriptRange> ranges_;
  std::vector<CodePointOverride> overrides_;  // sorted by code point
  std::string unicode_version_;

  std::vector<ScriptCode> palette_;
  CodeIndex inherited_index_ = 0;
  CodeIndex unknown_index_ = 0;
  std::vector<CodeIndex> bmp_;
  std::vector<CodePoint> supp_first_;
  std::vector<CodePoint> supp_last_;
  std::vector<CodeIndex> supp_code_;
  std::vector<CodePointOverride> supp_overrides_;
};

// The table compiled from the bundled UCD files at build time.
const ScriptRangeTable& embedded_table();
std::string_view embedded_table_text();

}  // namespace scriptid

#endif  // SCRIPTID_SCRIPT_TABLE_H_
