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

#ifndef SCRIPTID_UCD_H_
#define SCRIPTID_UCD_H_

// Readers for the two Unicode Character Database files the script table is
// built from: Scripts.txt and PropertyValueAliases.txt.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scriptid/script_code.h"

namespace scriptid {

using CodePoint = char32_t;

inline constexpr CodePoint kMaxCodePoint = 0x10FFFF;

constexpr bool is_scalar_value(CodePoint cp) {
  return cp <= kMaxCodePoint && (cp < 0xD800 || cp > 0xDFFF);
}

// One data line of Scripts.txt. Single code point lines have
// range_start == range_end.
struct UcdScriptEntry {
  CodePoint range_start = 0;
  CodePoint range_end = 0;
  std::string property_value;  // long name, e.g. "Latin"

  friend bool operator==(const UcdScriptEntry&,
                         const UcdScriptEntry&) = default;
};

// One `sc` line of PropertyValueAliases.txt.
struct ScriptAlias {
  std::string long_name;  // e.g. "Latin"
  ScriptCode code;        // e.g. Latn

  friend bool operator==(const ScriptAlias&, const ScriptAlias&) = default;
};

// Parses Scripts.txt. Comments and blank lines are skipped. Throws ParseError
// naming the offending line on malformed hex, reversed ranges, values outside
// 0..10FFFF or a missing field.
std::vector<UcdScriptEntry> parse_scripts_file(std::string_view text,
                                               std::string source_name = {});

// Parses the `sc` section of PropertyValueAliases.txt; other properties are
// ignored. A long name listed twice with the same code is kept once; listed
// with different codes it raises ParseError. Two long names sharing one code
// also raise ParseError.
std::vector<ScriptAlias> parse_aliases_file(std::string_view text,
                                            std::string source_name = {});

// Extracts "15.0.0" from a header line such as "# Scripts-15.0.0.txt".
std::optional<std::string> ucd_version_from_header(std::string_view text);

}  // namespace scriptid

#endif  // SCRIPTID_UCD_H_
