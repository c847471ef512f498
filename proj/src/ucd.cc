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

#include "scriptid/ucd.h"

#include <charconv>
#include <map>
#include <regex>

#include "scriptid/errors.h"
#include "text_util.h"

namespace scriptid {
namespace {

// Parses one hexadecimal code point field ("0041"). UCD files use 4 to 6
// uppercase digits; lowercase is accepted too.
std::optional<CodePoint> parse_hex(std::string_view field) {
  if (field.empty() || field.size() > 6) return std::nullopt;
  std::uint32_t value = 0;
  const char* first = field.data();
  const char* last = first + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value, 16);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  if (value > kMaxCodePoint) return std::nullopt;
  return static_cast<CodePoint>(value);
}

}  // namespace

std::vector<UcdScriptEntry> parse_scripts_file(std::string_view text,
                                               std::string source_name) {
  std::vector<UcdScriptEntry> entries;
  std::size_t line_no = 0;
  for_each_line(text, [&](std::string_view raw) {
    ++line_no;
    std::string_view line = trim(strip_comment(raw));
    if (line.empty()) return;
    auto fields = split_fields(line, ';');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(source_name, line_no,
                       "expected `range ; Script_Name`, got \"" +
                           std::string(line) + "\"");
    }
    std::string_view range = fields[0];
    std::string_view first_field = range;
    std::string_view last_field = range;
    if (auto dots = range.find(".."); dots != std::string_view::npos) {
      first_field = trim(range.substr(0, dots));
      last_field = trim(range.substr(dots + 2));
    }
    auto first = parse_hex(first_field);
    auto last = parse_hex(last_field);
    if (!first || !last) {
      throw ParseError(source_name, line_no,
                       "malformed code point range \"" + std::string(range) +
                           "\"");
    }
    if (*first > *last) {
      throw ParseError(source_name, line_no,
                       "range start exceeds range end in \"" +
                           std::string(range) + "\"");
    }
    entries.push_back({*first, *last, std::string(fields[1])});
  });
  return entries;
}

std::vector<ScriptAlias> parse_aliases_file(std::string_view text,
                                            std::string source_name) {
  std::vector<ScriptAlias> aliases;
  std::map<std::string, ScriptCode, std::less<>> by_name;
  std::map<ScriptCode, std::string> by_code;
  std::size_t line_no = 0;
  for_each_line(text, [&](std::string_view raw) {
    ++line_no;
    std::string_view line = trim(strip_comment(raw));
    if (line.empty()) return;
    auto fields = split_fields(line, ';');
    if (fields[0] != "sc") return;
    if (fields.size() < 3 || fields[2].empty()) {
      throw ParseError(source_name, line_no,
                       "expected `sc ; Code ; Long_Name`");
    }
    auto code = ScriptCode::parse(fields[1]);
    if (!code) {
      throw ParseError(source_name, line_no,
                       "not an ISO 15924 code: \"" + std::string(fields[1]) +
                           "\"");
    }
    std::string name(fields[2]);
    if (auto it = by_name.find(name); it != by_name.end()) {
      if (it->second != *code) {
        throw ParseError(source_name, line_no,
                         "script \"" + name + "\" aliased to both " +
                             it->second.str() + " and " + code->str());
      }
      return;
    }
    if (auto it = by_code.find(*code); it != by_code.end()) {
      throw ParseError(source_name, line_no,
                       "code " + code->str() + " aliased by both \"" +
                           it->second + "\" and \"" + name + "\"");
    }
    by_name.emplace(name, *code);
    by_code.emplace(*code, name);
    aliases.push_back({std::move(name), *code});
  });
  return aliases;
}

std::optional<std::string> ucd_version_from_header(std::string_view text) {
  static const std::regex kHeader(R"(^#\s*[A-Za-z]+-(\d+\.\d+\.\d+)\.txt)");
  std::optional<std::string> version;
  std::size_t lines = 0;
  for_each_line(text, [&](std::string_view line) {
    if (version || ++lines > 8) return;
    std::match_results<std::string_view::const_iterator> m;
    if (std::regex_search(line.begin(), line.end(), m, kHeader)) {
      version = m[1].str();
    }
  });
  return version;
}

}  // namespace scriptid
