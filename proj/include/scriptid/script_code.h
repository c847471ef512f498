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

#ifndef SCRIPTID_SCRIPT_CODE_H_
#define SCRIPTID_SCRIPT_CODE_H_

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace scriptid {

// An ISO 15924 four-letter script code such as "Latn" or "Zyyy".
//
// The spelling is validated on construction: one uppercase ASCII letter
// followed by three lowercase ASCII letters. Membership in a particular alias
// table is checked by whoever owns that table.
class ScriptCode {
 public:
  // Compile-time construction from a literal, e.g. ScriptCode("Latn").
  consteval ScriptCode(const char (&literal)[5])  // NOLINT: implicit by design
      : chars_{literal[0], literal[1], literal[2], literal[3]} {
    if (!well_formed(std::string_view(literal, 4))) {
      throw "ScriptCode literal must look like \"Latn\"";
    }
  }

  // Returns nullopt when `text` is not a well-formed code.
  static std::optional<ScriptCode> parse(std::string_view text);

  // Throws std::invalid_argument when `text` is not a well-formed code.
  static ScriptCode from_string(std::string_view text);

  static constexpr bool well_formed(std::string_view text) {
    if (text.size() != 4) return false;
    if (text[0] < 'A' || text[0] > 'Z') return false;
    for (std::size_t i = 1; i < 4; ++i) {
      if (text[i] < 'a' || text[i] > 'z') return false;
    }
    return true;
  }

  std::string_view view() const { return {chars_.data(), chars_.size()}; }
  std::string str() const { return std::string(view()); }

  // Zyyy, Zinh and Zzzz: codes that do not name a proper script.
  bool is_special() const;

  friend constexpr auto operator<=>(const ScriptCode&,
                                    const ScriptCode&) = default;
  friend constexpr bool operator==(const ScriptCode&,
                                   const ScriptCode&) = default;

 private:
  constexpr ScriptCode(char a, char b, char c, char d) : chars_{a, b, c, d} {}

  std::array<char, 4> chars_;
};

inline constexpr ScriptCode kCommon("Zyyy");
inline constexpr ScriptCode kInherited("Zinh");
inline constexpr ScriptCode kUnknown("Zzzz");

inline bool ScriptCode::is_special() const {
  return *this == kCommon || *this == kInherited || *this == kUnknown;
}

std::ostream& operator<<(std::ostream& os, const ScriptCode& code);

}  // namespace scriptid

template <>
struct std::hash<scriptid::ScriptCode> {
  std::size_t operator()(const scriptid::ScriptCode& code) const noexcept {
    return std::hash<std::string_view>{}(code.view());
  }
};

#endif  // SCRIPTID_SCRIPT_CODE_H_
