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

#ifndef SCRIPTID_IDENTIFIER_H_
#define SCRIPTID_IDENTIFIER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "scriptid/script_code.h"
#include "scriptid/script_table.h"
#include "scriptid/utf8.h"

namespace scriptid {

// Character counts per script. Entries are kept sorted by code and never
// hold a zero count, so two distributions compare equal exactly when they
// count the same things.
class ScriptDistribution {
 public:
  using Entry = std::pair<ScriptCode, std::uint64_t>;

  void add(ScriptCode code, std::uint64_t n = 1);

  std::uint64_t count(ScriptCode code) const;
  std::uint64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  std::span<const Entry> entries() const { return entries_; }

  // count(code) / total(), or 0 for an empty distribution.
  double fraction(ScriptCode code) const;

  ScriptDistribution& operator+=(const ScriptDistribution& other);

  friend bool operator==(const ScriptDistribution&,
                         const ScriptDistribution&) = default;

 private:
  std::vector<Entry> entries_;
  std::uint64_t total_ = 0;
};

struct IdentificationResult {
  // Absent only for empty input.
  std::optional<ScriptCode> main_script;
  std::uint64_t main_count = 0;
  ScriptDistribution distribution;

  // Share of characters in the main script; 0 for empty input.
  double main_fraction() const {
    return distribution.total() == 0
               ? 0.0
               : static_cast<double>(main_count) /
                     static_cast<double>(distribution.total());
  }

  friend bool operator==(const IdentificationResult&,
                         const IdentificationResult&) = default;
};

// One code per scalar value, straight from the table.
std::vector<ScriptCode> classify_chars(const ScriptRangeTable& table,
                                       std::u32string_view text);

// Replaces every Zinh with the nearest preceding non-Zinh code. A run of Zinh
// at the very start has nothing to inherit from and stays Zinh.
std::vector<ScriptCode> resolve_inherited(std::span<const ScriptCode> codes);

// Tallies resolve_inherited(classify_chars(text)). The main script is the
// most frequent code; ties go to the lexicographically smallest code.
// Special codes compete like any other.
IdentificationResult identify(const ScriptRangeTable& table,
                              std::u32string_view text);

// Decodes `utf8` under `policy` and identifies the result.
IdentificationResult identify_utf8(
    const ScriptRangeTable& table, std::string_view utf8,
    BadUtf8Policy policy = BadUtf8Policy::kReplace);

}  // namespace scriptid

#endif  // SCRIPTID_IDENTIFIER_H_
