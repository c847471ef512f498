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

#include "scriptid/identifier.h"

#include <algorithm>
#include <array>

namespace scriptid {

void ScriptDistribution::add(ScriptCode code, std::uint64_t n) {
  if (n == 0) return;
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), code,
      [](const Entry& e, const ScriptCode& c) { return e.first < c; });
  if (it != entries_.end() && it->first == code) {
    it->second += n;
  } else {
    entries_.insert(it, {code, n});
  }
  total_ += n;
}

std::uint64_t ScriptDistribution::count(ScriptCode code) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), code,
      [](const Entry& e, const ScriptCode& c) { return e.first < c; });
  return it != entries_.end() && it->first == code ? it->second : 0;
}

double ScriptDistribution::fraction(ScriptCode code) const {
  if (total_ == 0) return 0.0;
  return static_cast<double>(count(code)) / static_cast<double>(total_);
}

ScriptDistribution& ScriptDistribution::operator+=(
    const ScriptDistribution& other) {
  for (const auto& [code, n] : other.entries_) add(code, n);
  return *this;
}

std::vector<ScriptCode> classify_chars(const ScriptRangeTable& table,
                                       std::u32string_view text) {
  std::vector<ScriptCode> codes;
  codes.reserve(text.size());
  for (char32_t cp : text) codes.push_back(table.lookup(cp));
  return codes;
}

std::vector<ScriptCode> resolve_inherited(std::span<const ScriptCode> codes) {
  std::vector<ScriptCode> out(codes.begin(), codes.end());
  std::optional<ScriptCode> previous;
  for (auto& code : out) {
    if (code == kInherited) {
      if (previous) code = *previous;
    } else {
      previous = code;
    }
  }
  return out;
}

IdentificationResult identify(const ScriptRangeTable& table,
                              std::u32string_view text) {
  using CodeIndex = ScriptRangeTable::CodeIndex;
  std::array<std::uint64_t, 256> counts{};
  const CodeIndex inherited = table.inherited_index();
  CodeIndex previous = inherited;
  for (char32_t cp : text) {
    CodeIndex ci = table.lookup_index(cp);
    if (ci == inherited) {
      ci = previous;
    } else {
      previous = ci;
    }
    ++counts[ci];
  }

  IdentificationResult result;
  auto palette = table.palette();
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < palette.size(); ++i) {
    if (counts[i] == 0) continue;
    result.distribution.add(palette[i], counts[i]);
    // Strict comparison: among equal counts the smaller index (and therefore
    // the lexicographically smaller code) wins.
    if (counts[i] > best) {
      best = counts[i];
      result.main_script = palette[i];
    }
  }
  result.main_count = best;
  return result;
}

IdentificationResult identify_utf8(const ScriptRangeTable& table,
                                   std::string_view utf8,
                                   BadUtf8Policy policy) {
  return identify(table, decode_utf8(utf8, policy));
}

}  // namespace scriptid
