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

#include "scriptid/script_table.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>

#include "scriptid/errors.h"
#include "text_util.h"

namespace scriptid {
namespace {

constexpr std::string_view kMagic = "scriptid-table";
constexpr int kFormatVersion = 1;

std::string hex(CodePoint cp) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04X", static_cast<unsigned>(cp));
  return buf;
}

std::optional<CodePoint> parse_hex(std::string_view s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc() || ptr != s.data() + s.size() || v > kMaxCodePoint) {
    return std::nullopt;
  }
  return v;
}

}  // namespace

ScriptRangeTable ScriptRangeTable::build(
    std::span<const UcdScriptEntry> entries,
    std::span<const ScriptAlias> aliases, const TableBuildOptions& options,
    std::string unicode_version) {
  std::map<std::string, ScriptCode, std::less<>> by_name;
  for (const auto& alias : aliases) by_name.emplace(alias.long_name, alias.code);

  std::vector<ScriptRange> ranges;
  ranges.reserve(entries.size());
  for (const auto& entry : entries) {
    auto it = by_name.find(entry.property_value);
    if (it == by_name.end()) {
      throw BuildError("script property value \"" + entry.property_value +
                       "\" (U+" + hex(entry.range_start) +
                       ") has no ISO 15924 alias");
    }
    if (entry.range_start > entry.range_end ||
        entry.range_end > kMaxCodePoint) {
      throw BuildError("invalid range U+" + hex(entry.range_start) + "..U+" +
                       hex(entry.range_end));
    }
    ranges.push_back({entry.range_start, entry.range_end, it->second});
  }
  std::sort(ranges.begin(), ranges.end(),
            [](const ScriptRange& a, const ScriptRange& b) {
              return a.first < b.first;
            });
  for (std::size_t i = 1; i < ranges.size(); ++i) {
    if (ranges[i].first <= ranges[i - 1].last) {
      throw BuildError("overlapping ranges U+" + hex(ranges[i - 1].first) +
                       "..U+" + hex(ranges[i - 1].last) + " and U+" +
                       hex(ranges[i].first) + "..U+" + hex(ranges[i].last));
    }
  }
  if (options.merge_adjacent && !ranges.empty()) {
    std::vector<ScriptRange> merged;
    merged.reserve(ranges.size());
    merged.push_back(ranges.front());
    for (std::size_t i = 1; i < ranges.size(); ++i) {
      ScriptRange& tail = merged.back();
      if (ranges[i].code == tail.code && ranges[i].first == tail.last + 1) {
        tail.last = ranges[i].last;
      } else {
        merged.push_back(ranges[i]);
      }
    }
    ranges = std::move(merged);
  }
  return from_ranges(std::move(ranges), {kReplacementCharacterOverride},
                     std::move(unicode_version));
}

ScriptRangeTable ScriptRangeTable::from_ranges(
    std::vector<ScriptRange> ranges, std::vector<CodePointOverride> overrides,
    std::string unicode_version) {
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    const auto& r = ranges[i];
    if (r.first > r.last || r.last > kMaxCodePoint) {
      throw BuildError("invalid range U+" + hex(r.first) + "..U+" +
                       hex(r.last));
    }
    if (i > 0 && r.first <= ranges[i - 1].last) {
      throw BuildError("ranges unsorted or overlapping at U+" + hex(r.first));
    }
  }
  std::sort(overrides.begin(), overrides.end(),
            [](const CodePointOverride& a, const CodePointOverride& b) {
              return a.code_point < b.code_point;
            });
  for (std::size_t i = 0; i < overrides.size(); ++i) {
    if (!is_scalar_value(overrides[i].code_point)) {
      throw BuildError("override for non-scalar value U+" +
                       hex(overrides[i].code_point));
    }
    if (i > 0 && overrides[i].code_point == overrides[i - 1].code_point) {
      throw BuildError("duplicate override for U+" +
                       hex(overrides[i].code_point));
    }
  }
  ScriptRangeTable table;
  table.ranges_ = std::move(ranges);
  table.overrides_ = std::move(overrides);
  table.unicode_version_ = std::move(unicode_version);
  table.index();
  return table;
}

void ScriptRangeTable::index() {
  std::set<ScriptCode> codes = {kCommon, kInherited, kUnknown};
  for (const auto& r : ranges_) codes.insert(r.code);
  for (const auto& o : overrides_) codes.insert(o.code);
  if (codes.size() > 256) {
    throw BuildError("more than 256 distinct script codes");
  }
  palette_.assign(codes.begin(), codes.end());
  auto idx = [&](ScriptCode code) {
    return static_cast<CodeIndex>(
        std::lower_bound(palette_.begin(), palette_.end(), code) -
        palette_.begin());
  };
  inherited_index_ = idx(kInherited);
  unknown_index_ = idx(kUnknown);

  bmp_.assign(kBmpSize, unknown_index_);
  supp_first_.clear();
  supp_last_.clear();
  supp_code_.clear();
  for (const auto& r : ranges_) {
    CodeIndex ci = idx(r.code);
    if (r.first < kBmpSize) {
      CodePoint end = std::min<CodePoint>(r.last, kBmpSize - 1);
      std::fill(bmp_.begin() + r.first, bmp_.begin() + end + 1, ci);
    }
    if (r.last >= kBmpSize) {
      supp_first_.push_back(std::max<CodePoint>(r.first, kBmpSize));
      supp_last_.push_back(r.last);
      supp_code_.push_back(ci);
    }
  }
  supp_overrides_.clear();
  for (const auto& o : overrides_) {
    if (o.code_point < kBmpSize) {
      bmp_[o.code_point] = idx(o.code);
    } else {
      supp_overrides_.push_back(o);
    }
  }
}

ScriptRangeTable::CodeIndex ScriptRangeTable::lookup_supplementary(
    CodePoint cp) const {
  if (cp > kMaxCodePoint) return unknown_index_;
  for (const auto& o : supp_overrides_) {
    if (o.code_point == cp) return *index_of(o.code);
  }
  auto it = std::upper_bound(supp_first_.begin(), supp_first_.end(), cp);
  if (it == supp_first_.begin()) return unknown_index_;
  std::size_t i = static_cast<std::size_t>(it - supp_first_.begin()) - 1;
  return cp <= supp_last_[i] ? supp_code_[i] : unknown_index_;
}

std::optional<ScriptRangeTable::CodeIndex> ScriptRangeTable::index_of(
    ScriptCode code) const {
  auto it = std::lower_bound(palette_.begin(), palette_.end(), code);
  if (it == palette_.end() || *it != code) return std::nullopt;
  return static_cast<CodeIndex>(it - palette_.begin());
}

std::vector<ScriptCode> ScriptRangeTable::scripts() const {
  std::set<ScriptCode> codes;
  for (const auto& r : ranges_) {
    if (!r.code.is_special()) codes.insert(r.code);
  }
  return {codes.begin(), codes.end()};
}

std::string ScriptRangeTable::serialize() const {
  std::string out;
  out.reserve(ranges_.size() * 24 + 64);
  out += kMagic;
  out += ' ';
  out += std::to_string(kFormatVersion);
  out += '\n';
  out += "unicode ";
  out += unicode_version_.empty() ? "unknown" : unicode_version_;
  out += '\n';
  out += "default ";
  out += default_code().view();
  out += '\n';
  for (const auto& o : overrides_) {
    out += "override " + hex(o.code_point) + " " + o.code.str() + "\n";
  }
  for (const auto& r : ranges_) {
    out += "range " + hex(r.first) + " " + hex(r.last) + " " + r.code.str() +
           "\n";
  }
  out += "end\n";
  return out;
}

std::uint64_t ScriptRangeTable::checksum() const {
  return fnv1a64(serialize());
}

ScriptRangeTable ScriptRangeTable::deserialize(std::string_view text,
                                               std::string source_name) {
  std::vector<ScriptRange> ranges;
  std::vector<CodePointOverride> overrides;
  std::string version;
  bool saw_magic = false;
  bool saw_end = false;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError(source_name, line_no, msg);
  };
  auto code_at = [&](std::string_view s) {
    auto code = ScriptCode::parse(s);
    if (!code) fail("not an ISO 15924 code: \"" + std::string(s) + "\"");
    return *code;
  };
  auto cp_at = [&](std::string_view s) {
    auto cp = parse_hex(s);
    if (!cp) fail("malformed code point \"" + std::string(s) + "\"");
    return *cp;
  };
  for_each_line(text, [&](std::string_view raw) {
    ++line_no;
    std::string_view line = trim(strip_comment(raw));
    if (line.empty()) return;
    if (saw_end) fail("content after `end`");
    auto f = split_fields(line, ' ');
    f.erase(std::remove(f.begin(), f.end(), std::string_view{}), f.end());
    if (!saw_magic) {
      if (f.size() != 2 || f[0] != kMagic) fail("missing table header");
      if (f[1] != std::to_string(kFormatVersion)) {
        fail("unsupported table format version " + std::string(f[1]));
      }
      saw_magic = true;
      return;
    }
    if (f[0] == "unicode" && f.size() == 2) {
      version = f[1] == "unknown" ? "" : std::string(f[1]);
    } else if (f[0] == "default" && f.size() == 2) {
      if (code_at(f[1]) != kUnknown) fail("default code must be Zzzz");
    } else if (f[0] == "override" && f.size() == 3) {
      overrides.push_back({cp_at(f[1]), code_at(f[2])});
    } else if (f[0] == "range" && f.size() == 4) {
      ranges.push_back({cp_at(f[1]), cp_at(f[2]), code_at(f[3])});
    } else if (f[0] == "end" && f.size() == 1) {
      saw_end = true;
    } else {
      fail("unrecognized record \"" + std::string(line) + "\"");
    }
  });
  if (!saw_magic) throw ParseError(source_name, 0, "empty table file");
  if (!saw_end) throw ParseError(source_name, line_no, "truncated table: no `end`");
  try {
    return from_ranges(std::move(ranges), std::move(overrides),
                       std::move(version));
  } catch (const BuildError& e) {
    throw ParseError(source_name, 0, e.what());
  }
}

}  // namespace scriptid
