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

#include <random>

#include <gtest/gtest.h>

#include "scriptid/errors.h"
#include "scriptid/script_table.h"
#include "scriptid/ucd.h"
#include "test_util.h"

namespace scriptid {
namespace {

using testing::oracle_ucd_lines;
using testing::slurp;
using testing::ucd_path;

TEST(ParseScriptsFile, RangeLine) {
  auto entries = parse_scripts_file(
      "0041..005A    ; Latin # L&  [26] LATIN CAPITAL LETTER A..LATIN CAPITAL "
      "LETTER Z\n");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0], (UcdScriptEntry{0x41, 0x5A, "Latin"}));
}

TEST(ParseScriptsFile, SingleCodePointLine) {
  auto entries = parse_scripts_file(
      "00AA          ; Latin # Lo       FEMININE ORDINAL INDICATOR\n");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0], (UcdScriptEntry{0xAA, 0xAA, "Latin"}));
}

TEST(ParseScriptsFile, SkipsCommentsAndBlankLines) {
  auto entries = parse_scripts_file(
      "# Scripts-15.0.0.txt\r\n"
      "\r\n"
      "# @missing: 0000..10FFFF; Unknown\r\n"
      "10FFFD ; Unknown\r\n");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0], (UcdScriptEntry{0x10FFFD, 0x10FFFD, "Unknown"}));
}

TEST(ParseScriptsFile, MalformedHexNamesLine) {
  try {
    parse_scripts_file("# header\n0041 ; Latin\nZZZZ..0041 ; Latin\n", "s.txt");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.source(), "s.txt");
    EXPECT_NE(std::string(e.what()).find("s.txt:3"), std::string::npos);
  }
}

TEST(ParseScriptsFile, RejectsBadLines) {
  EXPECT_THROW(parse_scripts_file("0042..0041 ; Latin\n"), ParseError);
  EXPECT_THROW(parse_scripts_file("0041\n"), ParseError);
  EXPECT_THROW(parse_scripts_file("0041 ;\n"), ParseError);
  EXPECT_THROW(parse_scripts_file("110000 ; Latin\n"), ParseError);
  EXPECT_THROW(parse_scripts_file("0041 ; Latin ; extra\n"), ParseError);
  EXPECT_THROW(parse_scripts_file("0041.. ; Latin\n"), ParseError);
}

TEST(ParseAliasesFile, ScriptLines) {
  auto aliases = parse_aliases_file(
      "# sc\n"
      "sc ; Latn                             ; Latin\n"
      "sc ; Zyyy                             ; Common\n"
      "sc ; Copt                             ; Coptic                 ; Qaac\n");
  ASSERT_EQ(aliases.size(), 3u);
  EXPECT_EQ(aliases[0], (ScriptAlias{"Latin", ScriptCode("Latn")}));
  EXPECT_EQ(aliases[1], (ScriptAlias{"Common", ScriptCode("Zyyy")}));
  EXPECT_EQ(aliases[2], (ScriptAlias{"Coptic", ScriptCode("Copt")}));
}

TEST(ParseAliasesFile, IgnoresOtherProperties) {
  auto aliases = parse_aliases_file(
      "gc ; Lu                               ; Uppercase_Letter\n"
      "ccc;   0; NR                         ; Not_Reordered\n");
  EXPECT_TRUE(aliases.empty());
}

TEST(ParseAliasesFile, ConflictingDuplicates) {
  EXPECT_THROW(parse_aliases_file("sc ; Latn ; Latin\nsc ; Latf ; Latin\n"),
               ParseError);
  EXPECT_THROW(parse_aliases_file("sc ; Latn ; Latin\nsc ; Latn ; Roman\n"),
               ParseError);
  EXPECT_EQ(parse_aliases_file("sc ; Latn ; Latin\nsc ; Latn ; Latin\n").size(),
            1u);
  EXPECT_THROW(parse_aliases_file("sc ; LATN ; Latin\n"), ParseError);
}

TEST(UcdVersion, FromHeader) {
  EXPECT_EQ(ucd_version_from_header("# Scripts-15.0.0.txt\n# Date\n"), "15.0.0");
  EXPECT_EQ(ucd_version_from_header("0041 ; Latin\n"), std::nullopt);
}

class TableTest : public ::testing::Test {
 protected:
  static std::vector<ScriptAlias> aliases() {
    return {{"Latin", ScriptCode("Latn")},
            {"Common", ScriptCode("Zyyy")},
            {"Inherited", ScriptCode("Zinh")},
            {"Greek", ScriptCode("Grek")}};
  }
};

TEST_F(TableTest, UncoveredCodePointsDefaultToUnknown) {
  auto table = ScriptRangeTable::build(
      std::vector<UcdScriptEntry>{{0x41, 0x5A, "Latin"}}, aliases());
  EXPECT_EQ(table.lookup(0x41), ScriptCode("Latn"));
  EXPECT_EQ(table.lookup(0x5A), ScriptCode("Latn"));
  EXPECT_EQ(table.lookup(0x5B), kUnknown);
  EXPECT_EQ(table.lookup(0x40), kUnknown);
  EXPECT_EQ(table.lookup(0x10FFFF), kUnknown);
}

TEST_F(TableTest, ReplacementCharacterOverride) {
  auto table = ScriptRangeTable::build(
      std::vector<UcdScriptEntry>{{0xFFF9, 0xFFFD, "Common"}}, aliases());
  EXPECT_EQ(table.lookup(0xFFFC), kCommon);
  EXPECT_EQ(table.lookup(0xFFFD), kUnknown);
  ASSERT_EQ(table.overrides().size(), 1u);
  EXPECT_EQ(table.overrides()[0], kReplacementCharacterOverride);
}

TEST_F(TableTest, OverlapAndUnknownNameAreErrors) {
  EXPECT_THROW(ScriptRangeTable::build(
                   std::vector<UcdScriptEntry>{{0x41, 0x5A, "Latin"},
                                               {0x50, 0x60, "Greek"}},
                   aliases()),
               BuildError);
  try {
    ScriptRangeTable::build(std::vector<UcdScriptEntry>{{0x41, 0x5A, "Klingon"}},
                            aliases());
    FAIL() << "expected BuildError";
  } catch (const BuildError& e) {
    EXPECT_NE(std::string(e.what()).find("Klingon"), std::string::npos);
  }
}

TEST_F(TableTest, MergesAdjacentRanges) {
  std::vector<UcdScriptEntry> entries = {{0x61, 0x7A, "Latin"},
                                         {0x41, 0x5A, "Latin"},
                                         {0x5B, 0x60, "Common"},
                                         {0x7B, 0x7B, "Latin"}};
  auto merged = ScriptRangeTable::build(entries, aliases());
  auto unmerged = ScriptRangeTable::build(entries, aliases(), {false});
  EXPECT_EQ(merged.ranges().size(), 3u);
  EXPECT_EQ(unmerged.ranges().size(), 4u);
  for (char32_t cp = 0; cp < 0x100; ++cp) {
    EXPECT_EQ(merged.lookup(cp), unmerged.lookup(cp)) << std::hex << static_cast<std::uint32_t>(cp);
  }
}

TEST_F(TableTest, SupplementaryRangesAndOverrides) {
  auto table = ScriptRangeTable::from_ranges(
      {{0xFFF0, 0x10010, ScriptCode("Grek")}, {0x1F000, 0x1F0FF, kCommon}},
      {{0x1F005, ScriptCode("Latn")}});
  EXPECT_EQ(table.lookup(0xFFF5), ScriptCode("Grek"));
  EXPECT_EQ(table.lookup(0x10005), ScriptCode("Grek"));
  EXPECT_EQ(table.lookup(0x10011), kUnknown);
  EXPECT_EQ(table.lookup(0x1F004), kCommon);
  EXPECT_EQ(table.lookup(0x1F005), ScriptCode("Latn"));
  EXPECT_EQ(table.lookup(0x110000), kUnknown);
  EXPECT_EQ(table.lookup(0xFFFFFFFF), kUnknown);
}

TEST_F(TableTest, FromRangesValidates) {
  EXPECT_THROW(ScriptRangeTable::from_ranges(
                   {{0x50, 0x60, kCommon}, {0x41, 0x4F, kCommon}}, {}),
               BuildError);
  EXPECT_THROW(ScriptRangeTable::from_ranges({{0x41, 0x110000, kCommon}}, {}),
               BuildError);
  EXPECT_THROW(ScriptRangeTable::from_ranges({}, {{0xD800, kCommon}}),
               BuildError);
  EXPECT_THROW(
      ScriptRangeTable::from_ranges({}, {{0x41, kCommon}, {0x41, kUnknown}}),
      BuildError);
}

TEST_F(TableTest, SerializeRoundTrip) {
  auto table = ScriptRangeTable::build(
      std::vector<UcdScriptEntry>{{0x41, 0x5A, "Latin"},
                                  {0x300, 0x36F, "Inherited"},
                                  {0x10000, 0x1000B, "Greek"}},
      aliases(), {}, "15.0.0");
  std::string text = table.serialize();
  auto back = ScriptRangeTable::deserialize(text);
  EXPECT_EQ(back.serialize(), text);
  EXPECT_EQ(back.checksum(), table.checksum());
  EXPECT_EQ(back.unicode_version(), "15.0.0");
  EXPECT_EQ(back.lookup(0xFFFD), kUnknown);
}

TEST(TableDeserialize, Errors) {
  EXPECT_THROW(ScriptRangeTable::deserialize(""), ParseError);
  EXPECT_THROW(ScriptRangeTable::deserialize("scriptid-table 2\nend\n"),
               ParseError);
  try {
    ScriptRangeTable::deserialize(
        "scriptid-table 1\nunicode 15.0.0\nrange 0041 005A Latn\n", "t");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("truncated"), std::string::npos);
  }
  EXPECT_THROW(ScriptRangeTable::deserialize(
                   "scriptid-table 1\nrange 0041 005A LATN\nend\n"),
               ParseError);
  EXPECT_THROW(ScriptRangeTable::deserialize(
                   "scriptid-table 1\nrange 0050 005A Latn\nrange 0041 0051 "
                   "Latn\nend\n"),
               ParseError);
}

// The full Unicode 15.0 data.

TEST(EmbeddedTable, LookupExamples) {
  const auto& table = embedded_table();
  EXPECT_EQ(table.lookup(0x005B), kCommon);
  EXPECT_EQ(table.lookup(0x200D), kInherited);
  EXPECT_EQ(table.lookup(0x0621), ScriptCode("Arab"));
  EXPECT_EQ(table.lookup(0xFFFD), kUnknown);
  EXPECT_EQ(table.lookup(0x0378), kUnknown);  // unassigned
  EXPECT_EQ(table.lookup(0xE000), kUnknown);  // private use
  EXPECT_EQ(table.unicode_version(), "15.0.0");
}

TEST(EmbeddedTable, Has161Scripts) {
  EXPECT_EQ(embedded_table().scripts().size(), 161u);
}

TEST(EmbeddedTable, MatchesBuildFromDataFiles) {
  std::string scripts = slurp(ucd_path("Scripts.txt"));
  auto table = ScriptRangeTable::build(
      parse_scripts_file(scripts),
      parse_aliases_file(slurp(ucd_path("PropertyValueAliases.txt"))), {},
      ucd_version_from_header(scripts).value_or(""));
  EXPECT_EQ(table.serialize(), embedded_table_text());
}

TEST(EmbeddedTable, OracleEquivalenceOnEveryDataLine) {
  const auto& table = embedded_table();
  auto lines = oracle_ucd_lines();
  ASSERT_GT(lines.size(), 2000u);
  for (const auto& line : lines) {
    for (std::uint32_t cp : {line.first, line.last}) {
      std::string expected = cp == 0xFFFD ? "Zzzz" : line.code;
      EXPECT_EQ(table.lookup(cp).str(), expected) << std::hex << cp;
    }
  }
}

TEST(EmbeddedTable, MergeSafetyOnFullData) {
  auto entries = parse_scripts_file(slurp(ucd_path("Scripts.txt")));
  auto aliases = parse_aliases_file(slurp(ucd_path("PropertyValueAliases.txt")));
  auto merged = ScriptRangeTable::build(entries, aliases, {true});
  auto unmerged = ScriptRangeTable::build(entries, aliases, {false});
  EXPECT_LT(merged.ranges().size(), unmerged.ranges().size());
  for (char32_t cp = 0; cp <= kMaxCodePoint; ++cp) {
    if (merged.lookup_index(cp) != unmerged.lookup_index(cp)) {
      FAIL() << "lookup differs at U+" << std::hex << static_cast<std::uint32_t>(cp);
    }
  }
}

TEST(EmbeddedTable, SortedNonOverlappingAndTotal) {
  const auto& table = embedded_table();
  auto ranges = table.ranges();
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    ASSERT_LE(ranges[i].first, ranges[i].last);
    if (i > 0) {
      ASSERT_LT(ranges[i - 1].last, ranges[i].first);
    }
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> any(0, 0x10FFFF);
  auto palette = table.palette();
  for (int i = 0; i < 100000; ++i) {
    char32_t cp = any(rng);
    ScriptCode code = table.lookup(cp);
    EXPECT_TRUE(std::binary_search(palette.begin(), palette.end(), code));
  }
}

}  // namespace
}  // namespace scriptid
