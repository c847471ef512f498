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

#include <map>
#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "scriptid/identifier.h"
#include "scriptid/utf8.h"
#include "test_util.h"

namespace scriptid {
namespace {

const ScriptRangeTable& table() { return embedded_table(); }

// Brute-force tally: per-character lookup, inheritance by string compare, a
// plain map count. Shares no code with identify()'s indexed fast path.
std::map<std::string, std::uint64_t> brute_force_tally(std::u32string_view s) {
  std::map<std::string, std::uint64_t> counts;
  std::string previous;
  for (char32_t cp : s) {
    std::string code = table().lookup(cp).str();
    if (code == "Zinh" && !previous.empty()) code = previous;
    if (code != "Zinh") previous = code;
    ++counts[code];
  }
  return counts;
}

std::map<std::string, std::uint64_t> as_map(const ScriptDistribution& d) {
  std::map<std::string, std::uint64_t> out;
  for (const auto& [code, n] : d.entries()) out[code.str()] = n;
  return out;
}

TEST(ClassifyChars, Examples) {
  EXPECT_EQ(classify_chars(table(), U"A["),
            (std::vector<ScriptCode>{ScriptCode("Latn"), kCommon}));
  EXPECT_TRUE(classify_chars(table(), U"").empty());
  EXPECT_EQ(classify_chars(table(), U"\u0627"),
            (std::vector<ScriptCode>{ScriptCode("Arab")}));
}

TEST(ResolveInherited, Examples) {
  const ScriptCode latn("Latn"), arab("Arab");
  EXPECT_EQ(resolve_inherited(std::vector{latn, kInherited, kInherited}),
            (std::vector{latn, latn, latn}));
  EXPECT_EQ(resolve_inherited(std::vector{kInherited, arab}),
            (std::vector{kInherited, arab}));
  EXPECT_TRUE(resolve_inherited(std::vector<ScriptCode>{}).empty());
  EXPECT_EQ(resolve_inherited(std::vector{arab, kInherited, latn, kInherited}),
            (std::vector{arab, arab, latn, latn}));
}

TEST(Identify, SingleScript) {
  auto r = identify(table(), U"ABC");
  EXPECT_EQ(r.main_script, ScriptCode("Latn"));
  EXPECT_EQ(r.main_fraction(), 1.0);
  EXPECT_EQ(as_map(r.distribution), (std::map<std::string, std::uint64_t>{
                                        {"Latn", 3}}));
}

TEST(Identify, TieGoesToSmallestCode) {
  auto r = identify(table(), U"AB. ");
  EXPECT_EQ(r.main_script, ScriptCode("Latn"));
  EXPECT_EQ(r.main_fraction(), 0.5);
  EXPECT_EQ(as_map(r.distribution),
            (std::map<std::string, std::uint64_t>{{"Latn", 2}, {"Zyyy", 2}}));
  // Greek vs Latin, one each: Grek < Latn.
  EXPECT_EQ(identify(table(), U"a\u03B1").main_script, ScriptCode("Grek"));
  EXPECT_EQ(identify(table(), U"\u03B1a").main_script, ScriptCode("Grek"));
}

TEST(Identify, PunctuationOnlyIsCommon) {
  auto r = identify(table(), U"!!!");
  EXPECT_EQ(r.main_script, kCommon);
  EXPECT_EQ(r.main_count, 3u);
}

TEST(Identify, EmptyText) {
  auto r = identify(table(), U"");
  EXPECT_FALSE(r.main_script.has_value());
  EXPECT_EQ(r.distribution.total(), 0u);
  EXPECT_EQ(r.main_fraction(), 0.0);
}

TEST(Identify, ZeroWidthJoinerInherits) {
  auto r = identify(table(), U"A\u200D");
  EXPECT_EQ(r.distribution.count(ScriptCode("Latn")), 2u);
  EXPECT_EQ(r.distribution.count(kInherited), 0u);
  auto leading = identify(table(), U"\u200DA");
  EXPECT_EQ(leading.distribution.count(kInherited), 1u);
  EXPECT_EQ(leading.distribution.count(ScriptCode("Latn")), 1u);
}

TEST(Identify, ReplacementCharacterIsUnknown) {
  auto r = identify_utf8(table(), "ab\xFF\xFE");
  EXPECT_EQ(r.distribution.count(kUnknown), 2u);
  EXPECT_EQ(r.distribution.count(ScriptCode("Latn")), 2u);
  EXPECT_THROW(identify_utf8(table(), "ab\xFF", BadUtf8Policy::kFail),
               DecodeError);
}

TEST(ScriptDistribution, NoZeroEntriesAndSortedOrder) {
  ScriptDistribution d;
  d.add(ScriptCode("Latn"), 0);
  EXPECT_TRUE(d.entries().empty());
  d.add(ScriptCode("Zyyy"), 2);
  d.add(ScriptCode("Arab"), 1);
  d.add(ScriptCode("Zyyy"), 1);
  ASSERT_EQ(d.entries().size(), 2u);
  EXPECT_EQ(d.entries()[0].first, ScriptCode("Arab"));
  EXPECT_EQ(d.total(), 4u);
  EXPECT_DOUBLE_EQ(d.fraction(kCommon), 0.75);
}

// Properties over random text.

TEST(IdentifyProperty, MatchesBruteForceAndConservesCounts) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    std::u32string s = testing::random_text(rng, 60);
    auto r = identify(table(), s);
    EXPECT_EQ(as_map(r.distribution), brute_force_tally(s));
    EXPECT_EQ(r.distribution.total(), s.size());
    double sum = 0;
    for (const auto& [code, n] : r.distribution.entries()) {
      sum += r.distribution.fraction(code);
      EXPECT_LE(n, r.main_count);
      if (n == r.main_count) {
        EXPECT_LE(*r.main_script, code);
      }
    }
    if (!s.empty()) {
      EXPECT_NEAR(sum, 1.0, 1e-9);
    }
  }
}

TEST(IdentifyProperty, ConcatenationAdditivity) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 2000; ++i) {
    std::u32string a = testing::random_text(rng, 30);
    std::u32string b = testing::random_text(rng, 30);
    if (!b.empty() && table().lookup(b.front()) == kInherited) continue;
    ScriptDistribution sum = identify(table(), a).distribution;
    sum += identify(table(), b).distribution;
    EXPECT_EQ(identify(table(), a + b).distribution, sum);
  }
}

TEST(IdentifyProperty, MajorityStability) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    std::u32string s = testing::random_text(rng, 8);
    auto r = identify(table(), s);
    // An appended Zinh character takes its predecessor's script, so a Zinh
    // majority (a leading run of inherited characters) is not stable.
    if (r.main_fraction() <= 0.5 || r.main_script == kInherited) continue;
    // Pick a character whose resolved code is the main script.
    auto resolved = resolve_inherited(classify_chars(table(), s));
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (resolved[k] == *r.main_script &&
          table().lookup(s[k]) == *r.main_script) {
        EXPECT_EQ(identify(table(), s + s[k]).main_script, r.main_script);
        ++checked;
        break;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(IdentifyProperty, InheritanceIsIdempotent) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 2000; ++i) {
    auto once = resolve_inherited(
        classify_chars(table(), testing::random_text(rng, 40)));
    EXPECT_EQ(resolve_inherited(once), once);
  }
}

TEST(IdentifyProperty, DeterministicAcrossThreads) {
  std::mt19937_64 rng(15);
  std::vector<std::u32string> texts;
  for (int i = 0; i < 400; ++i) texts.push_back(testing::random_text(rng, 50));
  std::vector<IdentificationResult> serial;
  for (const auto& t : texts) serial.push_back(identify(table(), t));
  std::vector<IdentificationResult> parallel(texts.size());
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < texts.size(); i += 4) {
        parallel[i] = identify(table(), texts[i]);
      }
    });
  }
  for (auto& t : workers) t.join();
  EXPECT_EQ(serial, parallel);
}

}  // namespace
}  // namespace scriptid
