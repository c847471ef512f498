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
#include "scriptid/records.h"
#include "scriptid/utf8.h"
#include "test_util.h"

namespace scriptid {
namespace {

const ScriptRangeTable& table() { return embedded_table(); }

TEST(Round4, HalfAwayFromZero) {
  EXPECT_EQ(round4(0.8), 0.8);
  EXPECT_EQ(round4(2.0 / 3.0), 0.6667);
  EXPECT_EQ(round4(0.00005), 0.0001);
  EXPECT_EQ(round4(1.0), 1.0);
}

TEST(IdentificationRecord, Shape) {
  Json j = to_record(identify(table(), U"AB. "));
  EXPECT_EQ(j.dump(),
            R"({"distribution":{"Latn":2,"Zyyy":2},"main_percentage":0.5,)"
            R"("main_script":"Latn","total":4})");
  Json empty = to_record(identify(table(), U""));
  EXPECT_TRUE(empty.at("main_script").is_null());
}

TEST(IdentificationRecordProperty, RoundTrip) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 2000; ++i) {
    auto r = identify(table(), testing::random_text(rng, 40));
    auto back = identification_from_record(Json::parse(to_record(r).dump()));
    EXPECT_EQ(back, r);
  }
}

TEST(IdentificationRecord, RejectsInconsistentRecords) {
  EXPECT_THROW(identification_from_record(Json::parse(
                   R"({"distribution":{"Latn":2},"main_script":"Latn",)"
                   R"("main_percentage":1,"total":3})")),
               ParseError);
  EXPECT_THROW(identification_from_record(Json::parse(R"({"total":0})")),
               ParseError);
  EXPECT_THROW(identification_from_record(Json::parse(
                   R"({"distribution":{"latin":2},"main_script":null,)"
                   R"("main_percentage":1,"total":2})")),
               ParseError);
}

TEST(AgreementRecord, RoundTrip) {
  AgreementStats s{2385 + 404 + 25, 2385, 404, 25};
  EXPECT_EQ(agreement_from_record(to_record(s)), s);
}

TEST(AuditRecord, RoundTrip) {
  std::vector<CorpusRow> rows;
  for (int i = 0; i < 30; ++i) {
    const char32_t letter = U'a' + static_cast<char32_t>(i % 26);
    rows.push_back({i % 3 ? "eng" : "bul-Latn",
                    encode_utf8(std::u32string(1 + i, letter)) + "."});
  }
  rows.push_back({"dsb", "one"});
  rows.push_back({"??", "skipped"});
  WritingSystemResource res;
  res.records[LanguageCode::from_string("eng")].core = {ScriptCode("Latn")};
  AuditOptions opt;
  opt.sample_size = 5;
  opt.seed = 77;
  auto rep = audit(rows, LabelMap{}, res, table(), opt);
  ASSERT_EQ(rep.languages.size(), 2u);
  Json j = to_record(rep);
  auto back = audit_from_record(Json::parse(j.dump()));
  EXPECT_EQ(back, rep);
  EXPECT_EQ(back.options.seed, 77u);
  EXPECT_EQ(to_record(back).dump(), j.dump());
  EXPECT_EQ(j.at("excluded").at("dsb").at("available"), 1);
  EXPECT_FALSE(format_audit_table(rep).empty());
}

TEST(VocabRecord, RoundTrip) {
  std::vector<std::string> vocab = {"the", "\xD0\xB8", "##ing"};
  auto p = vocab_script_distribution(vocab, table());
  Json j = to_record(p);
  EXPECT_EQ(j.at("scripts").at("Latn").at("percentage"), 0.6667);
  EXPECT_EQ(j.at("scripts_present"), 2);
  auto back = vocab_profile_from_record(j);
  EXPECT_EQ(back.counts, p.counts);
  EXPECT_EQ(back.vocab_size, 3u);
  EXPECT_NE(format_vocab_table(p).find("Cyrl"), std::string::npos);
}

TEST(TokenizationRecord, RoundTrip) {
  TokenizationStats s{"sin_Sinh", 20071, 5};
  auto back = tokenization_from_record(to_record(s));
  EXPECT_EQ(back.doc_id, s.doc_id);
  EXPECT_EQ(back.token_count, s.token_count);
  EXPECT_EQ(back.unk_count, s.unk_count);
  std::vector<TokenizationStats> all = {s};
  EXPECT_NE(format_tokenization_table(all).find("sin_Sinh"),
            std::string::npos);
}

}  // namespace
}  // namespace scriptid
