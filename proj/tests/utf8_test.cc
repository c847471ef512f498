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

#include "scriptid/utf8.h"
#include "test_util.h"

namespace scriptid {
namespace {

TEST(Utf8, DecodesAllLengths) {
  EXPECT_EQ(decode_utf8("A\xC3\xA9\xE2\x80\x8D\xF0\x9F\x98\x80"),
            (std::u32string{U'A', 0xE9, 0x200D, 0x1F600}));
}

TEST(Utf8, ReplacesIllFormedBytes) {
  // Lone continuation, overlong '/', encoded surrogate, truncated sequence.
  EXPECT_EQ(decode_utf8("\x80"), U"\uFFFD");
  EXPECT_EQ(decode_utf8("\xC0\xAF"), U"\uFFFD\uFFFD");
  EXPECT_EQ(decode_utf8("\xED\xA0\x80"), U"\uFFFD\uFFFD\uFFFD");
  EXPECT_EQ(decode_utf8("a\xE2\x80"), U"a\uFFFD\uFFFD");
  EXPECT_EQ(decode_utf8("\xF4\x90\x80\x80"), U"\uFFFD\uFFFD\uFFFD\uFFFD");
}

TEST(Utf8, FailPolicyReportsOffset) {
  try {
    decode_utf8("ab\xFF", BadUtf8Policy::kFail);
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.byte_offset(), 2u);
  }
  EXPECT_FALSE(valid_utf8("ab\xFF"));
  EXPECT_TRUE(valid_utf8("ab\xC3\xA9"));
}

TEST(Utf8Property, EncodeDecodeRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5000; ++i) {
    std::u32string s = testing::random_text(rng, 50);
    std::string bytes = encode_utf8(s);
    ASSERT_TRUE(valid_utf8(bytes));
    ASSERT_EQ(decode_utf8(bytes, BadUtf8Policy::kFail), s);
  }
}

TEST(Utf8Property, ReplacementNeverDropsInput) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 5000; ++i) {
    std::string bytes(std::uniform_int_distribution<int>(0, 20)(rng), '\0');
    for (auto& b : bytes) b = static_cast<char>(byte(rng));
    std::u32string decoded = decode_utf8(bytes);
    // Every byte ends up in exactly one scalar; at most one scalar per byte.
    EXPECT_LE(decoded.size(), bytes.size());
    if (!bytes.empty()) {
      EXPECT_FALSE(decoded.empty());
    }
    EXPECT_TRUE(valid_utf8(encode_utf8(decoded)));
  }
}

}  // namespace
}  // namespace scriptid
