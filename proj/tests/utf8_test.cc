// Copyright 2026 The leichtkit Authors.
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

#include "leichtkit/utf8.h"

#include <gtest/gtest.h>

#include <string>

namespace leichtkit::utf8 {
namespace {

TEST(Utf8Test, DecodeEncodeRoundTrip) {
  const std::string text = "Grüße, Straße – 12 € 𝄞";
  const std::u32string cps = Decode(text);
  EXPECT_EQ(cps.size(), 22u);
  EXPECT_EQ(cps[2], U'ü');
  EXPECT_EQ(cps.back(), U'\U0001D11E');
  EXPECT_EQ(Encode(cps), text);
  EXPECT_TRUE(IsValid(text));
}

TEST(Utf8Test, MalformedInput) {
  EXPECT_FALSE(IsValid("\xFF"));
  EXPECT_FALSE(IsValid("\xC3"));          // truncated
  EXPECT_FALSE(IsValid("\xC0\xAF"));      // overlong
  EXPECT_FALSE(IsValid("\xED\xA0\x80"));  // surrogate
  EXPECT_EQ(Decode("a\xFF" "b"), (std::u32string{U'a', kReplacement, U'b'}));
  EXPECT_EQ(Decode("\xC3"), (std::u32string{kReplacement}));
  EXPECT_EQ(SequenceLength("\xE2\x82\xAC", 0), 3u);
  EXPECT_EQ(SequenceLength("\xFF", 0), 1u);
}

TEST(Utf8Test, Classes) {
  EXPECT_TRUE(IsLetter(U'ß'));
  EXPECT_TRUE(IsLetter(U'Ä'));
  EXPECT_FALSE(IsLetter(U'×'));
  EXPECT_FALSE(IsLetter(U'1'));
  EXPECT_TRUE(IsDigit(U'7'));
  EXPECT_TRUE(IsUpper(U'Ö'));
  EXPECT_TRUE(IsLower(U'ö'));
  EXPECT_TRUE(IsWhitespace(U'\n'));
  EXPECT_TRUE(IsWhitespace(U' '));
  EXPECT_FALSE(IsWhitespace(U'x'));
  EXPECT_TRUE(IsAlnum(U'é'));
}

TEST(Utf8Test, CaseMapping) {
  EXPECT_EQ(ToLower(U'Ü'), U'ü');
  EXPECT_EQ(ToUpper(U'ä'), U'Ä');
  EXPECT_EQ(ToUpper(U'ß'), U'ß');
  EXPECT_EQ(ToLower(U'Ł'), U'ł');
  EXPECT_EQ(ToLower("ÄPFEL und BÄUME"), "äpfel und bäume");
  EXPECT_EQ(ToLower("Z.B."), "z.b.");
}

}  // namespace
}  // namespace leichtkit::utf8
