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

#include "leichtkit/desk_corpus.h"

#include <gtest/gtest.h>

#include <string>

#include "leichtkit/preprocess.h"
#include "leichtkit/textstats.h"
#include "leichtkit/utf8.h"

namespace leichtkit::desk {
namespace {

TEST(DeskCorpusTest, Deterministic) {
  const auto a = EasyParagraphs(20, 1);
  const auto b = EasyParagraphs(20, 1);
  ASSERT_EQ(a.size(), 20u);
  for (size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].text, b[i].text);
  EXPECT_NE(EasyParagraphs(5, 2)[0].text + EasyParagraphs(5, 2)[1].text,
            a[0].text + a[1].text);
  const auto c = ComplexitySentences(30, 4);
  const auto d = ComplexitySentences(30, 4);
  for (size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(c[i].text, d[i].text);
    EXPECT_EQ(c[i].complexity, d[i].complexity);
  }
}

TEST(DeskCorpusTest, ParagraphShape) {
  for (const Paragraph& p : EasyParagraphs(50, 9)) {
    EXPECT_TRUE(utf8::IsValid(p.text));
    EXPECT_GE(p.sentence_count, 3u);
    EXPECT_LE(p.sentence_count, 6u);
    EXPECT_EQ(SplitSentences(p.text).size(), p.sentence_count) << p.text;
    EXPECT_EQ(Analyze(p.text).newline_count, p.sentence_count - 1);
    EXPECT_EQ(PreprocessText(p.text), p.text);
  }
  for (const Paragraph& p : NormalParagraphs(50, 9)) {
    EXPECT_TRUE(utf8::IsValid(p.text));
    EXPECT_GE(p.sentence_count, 2u);
    EXPECT_LE(p.sentence_count, 4u);
    EXPECT_EQ(SplitSentences(p.text).size(), p.sentence_count) << p.text;
    EXPECT_EQ(p.text.find('\n'), std::string::npos);
    EXPECT_EQ(PreprocessText(p.text), p.text);
  }
}

TEST(DeskCorpusTest, StylesContrast) {
  std::string easy;
  std::string normal;
  for (const Paragraph& p : EasyParagraphs(200, 3)) easy += p.text + "\n";
  for (const Paragraph& p : NormalParagraphs(200, 3)) normal += p.text + "\n";
  const EasyLanguageReport e = EasyLanguageStats(easy);
  const EasyLanguageReport n = EasyLanguageStats(normal);
  EXPECT_GT(e.readability.fre, n.readability.fre + 10.0);
  EXPECT_GT(e.readability.newlines_per_sentence, n.readability.newlines_per_sentence);
  EXPECT_LT(e.commas_per_sentence, n.commas_per_sentence);
}

TEST(DeskCorpusTest, ComplexityLabelsInRange) {
  const auto data = ComplexitySentences(600, 11);
  double lo = 7.0, hi = 1.0;
  for (const auto& s : data) {
    EXPECT_GE(s.complexity, 1.0);
    EXPECT_LE(s.complexity, 7.0);
    EXPECT_FALSE(s.text.empty());
    lo = std::min(lo, s.complexity);
    hi = std::max(hi, s.complexity);
  }
  EXPECT_GT(hi - lo, 3.0);
}

}  // namespace
}  // namespace leichtkit::desk
