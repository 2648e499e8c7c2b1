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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "leichtkit/errors.h"
#include "leichtkit/preprocess.h"
#include "leichtkit/textstats.h"
#include "test_support.h"

namespace leichtkit {
namespace {

using testing::FixturePath;
using testing::ReadJsonLines;

// ASCII plus the German umlauts; enough for the oracle's vocabulary.
std::string ToLowerForTest(const std::string& s) {
  std::string out = s;
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i] >= 'A' && out[i] <= 'Z') {
      out[i] = static_cast<char>(out[i] - 'A' + 'a');
    } else if (out[i] == '\xC3' && i + 1 < out.size() &&
               (out[i + 1] == '\x84' || out[i + 1] == '\x96' ||
                out[i + 1] == '\x9C')) {
      out[i + 1] = static_cast<char>(out[i + 1] + 0x20);
      ++i;
    }
  }
  return out;
}

// Brute-force oracle: whitespace split, punctuation trimmed from both ends,
// ASCII/German pattern match, then explicit frequency ranking.
std::map<std::string, std::string> OracleLexicon(
    const std::vector<std::string>& texts, size_t min_count) {
  static const std::regex compound(
      "(?:[A-ZÄÖÜ](?:[a-zäöüßA-ZÄÖÜ]+))(?:-[A-ZÄÖÜ](?:[a-zäöüßA-ZÄÖÜ]+))+");
  std::map<std::string, size_t> counts;
  for (const std::string& text : texts) {
    std::istringstream in(text);
    std::string chunk;
    while (in >> chunk) {
      const size_t first = chunk.find_first_not_of(".,;:!?()\"'");
      const size_t last = chunk.find_last_not_of(".,;:!?()\"'");
      if (first == std::string::npos) continue;
      const std::string word = chunk.substr(first, last - first + 1);
      if (std::regex_match(word, compound)) ++counts[word];
    }
  }
  std::map<std::string, std::vector<std::pair<size_t, std::string>>> by_key;
  for (const auto& [form, count] : counts) {
    if (count < min_count) continue;
    std::string key;
    for (char c : form) {
      if (c != '-') key.push_back(c);
    }
    by_key[ToLowerForTest(key)].push_back({count, form});
  }
  std::map<std::string, std::string> result;
  for (auto& [key, forms] : by_key) {
    std::sort(forms.begin(), forms.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    result[key] = forms.front().second;
  }
  return result;
}

std::vector<Document> Docs(const std::vector<std::string>& texts) {
  std::vector<Document> docs;
  for (size_t i = 0; i < texts.size(); ++i) {
    docs.push_back(Document::Create("d" + std::to_string(i), texts[i]));
  }
  return docs;
}

HyphenationLexicon BundesLand() {
  HyphenationLexicon lexicon;
  lexicon.Insert("bundesland", "Bundes-Land", 1);
  return lexicon;
}

TEST(BuildLexiconTest, SpecExamples) {
  const auto docs = Docs({"Das Bundes-Land ist groß. Das Bundes-Land wählt."});
  const HyphenationLexicon lexicon = BuildHyphenationLexicon(docs, 1);
  ASSERT_EQ(lexicon.size(), 1u);
  EXPECT_EQ(*lexicon.Find("bundesland"), "Bundes-Land");
  EXPECT_EQ(lexicon.frequency().at("Bundes-Land"), 2u);

  EXPECT_TRUE(BuildHyphenationLexicon(std::vector<Document>{}, 1).empty());

  const auto mixed = Docs({"Bundes-Land Bundes-Land Bund-Esland Bundes-Land"});
  EXPECT_EQ(*BuildHyphenationLexicon(mixed, 1).Find("bundesland"), "Bundes-Land");
}

TEST(BuildLexiconTest, TiesGoToSmallestForm) {
  const auto docs = Docs({"Bund-Esland Bundes-Land", "Bundes-Land Bund-Esland"});
  EXPECT_EQ(*BuildHyphenationLexicon(docs, 1).Find("bundesland"), "Bund-Esland");
}

TEST(BuildLexiconTest, MinCountAndShape) {
  const auto docs = Docs({"Kranken-Kasse Rat-Haus Rat-Haus e-Mail A-Team Ab-C3 "
                          "Easy-Language-Text Easy-Language-Text"});
  const HyphenationLexicon lexicon = BuildHyphenationLexicon(docs, 2);
  EXPECT_EQ(lexicon.size(), 2u);
  EXPECT_NE(lexicon.Find("rathaus"), nullptr);
  EXPECT_NE(lexicon.Find("easylanguagetext"), nullptr);
  EXPECT_EQ(lexicon.Find("krankenkasse"), nullptr);
  EXPECT_THROW(BuildHyphenationLexicon(docs, 0), ConfigError);
}

TEST(BuildLexiconTest, AgreesWithBruteForceOracle) {
  static constexpr const char* kWords[] = {
      "Rat-Haus", "Rat-haus", "Bundes-Land", "Bund-Esland", "Kranken-Kasse",
      "Bus-Halte-Stelle", "Haus",  "und", "Ober-Bürger-Meister", "Öl-Heizung",
      "X-Ray", "Bürger-Amt", "Bürger-Amt.", "(Rat-Haus)", "Rat-Haus,",
      "Ober-Bürgermeister", "Arbeits-Amt", "Arbeit-Samt", "der", "-Amt"};
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> texts(1 + rng() % 4);
    for (std::string& text : texts) {
      const int len = 1 + static_cast<int>(rng() % 30);
      for (int i = 0; i < len; ++i) {
        text += kWords[rng() % std::size(kWords)];
        text += (rng() % 5 == 0) ? "\n" : " ";
      }
    }
    const size_t min_count = 1 + rng() % 3;
    const HyphenationLexicon lexicon = BuildHyphenationLexicon(Docs(texts), min_count);
    const auto expected = OracleLexicon(texts, min_count);
    std::map<std::string, std::string> actual(lexicon.entries().begin(),
                                              lexicon.entries().end());
    ASSERT_EQ(actual, expected) << "trial " << trial;

    for (const auto& [key, form] : lexicon.entries()) {
      EXPECT_EQ(DehyphenatedKey(form), key);
      EXPECT_NE(form.find('-'), std::string::npos);
      EXPECT_NE(form.front(), '-');
      EXPECT_NE(form.back(), '-');
    }
  }
}

TEST(ApplyHyphenationTest, SpecExamples) {
  const HyphenationLexicon lexicon = BundesLand();
  EXPECT_EQ(ApplyHyphenation("Das Bundesland wählt", lexicon),
            "Das Bundes-Land wählt");
  EXPECT_EQ(ApplyHyphenation("Das Bundes-Land wählt", lexicon),
            "Das Bundes-Land wählt");
  EXPECT_EQ(ApplyHyphenation("Bundesländer", lexicon), "Bundesländer");
}

TEST(ApplyHyphenationTest, CaseAndPunctuation) {
  const HyphenationLexicon lexicon = BundesLand();
  EXPECT_EQ(ApplyHyphenation("bundesland, BUNDESLAND.", lexicon),
            "bundes-Land, Bundes-Land.");
  EXPECT_EQ(ApplyHyphenation("(Bundesland)\nEnde", lexicon), "(Bundes-Land)\nEnde");
  EXPECT_EQ(ApplyHyphenation("", lexicon), "");
}

TEST(ApplyHyphenationTest, SinglePass) {
  HyphenationLexicon lexicon;
  lexicon.Insert("rathaus", "Rat-Haus", 1);
  lexicon.Insert("haus", "Ha-Us", 1);  // would fire on a second pass
  EXPECT_EQ(ApplyHyphenation("Rathaus", lexicon), "Rat-Haus");
}

TEST(ApplyHyphenationTest, TokenCountPreservedAndOthersUntouched) {
  HyphenationLexicon lexicon;
  lexicon.Insert("rathaus", "Rat-Haus", 3);
  lexicon.Insert("krankenkasse", "Kranken-Kasse", 2);
  static constexpr const char* kWords[] = {
      "Rathaus", "rathaus", "Rat-Haus", "Krankenkasse", "Kasse", "das",
      "Rathäuser", ",", ".", "(", ")", "z.B.", "3,5", "Haus", "ist"};
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    const int len = static_cast<int>(rng() % 20);
    for (int i = 0; i < len; ++i) {
      if (i > 0) text += (rng() % 3 == 0) ? "" : " ";
      text += kWords[rng() % std::size(kWords)];
    }
    const std::string out = ApplyHyphenation(text, lexicon);
    const auto before = Tokenize(text);
    const auto after = Tokenize(out);
    ASSERT_EQ(before.size(), after.size()) << text;
    for (size_t i = 0; i < before.size(); ++i) {
      const std::string key = DehyphenatedKey(before[i]);
      if (before[i].find('-') != std::string::npos || lexicon.Find(key) == nullptr) {
        EXPECT_EQ(before[i], after[i]) << text;
      } else {
        EXPECT_EQ(DehyphenatedKey(after[i]), key) << text;
      }
    }
  }
}

TEST(HyphenationFixtureTest, AllCasesPass) {
  const auto cases = ReadJsonLines(FixturePath("hyphenation_cases.jsonl"));
  ASSERT_GE(cases.size(), 12u);
  for (const auto& c : cases) {
    if (c["kind"] == "build") {
      const auto texts = c["corpus"].get<std::vector<std::string>>();
      const HyphenationLexicon lexicon =
          BuildHyphenationLexicon(Docs(texts), c["min_count"].get<size_t>());
      std::map<std::string, std::string> actual(lexicon.entries().begin(),
                                                lexicon.entries().end());
      EXPECT_EQ(actual, (c["expected"].get<std::map<std::string, std::string>>())) << c["id"];
      EXPECT_EQ(actual, OracleLexicon(texts, c["min_count"].get<size_t>())) << c["id"];
    } else {
      HyphenationLexicon lexicon;
      for (const auto& [key, form] : c["lexicon"].items()) {
        lexicon.Insert(key, form.get<std::string>(), 1);
      }
      const std::string out = ApplyHyphenation(c["input"].get<std::string>(), lexicon);
      EXPECT_EQ(out, c["expected"].get<std::string>()) << c["id"];
    }
  }
}

TEST(LexiconTest, InsertValidates) {
  HyphenationLexicon lexicon;
  EXPECT_THROW(lexicon.Insert("bundesland", "Bundesland", 1), ConfigError);
  EXPECT_THROW(lexicon.Insert("bundesland", "-Bundes-Land", 1), ConfigError);
  EXPECT_THROW(lexicon.Insert("landbund", "Bundes-Land", 1), ConfigError);
}

TEST(LexiconTest, JsonRoundTrip) {
  HyphenationLexicon lexicon;
  lexicon.Insert("rathaus", "Rat-Haus", 3);
  lexicon.Insert("öltank", "Öl-Tank", 2);
  const HyphenationLexicon back = HyphenationLexicon::FromJson(lexicon.ToJson());
  EXPECT_EQ(back.entries(), lexicon.entries());
  EXPECT_EQ(back.frequency(), lexicon.frequency());

  const HyphenationLexicon bare =
      HyphenationLexicon::FromJson(R"({"rathaus": "Rat-Haus"})");
  EXPECT_EQ(*bare.Find("rathaus"), "Rat-Haus");
  EXPECT_THROW(HyphenationLexicon::FromJson("{"), IoError);
  EXPECT_THROW(HyphenationLexicon::FromJson(R"({"rathaus": "Haus-Rat"})"), IoError);
  EXPECT_THROW(HyphenationLexicon::FromJson("[1]"), IoError);
}

}  // namespace
}  // namespace leichtkit
