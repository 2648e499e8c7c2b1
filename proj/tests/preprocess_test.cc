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

#include "leichtkit/preprocess.h"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <regex>
#include <string>

#include "leichtkit/errors.h"
#include "test_support.h"

namespace leichtkit {
namespace {

using testing::FixturePath;
using testing::ReadJsonLines;

// Independent stripper built from regular expressions only, iterated to a
// fixpoint. It shares no code with StripMarkup.
std::string EntityOracle(const std::smatch& m) {
  static const std::map<std::string, std::string> kNamed = {
      {"amp", "&"},        {"lt", "<"},          {"gt", ">"},
      {"quot", "\""},      {"nbsp", "\xC2\xA0"}, {"auml", "ä"},
      {"ouml", "ö"},       {"uuml", "ü"},        {"Auml", "Ä"},
      {"Ouml", "Ö"},       {"Uuml", "Ü"},        {"szlig", "ß"},
      {"euro", "€"},       {"bdquo", "„"},       {"ldquo", "“"},
      {"shy", "\xC2\xAD"}, {"bull", "•"},        {"hellip", "…"},
  };
  const std::string body = m[1].str();
  if (body[0] == '#') {
    const bool hex = body.size() > 1 && (body[1] == 'x' || body[1] == 'X');
    const unsigned long cp = std::stoul(body.substr(hex ? 2 : 1), nullptr, hex ? 16 : 10);
    std::string out;
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
  }
  auto it = kNamed.find(body);
  return it == kNamed.end() ? "" : it->second;
}

std::string RegexStripOnce(std::string s) {
  static const std::regex comment("<!--[\\s\\S]*?-->");
  static const std::regex raw_element(
      "<(script|style)\\b[^>]*>[\\s\\S]*?</\\1\\s*>", std::regex::icase);
  static const std::regex block_tag(
      "</?(address|article|aside|blockquote|br|dd|div|dl|dt|footer|h[1-6]|"
      "header|hr|li|nav|ol|p|pre|section|table|title|tr|ul)\\b[^<>]*>",
      std::regex::icase);
  static const std::regex cell_tag("</?(td|th)\\b[^<>]*>", std::regex::icase);
  static const std::regex any_tag("<[A-Za-z/!?][^<>]*>");
  static const std::regex entity(
      "&(#[0-9]{1,7}|#[xX][0-9a-fA-F]{1,6}|[A-Za-z][A-Za-z0-9]{0,31});");
  static const std::regex url(
      "(^|[\\s(\\[\"'<])(?:[hH][tT][tT][pP][sS]?://|[wW][wW][wW]\\.)\\S*?"
      "(?=[.,;:!?)\\]}\"']*(\\s|$))");
  static const std::regex invisible(
      "[\\x01-\\x08\\x0E-\\x1F\\x7F]|\xE2\x80\x8B|\xE2\x80\x8C|\xE2\x80\x8D|"
      "\xC2\xAD|\xEF\xBB\xBF");
  static const std::regex nbsp("\xC2\xA0");
  static const std::regex line_break("[ \\t\\r\\n\\v\\f]*[\\r\\n\\v\\f][ \\t\\r\\n\\v\\f]*");
  static const std::regex spaces("[ \\t]+");
  static const std::regex edges("^[ \\n]+|[ \\n]+$");

  s = std::regex_replace(s, comment, "");
  s = std::regex_replace(s, raw_element, "\n");
  s = std::regex_replace(s, block_tag, "\n");
  s = std::regex_replace(s, cell_tag, " ");
  s = std::regex_replace(s, any_tag, "");
  std::string decoded;
  auto begin = std::sregex_iterator(s.begin(), s.end(), entity);
  size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    decoded += s.substr(last, static_cast<size_t>(it->position()) - last);
    decoded += EntityOracle(*it);
    last = static_cast<size_t>(it->position() + it->length());
  }
  decoded += s.substr(last);
  s = std::regex_replace(decoded, url, "$1");
  s = std::regex_replace(s, invisible, "");
  s = std::regex_replace(s, nbsp, " ");
  s = std::regex_replace(s, line_break, "\n");
  s = std::regex_replace(s, spaces, " ");
  s = std::regex_replace(s, edges, "");
  return s;
}

std::string RegexStrip(const std::string& raw) {
  std::string current = raw;
  for (int i = 0; i < 16; ++i) {
    std::string next = RegexStripOnce(current);
    if (next == current) break;
    current = next;
  }
  return current;
}

TEST(StripMarkupTest, SpecExamples) {
  EXPECT_EQ(StripMarkup("<p>Hallo</p>"), "Hallo");
  EXPECT_EQ(StripMarkup("Mehr auf www.ndr.de hier"), "Mehr auf hier");
  EXPECT_EQ(StripMarkup("A  &amp;  B"), "A & B");
  EXPECT_EQ(StripMarkup(""), "");
}

TEST(StripMarkupTest, RegexOracleAgreesWithFixture) {
  const auto cases = ReadJsonLines(FixturePath("markup_cases.jsonl"));
  ASSERT_EQ(cases.size(), 50u);
  for (const auto& c : cases) {
    EXPECT_EQ(RegexStrip(c["input"]), c["expected"].get<std::string>())
        << "oracle, case " << c["id"];
  }
}

TEST(StripMarkupTest, MarkupFixture) {
  for (const auto& c : ReadJsonLines(FixturePath("markup_cases.jsonl"))) {
    const std::string input = c["input"];
    const std::string stripped = StripMarkup(input);
    EXPECT_EQ(stripped, c["expected"].get<std::string>()) << "case " << c["id"];
    EXPECT_EQ(StripMarkup(stripped), stripped) << "idempotence, case " << c["id"];
  }
}

TEST(StripMarkupTest, OutputMatchesNoStripPattern) {
  static const std::regex tag("<[A-Za-z/!?][^<>]*>");
  static const std::regex url("(^|\\s)(https?://|www\\.)", std::regex::icase);
  static const std::regex entity("&(#[0-9]+|#[xX][0-9a-fA-F]+|[A-Za-z][A-Za-z0-9]*);");
  static const std::regex whitespace_run("  |\\n\\n|\\t|\\r| \\n|\\n ");
  for (const auto& c : ReadJsonLines(FixturePath("markup_cases.jsonl"))) {
    const std::string out = StripMarkup(c["input"].get<std::string>());
    EXPECT_FALSE(std::regex_search(out, tag)) << out;
    EXPECT_FALSE(std::regex_search(out, url)) << out;
    EXPECT_FALSE(std::regex_search(out, entity)) << out;
    EXPECT_FALSE(std::regex_search(out, whitespace_run)) << out;
  }
}

// Random strings over a markup-heavy alphabet.
TEST(StripMarkupTest, IdempotentOnRandomInput) {
  static constexpr std::string_view kPieces[] = {
      "<", ">", "</", "<p>", "<br>", "&", "amp;", "&lt;", "&gt;", "&#65;",
      "&#x", ";", "www.", "http://", "https://", " ", "  ", "\n", "\r\n",
      "\t", "a", "Haus", "ü", ".", ",", "(", ")", "•", "- ", "<!--", "-->",
      "<script>", "</script>", "\xC2\xA0", "&nbsp;", "&shy;", "x"};
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    const int len = static_cast<int>(rng() % 24);
    for (int i = 0; i < len; ++i) {
      s += kPieces[rng() % std::size(kPieces)];
    }
    const std::string once = StripMarkup(s);
    ASSERT_EQ(StripMarkup(once), once) << "input: " << s;
    const std::string pipeline = PreprocessText(s);
    ASSERT_EQ(PreprocessText(pipeline), pipeline) << "input: " << s;
  }
}

TEST(ConvertBulletsTest, SpecExamples) {
  EXPECT_EQ(ConvertBullets("Obst:\n• Apfel\n• Birne"), "Obst: Apfel, Birne.");
  EXPECT_EQ(ConvertBullets("Kein Punkt hier"), "Kein Punkt hier");
  EXPECT_EQ(ConvertBullets("- Eins\n- Zwei\n- Drei"), "Eins, Zwei, Drei.");
}

TEST(ConvertBulletsTest, BulletFixture) {
  const auto cases = ReadJsonLines(FixturePath("bullet_cases.jsonl"));
  ASSERT_EQ(cases.size(), 10u);
  for (const auto& c : cases) {
    const std::string out = ConvertBullets(c["input"].get<std::string>());
    EXPECT_EQ(out, c["expected"].get<std::string>()) << "case " << c["id"];
    EXPECT_EQ(ConvertBullets(out), out) << "idempotence, case " << c["id"];
  }
}

TEST(ConvertBulletsTest, NestedMarkersCollapse) {
  EXPECT_EQ(ConvertBullets("- - doppelt"), "doppelt.");
  EXPECT_EQ(ConvertBullets("• \n• Birne"), "• \nBirne.");
}

TEST(PreprocessTest, SpecExample) {
  const Document doc = Document::Create("d1", "<p>Hallo</p>");
  const Document clean = Preprocess(doc);
  ASSERT_TRUE(clean.clean_text.has_value());
  EXPECT_EQ(*clean.clean_text, "Hallo");
  EXPECT_EQ(clean.raw_text, doc.raw_text);
}

TEST(PreprocessTest, PipelineFixture) {
  for (const auto& c : ReadJsonLines(FixturePath("pipeline_docs.jsonl"))) {
    HyphenationLexicon lexicon;
    const bool has_lexicon = !c["lexicon"].is_null();
    if (has_lexicon) {
      for (const auto& [key, form] : c["lexicon"].items()) {
        lexicon.Insert(key, form.get<std::string>(), 1);
      }
    }
    const HyphenationLexicon* lex = has_lexicon ? &lexicon : nullptr;
    const Document doc = Document::Create(c["id"], c["raw"]);
    const Document once = Preprocess(doc, lex);
    EXPECT_EQ(*once.clean_text, c["expected"].get<std::string>()) << c["id"];

    // Second application, both on the document and on the cleaned text.
    EXPECT_EQ(*Preprocess(once, lex).clean_text, *once.clean_text);
    EXPECT_EQ(PreprocessText(*once.clean_text, lex), *once.clean_text);
  }
}

TEST(DocumentTest, RejectsEmptyAndInvalidText) {
  EXPECT_THROW(Document::Create("e", ""), ConfigError);
  EXPECT_THROW(Document::Create("bad", std::string("abc\xFF")), ConfigError);
  EXPECT_NO_THROW(Document::Create("ok", "Grüße"));
}

TEST(DocumentTest, CleanTextHasNoMarkupLeft) {
  const Document doc = Preprocess(Document::Create(
      "x", "<div>Text &amp; mehr: http://a.de</div>\n\n<p>Ende</p>"));
  EXPECT_EQ(StripMarkup(*doc.clean_text), *doc.clean_text);
}

}  // namespace
}  // namespace leichtkit
