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

// German tokenization, sentence splitting, syllable counting and the
// readability statistics built on top of them.

#ifndef LEICHTKIT_TEXTSTATS_H_
#define LEICHTKIT_TEXTSTATS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace leichtkit {

// Abbreviations that never end a sentence and stay whole tokens ("z.B.").
// Entries include their trailing period and are matched case-insensitively.
class AbbreviationList {
 public:
  AbbreviationList() = default;

  // The list compiled in from data/abbreviations.txt.
  static const AbbreviationList& Default();
  // One entry per line; blank lines and lines starting with '#' are skipped.
  static AbbreviationList FromText(std::string_view text);
  static AbbreviationList FromFile(const std::filesystem::path& path);

  bool Contains(std::string_view token) const;
  size_t size() const { return entries_.size(); }

 private:
  std::unordered_set<std::string> entries_;
};

// A token as a half-open range of code point offsets into the decoded text.
struct TokenSpan {
  size_t begin = 0;
  size_t end = 0;
  // True for letter/digit runs (with internal hyphens and apostrophes) and
  // abbreviations; false for single punctuation marks.
  bool is_word = false;
};

std::vector<TokenSpan> ScanTokens(
    std::u32string_view text,
    const AbbreviationList& abbreviations = AbbreviationList::Default());

// Whitespace split with punctuation detached. Internal hyphens and
// apostrophes stay inside words, as do '.' and ',' between digits.
std::vector<std::string> Tokenize(
    std::string_view text,
    const AbbreviationList& abbreviations = AbbreviationList::Default());

// Rule-based splitter. A boundary follows '.', '!', '?' or ':' when the next
// non-space character is uppercase (or the text ends), and every newline is a
// boundary. Listed abbreviations and ordinals ("3.") suppress boundaries.
// Returned sentences are trimmed and never empty.
std::vector<std::string> SplitSentences(
    std::string_view text,
    const AbbreviationList& abbreviations = AbbreviationList::Default());

struct SentenceSpan {
  size_t begin = 0;  // token index, inclusive
  size_t end = 0;    // token index, exclusive
};

struct TokenizedText {
  std::vector<std::string> tokens;
  std::vector<SentenceSpan> sentence_spans;
  size_t newline_count = 0;
};

TokenizedText Analyze(
    std::string_view text,
    const AbbreviationList& abbreviations = AbbreviationList::Default());

// True when the token contains at least one letter. Only such tokens count
// as words for readability purposes.
bool IsWordToken(std::string_view token);

// Heuristic German syllable count: vowel groups over {a e i o u ä ö ü y},
// with ei ie au eu äu aa ee oo counted as one group. Any token with a letter
// counts at least one syllable; tokens without letters count zero.
int CountSyllables(std::string_view word);

// German Flesch Reading Ease (Amstad): 180 - ASL - 58.5 * ASW.
double AmstadReadingEase(double avg_sentence_length, double avg_syllables);

struct ReadabilityReport {
  double fre = 0.0;
  double avg_sentence_length_words = 0.0;
  double avg_syllables_per_word = 0.0;
  size_t sentence_count = 0;  // sentences containing at least one word
  size_t word_count = 0;
  size_t syllable_count = 0;
  double newlines_per_sentence = 0.0;
};

// Empty input (no words) yields an all-zero report, fre included.
ReadabilityReport FleschReadingEase(
    std::string_view text,
    const AbbreviationList& abbreviations = AbbreviationList::Default());

struct EasyLanguageReport {
  ReadabilityReport readability;
  size_t newline_count = 0;
  size_t comma_count = 0;
  double commas_per_sentence = 0.0;
};

EasyLanguageReport EasyLanguageStats(
    std::string_view text,
    const AbbreviationList& abbreviations = AbbreviationList::Default());

}  // namespace leichtkit

#endif  // LEICHTKIT_TEXTSTATS_H_
