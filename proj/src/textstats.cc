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

#include "leichtkit/textstats.h"

#include <fstream>
#include <sstream>

#include "leichtkit/errors.h"
#include "leichtkit/utf8.h"

namespace leichtkit {
namespace internal {
extern const std::string_view kDefaultAbbreviations;
}  // namespace internal

namespace {

bool IsInternalJoiner(char32_t cp) {
  return cp == '-' || cp == '\'' || cp == 0x2019;
}

bool IsSentenceFinal(char32_t cp) {
  return cp == '.' || cp == '!' || cp == '?' || cp == ':';
}

bool IsClosingMark(char32_t cp) {
  switch (cp) {
    case '"':
    case '\'':
    case ')':
    case ']':
    case 0x00AB:  // «
    case 0x00BB:  // »
    case 0x2019:  // ’
    case 0x201C:  // “
    case 0x201D:  // ”
      return true;
    default:
      return false;
  }
}

bool IsOpeningMark(char32_t cp) {
  switch (cp) {
    case '"':
    case '\'':
    case '(':
    case '[':
    case 0x00AB:
    case 0x00BB:
    case 0x2018:  // ‘
    case 0x201A:  // ‚
    case 0x201C:  // “
    case 0x201E:  // „
      return true;
    default:
      return false;
  }
}

// End of the word starting at `pos` (text[pos] is alphanumeric).
size_t ScanWord(std::u32string_view text, size_t pos, size_t limit) {
  size_t i = pos + 1;
  while (i < limit) {
    const char32_t c = text[i];
    if (utf8::IsAlnum(c)) {
      ++i;
      continue;
    }
    const bool next_alnum = i + 1 < limit && utf8::IsAlnum(text[i + 1]);
    if (IsInternalJoiner(c) && next_alnum) {
      i += 1;
      continue;
    }
    if ((c == '.' || c == ',') && utf8::IsDigit(text[i - 1]) &&
        i + 1 < limit && utf8::IsDigit(text[i + 1])) {
      i += 1;
      continue;
    }
    break;
  }
  return i;
}

void ScanChunk(std::u32string_view text, size_t begin, size_t end,
               const AbbreviationList& abbreviations,
               std::vector<TokenSpan>& out) {
  size_t pos = begin;
  // Leading punctuation is detached first so "(z.B." still finds "z.B.".
  while (pos < end && !utf8::IsAlnum(text[pos])) {
    out.push_back({pos, pos + 1, false});
    ++pos;
  }
  if (pos == end) return;

  if (abbreviations.size() > 0) {
    size_t candidate_end = end;
    while (candidate_end > pos && text[candidate_end - 1] != '.' &&
           !utf8::IsAlnum(text[candidate_end - 1])) {
      --candidate_end;
    }
    if (candidate_end > pos && text[candidate_end - 1] == '.' &&
        abbreviations.Contains(
            utf8::Encode(text.substr(pos, candidate_end - pos)))) {
      out.push_back({pos, candidate_end, true});
      for (size_t i = candidate_end; i < end; ++i) {
        out.push_back({i, i + 1, false});
      }
      return;
    }
  }

  while (pos < end) {
    if (utf8::IsAlnum(text[pos])) {
      const size_t word_end = ScanWord(text, pos, end);
      out.push_back({pos, word_end, true});
      pos = word_end;
    } else {
      out.push_back({pos, pos + 1, false});
      ++pos;
    }
  }
}

std::string Trim(std::u32string_view text, size_t begin, size_t end) {
  while (begin < end && utf8::IsWhitespace(text[begin])) ++begin;
  while (end > begin && utf8::IsWhitespace(text[end - 1])) --end;
  return utf8::Encode(text.substr(begin, end - begin));
}

// Whether a '.' at `dot` closes an abbreviation or an ordinal number.
bool SuppressedPeriod(std::u32string_view text, size_t dot,
                      const AbbreviationList& abbreviations) {
  size_t start = dot;
  while (start > 0 && !utf8::IsWhitespace(text[start - 1])) --start;
  while (start < dot && IsOpeningMark(text[start])) ++start;
  if (start == dot) return false;
  bool all_digits = true;
  for (size_t i = start; i < dot; ++i) {
    if (!utf8::IsDigit(text[i])) {
      all_digits = false;
      break;
    }
  }
  if (all_digits) return true;
  return abbreviations.Contains(utf8::Encode(text.substr(start, dot + 1 - start)));
}

}  // namespace

const AbbreviationList& AbbreviationList::Default() {
  static const AbbreviationList* list =
      new AbbreviationList(FromText(internal::kDefaultAbbreviations));
  return *list;
}

AbbreviationList AbbreviationList::FromText(std::string_view text) {
  AbbreviationList list;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    size_t first = line.find_first_not_of(' ');
    if (first == std::string::npos || line[first] == '#') continue;
    list.entries_.insert(utf8::ToLower(line.substr(first)));
  }
  return list;
}

AbbreviationList AbbreviationList::FromFile(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read abbreviation list " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromText(buffer.str());
}

bool AbbreviationList::Contains(std::string_view token) const {
  return entries_.count(utf8::ToLower(token)) > 0;
}

std::vector<TokenSpan> ScanTokens(std::u32string_view text,
                                  const AbbreviationList& abbreviations) {
  std::vector<TokenSpan> out;
  size_t pos = 0;
  while (pos < text.size()) {
    if (utf8::IsWhitespace(text[pos])) {
      ++pos;
      continue;
    }
    size_t end = pos;
    while (end < text.size() && !utf8::IsWhitespace(text[end])) ++end;
    ScanChunk(text, pos, end, abbreviations, out);
    pos = end;
  }
  return out;
}

std::vector<std::string> Tokenize(std::string_view text,
                                  const AbbreviationList& abbreviations) {
  const std::u32string cps = utf8::Decode(text);
  std::vector<std::string> tokens;
  for (const TokenSpan& span : ScanTokens(cps, abbreviations)) {
    tokens.push_back(utf8::Encode(
        std::u32string_view(cps).substr(span.begin, span.end - span.begin)));
  }
  return tokens;
}

std::vector<std::string> SplitSentences(
    std::string_view text, const AbbreviationList& abbreviations) {
  const std::u32string cps = utf8::Decode(text);
  const std::u32string_view view(cps);
  std::vector<std::string> sentences;
  auto emit = [&](size_t begin, size_t end) {
    std::string sentence = Trim(view, begin, end);
    if (!sentence.empty()) sentences.push_back(std::move(sentence));
  };

  size_t start = 0;
  size_t i = 0;
  while (i < view.size()) {
    const char32_t c = view[i];
    if (c == '\n') {
      emit(start, i);
      start = ++i;
      continue;
    }
    if (!IsSentenceFinal(c)) {
      ++i;
      continue;
    }
    size_t j = i + 1;
    while (j < view.size() && IsSentenceFinal(view[j])) ++j;
    while (j < view.size() && IsClosingMark(view[j])) ++j;
    if (j == view.size()) {
      emit(start, j);
      start = i = j;
      continue;
    }
    if (!utf8::IsWhitespace(view[j])) {
      i = j;
      continue;
    }
    if (c == '.' && j == i + 1 && SuppressedPeriod(view, i, abbreviations)) {
      i = j;
      continue;
    }
    size_t k = j;
    while (k < view.size() && utf8::IsWhitespace(view[k]) && view[k] != '\n') {
      ++k;
    }
    while (k < view.size() && IsOpeningMark(view[k])) ++k;
    if (k < view.size() && utf8::IsUpper(view[k])) {
      emit(start, j);
      start = j;
    }
    i = j;
  }
  emit(start, view.size());
  return sentences;
}

TokenizedText Analyze(std::string_view text,
                      const AbbreviationList& abbreviations) {
  TokenizedText result;
  for (char c : text) {
    if (c == '\n') ++result.newline_count;
  }
  for (const std::string& sentence : SplitSentences(text, abbreviations)) {
    std::vector<std::string> tokens = Tokenize(sentence, abbreviations);
    if (tokens.empty()) continue;
    const size_t begin = result.tokens.size();
    for (auto& token : tokens) result.tokens.push_back(std::move(token));
    result.sentence_spans.push_back({begin, result.tokens.size()});
  }
  return result;
}

bool IsWordToken(std::string_view token) {
  for (char32_t cp : utf8::Decode(token)) {
    if (utf8::IsLetter(cp)) return true;
  }
  return false;
}

int CountSyllables(std::string_view word) {
  static constexpr std::u32string_view kVowels = U"aeiouäöüy";
  static constexpr std::u32string_view kGroups[] = {
      U"ei", U"ie", U"au", U"eu", U"äu", U"aa", U"ee", U"oo"};
  std::u32string cps = utf8::Decode(word);
  bool has_letter = false;
  for (char32_t& cp : cps) {
    has_letter = has_letter || utf8::IsLetter(cp);
    cp = utf8::ToLower(cp);
  }
  if (!has_letter) return 0;

  int groups = 0;
  size_t i = 0;
  while (i < cps.size()) {
    if (kVowels.find(cps[i]) == std::u32string_view::npos) {
      ++i;
      continue;
    }
    ++groups;
    size_t step = 1;
    if (i + 1 < cps.size()) {
      const std::u32string_view pair = std::u32string_view(cps).substr(i, 2);
      for (auto group : kGroups) {
        if (pair == group) {
          step = 2;
          break;
        }
      }
    }
    i += step;
  }
  return groups > 0 ? groups : 1;
}

double AmstadReadingEase(double avg_sentence_length, double avg_syllables) {
  return 180.0 - avg_sentence_length - 58.5 * avg_syllables;
}

namespace {

ReadabilityReport ReportFrom(const TokenizedText& analyzed) {
  ReadabilityReport report;
  for (const SentenceSpan& span : analyzed.sentence_spans) {
    size_t words = 0;
    for (size_t t = span.begin; t < span.end; ++t) {
      const std::string& token = analyzed.tokens[t];
      if (!IsWordToken(token)) continue;
      ++words;
      report.syllable_count += static_cast<size_t>(CountSyllables(token));
    }
    if (words > 0) ++report.sentence_count;
    report.word_count += words;
  }
  if (report.word_count == 0) return ReadabilityReport{};

  const auto words = static_cast<double>(report.word_count);
  const auto sentences = static_cast<double>(report.sentence_count);
  report.avg_sentence_length_words = words / sentences;
  report.avg_syllables_per_word =
      static_cast<double>(report.syllable_count) / words;
  report.fre = AmstadReadingEase(report.avg_sentence_length_words,
                                 report.avg_syllables_per_word);
  report.newlines_per_sentence =
      static_cast<double>(analyzed.newline_count) / sentences;
  return report;
}

}  // namespace

ReadabilityReport FleschReadingEase(std::string_view text,
                                    const AbbreviationList& abbreviations) {
  return ReportFrom(Analyze(text, abbreviations));
}

EasyLanguageReport EasyLanguageStats(std::string_view text,
                                     const AbbreviationList& abbreviations) {
  const TokenizedText analyzed = Analyze(text, abbreviations);
  EasyLanguageReport report;
  report.readability = ReportFrom(analyzed);
  report.newline_count = analyzed.newline_count;
  for (const std::string& token : analyzed.tokens) {
    if (token == ",") ++report.comma_count;
  }
  if (report.readability.sentence_count > 0) {
    report.commas_per_sentence =
        static_cast<double>(report.comma_count) /
        static_cast<double>(report.readability.sentence_count);
  }
  return report;
}

}  // namespace leichtkit
