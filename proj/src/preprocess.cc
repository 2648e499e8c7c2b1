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

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <utility>
#include <vector>

#include "leichtkit/errors.h"
#include "leichtkit/utf8.h"

namespace leichtkit {
namespace {

constexpr int kMaxStripPasses = 16;

struct NamedEntity {
  std::string_view name;
  char32_t code_point;
};

constexpr std::array<NamedEntity, 62> kEntities = {{
    {"amp", '&'},       {"lt", '<'},         {"gt", '>'},
    {"quot", '"'},      {"apos", '\''},      {"nbsp", 0xA0},
    {"auml", 0xE4},     {"ouml", 0xF6},      {"uuml", 0xFC},
    {"Auml", 0xC4},     {"Ouml", 0xD6},      {"Uuml", 0xDC},
    {"szlig", 0xDF},    {"euro", 0x20AC},    {"ndash", 0x2013},
    {"mdash", 0x2014},  {"bdquo", 0x201E},   {"ldquo", 0x201C},
    {"rdquo", 0x201D},  {"lsquo", 0x2018},   {"rsquo", 0x2019},
    {"sbquo", 0x201A},  {"laquo", 0xAB},     {"raquo", 0xBB},
    {"lsaquo", 0x2039}, {"rsaquo", 0x203A},  {"hellip", 0x2026},
    {"shy", 0xAD},      {"bull", 0x2022},    {"middot", 0xB7},
    {"copy", 0xA9},     {"reg", 0xAE},       {"trade", 0x2122},
    {"sect", 0xA7},     {"deg", 0xB0},       {"para", 0xB6},
    {"times", 0xD7},    {"divide", 0xF7},    {"plusmn", 0xB1},
    {"frac12", 0xBD},   {"frac14", 0xBC},    {"frac34", 0xBE},
    {"sup2", 0xB2},     {"sup3", 0xB3},      {"micro", 0xB5},
    {"eacute", 0xE9},   {"egrave", 0xE8},    {"ecirc", 0xEA},
    {"aacute", 0xE1},   {"agrave", 0xE0},    {"acirc", 0xE2},
    {"ccedil", 0xE7},   {"Eacute", 0xC9},    {"oacute", 0xF3},
    {"iacute", 0xED},   {"uacute", 0xFA},    {"ntilde", 0xF1},
    {"thinsp", 0x2009}, {"ensp", 0x2002},    {"emsp", 0x2003},
    {"zwnj", 0x200C},   {"zwj", 0x200D},
}};

constexpr std::array<std::string_view, 28> kBlockTags = {
    "address", "article", "aside", "blockquote", "br",     "dd", "div",
    "dl",      "dt",      "footer", "h1",        "h2",     "h3", "h4",
    "h5",      "h6",      "header", "hr",        "li",     "nav", "ol",
    "p",       "pre",     "section", "table",    "title",  "tr", "ul",
};

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool StartsWithIgnoreCase(std::string_view text, size_t pos,
                          std::string_view prefix) {
  if (text.size() - pos < prefix.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[pos + i])) != prefix[i]) {
      return false;
    }
  }
  return true;
}

std::string LowerAscii(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Decodes the entity at text[pos] == '&'. Returns the byte length consumed
// (0 when there is no entity) and sets `cp` (0 means "drop").
size_t DecodeEntity(std::string_view text, size_t pos, char32_t* cp) {
  size_t i = pos + 1;
  if (i < text.size() && text[i] == '#') {
    ++i;
    int base = 10;
    if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
      base = 16;
      ++i;
    }
    const size_t digits_begin = i;
    const size_t max_digits = base == 16 ? 6 : 7;
    while (i < text.size() && i - digits_begin < max_digits &&
           std::isxdigit(static_cast<unsigned char>(text[i])) &&
           (base == 16 || std::isdigit(static_cast<unsigned char>(text[i])))) {
      ++i;
    }
    if (i == digits_begin || i >= text.size() || text[i] != ';') return 0;
    uint32_t value = 0;
    std::from_chars(text.data() + digits_begin, text.data() + i, value, base);
    const bool valid = value > 0 && value <= 0x10FFFF &&
                       !(value >= 0xD800 && value <= 0xDFFF);
    *cp = valid ? static_cast<char32_t>(value) : 0;
    return i + 1 - pos;
  }
  const size_t name_begin = i;
  if (i >= text.size() || !IsAsciiAlpha(text[i])) return 0;
  while (i < text.size() && i - name_begin < 32 &&
         std::isalnum(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  if (i >= text.size() || text[i] != ';') return 0;
  const std::string_view name = text.substr(name_begin, i - name_begin);
  *cp = 0;
  for (const auto& entity : kEntities) {
    if (entity.name == name) {
      *cp = entity.code_point;
      break;
    }
  }
  return i + 1 - pos;
}

// End of the tag starting at text[pos] == '<', or npos.
size_t TagEnd(std::string_view text, size_t pos) {
  if (pos + 1 >= text.size()) return std::string_view::npos;
  const char next = text[pos + 1];
  if (!IsAsciiAlpha(next) && next != '/' && next != '!' && next != '?') {
    return std::string_view::npos;
  }
  for (size_t i = pos + 1; i < text.size(); ++i) {
    if (text[i] == '>') return i + 1;
    if (text[i] == '<') return std::string_view::npos;
  }
  return std::string_view::npos;
}

std::string TagName(std::string_view tag) {
  size_t i = 1;
  if (i < tag.size() && tag[i] == '/') ++i;
  const size_t begin = i;
  while (i < tag.size() && std::isalnum(static_cast<unsigned char>(tag[i]))) {
    ++i;
  }
  return LowerAscii(tag.substr(begin, i - begin));
}

// End of a <script> or <style> element starting at `pos`, or npos.
size_t RawTextElementEnd(std::string_view text, size_t pos) {
  for (std::string_view name : {"script", "style"}) {
    if (!StartsWithIgnoreCase(text, pos + 1, name)) continue;
    const size_t after = pos + 1 + name.size();
    if (after < text.size() && IsAsciiAlpha(text[after])) continue;
    const std::string closing = "</" + std::string(name);
    const size_t close = LowerAscii(text.substr(pos)).find(closing);
    if (close == std::string::npos) continue;
    return TagEnd(text, pos + close);
  }
  return std::string_view::npos;
}

// Tags, comments, script/style bodies and entities.
std::string RemoveMarkup(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '<') {
      if (text.compare(pos, 4, "<!--") == 0) {
        const size_t close = text.find("-->", pos + 4);
        if (close != std::string_view::npos) {
          pos = close + 3;
          continue;
        }
      }
      if (const size_t end = RawTextElementEnd(text, pos);
          end != std::string_view::npos) {
        out.push_back('\n');
        pos = end;
        continue;
      }
      {
        const size_t end = TagEnd(text, pos);
        if (end != std::string_view::npos) {
          const std::string name = TagName(text.substr(pos, end - pos));
          if (std::find(kBlockTags.begin(), kBlockTags.end(), name) !=
              kBlockTags.end()) {
            out.push_back('\n');
          } else if (name == "td" || name == "th") {
            out.push_back(' ');
          }
          pos = end;
          continue;
        }
      }
    } else if (c == '&') {
      char32_t cp = 0;
      const size_t len = DecodeEntity(text, pos, &cp);
      if (len > 0) {
        if (cp != 0) utf8::Append(out, cp);
        pos += len;
        continue;
      }
    }
    out.push_back(c);
    ++pos;
  }
  return out;
}

bool IsUrlBoundary(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v' || c == '(' || c == '[' || c == '"' || c == '\'' ||
         c == '<';
}

bool IsTrailingUrlPunct(char c) {
  return c == '.' || c == ',' || c == ';' || c == ':' || c == '!' ||
         c == '?' || c == ')' || c == ']' || c == '}' || c == '"' ||
         c == '\'';
}

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string RemoveUrls(std::string_view text) {
  static constexpr std::array<std::string_view, 3> kPrefixes = {
      "http://", "https://", "www."};
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    if (pos == 0 || IsUrlBoundary(text[pos - 1])) {
      size_t prefix_len = 0;
      for (auto prefix : kPrefixes) {
        if (StartsWithIgnoreCase(text, pos, prefix)) {
          prefix_len = prefix.size();
          break;
        }
      }
      if (prefix_len > 0) {
        size_t end = pos;
        while (end < text.size() && !IsAsciiSpace(text[end])) ++end;
        while (end > pos + prefix_len && IsTrailingUrlPunct(text[end - 1])) {
          --end;
        }
        pos = end;
        continue;
      }
    }
    out.push_back(text[pos]);
    ++pos;
  }
  return out;
}

bool IsDropped(char32_t cp) {
  if (cp < 0x20) return !utf8::IsWhitespace(cp);
  if (cp >= 0x7F && cp <= 0x9F) return cp != 0x85;
  switch (cp) {
    case 0xAD:
    case 0x200B:
    case 0x200C:
    case 0x200D:
    case 0x2060:
    case 0xFEFF:
    case utf8::kReplacement:
      return true;
    default:
      return false;
  }
}

bool IsLineBreak(char32_t cp) {
  return cp == '\n' || cp == '\r' || cp == 0x85 || cp == 0x2028 ||
         cp == 0x2029 || cp == '\v' || cp == '\f';
}

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool pending_break = false;
  for (char32_t cp : utf8::Decode(text)) {
    if (IsDropped(cp)) continue;
    if (utf8::IsWhitespace(cp)) {
      pending_space = true;
      pending_break = pending_break || IsLineBreak(cp);
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(pending_break ? '\n' : ' ');
    pending_space = pending_break = false;
    utf8::Append(out, cp);
  }
  return out;
}

std::string StripOnce(std::string_view text) {
  return NormalizeWhitespace(RemoveUrls(RemoveMarkup(text)));
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (true) {
    const size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      return lines;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
}

constexpr std::array<std::string_view, 4> kBulletMarkers = {"•", "-", "*",
                                                            "–"};

std::string_view TrimSpaces(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Length of "marker + space" at the start of `line`, or 0.
size_t BulletPrefix(std::string_view line) {
  for (auto marker : kBulletMarkers) {
    if (line.size() > marker.size() && line.substr(0, marker.size()) == marker &&
        line[marker.size()] == ' ') {
      return marker.size() + 1;
    }
  }
  return 0;
}

bool IsBulletLine(std::string_view line) {
  return BulletPrefix(TrimSpaces(line)) > 0;
}

std::string_view BulletItem(std::string_view line) {
  std::string_view item = TrimSpaces(line);
  while (size_t prefix = BulletPrefix(item)) {
    item = TrimSpaces(item.substr(prefix));
  }
  while (!item.empty() &&
         (item.back() == ',' || item.back() == ';' || item.back() == '.')) {
    item.remove_suffix(1);
    item = TrimSpaces(item);
  }
  return item;
}

bool EndsSentence(std::string_view s) {
  return !s.empty() && (s.back() == '.' || s.back() == '!' || s.back() == '?');
}

}  // namespace

Document Document::Create(std::string id, std::string raw_text,
                          std::map<std::string, std::string> meta) {
  if (raw_text.empty()) {
    throw ConfigError("document '" + id + "' has empty text");
  }
  if (!utf8::IsValid(raw_text)) {
    throw ConfigError("document '" + id + "' is not valid UTF-8");
  }
  return Document{std::move(id), std::move(raw_text), std::nullopt,
                  std::move(meta)};
}

std::string StripMarkup(std::string_view raw) {
  std::string current = StripOnce(raw);
  for (int pass = 1; pass < kMaxStripPasses; ++pass) {
    std::string next = StripOnce(current);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

std::string ConvertBullets(std::string_view text) {
  const std::vector<std::string_view> lines = SplitLines(text);
  std::vector<std::string> out;
  size_t i = 0;
  while (i < lines.size()) {
    if (!IsBulletLine(lines[i])) {
      out.emplace_back(lines[i]);
      ++i;
      continue;
    }
    std::string joined;
    for (; i < lines.size() && IsBulletLine(lines[i]); ++i) {
      const std::string_view item = BulletItem(lines[i]);
      if (item.empty()) continue;
      if (!joined.empty()) joined += ", ";
      joined += item;
    }
    if (joined.empty()) continue;
    if (!EndsSentence(joined)) joined.push_back('.');
    if (!out.empty() && !TrimSpaces(out.back()).empty() &&
        TrimSpaces(out.back()).back() == ':') {
      out.back() = std::string(TrimSpaces(out.back())) + " " + joined;
    } else {
      out.push_back(std::move(joined));
    }
  }
  std::string result;
  for (size_t k = 0; k < out.size(); ++k) {
    if (k > 0) result.push_back('\n');
    result += out[k];
  }
  return result;
}

std::string PreprocessText(std::string_view raw,
                           const HyphenationLexicon* lexicon) {
  std::string text = ConvertBullets(StripMarkup(raw));
  if (lexicon != nullptr && !lexicon->empty()) {
    text = ApplyHyphenation(text, *lexicon);
  }
  return text;
}

Document Preprocess(const Document& doc, const HyphenationLexicon* lexicon) {
  Document out = doc;
  out.clean_text = PreprocessText(doc.raw_text, lexicon);
  return out;
}

}  // namespace leichtkit
