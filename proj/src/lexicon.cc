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

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "leichtkit/errors.h"
#include "leichtkit/preprocess.h"
#include "leichtkit/textstats.h"
#include "leichtkit/utf8.h"

namespace leichtkit {
namespace {

bool HasValidHyphenation(std::string_view form) {
  return form.find('-') != std::string_view::npos && form.front() != '-' &&
         form.back() != '-' && form.find("--") == std::string_view::npos;
}

}  // namespace

bool IsHyphenatedCompound(std::string_view token) {
  if (!HasValidHyphenation(token)) return false;
  const std::u32string cps = utf8::Decode(token);
  size_t segment_length = 0;
  for (size_t i = 0; i <= cps.size(); ++i) {
    if (i == cps.size() || cps[i] == '-') {
      if (segment_length < 2) return false;
      segment_length = 0;
      continue;
    }
    if (!utf8::IsLetter(cps[i])) return false;
    if (segment_length == 0 && !utf8::IsUpper(cps[i])) return false;
    ++segment_length;
  }
  return true;
}

std::string DehyphenatedKey(std::string_view token) {
  std::string joined;
  joined.reserve(token.size());
  for (char c : token) {
    if (c != '-') joined.push_back(c);
  }
  return utf8::ToLower(joined);
}

void HyphenationLexicon::Insert(const std::string& key,
                                const std::string& hyphenated, size_t count) {
  if (!HasValidHyphenation(hyphenated) || DehyphenatedKey(hyphenated) != key) {
    throw ConfigError("invalid lexicon entry '" + key + "' -> '" + hyphenated +
                      "'");
  }
  auto it = entries_.find(key);
  if (it != entries_.end()) frequency_.erase(it->second);
  entries_[key] = hyphenated;
  frequency_[hyphenated] = count;
}

const std::string* HyphenationLexicon::Find(std::string_view key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string HyphenationLexicon::ToJson() const {
  nlohmann::ordered_json json;
  json["entries"] = nlohmann::ordered_json::object();
  for (const auto& [key, form] : entries_) json["entries"][key] = form;
  json["frequency"] = nlohmann::ordered_json::object();
  for (const auto& [form, count] : frequency_) json["frequency"][form] = count;
  return json.dump(2);
}

HyphenationLexicon HyphenationLexicon::FromJson(std::string_view text) {
  nlohmann::json json;
  try {
    json = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(std::string("malformed lexicon JSON: ") + e.what());
  }
  if (!json.is_object()) throw IoError("lexicon JSON must be an object");
  const bool wrapped = json.contains("entries") && json["entries"].is_object();
  const nlohmann::json& entries = wrapped ? json["entries"] : json;
  HyphenationLexicon lexicon;
  for (const auto& [key, value] : entries.items()) {
    if (!value.is_string()) throw IoError("lexicon value for '" + key + "' is not a string");
    const std::string form = value.get<std::string>();
    size_t count = 1;
    if (wrapped && json.contains("frequency") && json["frequency"].contains(form)) {
      count = json["frequency"][form].get<size_t>();
    }
    try {
      lexicon.Insert(key, form, count);
    } catch (const ConfigError& e) {
      throw IoError(e.what());
    }
  }
  return lexicon;
}

void HyphenationCounter::Add(std::string_view text) {
  for (const std::string& token : Tokenize(text)) {
    if (IsHyphenatedCompound(token)) ++form_counts_[token];
  }
}

HyphenationLexicon HyphenationCounter::Build(size_t min_count) const {
  if (min_count < 1) throw ConfigError("min_count must be at least 1");
  // key -> (count, form) of the current winner
  std::map<std::string, std::pair<size_t, std::string>> best;
  for (const auto& [form, count] : form_counts_) {
    if (count < min_count) continue;
    const std::string key = DehyphenatedKey(form);
    auto it = best.find(key);
    // form_counts_ iterates in ascending order, so on equal counts the
    // earlier (smaller) form is already in place.
    if (it == best.end() || count > it->second.first) {
      best[key] = {count, form};
    }
  }

  HyphenationLexicon lexicon;
  for (const auto& [key, winner] : best) {
    lexicon.Insert(key, winner.second, winner.first);
  }
  return lexicon;
}

HyphenationLexicon BuildHyphenationLexicon(std::span<const Document> corpus,
                                           size_t min_count) {
  if (min_count < 1) throw ConfigError("min_count must be at least 1");
  HyphenationCounter counter;
  for (const Document& doc : corpus) counter.Add(doc.text());
  return counter.Build(min_count);
}

std::string ApplyHyphenation(std::string_view text,
                             const HyphenationLexicon& lexicon) {
  const std::u32string cps = utf8::Decode(text);
  const std::u32string_view view(cps);
  std::u32string out;
  out.reserve(cps.size() + 16);
  size_t copied = 0;
  for (const TokenSpan& span : ScanTokens(view)) {
    if (!span.is_word) continue;
    const std::u32string_view token = view.substr(span.begin, span.end - span.begin);
    if (token.find(U'-') != std::u32string_view::npos) continue;
    const std::string* form = lexicon.Find(utf8::ToLower(utf8::Encode(token)));
    if (form == nullptr) continue;

    std::u32string replacement = utf8::Decode(*form);
    if (utf8::IsUpper(token.front())) {
      replacement.front() = utf8::ToUpper(replacement.front());
    } else if (utf8::IsLower(token.front())) {
      replacement.front() = utf8::ToLower(replacement.front());
    }
    out.append(view.substr(copied, span.begin - copied));
    out.append(replacement);
    copied = span.end;
  }
  out.append(view.substr(copied));
  return utf8::Encode(out);
}

}  // namespace leichtkit
