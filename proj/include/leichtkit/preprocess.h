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

// Corpus cleaning: markup stripping, bullet-list flattening and compound
// hyphenation.

#ifndef LEICHTKIT_PREPROCESS_H_
#define LEICHTKIT_PREPROCESS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace leichtkit {

struct Document {
  std::string id;
  std::string raw_text;
  std::optional<std::string> clean_text;
  std::map<std::string, std::string> meta;

  // Validates that `raw_text` is non-empty UTF-8; throws ConfigError.
  static Document Create(std::string id, std::string raw_text,
                         std::map<std::string, std::string> meta = {});

  // clean_text when present, raw_text otherwise.
  const std::string& text() const {
    return clean_text ? *clean_text : raw_text;
  }
};

// Removes HTML/XML tags (block-level tags become line breaks), comments and
// script/style bodies, decodes HTML entities (unknown named entities are
// dropped), removes URLs and www. tokens, drops control and zero-width
// characters, and collapses whitespace: a run containing a line break becomes
// one '\n', any other run one space. Lines are trimmed. Idempotent.
std::string StripMarkup(std::string_view raw);

// Replaces each run of consecutive bullet lines ("• ", "- ", "* ", "– ") by
// one comma-separated line. The joined items are appended to the preceding
// line when it ends with ':', and a final '.' is added unless the last item
// already ends in '.', '!' or '?'.
std::string ConvertBullets(std::string_view text);

// Maps a lowercase concatenated compound ("bundesland") to its canonical
// hyphenated spelling ("Bundes-Land").
class HyphenationLexicon {
 public:
  // Throws ConfigError unless `hyphenated` has internal hyphens only and
  // dehyphenates to `key`.
  void Insert(const std::string& key, const std::string& hyphenated,
              size_t count);

  const std::string* Find(std::string_view key) const;
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }

  const std::map<std::string, std::string, std::less<>>& entries() const {
    return entries_;
  }
  const std::map<std::string, size_t>& frequency() const { return frequency_; }

  // {"entries": {key: form}, "frequency": {form: count}}
  std::string ToJson() const;
  // Accepts the ToJson layout or a bare {key: form} map. Throws IoError.
  static HyphenationLexicon FromJson(std::string_view json);

 private:
  std::map<std::string, std::string, std::less<>> entries_;
  std::map<std::string, size_t> frequency_;
};

inline constexpr size_t kDefaultLexiconMinCount = 2;

// "Bundes-Land", "Easy-Language-Text": two or more letter-only segments, each
// of length two or more and starting uppercase.
bool IsHyphenatedCompound(std::string_view token);

// Lowercases and removes every '-'.
std::string DehyphenatedKey(std::string_view token);

// Incremental counting of hyphenated compound forms, for corpora that are
// streamed rather than held in memory.
class HyphenationCounter {
 public:
  void Add(std::string_view text);
  // Same selection rule as BuildHyphenationLexicon.
  HyphenationLexicon Build(size_t min_count = kDefaultLexiconMinCount) const;

 private:
  std::map<std::string, size_t> form_counts_;
};

// Counts hyphenated compounds over the documents' text(). Forms seen fewer
// than `min_count` times are ignored; among forms sharing a key the most
// frequent wins, ties going to the lexicographically smallest.
HyphenationLexicon BuildHyphenationLexicon(std::span<const Document> corpus,
                                           size_t min_count =
                                               kDefaultLexiconMinCount);

// Replaces whole, unhyphenated tokens whose lowercase form is a lexicon key.
// The first letter keeps the case of the original token. Single pass.
std::string ApplyHyphenation(std::string_view text,
                             const HyphenationLexicon& lexicon);

// StripMarkup, ConvertBullets, then ApplyHyphenation when a lexicon is given.
std::string PreprocessText(std::string_view raw,
                           const HyphenationLexicon* lexicon = nullptr);

// Returns a copy of `doc` whose clean_text is PreprocessText(doc.raw_text).
Document Preprocess(const Document& doc,
                    const HyphenationLexicon* lexicon = nullptr);

}  // namespace leichtkit

#endif  // LEICHTKIT_PREPROCESS_H_
