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

// Minimal UTF-8 helpers. Only the Latin-1 supplement and Latin Extended-A
// get case mappings, which is all German text needs.

#ifndef LEICHTKIT_UTF8_H_
#define LEICHTKIT_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace leichtkit::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

bool IsValid(std::string_view text);

// Decodes `text`; malformed sequences become U+FFFD.
std::u32string Decode(std::string_view text);

void Append(std::string& out, char32_t cp);
std::string Encode(std::u32string_view cps);

// Byte length of the sequence starting at text[pos] (1 for malformed bytes).
size_t SequenceLength(std::string_view text, size_t pos);

bool IsLetter(char32_t cp);
bool IsDigit(char32_t cp);
bool IsUpper(char32_t cp);
bool IsLower(char32_t cp);
bool IsWhitespace(char32_t cp);
bool IsAlnum(char32_t cp);

char32_t ToLower(char32_t cp);
char32_t ToUpper(char32_t cp);
std::string ToLower(std::string_view text);

}  // namespace leichtkit::utf8

#endif  // LEICHTKIT_UTF8_H_
