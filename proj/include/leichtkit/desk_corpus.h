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

// Synthetic, seeded German desk corpora with contrasting styles.
//
// Easy style: short main clauses in present tense, everyday vocabulary,
// hyphenated compounds, one sentence per line. Normal style: long sentences
// with subordinate and relative clauses, administrative vocabulary, closed
// compounds, several sentences per line. The complexity set mixes both
// styles plus an intermediate one and attaches a 1..7 label computed from
// the generating style and the word count, plus Gaussian noise.
//
// All randomness comes from std::mt19937_64 with explicit index and
// uniform draws, so the output is identical on every platform.

#ifndef LEICHTKIT_DESK_CORPUS_H_
#define LEICHTKIT_DESK_CORPUS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "leichtkit/complexity.h"

namespace leichtkit::desk {

struct Paragraph {
  std::string text;
  size_t sentence_count = 0;
};

std::vector<Paragraph> EasyParagraphs(size_t count, uint64_t seed);
std::vector<Paragraph> NormalParagraphs(size_t count, uint64_t seed);

std::vector<LabeledSentence> ComplexitySentences(size_t count, uint64_t seed);

}  // namespace leichtkit::desk

#endif  // LEICHTKIT_DESK_CORPUS_H_
