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

// Seeded, reproducible corpus splitting.
//
// The shuffle is a Fisher-Yates pass driven by std::mt19937_64 seeded with
// the user seed. For i = n-1 down to 1 the swap partner j is drawn as
// x mod (i+1), where x is the next 64-bit output, redrawn while
// x >= 2^64 - (2^64 mod (i+1)) so that j is unbiased. Any implementation
// reproducing this stream produces identical splits.

#ifndef LEICHTKIT_SPLIT_H_
#define LEICHTKIT_SPLIT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "leichtkit/preprocess.h"

namespace leichtkit {

// Permutation of 0..n-1.
std::vector<size_t> SeededPermutation(size_t n, uint64_t seed);

// Validates split ratios: two or three entries, each in (0, 1], summing to
// one within 1e-9. Throws ConfigError.
void ValidateRatios(std::span<const double> ratios);

// Shuffles 0..n-1 and cuts it into contiguous parts at
// round(n * cumulative_ratio). Throws ConfigError for bad ratios or when
// n is smaller than the number of parts.
std::vector<std::vector<size_t>> SplitIndices(size_t n,
                                              std::span<const double> ratios,
                                              uint64_t seed);

struct CorpusSplit {
  std::vector<Document> train;
  std::vector<Document> validation;
  std::optional<std::vector<Document>> test;
  uint64_t seed = 0;
  std::vector<double> ratios;
};

CorpusSplit SplitCorpus(std::span<const Document> docs,
                        std::span<const double> ratios, uint64_t seed);

}  // namespace leichtkit

#endif  // LEICHTKIT_SPLIT_H_
