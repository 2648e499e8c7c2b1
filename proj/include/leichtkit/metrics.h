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

// Simplification metrics: SARI, corpus BLEU-4 and ROUGE-L.
//
// All corpus scores are invariant under permutation of the instance list:
// per-instance values are combined in sorted order.

#ifndef LEICHTKIT_METRICS_H_
#define LEICHTKIT_METRICS_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leichtkit/ngram_lm.h"

namespace leichtkit {

struct EvalInstance {
  TokenSequence source;
  TokenSequence hypothesis;
  std::vector<TokenSequence> references;
};

// Tokenizes with the shared tokenizer and lowercases every token.
TokenSequence MetricTokens(std::string_view text);
EvalInstance MakeEvalInstance(std::string_view source,
                              std::string_view hypothesis,
                              std::span<const std::string> references);

using NgramMultiset = std::map<std::vector<std::string>, uint64_t>;

// All contiguous n-grams with multiplicity; empty when tokens.size() < n.
NgramMultiset ExtractNgrams(std::span<const std::string> tokens, int n);

size_t LcsLength(std::span<const std::string> a,
                 std::span<const std::string> b);

inline constexpr int kMaxNgramOrder = 4;
inline constexpr double kBleuEpsilon = 1e-9;

struct BleuScore {
  double bleu = 0.0;  // 0..100
  // Precisions entering the geometric mean (smoothed where applicable).
  std::array<double, kMaxNgramOrder> precisions{};
  std::array<uint64_t, kMaxNgramOrder> matches{};
  std::array<uint64_t, kMaxNgramOrder> totals{};
  double brevity_penalty = 0.0;
  uint64_t hypothesis_length = 0;
  uint64_t reference_length = 0;
  // Orders with at least one hypothesis n-gram in the corpus (at most 4).
  int effective_order = 0;
};

// Corpus BLEU-4 with clipped counts pooled over instances and the closest
// reference length (shorter on ties) for the brevity penalty. Orders without
// any hypothesis n-gram are left out of the geometric mean. A zero match
// count at order n > 1 is replaced by kBleuEpsilon; no unigram match at all
// gives BLEU 0. Throws ComputeError on an empty instance list.
BleuScore Bleu(std::span<const EvalInstance> instances);

struct RougeLScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Per instance the reference with the best LCS F1 (first on ties); macro
// average over instances.
RougeLScore RougeL(std::span<const EvalInstance> instances);
RougeLScore RougeLInstance(const EvalInstance& instance);

struct SariComponents {
  double keep = 0.0;    // F1, averaged over n = 1..4, in [0, 1]
  double add = 0.0;     // F1, averaged over n = 1..4, in [0, 1]
  double del = 0.0;     // precision, averaged over n = 1..4, in [0, 1]
};

// Degenerate 0/0 ratios count as 0, except for the keep component when
// source, hypothesis and every reference are identical, where they count as 1.
SariComponents SariInstance(const EvalInstance& instance);

struct SariScore {
  double sari = 0.0;    // (f_keep + f_add + p_del) / 3
  double f_keep = 0.0;  // 0..100
  double f_add = 0.0;   // 0..100
  double p_del = 0.0;   // 0..100
};

SariScore Sari(std::span<const EvalInstance> instances);

enum class Metric { kSari, kBleu, kRougeL };

// Parses a comma-separated list of "sari", "bleu", "rouge-l"/"rougeL".
std::vector<Metric> ParseMetrics(std::string_view list);

struct MetricReport {
  std::optional<SariScore> sari;
  std::optional<BleuScore> bleu;
  std::optional<RougeLScore> rouge_l;
  size_t instance_count = 0;
};

MetricReport Evaluate(std::span<const EvalInstance> instances,
                      std::span<const Metric> metrics);

}  // namespace leichtkit

#endif  // LEICHTKIT_METRICS_H_
