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

// Smoothed n-gram language models and sample-wise perplexity.

#ifndef LEICHTKIT_NGRAM_LM_H_
#define LEICHTKIT_NGRAM_LM_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace leichtkit {

using TokenSequence = std::vector<std::string>;
using NgramKey = std::vector<uint32_t>;

struct NgramKeyHash {
  size_t operator()(const NgramKey& key) const noexcept;
};

using NgramCounts = std::unordered_map<NgramKey, uint64_t, NgramKeyHash>;

enum class Smoothing : uint8_t { kWittenBell = 0, kKneserNey = 1 };

std::string_view SmoothingName(Smoothing smoothing);
// Accepts "witten-bell"/"witten_bell" and "kneser-ney"/"kneser_ney".
Smoothing ParseSmoothing(std::string_view name);

struct NgramOptions {
  int order = 3;
  Smoothing smoothing = Smoothing::kKneserNey;
  double discount = 0.75;  // Kneser-Ney only
  uint64_t min_vocab_count = 2;
};

// Interpolated n-gram model. Every training sequence is padded with
// order-1 "<s>" and one "</s>"; "<s>" is never predicted, so conditional
// distributions range over the remaining vocabulary, "<unk>" and "</s>"
// included. Immutable after training and safe to share across threads.
class NgramModel {
 public:
  static constexpr uint32_t kUnkId = 0;
  static constexpr uint32_t kBosId = 1;
  static constexpr uint32_t kEosId = 2;
  static constexpr std::string_view kUnk = "<unk>";
  static constexpr std::string_view kBos = "<s>";
  static constexpr std::string_view kEos = "</s>";
  static constexpr uint8_t kFormatVersion = 1;

  // Throws ConfigError for bad options and ComputeError for an empty corpus.
  static NgramModel Train(std::span<const TokenSequence> corpus,
                          const NgramOptions& options = {});

  // Parses the "NGLM" binary format written by Serialize. Throws IoError on
  // bad magic, unsupported version, truncation or checksum mismatch.
  static NgramModel Deserialize(std::string_view bytes);
  std::string Serialize() const;

  int order() const { return options_.order; }
  Smoothing smoothing() const { return options_.smoothing; }
  double discount() const { return options_.discount; }
  uint64_t min_vocab_count() const { return options_.min_vocab_count; }
  uint64_t trained_tokens() const { return trained_tokens_; }

  size_t vocab_size() const { return words_.size(); }
  // Vocabulary without "<s>".
  size_t predictable_vocab_size() const { return words_.size() - 1; }
  const std::string& word(uint32_t id) const { return words_[id]; }
  // Unknown and reserved-but-unpredictable tokens map to kUnkId.
  uint32_t id(std::string_view token) const;

  // Free-form text stored alongside the model (e.g. the training
  // configuration as JSON).
  const std::string& metadata() const { return metadata_; }
  void set_metadata(std::string metadata) { metadata_ = std::move(metadata); }

  // Raw counts of all n-grams of length n (1..order) in the padded corpus.
  const NgramCounts& counts(int n) const { return counts_[n - 1]; }

  // p(word | context); the context holds the preceding ids, most recent
  // last. Only the last order-1 entries are used; shorter contexts are
  // left-padded with "<s>".
  double Probability(std::span<const uint32_t> context, uint32_t word) const;

  // Natural-log probability of each predicted position, "</s>" included.
  std::vector<double> PositionLogProbs(const TokenSequence& tokens) const;
  // Sum of PositionLogProbs; always <= 0.
  double LogProb(const TokenSequence& tokens) const;

 private:
  struct ContextStats {
    double total = 0.0;  // sum of effective successor counts
    double types = 0.0;  // number of successors with a nonzero count
  };

  NgramModel() = default;
  void BuildProbabilityTables();

  NgramOptions options_;
  uint64_t trained_tokens_ = 0;
  std::vector<std::string> words_;
  std::unordered_map<std::string, uint32_t> index_;
  std::vector<NgramCounts> counts_;
  std::string metadata_;

  // Per level: effective counts (raw, or continuation counts on the lower
  // Kneser-Ney levels) and per-context totals.
  std::vector<std::unordered_map<NgramKey, double, NgramKeyHash>> effective_;
  std::vector<std::unordered_map<NgramKey, ContextStats, NgramKeyHash>>
      context_stats_;
};

// exp(-LogProb / N) with N = tokens + 1 for "</s>". Throws ComputeError on an
// empty sample.
double Perplexity(const NgramModel& model, const TokenSequence& sample);

struct Sample {
  std::string id;
  TokenSequence tokens;
};

struct SampleScore {
  std::string id;
  double ppl = 0.0;
  size_t token_count = 0;
  double log_prob = 0.0;
};

struct PerplexityResult {
  std::vector<SampleScore> per_sample;
  double mean_ppl = 0.0;    // arithmetic mean of per-sample perplexities
  double pooled_ppl = 0.0;  // all predicted positions pooled, for comparison
  std::string model_id;
};

// Scores samples on up to `threads` workers; the result does not depend on
// the thread count. Throws ComputeError naming the first empty sample.
PerplexityResult CorpusPerplexity(const NgramModel& model,
                                  std::span<const Sample> samples,
                                  std::string model_id, size_t threads = 1);

enum class StyleLabel { kEasy, kNormal };

std::string_view StyleLabelName(StyleLabel label);

struct StyleDecision {
  StyleLabel label = StyleLabel::kNormal;
  double easy_ppl = 0.0;
  double normal_ppl = 0.0;
};

// Easy iff the easy-style model has strictly lower perplexity; ties are
// labeled normal.
StyleDecision DiscriminateStyle(const NgramModel& easy_model,
                                const NgramModel& normal_model,
                                const TokenSequence& text);

}  // namespace leichtkit

#endif  // LEICHTKIT_NGRAM_LM_H_
