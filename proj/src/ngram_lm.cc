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

#include "leichtkit/ngram_lm.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <map>
#include <set>

#include "leichtkit/errors.h"
#include "leichtkit/parallel.h"

namespace leichtkit {
namespace {

constexpr char kMagic[4] = {'N', 'G', 'L', 'M'};
constexpr int kMaxOrder = 5;

bool IsReserved(std::string_view token) {
  return token == NgramModel::kUnk || token == NgramModel::kBos ||
         token == NgramModel::kEos;
}

uint64_t Fnv1a(std::string_view bytes) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

class Writer {
 public:
  template <typename T>
  void Put(T value) {
    static_assert(std::endian::native == std::endian::little);
    char buf[sizeof(T)];
    std::memcpy(buf, &value, sizeof(T));
    out_.append(buf, sizeof(T));
  }
  void PutString(std::string_view s) {
    Put<uint32_t>(static_cast<uint32_t>(s.size()));
    out_.append(s);
  }
  void PutRaw(std::string_view s) { out_.append(s); }
  std::string& bytes() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}
  template <typename T>
  T Get() {
    Need(sizeof(T));
    T value;
    std::memcpy(&value, in_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return value;
  }
  std::string GetString() {
    const auto size = Get<uint32_t>();
    Need(size);
    std::string s(in_.substr(pos_, size));
    pos_ += size;
    return s;
  }
  size_t remaining() const { return in_.size() - pos_; }

 private:
  void Need(size_t n) const {
    if (in_.size() - pos_ < n) throw IoError("model file is truncated");
  }
  std::string_view in_;
  size_t pos_ = 0;
};

void ValidateOptions(const NgramOptions& options) {
  if (options.order < 1 || options.order > kMaxOrder) {
    throw ConfigError("n-gram order must be in [1, 5], got " +
                      std::to_string(options.order));
  }
  if (options.smoothing == Smoothing::kKneserNey &&
      !(options.discount > 0.0 && options.discount < 1.0)) {
    throw ConfigError("Kneser-Ney discount must be in (0, 1), got " +
                      std::to_string(options.discount));
  }
  if (options.min_vocab_count < 1) {
    throw ConfigError("min_vocab_count must be at least 1");
  }
}

}  // namespace

size_t NgramKeyHash::operator()(const NgramKey& key) const noexcept {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (uint32_t id : key) {
    hash ^= id;
    hash *= 0x100000001b3ULL;
  }
  return static_cast<size_t>(hash);
}

std::string_view SmoothingName(Smoothing smoothing) {
  return smoothing == Smoothing::kWittenBell ? "witten-bell" : "kneser-ney";
}

Smoothing ParseSmoothing(std::string_view name) {
  if (name == "witten-bell" || name == "witten_bell") {
    return Smoothing::kWittenBell;
  }
  if (name == "kneser-ney" || name == "kneser_ney") {
    return Smoothing::kKneserNey;
  }
  throw ConfigError("unknown smoothing '" + std::string(name) +
                    "' (expected witten-bell or kneser-ney)");
}

NgramModel NgramModel::Train(std::span<const TokenSequence> corpus,
                             const NgramOptions& options) {
  ValidateOptions(options);
  if (corpus.empty()) throw ComputeError("cannot train on an empty corpus");

  NgramModel model;
  model.options_ = options;

  std::map<std::string, uint64_t> frequencies;
  for (const TokenSequence& sequence : corpus) {
    for (const std::string& token : sequence) {
      if (!IsReserved(token)) ++frequencies[token];
    }
    model.trained_tokens_ += sequence.size();
  }
  model.words_ = {std::string(kUnk), std::string(kBos), std::string(kEos)};
  for (const auto& [token, count] : frequencies) {
    if (count >= options.min_vocab_count) model.words_.push_back(token);
  }
  for (uint32_t i = 0; i < model.words_.size(); ++i) {
    model.index_.emplace(model.words_[i], i);
  }

  const int order = options.order;
  model.counts_.assign(static_cast<size_t>(order), NgramCounts{});
  std::vector<uint32_t> padded;
  for (const TokenSequence& sequence : corpus) {
    padded.assign(static_cast<size_t>(order - 1), kBosId);
    for (const std::string& token : sequence) padded.push_back(model.id(token));
    padded.push_back(kEosId);
    for (size_t end = 1; end <= padded.size(); ++end) {
      for (int n = 1; n <= order && static_cast<size_t>(n) <= end; ++n) {
        NgramKey key(padded.begin() + static_cast<std::ptrdiff_t>(end - n),
                     padded.begin() + static_cast<std::ptrdiff_t>(end));
        ++model.counts_[n - 1][key];
      }
    }
  }
  model.BuildProbabilityTables();
  return model;
}

void NgramModel::BuildProbabilityTables() {
  const int order = options_.order;
  effective_.assign(static_cast<size_t>(order), {});
  context_stats_.assign(static_cast<size_t>(order), {});
  const bool kneser_ney = options_.smoothing == Smoothing::kKneserNey;

  for (int n = 1; n <= order; ++n) {
    auto& effective = effective_[n - 1];
    if (kneser_ney && n < order) {
      // Continuation counts: number of distinct left extensions.
      for (const auto& [key, count] : counts_[n]) {
        if (key.back() == kBosId) continue;
        NgramKey suffix(key.begin() + 1, key.end());
        effective[suffix] += 1.0;
      }
    } else {
      for (const auto& [key, count] : counts_[n - 1]) {
        if (key.back() == kBosId) continue;
        effective[key] = static_cast<double>(count);
      }
    }
    auto& stats = context_stats_[n - 1];
    for (const auto& [key, count] : effective) {
      NgramKey context(key.begin(), key.end() - 1);
      ContextStats& s = stats[context];
      s.total += count;
      s.types += 1.0;
    }
  }
}

uint32_t NgramModel::id(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end() || it->second == kBosId) return kUnkId;
  return it->second;
}

double NgramModel::Probability(std::span<const uint32_t> context,
                               uint32_t word) const {
  if (word == kBosId || word >= words_.size()) return 0.0;
  const int order = options_.order;
  const bool kneser_ney = options_.smoothing == Smoothing::kKneserNey;
  const double discount = options_.discount;

  NgramKey history(static_cast<size_t>(order - 1), kBosId);
  const size_t take = std::min(context.size(), history.size());
  std::copy(context.end() - static_cast<std::ptrdiff_t>(take), context.end(),
            history.end() - static_cast<std::ptrdiff_t>(take));

  double p = 1.0 / static_cast<double>(predictable_vocab_size());
  NgramKey key;
  for (int n = 1; n <= order; ++n) {
    key.assign(history.end() - (n - 1), history.end());
    auto stats = context_stats_[n - 1].find(key);
    if (stats == context_stats_[n - 1].end()) continue;
    const ContextStats& s = stats->second;
    key.push_back(word);
    auto it = effective_[n - 1].find(key);
    const double count = it == effective_[n - 1].end() ? 0.0 : it->second;
    if (kneser_ney) {
      p = std::max(count - discount, 0.0) / s.total +
          discount * s.types / s.total * p;
    } else {
      p = (count + s.types * p) / (s.total + s.types);
    }
  }
  return p;
}

std::vector<double> NgramModel::PositionLogProbs(
    const TokenSequence& tokens) const {
  std::vector<uint32_t> ids;
  ids.reserve(tokens.size() + 1);
  for (const std::string& token : tokens) ids.push_back(id(token));
  ids.push_back(kEosId);
  std::vector<double> out;
  out.reserve(ids.size());
  for (size_t i = 0; i < ids.size(); ++i) {
    out.push_back(std::log(
        Probability(std::span<const uint32_t>(ids.data(), i), ids[i])));
  }
  return out;
}

double NgramModel::LogProb(const TokenSequence& tokens) const {
  double total = 0.0;
  for (double lp : PositionLogProbs(tokens)) total += lp;
  return total;
}

std::string NgramModel::Serialize() const {
  Writer w;
  w.PutRaw(std::string_view(kMagic, 4));
  w.Put<uint8_t>(kFormatVersion);
  w.Put<uint8_t>(static_cast<uint8_t>(options_.smoothing));
  w.Put<uint8_t>(static_cast<uint8_t>(options_.order));
  w.Put<double>(options_.discount);
  w.Put<uint64_t>(options_.min_vocab_count);
  w.Put<uint64_t>(trained_tokens_);
  w.PutString(metadata_);
  w.Put<uint32_t>(static_cast<uint32_t>(words_.size()));
  for (const std::string& word : words_) w.PutString(word);
  for (int n = 1; n <= options_.order; ++n) {
    std::vector<std::pair<NgramKey, uint64_t>> sorted(counts_[n - 1].begin(),
                                                      counts_[n - 1].end());
    std::sort(sorted.begin(), sorted.end());
    w.Put<uint64_t>(sorted.size());
    for (const auto& [key, count] : sorted) {
      for (uint32_t id : key) w.Put<uint32_t>(id);
      w.Put<uint64_t>(count);
    }
  }
  w.Put<uint64_t>(Fnv1a(w.bytes()));
  return std::move(w.bytes());
}

NgramModel NgramModel::Deserialize(std::string_view bytes) {
  if (bytes.size() < 5 || bytes.substr(0, 4) != std::string_view(kMagic, 4)) {
    throw IoError("not an NGLM model file (bad magic)");
  }
  if (static_cast<uint8_t>(bytes[4]) != kFormatVersion) {
    throw IoError("unsupported NGLM format version " +
                  std::to_string(static_cast<int>(static_cast<uint8_t>(bytes[4]))));
  }
  if (bytes.size() < 13) throw IoError("model file is truncated");
  const std::string_view payload = bytes.substr(0, bytes.size() - 8);
  uint64_t stored_checksum;
  std::memcpy(&stored_checksum, bytes.data() + payload.size(), 8);

  Reader r(payload.substr(5));
  NgramModel model;
  const auto smoothing = r.Get<uint8_t>();
  if (smoothing > 1) throw IoError("model file has unknown smoothing");
  model.options_.smoothing = static_cast<Smoothing>(smoothing);
  model.options_.order = r.Get<uint8_t>();
  model.options_.discount = r.Get<double>();
  model.options_.min_vocab_count = r.Get<uint64_t>();
  model.trained_tokens_ = r.Get<uint64_t>();
  model.metadata_ = r.GetString();
  try {
    ValidateOptions(model.options_);
  } catch (const ConfigError& e) {
    throw IoError(std::string("model file is corrupt: ") + e.what());
  }

  const auto vocab_size = r.Get<uint32_t>();
  if (vocab_size < 3 || vocab_size > r.remaining()) {
    throw IoError("model file is corrupt: bad vocabulary size");
  }
  for (uint32_t i = 0; i < vocab_size; ++i) {
    model.words_.push_back(r.GetString());
    model.index_.emplace(model.words_.back(), i);
  }
  model.counts_.assign(static_cast<size_t>(model.options_.order), {});
  for (int n = 1; n <= model.options_.order; ++n) {
    const auto entries = r.Get<uint64_t>();
    if (entries > r.remaining()) throw IoError("model file is truncated");
    for (uint64_t e = 0; e < entries; ++e) {
      NgramKey key(static_cast<size_t>(n));
      for (auto& id : key) {
        id = r.Get<uint32_t>();
        if (id >= vocab_size) throw IoError("model file is corrupt: bad id");
      }
      model.counts_[n - 1][key] = r.Get<uint64_t>();
    }
  }
  if (r.remaining() != 0) throw IoError("model file has trailing bytes");
  if (Fnv1a(payload) != stored_checksum) {
    throw IoError("model file checksum mismatch");
  }
  if (model.words_[kUnkId] != kUnk || model.words_[kBosId] != kBos ||
      model.words_[kEosId] != kEos) {
    throw IoError("model file is corrupt: reserved tokens missing");
  }
  model.BuildProbabilityTables();
  return model;
}

double Perplexity(const NgramModel& model, const TokenSequence& sample) {
  if (sample.empty()) throw ComputeError("cannot score an empty sample");
  const double n = static_cast<double>(sample.size() + 1);
  return std::exp(-model.LogProb(sample) / n);
}

PerplexityResult CorpusPerplexity(const NgramModel& model,
                                  std::span<const Sample> samples,
                                  std::string model_id, size_t threads) {
  if (samples.empty()) throw ComputeError("no samples to score");
  for (const Sample& sample : samples) {
    if (sample.tokens.empty()) {
      throw ComputeError("sample '" + sample.id + "' is empty");
    }
  }
  PerplexityResult result;
  result.model_id = std::move(model_id);
  result.per_sample.resize(samples.size());
  internal::ParallelFor(samples.size(), threads, [&](size_t i) {
    SampleScore& score = result.per_sample[i];
    score.id = samples[i].id;
    score.token_count = samples[i].tokens.size();
    score.log_prob = model.LogProb(samples[i].tokens);
    score.ppl = std::exp(-score.log_prob /
                         static_cast<double>(score.token_count + 1));
  });

  double ppl_sum = 0.0;
  double log_prob_sum = 0.0;
  double positions = 0.0;
  for (const SampleScore& score : result.per_sample) {
    ppl_sum += score.ppl;
    log_prob_sum += score.log_prob;
    positions += static_cast<double>(score.token_count + 1);
  }
  result.mean_ppl = ppl_sum / static_cast<double>(samples.size());
  result.pooled_ppl = std::exp(-log_prob_sum / positions);
  return result;
}

std::string_view StyleLabelName(StyleLabel label) {
  return label == StyleLabel::kEasy ? "easy" : "normal";
}

StyleDecision DiscriminateStyle(const NgramModel& easy_model,
                                const NgramModel& normal_model,
                                const TokenSequence& text) {
  StyleDecision decision;
  decision.easy_ppl = Perplexity(easy_model, text);
  decision.normal_ppl = Perplexity(normal_model, text);
  decision.label = decision.easy_ppl < decision.normal_ppl ? StyleLabel::kEasy
                                                           : StyleLabel::kNormal;
  return decision;
}

}  // namespace leichtkit
