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

#include "leichtkit/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "leichtkit/errors.h"
#include "leichtkit/textstats.h"
#include "leichtkit/utf8.h"

namespace leichtkit {
namespace {

// Sums in ascending order so the result does not depend on input order.
double OrderFreeMean(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

void RequireInstances(std::span<const EvalInstance> instances) {
  if (instances.empty()) throw ComputeError("no instances to evaluate");
  for (const EvalInstance& instance : instances) {
    if (instance.references.empty()) {
      throw ConfigError("every instance needs at least one reference");
    }
  }
}

double F1(double precision, double recall) {
  if (precision + recall <= 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

// Counter arithmetic on n-gram multisets, matching the usual SARI
// formulation: `&` keeps the minimum, `-` the positive difference.
using Counter = std::map<std::vector<std::string>, double>;

Counter Scaled(const NgramMultiset& grams, double factor) {
  Counter out;
  for (const auto& [gram, count] : grams) {
    out[gram] = static_cast<double>(count) * factor;
  }
  return out;
}

Counter Intersect(const Counter& a, const Counter& b) {
  Counter out;
  for (const auto& [gram, count] : a) {
    auto it = b.find(gram);
    if (it == b.end()) continue;
    const double m = std::min(count, it->second);
    if (m > 0.0) out[gram] = m;
  }
  return out;
}

Counter Subtract(const Counter& a, const Counter& b) {
  Counter out;
  for (const auto& [gram, count] : a) {
    auto it = b.find(gram);
    const double d = count - (it == b.end() ? 0.0 : it->second);
    if (d > 0.0) out[gram] = d;
  }
  return out;
}

double Get(const Counter& c, const std::vector<std::string>& gram) {
  auto it = c.find(gram);
  return it == c.end() ? 0.0 : it->second;
}

SariComponents SariAtOrder(const EvalInstance& instance, int n,
                           bool identical) {
  const auto numref = static_cast<double>(instance.references.size());
  const Counter source = Scaled(ExtractNgrams(instance.source, n), numref);
  const Counter output = Scaled(ExtractNgrams(instance.hypothesis, n), numref);
  Counter refs;
  for (const TokenSequence& ref : instance.references) {
    for (const auto& [gram, count] : ExtractNgrams(ref, n)) {
      refs[gram] += static_cast<double>(count);
    }
  }
  const double degenerate_keep = identical ? 1.0 : 0.0;

  SariComponents result;

  const Counter keep = Intersect(source, output);
  const Counter keep_good = Intersect(keep, refs);
  const Counter keep_all = Intersect(source, refs);
  double keep_precision = degenerate_keep;
  double keep_recall = degenerate_keep;
  if (!keep.empty()) {
    double sum = 0.0;
    for (const auto& [gram, count] : keep) sum += Get(keep_good, gram) / count;
    keep_precision = sum / static_cast<double>(keep.size());
  }
  if (!keep_all.empty()) {
    double good = 0.0;
    double all = 0.0;
    for (const auto& [gram, count] : keep_good) good += count;
    for (const auto& [gram, count] : keep_all) all += count;
    keep_recall = good / all;
  }
  result.keep = F1(keep_precision, keep_recall);

  const Counter deleted = Subtract(source, output);
  const Counter deleted_good = Subtract(deleted, refs);
  if (!deleted.empty()) {
    double sum = 0.0;
    for (const auto& [gram, count] : deleted) {
      sum += Get(deleted_good, gram) / count;
    }
    result.del = sum / static_cast<double>(deleted.size());
  }

  size_t added = 0;
  size_t added_good = 0;
  size_t addable = 0;
  for (const auto& [gram, count] : output) {
    if (source.count(gram)) continue;
    ++added;
    if (refs.count(gram)) ++added_good;
  }
  for (const auto& [gram, count] : refs) {
    if (!source.count(gram)) ++addable;
  }
  const double add_precision =
      added > 0 ? static_cast<double>(added_good) / static_cast<double>(added)
                : 0.0;
  const double add_recall =
      addable > 0
          ? static_cast<double>(added_good) / static_cast<double>(addable)
          : 0.0;
  result.add = F1(add_precision, add_recall);
  return result;
}

}  // namespace

TokenSequence MetricTokens(std::string_view text) {
  TokenSequence tokens = Tokenize(text);
  for (std::string& token : tokens) token = utf8::ToLower(token);
  return tokens;
}

EvalInstance MakeEvalInstance(std::string_view source,
                              std::string_view hypothesis,
                              std::span<const std::string> references) {
  EvalInstance instance;
  instance.source = MetricTokens(source);
  instance.hypothesis = MetricTokens(hypothesis);
  for (const std::string& ref : references) {
    instance.references.push_back(MetricTokens(ref));
  }
  return instance;
}

NgramMultiset ExtractNgrams(std::span<const std::string> tokens, int n) {
  if (n < 1) throw ConfigError("n-gram length must be positive");
  NgramMultiset grams;
  const auto len = static_cast<size_t>(n);
  if (tokens.size() < len) return grams;
  for (size_t i = 0; i + len <= tokens.size(); ++i) {
    ++grams[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                     tokens.begin() + static_cast<std::ptrdiff_t>(i + len))];
  }
  return grams;
}

size_t LcsLength(std::span<const std::string> a,
                 std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<size_t> prev(b.size() + 1, 0);
  std::vector<size_t> curr(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                     : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

BleuScore Bleu(std::span<const EvalInstance> instances) {
  RequireInstances(instances);
  BleuScore score;
  for (const EvalInstance& instance : instances) {
    const size_t hyp_len = instance.hypothesis.size();
    score.hypothesis_length += hyp_len;
    size_t closest = instance.references.front().size();
    for (const TokenSequence& ref : instance.references) {
      const auto diff = [&](size_t len) {
        return len > hyp_len ? len - hyp_len : hyp_len - len;
      };
      if (diff(ref.size()) < diff(closest) ||
          (diff(ref.size()) == diff(closest) && ref.size() < closest)) {
        closest = ref.size();
      }
    }
    score.reference_length += closest;

    for (int n = 1; n <= kMaxNgramOrder; ++n) {
      const NgramMultiset hyp = ExtractNgrams(instance.hypothesis, n);
      NgramMultiset max_ref;
      for (const TokenSequence& ref : instance.references) {
        for (const auto& [gram, count] : ExtractNgrams(ref, n)) {
          uint64_t& slot = max_ref[gram];
          slot = std::max(slot, count);
        }
      }
      for (const auto& [gram, count] : hyp) {
        score.totals[n - 1] += count;
        auto it = max_ref.find(gram);
        if (it != max_ref.end()) score.matches[n - 1] += std::min(count, it->second);
      }
    }
  }

  if (score.hypothesis_length == 0) return score;
  const auto c = static_cast<double>(score.hypothesis_length);
  const auto r = static_cast<double>(score.reference_length);
  score.brevity_penalty = c < r ? std::exp(1.0 - r / c) : 1.0;
  if (score.matches[0] == 0) {
    // No overlap at all: the unigram precision of zero is not smoothed.
    score.effective_order = 1;
    return score;
  }

  double log_sum = 0.0;
  for (int n = 1; n <= kMaxNgramOrder; ++n) {
    const uint64_t total = score.totals[n - 1];
    if (total == 0) break;
    score.effective_order = n;
    const double matched = score.matches[n - 1] > 0
                               ? static_cast<double>(score.matches[n - 1])
                               : kBleuEpsilon;
    score.precisions[n - 1] = matched / static_cast<double>(total);
    log_sum += std::log(score.precisions[n - 1]);
  }
  score.bleu = 100.0 * score.brevity_penalty *
               std::exp(log_sum / static_cast<double>(score.effective_order));
  return score;
}

RougeLScore RougeLInstance(const EvalInstance& instance) {
  RougeLScore best;
  bool first = true;
  for (const TokenSequence& ref : instance.references) {
    const auto lcs = static_cast<double>(LcsLength(instance.hypothesis, ref));
    RougeLScore s;
    s.precision = instance.hypothesis.empty()
                      ? 0.0
                      : lcs / static_cast<double>(instance.hypothesis.size());
    s.recall = ref.empty() ? 0.0 : lcs / static_cast<double>(ref.size());
    s.f1 = F1(s.precision, s.recall);
    if (first || s.f1 > best.f1) best = s;
    first = false;
  }
  return best;
}

RougeLScore RougeL(std::span<const EvalInstance> instances) {
  RequireInstances(instances);
  std::vector<double> p, r, f;
  for (const EvalInstance& instance : instances) {
    const RougeLScore s = RougeLInstance(instance);
    p.push_back(s.precision);
    r.push_back(s.recall);
    f.push_back(s.f1);
  }
  return {OrderFreeMean(std::move(p)), OrderFreeMean(std::move(r)),
          OrderFreeMean(std::move(f))};
}

SariComponents SariInstance(const EvalInstance& instance) {
  bool identical = instance.hypothesis == instance.source;
  for (const TokenSequence& ref : instance.references) {
    identical = identical && ref == instance.source;
  }
  SariComponents sum;
  for (int n = 1; n <= kMaxNgramOrder; ++n) {
    const SariComponents at_n = SariAtOrder(instance, n, identical);
    sum.keep += at_n.keep;
    sum.add += at_n.add;
    sum.del += at_n.del;
  }
  return {sum.keep / kMaxNgramOrder, sum.add / kMaxNgramOrder,
          sum.del / kMaxNgramOrder};
}

SariScore Sari(std::span<const EvalInstance> instances) {
  RequireInstances(instances);
  std::vector<double> keep, add, del;
  for (const EvalInstance& instance : instances) {
    const SariComponents c = SariInstance(instance);
    keep.push_back(c.keep);
    add.push_back(c.add);
    del.push_back(c.del);
  }
  SariScore score;
  score.f_keep = 100.0 * OrderFreeMean(std::move(keep));
  score.f_add = 100.0 * OrderFreeMean(std::move(add));
  score.p_del = 100.0 * OrderFreeMean(std::move(del));
  score.sari = (score.f_keep + score.f_add + score.p_del) / 3.0;
  return score;
}

std::vector<Metric> ParseMetrics(std::string_view list) {
  std::vector<Metric> metrics;
  size_t start = 0;
  while (start <= list.size()) {
    size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    const std::string name = utf8::ToLower(list.substr(start, comma - start));
    Metric metric;
    if (name == "sari") {
      metric = Metric::kSari;
    } else if (name == "bleu") {
      metric = Metric::kBleu;
    } else if (name == "rouge-l" || name == "rougel" || name == "rouge_l") {
      metric = Metric::kRougeL;
    } else {
      throw ConfigError("unknown metric '" + name +
                        "' (expected sari, bleu, rouge-l)");
    }
    if (std::find(metrics.begin(), metrics.end(), metric) == metrics.end()) {
      metrics.push_back(metric);
    }
    start = comma + 1;
  }
  return metrics;
}

MetricReport Evaluate(std::span<const EvalInstance> instances,
                      std::span<const Metric> metrics) {
  MetricReport report;
  report.instance_count = instances.size();
  for (Metric metric : metrics) {
    switch (metric) {
      case Metric::kSari:
        report.sari = Sari(instances);
        break;
      case Metric::kBleu:
        report.bleu = Bleu(instances);
        break;
      case Metric::kRougeL:
        report.rouge_l = RougeL(instances);
        break;
    }
  }
  return report;
}

}  // namespace leichtkit
