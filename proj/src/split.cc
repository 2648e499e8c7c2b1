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

#include "leichtkit/split.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "leichtkit/errors.h"

namespace leichtkit {

std::vector<size_t> SeededPermutation(size_t n, uint64_t seed) {
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::mt19937_64 rng(seed);
  for (size_t i = n; i-- > 1;) {
    const uint64_t range = static_cast<uint64_t>(i) + 1;
    // Largest multiple of `range` not exceeding 2^64, minus one.
    const uint64_t limit =
        std::numeric_limits<uint64_t>::max() -
        (std::numeric_limits<uint64_t>::max() % range + 1) % range;
    uint64_t x = rng();
    while (x > limit) x = rng();
    std::swap(order[i], order[x % range]);
  }
  return order;
}

void ValidateRatios(std::span<const double> ratios) {
  if (ratios.size() < 2 || ratios.size() > 3) {
    throw ConfigError("expected 2 or 3 split ratios, got " +
                      std::to_string(ratios.size()));
  }
  double sum = 0.0;
  for (double r : ratios) {
    if (!(r > 0.0 && r <= 1.0)) {
      throw ConfigError("split ratio " + std::to_string(r) +
                        " outside (0, 1]");
    }
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ConfigError("split ratios sum to " + std::to_string(sum) +
                      ", expected 1");
  }
}

std::vector<std::vector<size_t>> SplitIndices(size_t n,
                                              std::span<const double> ratios,
                                              uint64_t seed) {
  ValidateRatios(ratios);
  if (n < ratios.size()) {
    throw ConfigError("cannot split " + std::to_string(n) + " items into " +
                      std::to_string(ratios.size()) + " parts");
  }
  const std::vector<size_t> order = SeededPermutation(n, seed);
  std::vector<std::vector<size_t>> parts(ratios.size());
  double cumulative = 0.0;
  size_t begin = 0;
  for (size_t k = 0; k < ratios.size(); ++k) {
    cumulative += ratios[k];
    size_t end = k + 1 == ratios.size()
                     ? n
                     : static_cast<size_t>(std::llround(cumulative * static_cast<double>(n)));
    end = std::clamp(end, begin, n);
    parts[k].assign(order.begin() + static_cast<std::ptrdiff_t>(begin),
                    order.begin() + static_cast<std::ptrdiff_t>(end));
    begin = end;
  }
  return parts;
}

CorpusSplit SplitCorpus(std::span<const Document> docs,
                        std::span<const double> ratios, uint64_t seed) {
  const auto parts = SplitIndices(docs.size(), ratios, seed);
  auto gather = [&](const std::vector<size_t>& indices) {
    std::vector<Document> out;
    out.reserve(indices.size());
    for (size_t i : indices) out.push_back(docs[i]);
    return out;
  };
  CorpusSplit split;
  split.train = gather(parts[0]);
  split.validation = gather(parts[1]);
  if (parts.size() == 3) split.test = gather(parts[2]);
  split.seed = seed;
  split.ratios.assign(ratios.begin(), ratios.end());
  return split;
}

}  // namespace leichtkit
