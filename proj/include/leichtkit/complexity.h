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

// Continuous text-complexity prediction on the 1..7 scale with a ridge
// regressor over readability (and optionally perplexity) features.

#ifndef LEICHTKIT_COMPLEXITY_H_
#define LEICHTKIT_COMPLEXITY_H_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leichtkit/ngram_lm.h"

namespace leichtkit {

inline constexpr size_t kFeatureCount = 10;

// Fixed feature order. The last three slots are zero unless both an
// easy-style and a normal-style language model are supplied.
inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "avg_sentence_length",  "avg_word_length",  "avg_syllables_per_word",
    "flesch_reading_ease",  "type_token_ratio", "comma_density",
    "word_count",           "log_easy_ppl",     "log_normal_ppl",
    "log_ppl_ratio",
};

inline constexpr double kMinComplexity = 1.0;
inline constexpr double kMaxComplexity = 7.0;
inline constexpr double kDefaultLambda = 1.0;

std::string FeatureSpecVersion(bool with_language_models);

struct FeatureVector {
  std::vector<double> values;
  std::string spec_version;
};

// Pass both language models or neither (ConfigError otherwise). Throws
// ComputeError for text without any token.
FeatureVector ExtractFeatures(std::string_view text,
                              const NgramModel* easy_lm = nullptr,
                              const NgramModel* normal_lm = nullptr);

// L2-regularized least squares on z-scored features with an unregularized
// bias. Features that are constant on the training data are dropped (weight
// zero, std recorded as 1).
class RidgeRegressor {
 public:
  RidgeRegressor() = default;

  // Throws ComputeError for fewer than two rows or a singular system and
  // ConfigError for a negative lambda or ragged rows.
  static RidgeRegressor Fit(std::span<const std::vector<double>> rows,
                            std::span<const double> targets, double lambda);

  double Predict(std::span<const double> x) const;

  // Weights and intercept in the original (unstandardized) feature space.
  std::vector<double> RawWeights() const;
  double RawIntercept() const;

  double lambda() const { return lambda_; }
  double bias() const { return bias_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& means() const { return means_; }
  const std::vector<double>& stds() const { return stds_; }
  const std::vector<bool>& dropped() const { return dropped_; }

  static RidgeRegressor FromParts(double lambda, double bias,
                                  std::vector<double> weights,
                                  std::vector<double> means,
                                  std::vector<double> stds,
                                  std::vector<bool> dropped);

 private:
  double lambda_ = 0.0;
  double bias_ = 0.0;
  std::vector<double> weights_;  // standardized space
  std::vector<double> means_;
  std::vector<double> stds_;
  std::vector<bool> dropped_;
};

struct LabeledSentence {
  std::string text;
  double complexity = 0.0;
};

class ComplexityModel {
 public:
  // Labels must lie in [1, 7] (ConfigError).
  static ComplexityModel Fit(std::span<const LabeledSentence> train,
                             double lambda = kDefaultLambda,
                             const NgramModel* easy_lm = nullptr,
                             const NgramModel* normal_lm = nullptr);

  // Linear prediction clamped to [1, 7]. Throws ConfigError when the feature
  // configuration does not match the one the model was fitted with.
  double Predict(std::string_view text, const NgramModel* easy_lm = nullptr,
                 const NgramModel* normal_lm = nullptr) const;
  double Predict(const FeatureVector& features) const;
  double PredictUnclamped(const FeatureVector& features) const;

  const std::string& spec_version() const { return spec_version_; }
  bool uses_language_models() const;
  const RidgeRegressor& regressor() const { return regressor_; }
  // Per-feature weights followed by the bias (kFeatureCount + 1 values).
  std::vector<double> weights() const;

  std::string ToJson() const;
  static ComplexityModel FromJson(std::string_view json);

 private:
  std::string spec_version_;
  RidgeRegressor regressor_;
};

double ClampComplexity(double value);

double MeanSquaredError(std::span<const double> predictions,
                        std::span<const double> labels);

// Throws ComputeError on an empty test set.
double EvaluateMse(const ComplexityModel& model,
                   std::span<const LabeledSentence> test,
                   const NgramModel* easy_lm = nullptr,
                   const NgramModel* normal_lm = nullptr);

}  // namespace leichtkit

#endif  // LEICHTKIT_COMPLEXITY_H_
