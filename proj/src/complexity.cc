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

#include "leichtkit/complexity.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

#include "json.hpp"
#include "leichtkit/errors.h"
#include "leichtkit/textstats.h"
#include "leichtkit/utf8.h"

namespace leichtkit {
namespace {

constexpr std::string_view kSpecBase = "leichtkit-features-v1";
// Relative eigenvalue floor below which the normal equations count as
// singular.
constexpr double kSingularTolerance = 1e-10;

}  // namespace

std::string FeatureSpecVersion(bool with_language_models) {
  std::string version(kSpecBase);
  if (with_language_models) version += "+lm";
  return version;
}

FeatureVector ExtractFeatures(std::string_view text, const NgramModel* easy_lm,
                              const NgramModel* normal_lm) {
  if ((easy_lm == nullptr) != (normal_lm == nullptr)) {
    throw ConfigError("pass both language models or neither");
  }
  const TokenizedText analyzed = Analyze(text);
  if (analyzed.tokens.empty()) {
    throw ComputeError("cannot extract features from empty text");
  }
  const ReadabilityReport readability = FleschReadingEase(text);

  size_t letters = 0;
  size_t commas = 0;
  std::set<std::string> types;
  for (const std::string& token : analyzed.tokens) {
    if (token == ",") ++commas;
    if (!IsWordToken(token)) continue;
    letters += utf8::Decode(token).size();
    types.insert(utf8::ToLower(token));
  }
  const auto words = static_cast<double>(readability.word_count);

  FeatureVector features;
  features.values.assign(kFeatureCount, 0.0);
  features.values[0] = readability.avg_sentence_length_words;
  features.values[1] = words > 0 ? static_cast<double>(letters) / words : 0.0;
  features.values[2] = readability.avg_syllables_per_word;
  features.values[3] = readability.fre;
  features.values[4] =
      words > 0 ? static_cast<double>(types.size()) / words : 0.0;
  features.values[5] = words > 0 ? static_cast<double>(commas) / words : 0.0;
  features.values[6] = words;
  if (easy_lm != nullptr) {
    const double easy = std::log(Perplexity(*easy_lm, analyzed.tokens));
    const double normal = std::log(Perplexity(*normal_lm, analyzed.tokens));
    features.values[7] = easy;
    features.values[8] = normal;
    features.values[9] = easy - normal;
  }
  features.spec_version = FeatureSpecVersion(easy_lm != nullptr);
  return features;
}

RidgeRegressor RidgeRegressor::Fit(std::span<const std::vector<double>> rows,
                                   std::span<const double> targets,
                                   double lambda) {
  if (!(lambda >= 0.0)) throw ConfigError("lambda must be non-negative");
  if (rows.size() != targets.size()) {
    throw ConfigError("feature rows and targets differ in length");
  }
  if (rows.size() < 2) {
    throw ComputeError("fitting needs at least two samples");
  }
  const size_t n = rows.size();
  const size_t d = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != d) throw ConfigError("feature rows differ in length");
    for (double v : row) {
      if (!std::isfinite(v)) throw ComputeError("non-finite feature value");
    }
  }

  RidgeRegressor model;
  model.lambda_ = lambda;
  model.means_.assign(d, 0.0);
  model.stds_.assign(d, 1.0);
  model.dropped_.assign(d, false);
  model.weights_.assign(d, 0.0);

  std::vector<size_t> active;
  for (size_t j = 0; j < d; ++j) {
    double mean = 0.0;
    for (const auto& row : rows) mean += row[j];
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (const auto& row : rows) var += (row[j] - mean) * (row[j] - mean);
    const double std = std::sqrt(var / static_cast<double>(n));
    model.means_[j] = mean;
    if (std > 1e-12 * std::max(1.0, std::abs(mean))) {
      model.stds_[j] = std;
      active.push_back(j);
    } else {
      model.dropped_[j] = true;
    }
  }

  double target_mean = 0.0;
  for (double y : targets) target_mean += y;
  target_mean /= static_cast<double>(n);
  model.bias_ = target_mean;
  if (active.empty()) return model;

  const auto k = static_cast<Eigen::Index>(active.size());
  Eigen::MatrixXd z(static_cast<Eigen::Index>(n), k);
  Eigen::VectorXd centered(static_cast<Eigen::Index>(n));
  for (size_t i = 0; i < n; ++i) {
    for (Eigen::Index a = 0; a < k; ++a) {
      const size_t j = active[static_cast<size_t>(a)];
      z(static_cast<Eigen::Index>(i), a) =
          (rows[i][j] - model.means_[j]) / model.stds_[j];
    }
    centered(static_cast<Eigen::Index>(i)) = targets[i] - target_mean;
  }
  Eigen::MatrixXd gram = z.transpose() * z;
  gram.diagonal().array() += lambda;
  const Eigen::VectorXd rhs = z.transpose() * centered;

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigen(
      gram, Eigen::EigenvaluesOnly);
  const double largest = eigen.eigenvalues().maxCoeff();
  if (!(eigen.eigenvalues().minCoeff() > kSingularTolerance * largest)) {
    throw ComputeError(
        "singular ridge system; use lambda > 0 or remove collinear features");
  }
  const Eigen::VectorXd w = gram.ldlt().solve(rhs);
  for (Eigen::Index a = 0; a < k; ++a) {
    model.weights_[active[static_cast<size_t>(a)]] = w(a);
  }
  return model;
}

RidgeRegressor RidgeRegressor::FromParts(double lambda, double bias,
                                         std::vector<double> weights,
                                         std::vector<double> means,
                                         std::vector<double> stds,
                                         std::vector<bool> dropped) {
  const size_t d = weights.size();
  if (means.size() != d || stds.size() != d || dropped.size() != d) {
    throw ConfigError("ridge parameter vectors differ in length");
  }
  for (double s : stds) {
    if (!(s > 0.0)) throw ConfigError("feature stds must be positive");
  }
  RidgeRegressor model;
  model.lambda_ = lambda;
  model.bias_ = bias;
  model.weights_ = std::move(weights);
  model.means_ = std::move(means);
  model.stds_ = std::move(stds);
  model.dropped_ = std::move(dropped);
  return model;
}

double RidgeRegressor::Predict(std::span<const double> x) const {
  if (x.size() != weights_.size()) {
    throw ConfigError("feature vector has the wrong length");
  }
  double y = bias_;
  for (size_t j = 0; j < x.size(); ++j) {
    if (dropped_[j]) continue;
    y += weights_[j] * (x[j] - means_[j]) / stds_[j];
  }
  return y;
}

std::vector<double> RidgeRegressor::RawWeights() const {
  std::vector<double> raw(weights_.size(), 0.0);
  for (size_t j = 0; j < raw.size(); ++j) {
    if (!dropped_[j]) raw[j] = weights_[j] / stds_[j];
  }
  return raw;
}

double RidgeRegressor::RawIntercept() const {
  double intercept = bias_;
  for (size_t j = 0; j < weights_.size(); ++j) {
    if (!dropped_[j]) intercept -= weights_[j] * means_[j] / stds_[j];
  }
  return intercept;
}

double ClampComplexity(double value) {
  return std::clamp(value, kMinComplexity, kMaxComplexity);
}

ComplexityModel ComplexityModel::Fit(std::span<const LabeledSentence> train,
                                     double lambda, const NgramModel* easy_lm,
                                     const NgramModel* normal_lm) {
  std::vector<std::vector<double>> rows;
  std::vector<double> labels;
  rows.reserve(train.size());
  for (const LabeledSentence& sentence : train) {
    if (!(sentence.complexity >= kMinComplexity &&
          sentence.complexity <= kMaxComplexity)) {
      throw ConfigError("complexity label " +
                        std::to_string(sentence.complexity) +
                        " outside [1, 7]");
    }
    rows.push_back(ExtractFeatures(sentence.text, easy_lm, normal_lm).values);
    labels.push_back(sentence.complexity);
  }
  ComplexityModel model;
  model.spec_version_ = FeatureSpecVersion(easy_lm != nullptr);
  model.regressor_ = RidgeRegressor::Fit(rows, labels, lambda);
  return model;
}

bool ComplexityModel::uses_language_models() const {
  return spec_version_ == FeatureSpecVersion(true);
}

double ComplexityModel::PredictUnclamped(const FeatureVector& features) const {
  if (features.spec_version != spec_version_) {
    throw ConfigError("feature spec '" + features.spec_version +
                      "' does not match model spec '" + spec_version_ + "'");
  }
  return regressor_.Predict(features.values);
}

double ComplexityModel::Predict(const FeatureVector& features) const {
  return ClampComplexity(PredictUnclamped(features));
}

double ComplexityModel::Predict(std::string_view text,
                                const NgramModel* easy_lm,
                                const NgramModel* normal_lm) const {
  return Predict(ExtractFeatures(text, easy_lm, normal_lm));
}

std::vector<double> ComplexityModel::weights() const {
  std::vector<double> out = regressor_.weights();
  out.push_back(regressor_.bias());
  return out;
}

std::string ComplexityModel::ToJson() const {
  nlohmann::ordered_json json;
  json["spec_version"] = spec_version_;
  json["lambda"] = regressor_.lambda();
  json["feature_names"] = nlohmann::ordered_json::array();
  for (auto name : kFeatureNames) json["feature_names"].push_back(name);
  json["bias"] = regressor_.bias();
  json["weights"] = regressor_.weights();
  json["feature_means"] = regressor_.means();
  json["feature_stds"] = regressor_.stds();
  json["dropped"] = regressor_.dropped();
  return json.dump(2);
}

ComplexityModel ComplexityModel::FromJson(std::string_view text) {
  try {
    const nlohmann::json json = nlohmann::json::parse(text);
    ComplexityModel model;
    model.spec_version_ = json.at("spec_version").get<std::string>();
    if (model.spec_version_ != FeatureSpecVersion(false) &&
        model.spec_version_ != FeatureSpecVersion(true)) {
      throw IoError("unsupported feature spec '" + model.spec_version_ + "'");
    }
    auto weights = json.at("weights").get<std::vector<double>>();
    if (weights.size() != kFeatureCount) {
      throw IoError("complexity model has the wrong number of weights");
    }
    model.regressor_ = RidgeRegressor::FromParts(
        json.at("lambda").get<double>(), json.at("bias").get<double>(),
        std::move(weights), json.at("feature_means").get<std::vector<double>>(),
        json.at("feature_stds").get<std::vector<double>>(),
        json.at("dropped").get<std::vector<bool>>());
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed complexity model: ") + e.what());
  } catch (const ConfigError& e) {
    throw IoError(std::string("malformed complexity model: ") + e.what());
  }
}

double MeanSquaredError(std::span<const double> predictions,
                        std::span<const double> labels) {
  if (predictions.size() != labels.size()) {
    throw ConfigError("predictions and labels differ in length");
  }
  if (predictions.empty()) throw ComputeError("MSE of an empty set");
  double sum = 0.0;
  for (size_t i = 0; i < labels.size(); ++i) {
    const double e = predictions[i] - labels[i];
    sum += e * e;
  }
  return sum / static_cast<double>(labels.size());
}

double EvaluateMse(const ComplexityModel& model,
                   std::span<const LabeledSentence> test,
                   const NgramModel* easy_lm, const NgramModel* normal_lm) {
  if (test.empty()) throw ComputeError("cannot evaluate on an empty test set");
  std::vector<double> predictions;
  std::vector<double> labels;
  for (const LabeledSentence& sentence : test) {
    predictions.push_back(model.Predict(sentence.text, easy_lm, normal_lm));
    labels.push_back(sentence.complexity);
  }
  return MeanSquaredError(predictions, labels);
}

}  // namespace leichtkit
