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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "leichtkit/errors.h"
#include "leichtkit/textstats.h"

namespace leichtkit {
namespace {

using Rows = std::vector<std::vector<double>>;

std::vector<LabeledSentence> SmallCorpus() {
  return {{"Das Haus ist rot.", 1.2},
          {"Der Hund bellt laut.", 1.4},
          {"Die Sonne scheint heute.", 1.5},
          {"Die Verwaltung prüft den Antrag, sofern Unterlagen vorliegen.", 4.5},
          {"Aufgrund gesetzlicher Bestimmungen entfällt die Erstattung.", 5.6},
          {"Anna wohnt in Hamburg, und sie mag Hunde.", 2.5},
          {"Die Krankenversicherung übernimmt Behandlungskosten vollständig.", 6.0},
          {"Wir essen Brot.", 1.0}};
}

// Gaussian elimination with partial pivoting; the test's own solver.
std::vector<double> Solve(std::vector<std::vector<double>> a, std::vector<double> b) {
  const size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = c;
    for (size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
    }
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (size_t i = n; i-- > 0;) {
    double s = b[i];
    for (size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

struct Problem {
  Rows rows;
  std::vector<double> y;
};

Problem RandomProblem(std::mt19937& rng, size_t n, size_t d) {
  std::normal_distribution<> g;
  Problem p;
  std::vector<double> w(d);
  for (double& v : w) v = g(rng);
  for (size_t i = 0; i < n; ++i) {
    std::vector<double> row(d);
    for (size_t j = 0; j < d; ++j) row[j] = (j + 1) * g(rng) + 3.0 * j;
    double y = 0.5;
    for (size_t j = 0; j < d; ++j) y += w[j] * row[j];
    p.rows.push_back(row);
    p.y.push_back(y + 0.3 * g(rng));
  }
  return p;
}

TEST(FeatureTest, SpecExamples) {
  const FeatureVector f = ExtractFeatures("Das Haus ist rot.");
  ASSERT_EQ(f.values.size(), kFeatureCount);
  EXPECT_EQ(f.spec_version, "leichtkit-features-v1");
  EXPECT_DOUBLE_EQ(f.values[0], 4.0);
  EXPECT_DOUBLE_EQ(f.values[2], 1.0);
  EXPECT_DOUBLE_EQ(f.values[3], 117.5);
  EXPECT_DOUBLE_EQ(f.values[1], 13.0 / 4.0);  // 3 + 4 + 3 + 3 letters
  EXPECT_DOUBLE_EQ(f.values[4], 1.0);
  EXPECT_DOUBLE_EQ(f.values[5], 0.0);
  EXPECT_DOUBLE_EQ(f.values[6], 4.0);
  for (size_t i = 7; i < kFeatureCount; ++i) EXPECT_EQ(f.values[i], 0.0);
  EXPECT_EQ(ExtractFeatures("Das Haus ist rot.").values, f.values);

  const FeatureVector repeated = ExtractFeatures("Der Hund, der Hund.");
  EXPECT_DOUBLE_EQ(repeated.values[4], 0.5);
  EXPECT_DOUBLE_EQ(repeated.values[5], 0.25);
}

TEST(FeatureTest, LanguageModelSlots) {
  std::vector<TokenSequence> easy = {{"das", "ist", "gut"}, {"das", "ist", "rot"}};
  std::vector<TokenSequence> normal = {{"die", "verwaltung", "prüft"},
                                       {"die", "behörde", "prüft"}};
  const NgramModel e = NgramModel::Train(easy, {.order = 2, .min_vocab_count = 1});
  const NgramModel n = NgramModel::Train(normal, {.order = 2, .min_vocab_count = 1});
  const FeatureVector f = ExtractFeatures("das ist gut", &e, &n);
  EXPECT_EQ(f.spec_version, "leichtkit-features-v1+lm");
  EXPECT_NEAR(f.values[7], std::log(Perplexity(e, {"das", "ist", "gut"})), 1e-12);
  EXPECT_NEAR(f.values[8], std::log(Perplexity(n, {"das", "ist", "gut"})), 1e-12);
  EXPECT_NEAR(f.values[9], f.values[7] - f.values[8], 1e-12);
  EXPECT_LT(f.values[9], 0.0);

  EXPECT_THROW(ExtractFeatures("das", &e, nullptr), ConfigError);
  EXPECT_THROW(ExtractFeatures(""), ComputeError);
  EXPECT_THROW(ExtractFeatures("   \n"), ComputeError);
}

TEST(RidgeTest, RecoversLinearFunction) {
  Rows rows;
  std::vector<double> y;
  for (int i = 0; i < 20; ++i) {
    const double x = 0.37 * i - 2.0;
    rows.push_back({x});
    y.push_back(2.0 * x + 1.0);
  }
  const RidgeRegressor r = RidgeRegressor::Fit(rows, y, 0.0);
  EXPECT_NEAR(r.RawWeights()[0], 2.0, 1e-6);
  EXPECT_NEAR(r.RawIntercept(), 1.0, 1e-6);
  EXPECT_NEAR(r.Predict(std::vector<double>{10.0}), 21.0, 1e-6);
}

TEST(RidgeTest, SolvesNormalEquations) {
  std::mt19937 rng(3);
  for (double lambda : {0.0, 0.1, 1.0, 25.0}) {
    const Problem p = RandomProblem(rng, 40, 4);
    const RidgeRegressor r = RidgeRegressor::Fit(p.rows, p.y, lambda);
    const size_t n = p.rows.size(), d = 4;
    // Standardized design matrix from the stored parameters.
    Rows z(n, std::vector<double>(d));
    double ybar = 0;
    for (double v : p.y) ybar += v / n;
    EXPECT_NEAR(r.bias(), ybar, 1e-12);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < d; ++j) z[i][j] = (p.rows[i][j] - r.means()[j]) / r.stds()[j];
    }
    std::vector<std::vector<double>> a(d, std::vector<double>(d, 0.0));
    std::vector<double> b(d, 0.0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < d; ++j) {
        b[j] += z[i][j] * (p.y[i] - ybar);
        for (size_t k = 0; k < d; ++k) a[j][k] += z[i][j] * z[i][k];
      }
    }
    for (size_t j = 0; j < d; ++j) a[j][j] += lambda;
    for (size_t j = 0; j < d; ++j) {
      double residual = -b[j];
      for (size_t k = 0; k < d; ++k) residual += a[j][k] * r.weights()[k];
      EXPECT_LT(std::abs(residual), 1e-8) << "lambda " << lambda;
    }
    const std::vector<double> w = Solve(a, b);
    for (size_t j = 0; j < d; ++j) EXPECT_NEAR(r.weights()[j], w[j], 1e-9);
    // Population standard deviation.
    double mean0 = 0, var0 = 0;
    for (const auto& row : p.rows) mean0 += row[0] / n;
    for (const auto& row : p.rows) var0 += (row[0] - mean0) * (row[0] - mean0) / n;
    EXPECT_NEAR(r.stds()[0], std::sqrt(var0), 1e-12);
  }
}

TEST(RidgeTest, RawWeightsReproducePredictions) {
  std::mt19937 rng(9);
  const Problem p = RandomProblem(rng, 30, 5);
  const RidgeRegressor r = RidgeRegressor::Fit(p.rows, p.y, 0.5);
  const auto raw = r.RawWeights();
  for (const auto& row : p.rows) {
    double y = r.RawIntercept();
    for (size_t j = 0; j < row.size(); ++j) y += raw[j] * row[j];
    EXPECT_NEAR(y, r.Predict(row), 1e-9);
  }
}

TEST(RidgeTest, ConstantFeaturesAreDropped) {
  const Rows rows = {{1.0, 5.0}, {2.0, 5.0}, {3.0, 5.0}};
  const std::vector<double> y = {2.0, 4.0, 6.0};
  const RidgeRegressor r = RidgeRegressor::Fit(rows, y, 0.0);
  EXPECT_TRUE(r.dropped()[1]);
  EXPECT_FALSE(r.dropped()[0]);
  EXPECT_EQ(r.weights()[1], 0.0);
  EXPECT_EQ(r.stds()[1], 1.0);
  EXPECT_NEAR(r.Predict(std::vector<double>{4.0, 123.0}), 8.0, 1e-9);
}

TEST(RidgeTest, LargeLambdaShrinksToMean) {
  std::mt19937 rng(1);
  const Problem p = RandomProblem(rng, 25, 3);
  const RidgeRegressor r = RidgeRegressor::Fit(p.rows, p.y, 1e12);
  double ybar = 0;
  for (double v : p.y) ybar += v / p.y.size();
  for (double w : r.weights()) EXPECT_LT(std::abs(w), 1e-9);
  EXPECT_NEAR(r.Predict(p.rows[0]), ybar, 1e-8);
}

TEST(RidgeTest, TrainingMseNoWorseThanMean) {
  std::mt19937 rng(21);
  for (int t = 0; t < 20; ++t) {
    const Problem p = RandomProblem(rng, 15, 3);
    const RidgeRegressor r = RidgeRegressor::Fit(p.rows, p.y, 0.0);
    double ybar = 0;
    for (double v : p.y) ybar += v / p.y.size();
    double fit = 0, mean = 0;
    for (size_t i = 0; i < p.y.size(); ++i) {
      fit += std::pow(r.Predict(p.rows[i]) - p.y[i], 2);
      mean += std::pow(ybar - p.y[i], 2);
    }
    EXPECT_LE(fit, mean + 1e-9);
  }
}

TEST(RidgeTest, Errors) {
  const Rows one = {{1.0}};
  EXPECT_THROW(RidgeRegressor::Fit(one, std::vector<double>{1.0}, 0.0), ComputeError);
  const Rows collinear = {{1, 2}, {2, 4}, {3, 6}, {4, 8.0}};
  const std::vector<double> y = {1, 2, 3, 4};
  EXPECT_THROW(RidgeRegressor::Fit(collinear, y, 0.0), ComputeError);
  EXPECT_NO_THROW(RidgeRegressor::Fit(collinear, y, 0.1));
  EXPECT_THROW(RidgeRegressor::Fit(collinear, y, -1.0), ConfigError);
  const Rows ragged = {{1, 2}, {2}};
  EXPECT_THROW(RidgeRegressor::Fit(ragged, std::vector<double>{1, 2}, 1.0), ConfigError);
}

TEST(ComplexityModelTest, ConstantLabels) {
  auto train = SmallCorpus();
  for (auto& s : train) s.complexity = 3.25;
  const ComplexityModel m = ComplexityModel::Fit(train, 1.0);
  EXPECT_DOUBLE_EQ(m.Predict("Ein ganz anderer Satz mit vielen Wörtern."), 3.25);
  // The readability features are collinear (FRE is linear in ASL and ASW),
  // so lambda 0 on text is singular.
  EXPECT_THROW(ComplexityModel::Fit(train, 0.0), ComputeError);
}

TEST(ComplexityModelTest, PredictionsAreClamped) {
  EXPECT_EQ(ClampComplexity(9.3), 7.0);
  EXPECT_EQ(ClampComplexity(-2.0), 1.0);
  EXPECT_EQ(ClampComplexity(3.5), 3.5);
  const ComplexityModel m = ComplexityModel::Fit(SmallCorpus(), 0.01);
  std::string very_long = "Die";
  for (int i = 0; i < 60; ++i) very_long += " Verwaltungsangelegenheitenverordnung";
  very_long += ".";
  for (const std::string& text : {std::string("Ja."), very_long,
                                   std::string("Das Haus ist rot.")}) {
    const double p = m.Predict(text);
    EXPECT_GE(p, 1.0);
    EXPECT_LE(p, 7.0);
  }
  EXPECT_GT(m.PredictUnclamped(ExtractFeatures(very_long)), 7.0);
  EXPECT_EQ(m.Predict(very_long), 7.0);
}

TEST(ComplexityModelTest, SpecVersionMismatch) {
  const ComplexityModel m = ComplexityModel::Fit(SmallCorpus());
  FeatureVector f = ExtractFeatures("Das Haus ist rot.");
  f.spec_version = "leichtkit-features-v1+lm";
  EXPECT_THROW(m.Predict(f), ConfigError);
  EXPECT_FALSE(m.uses_language_models());
  EXPECT_EQ(m.weights().size(), kFeatureCount + 1);

  auto bad = SmallCorpus();
  bad[0].complexity = 7.5;
  EXPECT_THROW(ComplexityModel::Fit(bad), ConfigError);
}

TEST(ComplexityModelTest, JsonRoundTrip) {
  const ComplexityModel m = ComplexityModel::Fit(SmallCorpus(), 0.3);
  const ComplexityModel back = ComplexityModel::FromJson(m.ToJson());
  EXPECT_EQ(back.spec_version(), m.spec_version());
  for (const auto& s : SmallCorpus()) {
    EXPECT_EQ(back.Predict(s.text), m.Predict(s.text));
  }
  EXPECT_EQ(back.ToJson(), m.ToJson());
  EXPECT_THROW(ComplexityModel::FromJson("{"), IoError);
  EXPECT_THROW(ComplexityModel::FromJson(R"({"spec_version": 3})"), IoError);
}

TEST(MseTest, Cases) {
  const std::vector<double> labels = {2.0, 2.0, 5.0};
  EXPECT_EQ(MeanSquaredError(labels, labels), 0.0);
  EXPECT_DOUBLE_EQ(MeanSquaredError(std::vector<double>{1, 2, 3}, labels), 5.0 / 3.0);
  // Constant predictor at the mean: MSE equals the population variance.
  const std::vector<double> mean(3, 3.0);
  EXPECT_DOUBLE_EQ(MeanSquaredError(mean, labels), (1.0 + 1.0 + 4.0) / 3.0);

  const ComplexityModel m = ComplexityModel::Fit(SmallCorpus());
  EXPECT_THROW(EvaluateMse(m, std::vector<LabeledSentence>{}), ComputeError);
  EXPECT_GE(EvaluateMse(m, SmallCorpus()), 0.0);
}

TEST(ComplexityModelTest, SyntheticLinearTarget) {
  // Labels that are an exact linear function of two non-collinear features
  // are recovered almost exactly at small lambda. (Exactly zero lambda is
  // singular here: FRE is a linear combination of two other features.)
  std::mt19937 rng(5);
  static constexpr const char* kWords[] = {"Haus", "Verwaltung", "und", "Gemeindeamt",
                                           "rot", "Bescheinigung", "ist", "gut"};
  std::vector<LabeledSentence> data;
  for (int i = 0; i < 200; ++i) {
    std::string text;
    const int len = 2 + static_cast<int>(rng() % 10);
    for (int k = 0; k < len; ++k) text += std::string(k ? " " : "") + kWords[rng() % 8];
    text += ".";
    const FeatureVector f = ExtractFeatures(text);
    data.push_back({text, 1.0 + 0.2 * f.values[6] + 0.3 * f.values[1]});
  }
  for (auto& d : data) ASSERT_LE(d.complexity, 7.0);
  const ComplexityModel m = ComplexityModel::Fit(data, 1e-4);
  EXPECT_LT(EvaluateMse(m, data), 1e-6);
}

}  // namespace
}  // namespace leichtkit
