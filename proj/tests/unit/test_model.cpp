// Copyright 2026 The stylofair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "stylofair/error.hpp"
#include "stylofair/model.hpp"

namespace stylofair::model {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd random_matrix(Eigen::Index rows, Eigen::Index cols, uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist;
  MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = dist(gen);
  return m;
}

TEST(Objective, GradientMatchesCentralDifferences) {
  const MatrixXd x = random_matrix(12, 5, 1);
  const MatrixXd w = random_matrix(3, 5, 2) * 0.5;
  const VectorXd b = random_matrix(3, 1, 3).col(0);
  const std::vector<size_t> y = {0, 1, 2, 0, 1, 2, 2, 2, 1, 0, 0, 1};
  const double lambda = 0.05;
  const auto obj = objective(w, b, x, y, lambda);
  const double h = 1e-6;
  for (Eigen::Index r = 0; r < w.rows(); ++r) {
    for (Eigen::Index c = 0; c < w.cols(); ++c) {
      MatrixXd up = w, down = w;
      up(r, c) += h;
      down(r, c) -= h;
      const double fd = (objective(up, b, x, y, lambda).loss - objective(down, b, x, y, lambda).loss) / (2 * h);
      EXPECT_NEAR(obj.grad_weights(r, c), fd, 1e-7);
    }
    VectorXd up = b, down = b;
    up(r) += h;
    down(r) -= h;
    const double fd = (objective(w, up, x, y, lambda).loss - objective(w, down, x, y, lambda).loss) / (2 * h);
    EXPECT_NEAR(obj.grad_bias(r), fd, 1e-7);
  }
}

TEST(Objective, ZeroWeightsGiveLogClassCount) {
  const MatrixXd x = random_matrix(6, 2, 4);
  const std::vector<size_t> y = {0, 1, 2, 3, 0, 1};
  const auto obj = objective(MatrixXd::Zero(4, 2), VectorXd::Zero(4), x, y, 1.0);
  EXPECT_NEAR(obj.loss, std::log(4.0), 1e-12);
}

TEST(Softmax, ShiftInvariantAndStable) {
  const std::vector<double> a = {1.0, 2.0, 3.0};
  const std::vector<double> b = {1001.0, 1002.0, 1003.0};
  const auto pa = softmax(a);
  const auto pb = softmax(b);
  double sum = 0.0;
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(pa[i], pb[i], 1e-15);
    sum += pa[i];
  }
  EXPECT_NEAR(sum, 1.0, 1e-15);
  EXPECT_NEAR(pa[2], std::exp(3.0) / (std::exp(1.0) + std::exp(2.0) + std::exp(3.0)), 1e-15);
  const auto huge = softmax(std::vector<double>{-1e308, 1e308});
  EXPECT_EQ(huge[1], 1.0);
}

// Two well separated clusters per class along distinct axes.
std::pair<MatrixXd, std::vector<std::string>> separable(size_t per_class) {
  const std::vector<std::string> names = {"alice", "bob", "carol"};
  MatrixXd x = random_matrix(static_cast<Eigen::Index>(3 * per_class), 4, 9) * 0.1;
  std::vector<std::string> y;
  for (size_t i = 0; i < 3 * per_class; ++i) {
    const size_t c = i % 3;
    x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) += 3.0;
    y.push_back(names[c]);
  }
  return {x, y};
}

TEST(Train, SeparableDataFitsPerfectly) {
  const auto [x, y] = separable(10);
  const auto model = train(x, y);
  EXPECT_EQ(model.class_labels, (std::vector<std::string>{"alice", "bob", "carol"}));
  std::vector<std::string> predicted;
  for (const auto& p : predict_batch(model, x)) predicted.push_back(p.predicted_label);
  EXPECT_DOUBLE_EQ(accuracy(predicted, y), 1.0);
  EXPECT_TRUE(model.report.converged);
  EXPECT_LT(model.report.grad_max_norm, model.config.tolerance);
  for (size_t i = 1; i < model.report.loss_history.size(); ++i)
    EXPECT_LE(model.report.loss_history[i], model.report.loss_history[i - 1] + 1e-15);
  EXPECT_NEAR(model.report.loss_history.front(), std::log(3.0), 1e-12);
}

TEST(Train, Deterministic) {
  const auto [x, y] = separable(6);
  const auto a = train(x, y);
  const auto b = train(x, y);
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_EQ(a.bias, b.bias);
  EXPECT_EQ(a.report.iterations, b.report.iterations);
}

TEST(Train, StrongPenaltyRecoversClassPriors) {
  const MatrixXd x = random_matrix(10, 3, 5);
  const std::vector<std::string> y = {"a", "a", "a", "a", "a", "a", "b", "b", "b", "b"};
  TrainConfig config;
  config.l2_lambda = 1e6;
  const auto model = train(x, y, config);
  EXPECT_LT(model.weights.cwiseAbs().maxCoeff(), 1e-5);
  const auto p = predict(model, std::vector<double>{5.0, -3.0, 2.0});
  EXPECT_NEAR(p.probabilities[0], 0.6, 1e-5);
  EXPECT_NEAR(p.probabilities[1], 0.4, 1e-5);
}

TEST(Train, IterationCapReportsNonConvergence) {
  const auto [x, y] = separable(5);
  TrainConfig config;
  config.max_iters = 2;
  const auto model = train(x, y, config);
  EXPECT_FALSE(model.report.converged);
  EXPECT_LE(model.report.iterations, 2u);
}

TEST(Train, RejectsBadInput) {
  const MatrixXd x = random_matrix(3, 2, 6);
  EXPECT_THROW(train(x, std::vector<std::string>{"a", "a", "a"}), DataError);
  EXPECT_THROW(train(x, std::vector<std::string>{"a", "b"}), DataError);
  MatrixXd bad = x;
  bad(1, 1) = std::nan("");
  EXPECT_THROW(train(bad, std::vector<std::string>{"a", "b", "a"}), DataError);
  TrainConfig negative;
  negative.l2_lambda = -1.0;
  EXPECT_THROW(train(x, std::vector<std::string>{"a", "b", "a"}, negative), UsageError);
}

TEST(Predict, TiesGoToFirstLabel) {
  AttributionModel m;
  m.weights = MatrixXd::Zero(3, 2);
  m.bias = VectorXd::Zero(3);
  m.class_labels = {"x", "y", "z"};
  const auto p = predict(m, std::vector<double>{1.0, 2.0});
  EXPECT_EQ(p.predicted_index, 0u);
  EXPECT_EQ(p.predicted_label, "x");
  EXPECT_THROW(predict(m, std::vector<double>{1.0}), DataError);
}

TEST(Metrics, AccuracyAndMacroF1) {
  const std::vector<std::string> truth = {"a", "a", "b", "b", "c", "c"};
  const std::vector<std::string> pred = {"a", "b", "b", "b", "a", "c"};
  EXPECT_DOUBLE_EQ(accuracy(pred, truth), 4.0 / 6.0);
  // F1: a = 2*1/(2+1+1) = 0.5, b = 2*2/(4+1) = 0.8, c = 2/(2+1) = 2/3
  EXPECT_NEAR(macro_f1(pred, truth), (0.5 + 0.8 + 2.0 / 3.0) / 3.0, 1e-15);
  const std::vector<std::string> stray = {"d", "a"};
  const std::vector<std::string> two = {"a", "a"};
  EXPECT_NEAR(macro_f1(stray, two), (2.0 / 3.0 + 0.0) / 2.0, 1e-15);
  EXPECT_THROW(accuracy(std::vector<std::string>{}, std::vector<std::string>{}), DataError);
  EXPECT_THROW(macro_f1(pred, two), DataError);
}

TEST(Metrics, CosineDistance) {
  const std::vector<double> a = {1.0, 0.0};
  const std::vector<double> b = {0.0, 2.0};
  const std::vector<double> c = {-3.0, 0.0};
  EXPECT_NEAR(cosine_distance(a, a), 0.0, 1e-15);
  EXPECT_NEAR(cosine_distance(a, b), 1.0, 1e-15);
  EXPECT_NEAR(cosine_distance(a, c), 2.0, 1e-15);
  EXPECT_DOUBLE_EQ(cosine_distance(a, std::vector<double>{0.0, 0.0}), 1.0);
  EXPECT_THROW(cosine_distance(a, std::vector<double>{1.0}), DataError);
}

TEST(Metrics, CosineDiagnosticSplitsByOutcome) {
  const std::vector<std::vector<double>> train_vectors = {{1.0, 0.0}, {1.0, 0.0}};
  const std::vector<std::vector<double>> tests = {{2.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  const auto d = cosine_distance_diagnostic(train_vectors, tests, {true, false, false});
  ASSERT_TRUE(d.mean_dist_correct && d.mean_dist_misclassified);
  EXPECT_NEAR(*d.mean_dist_correct, 0.0, 1e-15);
  EXPECT_NEAR(*d.mean_dist_misclassified, (1.0 + (1.0 - std::sqrt(0.5))) / 2.0, 1e-15);
  const auto all_right = cosine_distance_diagnostic(train_vectors, {{1.0, 0.0}}, {true});
  EXPECT_FALSE(all_right.mean_dist_misclassified.has_value());
}

TEST(Serialization, RoundTrip) {
  const auto [x, y] = separable(4);
  TrainConfig config;
  config.l2_lambda = 0.01;
  config.seed = 77;
  const auto model = train(x, y, config);
  const auto back = model_from_json(to_json(model));
  EXPECT_EQ(back.weights, model.weights);
  EXPECT_EQ(back.bias, model.bias);
  EXPECT_EQ(back.class_labels, model.class_labels);
  EXPECT_EQ(back.config, model.config);
  EXPECT_EQ(train_config_from_json(to_json(config)), config);
  EXPECT_THROW(model_from_json(nlohmann::json::object()), DataError);
}

}  // namespace
}  // namespace stylofair::model
