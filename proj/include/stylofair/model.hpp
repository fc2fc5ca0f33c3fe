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

#pragma once

// Multinomial logistic-regression attributor.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

namespace stylofair::model {

struct TrainConfig {
  double l2_lambda = 1e-3;
  size_t max_iters = 5000;
  double tolerance = 1e-6;
  uint64_t seed = 0;

  bool operator==(const TrainConfig&) const = default;
};

struct TrainReport {
  size_t iterations = 0;
  bool converged = false;
  double final_loss = 0.0;
  double grad_max_norm = 0.0;
  std::vector<double> loss_history;  // loss after each accepted step, starting at zero weights
};

struct AttributionModel {
  Eigen::MatrixXd weights;  // classes x features
  Eigen::VectorXd bias;
  std::vector<std::string> class_labels;  // sorted
  TrainConfig config;
  TrainReport report;

  size_t n_classes() const { return class_labels.size(); }
  size_t n_features() const { return static_cast<size_t>(weights.cols()); }
};

struct Prediction {
  std::vector<double> probabilities;  // aligned with class_labels
  std::string predicted_label;
  size_t predicted_index = 0;
};

// Mean softmax cross-entropy plus (lambda/2)||W||^2 at (W, b) and its gradient.
struct Objective {
  double loss = 0.0;
  Eigen::MatrixXd grad_weights;
  Eigen::VectorXd grad_bias;
};
Objective objective(const Eigen::MatrixXd& weights, const Eigen::VectorXd& bias,
                    const Eigen::MatrixXd& x, std::span<const size_t> y, double l2_lambda);

// Full-batch gradient descent with Armijo backtracking (c = 1e-4, halving),
// Barzilai-Borwein trial steps, zero initial weights. Throws DataError on a
// single class, a size mismatch or a non-finite feature.
AttributionModel train(const Eigen::MatrixXd& x, std::span<const std::string> y,
                       const TrainConfig& config = {});

Prediction predict(const AttributionModel& model, std::span<const double> x);
std::vector<Prediction> predict_batch(const AttributionModel& model, const Eigen::MatrixXd& x);
std::vector<double> softmax(std::span<const double> logits);

double accuracy(std::span<const std::string> predicted, std::span<const std::string> truth);
// Unweighted mean of per-class F1 over the classes present in either list.
double macro_f1(std::span<const std::string> predicted, std::span<const std::string> truth);

double cosine_distance(std::span<const double> a, std::span<const double> b);

struct CosineDiagnostic {
  std::optional<double> mean_dist_correct;
  std::optional<double> mean_dist_misclassified;
};
// Distances from the mean training vector of one author to each of that
// author's test vectors, averaged by prediction outcome.
CosineDiagnostic cosine_distance_diagnostic(const std::vector<std::vector<double>>& train_vectors,
                                            const std::vector<std::vector<double>>& test_vectors,
                                            const std::vector<bool>& correct);

nlohmann::json to_json(const TrainConfig& c);
TrainConfig train_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AttributionModel& m);
AttributionModel model_from_json(const nlohmann::json& j);

}  // namespace stylofair::model
