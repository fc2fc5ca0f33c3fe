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

#include "stylofair/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "stylofair/error.hpp"

namespace stylofair::model {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using nlohmann::json;

namespace {

constexpr double kArmijoC = 1e-4;
constexpr double kBacktrack = 0.5;
constexpr double kMinStep = 1e-20;
constexpr size_t kExactCheckEvery = 5;

// Row softmax of `logits` into `probs`; returns the summed cross-entropy.
double softmax_rows(const MatrixXd& logits, std::span<const size_t> y, MatrixXd& probs) {
  probs.resize(logits.rows(), logits.cols());
  double ce = 0.0;
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    const double top = logits.row(i).maxCoeff();
    double z = 0.0;
    for (Eigen::Index c = 0; c < logits.cols(); ++c) {
      const double e = std::exp(logits(i, c) - top);
      probs(i, c) = e;
      z += e;
    }
    probs.row(i) /= z;
    ce += top + std::log(z) - logits(i, static_cast<Eigen::Index>(y[i]));
  }
  return ce;
}

double frob_dot(const MatrixXd& a, const MatrixXd& b) { return a.cwiseProduct(b).sum(); }

void check_finite(const MatrixXd& x) {
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    if (!x.row(i).allFinite())
      throw DataError("non-finite feature in training row " + std::to_string(i));
}

}  // namespace

std::vector<double> softmax(std::span<const double> logits) {
  std::vector<double> p(logits.begin(), logits.end());
  if (p.empty()) return p;
  const double top = *std::max_element(p.begin(), p.end());
  double z = 0.0;
  for (double& v : p) z += (v = std::exp(v - top));
  for (double& v : p) v /= z;
  return p;
}

Objective objective(const MatrixXd& weights, const VectorXd& bias, const MatrixXd& x,
                    std::span<const size_t> y, double l2_lambda) {
  const double m = static_cast<double>(x.rows());
  MatrixXd logits = x * weights.transpose();
  logits.rowwise() += bias.transpose();
  MatrixXd probs;
  const double ce = softmax_rows(logits, y, probs);
  for (size_t i = 0; i < y.size(); ++i) probs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(y[i])) -= 1.0;
  probs /= m;
  Objective out;
  out.loss = ce / m + 0.5 * l2_lambda * weights.squaredNorm();
  out.grad_weights = probs.transpose() * x + l2_lambda * weights;
  out.grad_bias = probs.colwise().sum().transpose();
  return out;
}

AttributionModel train(const MatrixXd& x, std::span<const std::string> y, const TrainConfig& config) {
  if (static_cast<size_t>(x.rows()) != y.size())
    throw DataError("feature rows and labels differ in length");
  if (x.rows() == 0) throw DataError("cannot train on an empty set");
  check_finite(x);
  if (!(config.l2_lambda >= 0.0)) throw UsageError("l2_lambda must be non-negative");

  AttributionModel model;
  model.config = config;
  const std::set<std::string> distinct(y.begin(), y.end());
  model.class_labels.assign(distinct.begin(), distinct.end());
  if (model.class_labels.size() < 2) throw DataError("training needs at least two distinct labels");
  std::map<std::string, size_t> index;
  for (size_t c = 0; c < model.class_labels.size(); ++c) index[model.class_labels[c]] = c;
  std::vector<size_t> yi(y.size());
  for (size_t i = 0; i < y.size(); ++i) yi[i] = index.at(y[i]);

  const Eigen::Index m = x.rows();
  const Eigen::Index n_classes = static_cast<Eigen::Index>(model.class_labels.size());
  const double lambda = config.l2_lambda;
  const double inv_m = 1.0 / static_cast<double>(m);

  // Weights live in the row space of x: W = A x, so every product below is
  // against the Gram matrix instead of the (wide) feature matrix.
  const MatrixXd gram = x * x.transpose();
  MatrixXd coef = MatrixXd::Zero(n_classes, m);   // A
  MatrixXd gram_coef = MatrixXd::Zero(m, n_classes);  // K A^T
  VectorXd bias = VectorXd::Zero(n_classes);

  MatrixXd logits = MatrixXd::Zero(m, n_classes);
  MatrixXd probs;
  double loss = softmax_rows(logits, yi, probs) * inv_m;
  TrainReport& report = model.report;
  report.loss_history.push_back(loss);

  MatrixXd dir, gram_dir, prev_dir;
  VectorXd grad_b, prev_grad_b;
  double prev_norm2 = 0.0, prev_step = 0.0;
  size_t gated_passes = 0;
  const double fro_gate =
      config.tolerance * std::sqrt(static_cast<double>(n_classes) * static_cast<double>(x.cols() + 1));

  for (size_t iter = 0;; ++iter) {
    MatrixXd resid = probs;
    for (Eigen::Index i = 0; i < m; ++i) resid(i, static_cast<Eigen::Index>(yi[i])) -= 1.0;
    resid *= inv_m;
    dir = resid.transpose() + lambda * coef;  // gradient wrt W is dir * x
    grad_b = resid.colwise().sum().transpose();
    gram_dir = gram * dir.transpose();
    const double norm2 = frob_dot(dir.transpose(), gram_dir) + grad_b.squaredNorm();

    // exact max-norm only on every kExactCheckEvery-th pass under the Frobenius gate
    const bool gated = std::sqrt(std::max(0.0, norm2)) < fro_gate;
    if (gated && (gated_passes++ % kExactCheckEvery == 0 || iter >= config.max_iters)) {
      const MatrixXd grad_w = dir * x;
      const double max_norm = std::max(grad_w.cwiseAbs().maxCoeff(), grad_b.cwiseAbs().maxCoeff());
      report.grad_max_norm = max_norm;
      if (max_norm < config.tolerance) {
        report.converged = true;
        break;
      }
    }
    if (iter >= config.max_iters) break;

    double step = 1.0;
    if (iter > 0) {
      const double cross = frob_dot(prev_dir.transpose(), gram_dir) + prev_grad_b.dot(grad_b);
      const double denom = prev_norm2 - cross;
      if (denom > 0.0 && std::isfinite(denom)) step = prev_step * prev_norm2 / denom;
      step = std::clamp(step, 1e-10, 1e10);
    }

    bool accepted = false;
    MatrixXd trial_coef, trial_gram_coef, trial_logits, trial_probs;
    VectorXd trial_bias;
    double trial_loss = 0.0, trial_reg = 0.0;
    while (step >= kMinStep) {
      trial_coef = coef - step * dir;
      trial_gram_coef = gram_coef - step * gram_dir;
      trial_bias = bias - step * grad_b;
      trial_reg = frob_dot(trial_coef.transpose(), trial_gram_coef);
      trial_logits = trial_gram_coef;
      trial_logits.rowwise() += trial_bias.transpose();
      trial_loss = softmax_rows(trial_logits, yi, trial_probs) * inv_m + 0.5 * lambda * trial_reg;
      if (std::isfinite(trial_loss) && trial_loss <= loss - kArmijoC * step * norm2) {
        accepted = true;
        break;
      }
      step *= kBacktrack;
    }
    if (!accepted) break;  // no representable descent step left

    coef = std::move(trial_coef);
    gram_coef = std::move(trial_gram_coef);
    bias = std::move(trial_bias);
    logits = std::move(trial_logits);
    probs = std::move(trial_probs);
    loss = trial_loss;
    report.loss_history.push_back(loss);
    report.iterations = iter + 1;
    prev_dir = dir;
    prev_grad_b = grad_b;
    prev_norm2 = norm2;
    prev_step = step;
  }

  report.final_loss = loss;
  model.weights = coef * x;
  model.bias = bias;
  const Objective obj = objective(model.weights, model.bias, x, yi, lambda);
  report.grad_max_norm =
      std::max(obj.grad_weights.cwiseAbs().maxCoeff(), obj.grad_bias.cwiseAbs().maxCoeff());
  return model;
}

Prediction predict(const AttributionModel& model, std::span<const double> x) {
  if (x.size() != model.n_features())
    throw DataError("feature vector has " + std::to_string(x.size()) + " entries, model expects " +
                    std::to_string(model.n_features()));
  const Eigen::Map<const VectorXd> v(x.data(), static_cast<Eigen::Index>(x.size()));
  const VectorXd logits = model.weights * v + model.bias;
  Prediction p;
  p.probabilities = softmax(std::span<const double>(logits.data(), static_cast<size_t>(logits.size())));
  for (size_t c = 1; c < p.probabilities.size(); ++c)
    if (p.probabilities[c] > p.probabilities[p.predicted_index]) p.predicted_index = c;
  p.predicted_label = model.class_labels[p.predicted_index];
  return p;
}

std::vector<Prediction> predict_batch(const AttributionModel& model, const MatrixXd& x) {
  std::vector<Prediction> out;
  out.reserve(static_cast<size_t>(x.rows()));
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const VectorXd row = x.row(i).transpose();
    out.push_back(predict(model, std::span<const double>(row.data(), static_cast<size_t>(row.size()))));
  }
  return out;
}

double accuracy(std::span<const std::string> predicted, std::span<const std::string> truth) {
  if (predicted.size() != truth.size() || truth.empty())
    throw DataError("accuracy needs equally sized, non-empty prediction and truth lists");
  size_t hits = 0;
  for (size_t i = 0; i < truth.size(); ++i) hits += predicted[i] == truth[i];
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

double macro_f1(std::span<const std::string> predicted, std::span<const std::string> truth) {
  if (predicted.size() != truth.size() || truth.empty())
    throw DataError("macro F1 needs equally sized, non-empty prediction and truth lists");
  std::set<std::string> classes(truth.begin(), truth.end());
  classes.insert(predicted.begin(), predicted.end());
  double sum = 0.0;
  for (const auto& c : classes) {
    size_t tp = 0, fp = 0, fn = 0;
    for (size_t i = 0; i < truth.size(); ++i) {
      const bool p = predicted[i] == c;
      const bool t = truth[i] == c;
      tp += p && t;
      fp += p && !t;
      fn += !p && t;
    }
    const double denom = 2.0 * tp + fp + fn;
    sum += denom > 0.0 ? 2.0 * tp / denom : 0.0;
  }
  return sum / static_cast<double>(classes.size());
}

double cosine_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DataError("cosine distance of vectors with different lengths");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 1.0;
  return 1.0 - dot / (std::sqrt(na) * std::sqrt(nb));
}

CosineDiagnostic cosine_distance_diagnostic(const std::vector<std::vector<double>>& train_vectors,
                                            const std::vector<std::vector<double>>& test_vectors,
                                            const std::vector<bool>& correct) {
  if (train_vectors.empty()) throw DataError("cosine diagnostic needs training vectors");
  if (test_vectors.size() != correct.size())
    throw DataError("cosine diagnostic needs one outcome per test vector");
  std::vector<double> mean(train_vectors.front().size(), 0.0);
  for (const auto& v : train_vectors) {
    if (v.size() != mean.size()) throw DataError("training vectors differ in length");
    for (size_t d = 0; d < v.size(); ++d) mean[d] += v[d];
  }
  for (double& v : mean) v /= static_cast<double>(train_vectors.size());
  double sums[2] = {0.0, 0.0};
  size_t counts[2] = {0, 0};
  for (size_t i = 0; i < test_vectors.size(); ++i) {
    const int g = correct[i] ? 0 : 1;
    sums[g] += cosine_distance(mean, test_vectors[i]);
    ++counts[g];
  }
  CosineDiagnostic out;
  if (counts[0]) out.mean_dist_correct = sums[0] / static_cast<double>(counts[0]);
  if (counts[1]) out.mean_dist_misclassified = sums[1] / static_cast<double>(counts[1]);
  return out;
}

json to_json(const TrainConfig& c) {
  return {{"l2_lambda", c.l2_lambda},
          {"max_iters", c.max_iters},
          {"tolerance", c.tolerance},
          {"seed", c.seed}};
}

TrainConfig train_config_from_json(const json& j) {
  TrainConfig c;
  c.l2_lambda = j.value("l2_lambda", c.l2_lambda);
  c.max_iters = j.value("max_iters", c.max_iters);
  c.tolerance = j.value("tolerance", c.tolerance);
  c.seed = j.value("seed", c.seed);
  return c;
}

json to_json(const AttributionModel& m) {
  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(m.weights.size()));
  for (Eigen::Index r = 0; r < m.weights.rows(); ++r)
    for (Eigen::Index c = 0; c < m.weights.cols(); ++c) flat.push_back(m.weights(r, c));
  return {{"class_labels", m.class_labels},
          {"n_features", m.weights.cols()},
          {"weights", flat},
          {"bias", std::vector<double>(m.bias.data(), m.bias.data() + m.bias.size())},
          {"train_config", to_json(m.config)},
          {"report",
           {{"iterations", m.report.iterations},
            {"converged", m.report.converged},
            {"final_loss", m.report.final_loss},
            {"grad_max_norm", m.report.grad_max_norm}}}};
}

AttributionModel model_from_json(const json& j) {
  AttributionModel m;
  try {
    j.at("class_labels").get_to(m.class_labels);
    const auto cols = j.at("n_features").get<Eigen::Index>();
    const auto flat = j.at("weights").get<std::vector<double>>();
    const auto bias = j.at("bias").get<std::vector<double>>();
    const auto rows = static_cast<Eigen::Index>(m.class_labels.size());
    if (static_cast<Eigen::Index>(flat.size()) != rows * cols ||
        static_cast<Eigen::Index>(bias.size()) != rows)
      throw DataError("model weight shape does not match its class labels");
    m.weights.resize(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) m.weights(r, c) = flat[static_cast<size_t>(r * cols + c)];
    m.bias = Eigen::Map<const VectorXd>(bias.data(), rows);
    m.config = train_config_from_json(j.at("train_config"));
    if (j.contains("report")) {
      const auto& r = j["report"];
      m.report.iterations = r.value("iterations", size_t{0});
      m.report.converged = r.value("converged", false);
      m.report.final_loss = r.value("final_loss", 0.0);
      m.report.grad_max_norm = r.value("grad_max_norm", 0.0);
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed model: ") + e.what());
  }
  return m;
}

}  // namespace stylofair::model
