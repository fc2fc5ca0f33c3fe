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

// The three audits: composition sweep, equity of odds and forced
// misclassification.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "stylofair/corpus.hpp"
#include "stylofair/features.hpp"
#include "stylofair/model.hpp"
#include "stylofair/stats.hpp"

namespace stylofair::experiments {

enum class MetricKind { kAccuracy, kMacroF1 };
std::string_view to_string(MetricKind m);
MetricKind parse_metric_kind(std::string_view s);
std::string_view to_string(corpus::NativeLanguageMode m);
corpus::NativeLanguageMode parse_nl_mode(std::string_view s);

inline constexpr size_t kDefaultRepeats = 10;
inline constexpr size_t kDefaultHoldoutsPerGroup = 5;

// Assigns each query comment to one suspect-set member (author id). The
// default fits a vocabulary and a logistic-regression model on the set's
// training comments.
using Assigner = std::function<std::vector<std::string>(
    const corpus::SuspectSet& set, std::span<const corpus::Comment* const> queries,
    uint64_t task_seed)>;

struct AuditOptions {
  size_t jobs = 1;
  model::TrainConfig train;
  size_t block_size = features::kBlockSize;
  Assigner assigner;  // empty: logistic regression
};

// Logistic-regression assigner over a shared analysis cache.
class StylometricAttributor {
 public:
  StylometricAttributor(model::TrainConfig train, size_t block_size = features::kBlockSize);

  struct Fitted {
    features::VocabSpec vocab;
    model::AttributionModel model;
  };
  Fitted fit(const corpus::SuspectSet& set);
  std::vector<model::Prediction> classify(const Fitted& fitted,
                                          std::span<const corpus::Comment* const> queries);
  std::vector<features::FeatureVector> vectors(const features::VocabSpec& vocab,
                                               std::span<const corpus::Comment* const> comments);
  Assigner as_assigner();

  size_t models_trained() const { return trained_; }
  size_t models_converged() const { return converged_; }

 private:
  features::FeatureSpace space_;
  model::TrainConfig train_;
  size_t block_size_;
  std::atomic<size_t> trained_{0};
  std::atomic<size_t> converged_{0};
};

struct AuditSetup {
  DatasetKind attribute = DatasetKind::kGender;
  std::string dc;
  std::string ndc;
  size_t n = 8;
  size_t repeats = kDefaultRepeats;
  uint64_t seed = 0;
  corpus::NativeLanguageMode nl_mode = corpus::NativeLanguageMode::kRandom;
  model::TrainConfig train;
};

// ---------------------------------------------------------------------------

struct SweepPoint {
  size_t k = 0;
  size_t repeat = 0;
  double metric = 0.0;
};

struct SweepResult {
  AuditSetup setup;
  MetricKind metric_kind = MetricKind::kAccuracy;
  std::vector<SweepPoint> points;  // sorted by (k, repeat)
  stats::RegressionFit fit;
  size_t models_trained = 0;
  size_t models_converged = 0;
};

SweepResult run_composition_sweep(std::span<const corpus::SplitAuthor> pool,
                                  const AuditSetup& setup, MetricKind metric,
                                  const AuditOptions& options = {});

// ---------------------------------------------------------------------------

struct AuthorRate {
  std::string author_id;
  std::string label;
  size_t n = 0;
  size_t repeat = 0;
  double value = 0.0;
};

struct TestOutcome {
  std::optional<stats::RankSumResult> result;
  std::string error;  // set when the test is undefined
};

struct NormalityOutcome {
  std::optional<stats::NormalityResult> result;
  std::string error;
};

struct OddsResult {
  AuditSetup setup;
  std::vector<AuthorRate> dc_values;   // P(mis | dc) per author and repeat
  std::vector<AuthorRate> ndc_values;
  TestOutcome ranksum;
  NormalityOutcome dc_normality;
  NormalityOutcome ndc_normality;
  size_t models_trained = 0;
  size_t models_converged = 0;
};

OddsResult run_equity_of_odds(std::span<const corpus::SplitAuthor> pool, const AuditSetup& setup,
                              const AuditOptions& options = {});
// Pools per-author values of several runs (e.g. several suspect-set sizes)
// and recomputes the tests.
OddsResult pool_odds(std::span<const OddsResult> runs);

// ---------------------------------------------------------------------------

struct HeldOutRate {
  std::string author_id;
  std::string label;
  size_t n = 0;
  size_t repeat = 0;
  double intra = 0.0;
  double inter = 0.0;
};

struct Comparison {
  std::string name;  // e.g. "P(dc|dc) vs P(ndc|dc)"
  TestOutcome test;
  double mean_first = 0.0;
  double mean_second = 0.0;
  bool significant_05 = false;
  bool significant_01 = false;
};

struct ForcedResult {
  AuditSetup setup;
  size_t holdouts_per_group = kDefaultHoldoutsPerGroup;
  std::vector<HeldOutRate> rates;
  std::vector<Comparison> comparisons;  // the four comparisons, fixed order
  std::vector<std::string> warnings;
  size_t models_trained = 0;
  size_t models_converged = 0;

  // P(dc|dc), P(ndc|dc), P(ndc|ndc), P(dc|ndc) as value lists.
  std::vector<double> dist_dc_dc() const;
  std::vector<double> dist_ndc_dc() const;
  std::vector<double> dist_ndc_ndc() const;
  std::vector<double> dist_dc_ndc() const;
};

ForcedResult run_forced_misclassification(std::span<const corpus::SplitAuthor> pool,
                                          const AuditSetup& setup, size_t holdouts_per_group,
                                          const AuditOptions& options = {});
ForcedResult pool_forced(std::span<const ForcedResult> runs);

// ---------------------------------------------------------------------------

using AuditResult = std::variant<SweepResult, OddsResult, ForcedResult>;

nlohmann::json to_json(const AuditResult& result);
AuditResult audit_result_from_json(const nlohmann::json& j);

// Writes CSV (raw points), JSON (fits and tests) and SVG plots into `dir`;
// returns the written paths.
std::vector<std::filesystem::path> emit_report(const AuditResult& result,
                                               const std::filesystem::path& dir);

}  // namespace stylofair::experiments
