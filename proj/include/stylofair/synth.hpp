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

// Synthetic pseudonymous corpora with controllable per-author and per-group
// style signals, written in the ingest store format.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "stylofair/corpus.hpp"
#include "stylofair/flair.hpp"
#include "stylofair/ingest.hpp"
#include "stylofair/model.hpp"

namespace stylofair::synth {

struct SynthConfig {
  DatasetKind attribute = DatasetKind::kGender;
  size_t n_authors_per_group = 40;
  double group_effect = 0.0;
  double author_effect = 1.0;
  size_t vocab_size = 2000;
  size_t comments_per_author = 60;
  size_t min_words = 128;
  size_t max_words = 300;
  size_t n_native_languages = 3;
  uint64_t seed = 0;
  // Multiplies author_effect for every author of the given group label.
  std::map<std::string, double> author_effect_scale;
  std::string subreddit = "synthetic";

  // Throws UsageError on an infeasible or invalid configuration.
  void validate() const;
  bool operator==(const SynthConfig&) const = default;
};

nlohmann::json to_json(const SynthConfig& c);
SynthConfig synth_config_from_json(const nlohmann::json& j);

// The two group labels generated for an attribute: (F, M), (N, nN), (GenX, GenZ).
std::pair<std::string, std::string> group_labels(DatasetKind kind);

// Synthetic native languages, in the order they are assigned.
const std::vector<std::string>& native_languages();

// Real English words, most frequent first, extended with suffixed forms.
std::vector<std::string> vocabulary(size_t size);

struct StyleProfile {
  std::vector<double> unigram_logits;
  std::vector<double> punctuation_rates;  // comma per word; then '.', '!', '?' sentence ends
  double mean_sentence_length = 14.0;
};

struct SynthAuthor {
  std::string username;
  std::string label;
  std::optional<std::string> native_language;
  StyleProfile profile;
};

struct SynthCorpus {
  std::vector<SynthAuthor> authors;
  std::vector<ingest::RawComment> comments;  // grouped by author, oldest first
  std::vector<ingest::FlairObservation> flairs;
};

SynthCorpus generate(const SynthConfig& config, size_t jobs = 1);
// Writes comments.ndjson and flairs.ndjson.
void write_corpus(const SynthCorpus& corpus, const std::filesystem::path& dir);

// Runs the corpus stage (cleaning, gates, splits) on a synthetic corpus.
std::vector<corpus::SplitAuthor> split_pool(const SynthCorpus& corpus, DatasetKind kind,
                                            size_t jobs = 1);

struct CalibrationStep {
  double author_effect = 0.0;
  double accuracy = 0.0;
};

struct CalibrationOptions {
  SynthConfig base;             // everything except author_effect
  size_t sets_per_evaluation = 3;
  size_t verification_sets = 4;
  size_t max_steps = 10;
  double tolerance = 0.05;
  size_t jobs = 1;
  model::TrainConfig train;
};

struct CalibrationResult {
  SynthConfig config;
  std::vector<CalibrationStep> trace;
  double verification_accuracy = 0.0;
};

// Closed-world accuracy on balanced suspect sets of size n drawn from a
// fresh corpus generated with `config`.
double closed_world_accuracy(const SynthConfig& config, size_t n, size_t sets, size_t jobs,
                             const model::TrainConfig& train);

// Bisects author_effect until closed-world accuracy at size n is within
// tolerance of the target, then verifies on an independently seeded corpus.
CalibrationResult calibrate(double target_accuracy, size_t n, uint64_t seed,
                            const CalibrationOptions& options = {});

}  // namespace stylofair::synth
