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

// Reduced writeprints features: six lexical scalars followed by char, word
// and POS n-gram blocks, plus a plain normalized char-n-gram profile.

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "stylofair/corpus.hpp"

namespace stylofair::features {

inline constexpr size_t kBlockSize = 1000;
inline constexpr size_t kScalarCount = 6;
inline constexpr size_t kMaxOrder = 3;

enum class PosTag { NOUN, VERB, ADJ, ADV, PRON, DET, ADP, NUM, CONJ, PRT, PUNCT, X };
std::string_view to_string(PosTag tag);

// Tags the output of text::tokenize (words and punctuation tokens alike).
std::vector<PosTag> pos_tag(std::span<const std::string> tokens);

double yules_k(std::span<const std::string> tokens);           // throws DataError on empty
double type_token_ratio(std::span<const std::string> tokens);  // throws DataError on empty

// avg word length, median word length, word-length std, total characters,
// Yule's K, type-token ratio. Word lengths are in code points over word
// tokens; K and TTR use lowercased word tokens.
std::array<double, kScalarCount> lexical_scalars(std::string_view text);

using FeatureVector = std::vector<double>;

struct VocabSpec {
  std::vector<std::string> char_ngrams;
  std::vector<std::string> word_ngrams;  // tokens joined by ' '
  std::vector<std::string> pos_ngrams;   // tags joined by ' '
  std::vector<double> feature_means;
  std::vector<double> feature_stds;

  size_t dimension() const {
    return kScalarCount + char_ngrams.size() + word_ngrams.size() + pos_ngrams.size();
  }
  bool operator==(const VocabSpec&) const = default;
};

nlohmann::json to_json(const VocabSpec& v);
VocabSpec vocab_from_json(const nlohmann::json& j);

// Per-comment gram counts for the three blocks, all orders 1..3 pooled.
std::array<std::unordered_map<std::string, uint32_t>, 3> count_ngrams(std::string_view text);

VocabSpec fit_vocab(std::span<const corpus::Comment> train_comments,
                    size_t block_size = kBlockSize);
FeatureVector extract(const corpus::Comment& comment, const VocabSpec& vocab);
// Pre-standardization vector.
FeatureVector extract_raw(const corpus::Comment& comment, const VocabSpec& vocab);
// Counts of vocab char grams over the sum of those counts.
std::vector<double> extract_char_ngram_profile(const corpus::Comment& comment,
                                               const VocabSpec& vocab);

// ---------------------------------------------------------------------------
// Cached path for experiments: every comment is analysed once against shared
// gram dictionaries, after which fitting and extraction are integer work.
// Results equal fit_vocab / extract bit for bit.

struct CommentAnalysis {
  std::array<double, kScalarCount> scalars{};
  std::array<std::vector<std::pair<uint32_t, uint32_t>>, 3> grams;  // (id, count), id-sorted
  std::array<uint64_t, 3> totals{};
};

class FeatureSpace {
 public:
  FeatureSpace();
  ~FeatureSpace();
  FeatureSpace(const FeatureSpace&) = delete;
  FeatureSpace& operator=(const FeatureSpace&) = delete;

  // Thread-safe; repeated calls for the same comment id return the cached entry.
  const CommentAnalysis& analyze(const corpus::Comment& comment);

  VocabSpec fit(std::span<const CommentAnalysis* const> train, size_t block_size = kBlockSize);
  // Raw vectors, then standardized in place with the vocab's parameters.
  FeatureVector extract(const CommentAnalysis& analysis, const VocabSpec& vocab);
  FeatureVector extract_raw(const CommentAnalysis& analysis, const VocabSpec& vocab);
  std::vector<FeatureVector> extract_batch(std::span<const CommentAnalysis* const> batch,
                                           const VocabSpec& vocab, bool standardized = true);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

void standardize(FeatureVector& v, const VocabSpec& vocab);

}  // namespace stylofair::features
