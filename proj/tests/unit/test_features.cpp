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
#include <numeric>
#include <set>

#include "stylofair/error.hpp"
#include "stylofair/features.hpp"
#include "test_support.hpp"

namespace stylofair::features {
namespace {

using testing::english_text;

std::vector<std::string> words(std::initializer_list<const char*> list) {
  return {list.begin(), list.end()};
}

corpus::Comment comment(const std::string& id, const std::string& text) {
  return {id, "a", 0, text, text::word_count(text)};
}

TEST(Lexical, YulesK) {
  EXPECT_DOUBLE_EQ(yules_k(words({"a", "b", "c", "d"})), 0.0);
  EXPECT_NEAR(yules_k(words({"a", "a", "a", "a", "a", "a", "a", "a", "a", "a"})), 9000.0, 1e-9);
  EXPECT_NEAR(yules_k(words({"a", "a", "b"})), 2222.222222222222, 1e-9);
  EXPECT_THROW(yules_k(std::vector<std::string>{}), DataError);
}

TEST(Lexical, TypeTokenRatio) {
  EXPECT_DOUBLE_EQ(type_token_ratio(words({"a", "b", "a", "c"})), 0.75);
  EXPECT_DOUBLE_EQ(type_token_ratio(words({"x"})), 1.0);
  EXPECT_THROW(type_token_ratio(std::vector<std::string>{}), DataError);
}

TEST(Lexical, Scalars) {
  const auto s = lexical_scalars("ab abcd");
  EXPECT_DOUBLE_EQ(s[0], 3.0);  // mean word length
  EXPECT_DOUBLE_EQ(s[1], 3.0);  // median
  EXPECT_DOUBLE_EQ(s[2], 1.0);  // population std
  EXPECT_DOUBLE_EQ(s[3], 7.0);  // characters
  EXPECT_DOUBLE_EQ(s[4], 0.0);
  EXPECT_DOUBLE_EQ(s[5], 1.0);
  const auto odd = lexical_scalars("a bbb cc");
  EXPECT_DOUBLE_EQ(odd[1], 2.0);
  const auto none = lexical_scalars("...");
  EXPECT_DOUBLE_EQ(none[0], 0.0);
  EXPECT_DOUBLE_EQ(none[3], 3.0);
}

TEST(Lexical, ScalarsCountCodePoints) {
  const auto s = lexical_scalars("café");
  EXPECT_DOUBLE_EQ(s[0], 4.0);
  EXPECT_DOUBLE_EQ(s[3], 4.0);
}

std::vector<PosTag> tags_of(std::initializer_list<const char*> list) {
  const auto toks = words(list);
  return pos_tag(toks);
}

TEST(PartOfSpeech, SmallSentences) {
  using enum PosTag;
  EXPECT_EQ(tags_of({"the", "cat", "runs"}), (std::vector<PosTag>{DET, NOUN, VERB}));
  EXPECT_EQ(tags_of({"they", "walk", "quickly"}), (std::vector<PosTag>{PRON, VERB, ADV}));
  EXPECT_EQ(tags_of({"I", "want", "to", "swim", "."}), (std::vector<PosTag>{PRON, VERB, PRT, VERB, PUNCT}));
  EXPECT_EQ(tags_of({"my", "dog", "and", "42", "beautiful", "boxes"}),
            (std::vector<PosTag>{PRON, NOUN, CONJ, NUM, ADJ, NOUN}));
  EXPECT_EQ(tags_of({"in", "the", "morning", "🎉"}), (std::vector<PosTag>{ADP, DET, VERB, X}));
  EXPECT_TRUE(tags_of({}).empty());
  EXPECT_EQ(to_string(PosTag::PUNCT), "PUNCT");
}

TEST(Ngrams, CharacterAndWordCounts) {
  const auto counts = count_ngrams("aaa aaa");
  EXPECT_EQ(counts[0].at("a"), 6u);
  EXPECT_EQ(counts[0].at("aa"), 4u);
  EXPECT_EQ(counts[0].at("aaa"), 2u);
  EXPECT_EQ(counts[0].size(), 3u);
  EXPECT_EQ(counts[1].at("aaa"), 2u);
  EXPECT_EQ(counts[1].at("aaa aaa"), 1u);
  EXPECT_EQ(counts[1].size(), 2u);
  EXPECT_EQ(counts[2].at("NOUN"), 2u);
  EXPECT_EQ(counts[2].at("NOUN NOUN"), 1u);
}

TEST(Ngrams, WordGramsAreCaseFolded) {
  const auto counts = count_ngrams("The the THE");
  EXPECT_EQ(counts[1].at("the"), 3u);
  EXPECT_EQ(counts[1].at("the the the"), 1u);
}

std::vector<corpus::Comment> training_set(size_t n) {
  std::vector<corpus::Comment> out;
  for (size_t i = 0; i < n; ++i) out.push_back(comment("t" + std::to_string(i), english_text(140, i * 11)));
  return out;
}

TEST(Vocabulary, BlocksCappedAndOrdered) {
  const auto train = training_set(12);
  const auto vocab = fit_vocab(train);
  EXPECT_LE(vocab.char_ngrams.size(), kBlockSize);
  EXPECT_LE(vocab.word_ngrams.size(), kBlockSize);
  EXPECT_LE(vocab.pos_ngrams.size(), kBlockSize);
  EXPECT_EQ(vocab.dimension(), kScalarCount + vocab.char_ngrams.size() + vocab.word_ngrams.size() +
                                   vocab.pos_ngrams.size());

  std::unordered_map<std::string, uint64_t> freq;
  std::set<std::string> distinct_chars;
  for (const auto& c : train) {
    const auto counts = count_ngrams(c.text);
    for (const auto& [g, n] : counts[1]) freq[g] += n;
    for (const auto& [g, n] : counts[0]) distinct_chars.insert(g);
  }
  EXPECT_EQ(vocab.char_ngrams.size(), std::min(kBlockSize, distinct_chars.size()));
  EXPECT_EQ(vocab.word_ngrams.size(), std::min(kBlockSize, freq.size()));
  for (size_t i = 1; i < vocab.word_ngrams.size(); ++i) {
    const auto& prev = vocab.word_ngrams[i - 1];
    const auto& cur = vocab.word_ngrams[i];
    ASSERT_GE(freq[prev], freq[cur]);
    if (freq[prev] == freq[cur]) EXPECT_LT(prev, cur);
  }
}

TEST(Vocabulary, TiesBrokenLexicographically) {
  const std::vector<corpus::Comment> train = {comment("1", "zeta alpha mid mid")};
  const auto vocab = fit_vocab(train, 2);
  EXPECT_EQ(vocab.word_ngrams, (std::vector<std::string>{"mid", "alpha"}));
  const auto wide = fit_vocab(train, 4);
  EXPECT_EQ(wide.word_ngrams, (std::vector<std::string>{"mid", "alpha", "alpha mid", "alpha mid mid"}));
}

TEST(Vocabulary, StandardizedTrainingColumns) {
  const auto train = training_set(15);
  const auto vocab = fit_vocab(train);
  std::vector<FeatureVector> rows;
  for (const auto& c : train) rows.push_back(extract(c, vocab));
  for (size_t d = 0; d < vocab.dimension(); ++d) {
    double sum = 0.0, ss = 0.0;
    for (const auto& r : rows) sum += r[d];
    const double mean = sum / static_cast<double>(rows.size());
    for (const auto& r : rows) ss += (r[d] - mean) * (r[d] - mean);
    const double sd = std::sqrt(ss / static_cast<double>(rows.size()));
    EXPECT_NEAR(mean, 0.0, 1e-9) << d;
    if (vocab.feature_stds[d] > 0.0)
      EXPECT_NEAR(sd, 1.0, 1e-9) << d;
    else
      EXPECT_EQ(sd, 0.0) << d;
  }
}

TEST(Vocabulary, RawBlocksAreRelativeFrequencies) {
  const auto train = training_set(6);
  const auto vocab = fit_vocab(train, 100000);
  const auto raw = extract_raw(train[0], vocab);
  size_t offset = kScalarCount;
  for (size_t size : {vocab.char_ngrams.size(), vocab.word_ngrams.size(), vocab.pos_ngrams.size()}) {
    const double total = std::accumulate(raw.begin() + static_cast<long>(offset),
                                         raw.begin() + static_cast<long>(offset + size), 0.0);
    EXPECT_NEAR(total, 1.0, 1e-9);
    offset += size;
  }
}

TEST(Vocabulary, FeatureSpaceMatchesStandalone) {
  const auto train = training_set(8);
  const auto vocab = fit_vocab(train);
  FeatureSpace space;
  std::vector<const CommentAnalysis*> analyses;
  for (const auto& c : train) analyses.push_back(&space.analyze(c));
  EXPECT_EQ(space.fit(analyses), vocab);
  const auto held_out = comment("h", english_text(150, 3));
  const auto a = space.extract(space.analyze(held_out), vocab);
  const auto b = extract(held_out, vocab);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
  EXPECT_EQ(&space.analyze(held_out), &space.analyze(held_out));
}

TEST(Vocabulary, UnseenGramsDoNotLeakIn) {
  const auto train = training_set(5);
  const auto vocab = fit_vocab(train);
  const auto probe = comment("p", "qqqxz qqqxz zzyzx blorptastic");
  FeatureSpace space;
  const auto raw = space.extract_raw(space.analyze(probe), vocab);
  EXPECT_EQ(raw.size(), vocab.dimension());
  for (const auto& g : vocab.word_ngrams) EXPECT_EQ(g.find("qqqxz"), std::string::npos);
  // Analysing new text leaves an already fitted vocabulary's output unchanged.
  std::vector<const CommentAnalysis*> analyses;
  for (const auto& c : train) analyses.push_back(&space.analyze(c));
  EXPECT_EQ(space.fit(analyses), vocab);
}

TEST(Vocabulary, JsonRoundTripAndValidation) {
  const auto vocab = fit_vocab(training_set(4), 50);
  EXPECT_EQ(vocab_from_json(to_json(vocab)), vocab);
  auto broken = to_json(vocab);
  broken["feature_means"].erase(0);
  EXPECT_THROW(vocab_from_json(broken), DataError);
  EXPECT_THROW(vocab_from_json(nlohmann::json::object()), DataError);
  EXPECT_THROW(fit_vocab(std::vector<corpus::Comment>{}), DataError);
}

TEST(Vocabulary, CharacterProfileSumsToOne) {
  const auto train = training_set(4);
  const auto vocab = fit_vocab(train);
  const auto profile = extract_char_ngram_profile(train[1], vocab);
  EXPECT_EQ(profile.size(), vocab.char_ngrams.size());
  EXPECT_NEAR(std::accumulate(profile.begin(), profile.end(), 0.0), 1.0, 1e-12);
}

}  // namespace
}  // namespace stylofair::features
