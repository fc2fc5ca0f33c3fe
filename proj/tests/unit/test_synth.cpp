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

#include <set>

#include "stylofair/error.hpp"
#include "stylofair/synth.hpp"
#include "stylofair/text.hpp"

namespace stylofair::synth {
namespace {

SynthConfig small_config(DatasetKind kind = DatasetKind::kGender) {
  SynthConfig c;
  c.attribute = kind;
  c.n_authors_per_group = 3;
  c.comments_per_author = 50;
  c.seed = 5;
  return c;
}

TEST(Config, Validation) {
  EXPECT_NO_THROW(small_config().validate());
  auto bad = small_config();
  bad.comments_per_author = 40;  // 40 * 128 words falls short of the author threshold
  EXPECT_THROW(bad.validate(), UsageError);
  bad = small_config();
  bad.min_words = 100;
  EXPECT_THROW(bad.validate(), UsageError);
  bad = small_config();
  bad.author_effect = -0.1;
  EXPECT_THROW(bad.validate(), UsageError);
  bad = small_config();
  bad.max_words = 127;
  EXPECT_THROW(bad.validate(), UsageError);
  bad = small_config();
  bad.author_effect_scale["nN"] = 0.5;
  EXPECT_THROW(bad.validate(), UsageError);
  bad = small_config(DatasetKind::kLanguage);
  bad.n_native_languages = 0;
  EXPECT_THROW(bad.validate(), UsageError);
  EXPECT_THROW(generate(bad), UsageError);
}

TEST(Config, JsonRoundTrip) {
  auto c = small_config(DatasetKind::kLanguage);
  c.group_effect = 0.25;
  c.author_effect_scale["N"] = 0.5;
  c.subreddit = "elsewhere";
  EXPECT_EQ(synth_config_from_json(to_json(c)), c);
}

TEST(Vocabulary, DistinctWordsOfRequestedSize) {
  const auto words = vocabulary(300);
  EXPECT_EQ(words.size(), 300u);
  EXPECT_EQ(std::set<std::string>(words.begin(), words.end()).size(), 300u);
  EXPECT_EQ(vocabulary(300), words);
}

TEST(Generate, ShapeAndDeterminism) {
  const auto config = small_config();
  const auto a = generate(config);
  EXPECT_EQ(a.authors.size(), 6u);
  EXPECT_EQ(a.comments.size(), 6u * 50u);
  EXPECT_EQ(a.flairs.size(), 6u);
  const auto b = generate(config, 3);
  EXPECT_EQ(a.comments, b.comments);
  EXPECT_EQ(a.flairs, b.flairs);
  auto other = config;
  other.seed = 6;
  EXPECT_NE(generate(other).comments, a.comments);
}

TEST(Generate, CommentsAreClean) {
  const auto corpus = generate(small_config());
  std::set<std::string> ids;
  for (size_t i = 0; i < corpus.comments.size(); ++i) {
    const auto& c = corpus.comments[i];
    EXPECT_TRUE(ids.insert(c.comment_id).second);
    EXPECT_EQ(text::clean_text(c.body), c.body);
    const size_t words = text::word_count(c.body);
    EXPECT_GE(words, 128u);
    EXPECT_LE(words, 300u);
    if (i > 0 && corpus.comments[i - 1].username == c.username)
      EXPECT_LT(corpus.comments[i - 1].created_utc, c.created_utc);
  }
}

TEST(Generate, FlairsParseToAuthorLabels) {
  for (auto kind : {DatasetKind::kGender, DatasetKind::kLanguage, DatasetKind::kGeneration}) {
    const auto corpus = generate(small_config(kind));
    const auto [dc, ndc] = group_labels(kind);
    for (const auto& author : corpus.authors) {
      EXPECT_TRUE(author.label == dc || author.label == ndc);
      const auto it = std::find_if(corpus.flairs.begin(), corpus.flairs.end(),
                                   [&](const auto& f) { return f.username == author.username; });
      ASSERT_NE(it, corpus.flairs.end());
      const auto parsed = parse_flair(kind, it->flair_text);
      ASSERT_TRUE(std::holds_alternative<ParsedAttribute>(parsed)) << it->flair_text;
      EXPECT_EQ(std::get<ParsedAttribute>(parsed).label, author.label);
      if (kind == DatasetKind::kLanguage && author.label == "nN")
        EXPECT_EQ(std::get<ParsedAttribute>(parsed).native_language, author.native_language);
    }
  }
}

TEST(SplitPool, MostAuthorsSurviveTheGates) {
  const auto config = small_config();
  const auto pool = split_pool(generate(config), config.attribute);
  EXPECT_GE(pool.size(), 4u);
  for (const auto& a : pool) {
    EXPECT_EQ(a.test_comments.size(), corpus::kTestComments);
    EXPECT_GE(a.train_words(), corpus::kTrainWordsLow);
    EXPECT_LE(a.train_words(), corpus::kTrainWordsHigh);
  }
}

TEST(Calibration, RejectsInvalidTargets) {
  EXPECT_THROW(calibrate(0.0, 8, 1), UsageError);
  EXPECT_THROW(calibrate(1.5, 8, 1), UsageError);
  EXPECT_THROW(calibrate(0.8, 1, 1), UsageError);
}

TEST(Calibration, AccuracyGrowsWithAuthorEffect) {
  auto config = small_config();
  config.n_authors_per_group = 4;
  config.author_effect = 0.0;
  const double flat = closed_world_accuracy(config, 4, 1, 1, {});
  config.author_effect = 1.0;
  const double strong = closed_world_accuracy(config, 4, 1, 1, {});
  EXPECT_LT(flat, 0.5);
  EXPECT_GT(strong, 0.9);
}

}  // namespace
}  // namespace stylofair::synth
