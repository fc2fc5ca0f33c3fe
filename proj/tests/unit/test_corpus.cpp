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

#include <algorithm>
#include <random>
#include <set>

#include "stylofair/corpus.hpp"
#include "stylofair/error.hpp"
#include "test_support.hpp"

namespace stylofair::corpus {
namespace {

using testing::english_text;
using testing::fixture_path;
using testing::record_with_lengths;
using testing::TempDir;

std::vector<size_t> repeated(size_t value, size_t count) { return std::vector<size_t>(count, value); }

TEST(Split, EqualLengthComments) {
  const auto split = split_author(record_with_lengths("a", repeated(500, 20)));
  ASSERT_EQ(split.train_comments.size(), 10u);
  ASSERT_EQ(split.test_comments.size(), 10u);
  EXPECT_EQ(split.train_words(), 5000u);
  EXPECT_EQ(split.test_comments.front().comment_id, "a_10");
  EXPECT_EQ(split.test_comments.back().comment_id, "a_19");
}

TEST(Split, TooFewLaterCommentsIsInfeasible) {
  EXPECT_THROW(split_author(record_with_lengths("a", repeated(500, 19))), SplitInfeasibleError);
}

TEST(Split, UnreachableWindowIsInfeasible) {
  EXPECT_THROW(split_author(record_with_lengths("a", repeated(3000, 30))), SplitInfeasibleError);
  EXPECT_THROW(split_author(record_with_lengths("a", repeated(200, 10))), SplitInfeasibleError);
}

TEST(Split, GreedySkipsOvershootingComment) {
  std::vector<size_t> lengths = {3000, 1500, 600, 500};
  lengths.resize(lengths.size() + 12, 140);
  const auto split = split_author(record_with_lengths("g", lengths));
  std::vector<std::string> train_ids;
  for (const auto& c : split.train_comments) train_ids.push_back(c.comment_id);
  EXPECT_EQ(train_ids, (std::vector<std::string>{"g_00", "g_01", "g_03"}));
  EXPECT_EQ(split.train_words(), 5000u);
  ASSERT_EQ(split.test_comments.size(), 10u);
  EXPECT_EQ(split.test_comments.front().comment_id, "g_04");
  for (const auto& c : split.test_comments) EXPECT_NE(c.comment_id, "g_02");
}

TEST(Split, UsesChronologicalOrderRegardlessOfInput) {
  auto record = record_with_lengths("a", repeated(500, 22));
  const auto expected = split_author(record);
  std::reverse(record.comments.begin(), record.comments.end());
  const auto split = split_author(record);
  EXPECT_EQ(split.train_comments, expected.train_comments);
  EXPECT_EQ(split.test_comments, expected.test_comments);
}

TEST(Split, InvariantsOverRandomAuthors) {
  std::mt19937_64 gen(42);
  std::uniform_int_distribution<size_t> len(128, 700);
  size_t feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<size_t> lengths(30 + trial % 40);
    for (auto& l : lengths) l = len(gen);
    SplitAuthor split;
    try {
      split = split_author(record_with_lengths("r", lengths));
    } catch (const SplitInfeasibleError&) {
      continue;
    }
    ++feasible;
    EXPECT_GE(split.train_words(), kTrainWordsLow);
    EXPECT_LE(split.train_words(), kTrainWordsHigh);
    ASSERT_EQ(split.test_comments.size(), kTestComments);
    int64_t newest_train = 0;
    std::set<std::string> train_ids;
    for (const auto& c : split.train_comments) {
      newest_train = std::max(newest_train, c.created_utc);
      train_ids.insert(c.comment_id);
    }
    for (const auto& c : split.test_comments) {
      EXPECT_GT(c.created_utc, newest_train);
      EXPECT_EQ(train_ids.count(c.comment_id), 0u);
    }
    EXPECT_TRUE(std::is_sorted(split.test_comments.begin(), split.test_comments.end(),
                               chronological_less));
  }
  EXPECT_GT(feasible, 200u);
}

// Build inputs: English prose comments of a given length.
std::vector<ingest::RawComment> raw_history(const std::string& user, size_t count, size_t words,
                                            const std::string& body_override = {}) {
  std::vector<ingest::RawComment> out;
  for (size_t i = 0; i < count; ++i) {
    out.push_back({user + "_c" + std::to_string(1000 + i), user, "languagelearning",
                   static_cast<int64_t>(1'500'000'000 + i * 3600),
                   body_override.empty() ? english_text(words, i * 7) : body_override});
  }
  return out;
}

TEST(Build, CommentPreparationFilters) {
  const auto ok = prepare_comment({"c1", "u", "s", 1, english_text(150)});
  ASSERT_TRUE(ok.has_value());
  EXPECT_GE(ok->word_count, kMinCommentWords);
  EXPECT_FALSE(prepare_comment({"c2", "u", "s", 1, english_text(60)}).has_value());
  EXPECT_FALSE(prepare_comment({"c3", "u", "s", 1, "[deleted]"}).has_value());
  const std::string german = read_file(fixture_path("text/german_prose.txt"));
  EXPECT_FALSE(prepare_comment({"c4", "u", "s", 1, german}).has_value());
}

TEST(Build, DropReasonsAndRetention) {
  std::vector<ingest::RawComment> raw;
  auto add = [&](const std::vector<ingest::RawComment>& rows) {
    raw.insert(raw.end(), rows.begin(), rows.end());
  };
  add(raw_history("few", 29, 150));
  add(raw_history("short", 40, 140));
  add(raw_history("keeper", 60, 150));
  add(raw_history("german", 60, 0, read_file(fixture_path("text/german_prose.txt"))));
  add(raw_history("noflair", 60, 150));
  add(raw_history("torn", 60, 150));
  const std::vector<ingest::FlairObservation> flairs = {
      {"few", "languagelearning", "English (N)"},
      {"short", "languagelearning", "English (N)"},
      {"keeper", "languagelearning", "German (N) | English (C1)"},
      {"german", "languagelearning", "English (N)"},
      {"torn", "languagelearning", "English (N)"},
      {"torn", "languagelearning", "German (N)"},
  };
  const auto result = build_author_records(raw, flairs, DatasetKind::kLanguage);
  ASSERT_EQ(result.records.size(), 1u);
  const auto& kept = result.records.front();
  EXPECT_EQ(kept.author_id, "keeper");
  EXPECT_EQ(kept.attribute_value, "nN");
  ASSERT_TRUE(kept.native_language.has_value());
  EXPECT_EQ(kept.comments.size(), 60u);
  EXPECT_TRUE(std::is_sorted(kept.comments.begin(), kept.comments.end(), chronological_less));

  const std::vector<DropRecord> expected = {{"few", "min-comment-count"},
                                            {"german", "insufficient-words"},
                                            {"noflair", "no-attribute"},
                                            {"short", "insufficient-words"},
                                            {"torn", "conflicting-flair"}};
  EXPECT_EQ(result.drops, expected);
}

TEST(Build, DuplicateCommentIdsCountOnce) {
  auto raw = raw_history("dup", 20, 150);
  const auto again = raw;
  raw.insert(raw.end(), again.begin(), again.end());
  const std::vector<ingest::FlairObservation> flairs = {{"dup", "x", "English (N)"}};
  const auto result = build_author_records(raw, flairs, DatasetKind::kLanguage);
  ASSERT_EQ(result.drops.size(), 1u);
  EXPECT_EQ(result.drops[0].reason, "min-comment-count");
}

TEST(Build, IndependentOfJobCount) {
  std::vector<ingest::RawComment> raw;
  std::vector<ingest::FlairObservation> flairs;
  for (int u = 0; u < 4; ++u) {
    const std::string name = "user" + std::to_string(u);
    const auto rows = raw_history(name, 45 + u * 5, 150 + u);
    raw.insert(raw.end(), rows.begin(), rows.end());
    flairs.push_back({name, "x", u % 2 ? "English (N)" : "French (N) | English (B2)"});
  }
  const auto serial = build_author_records(raw, flairs, DatasetKind::kLanguage, {1});
  const auto threaded = build_author_records(raw, flairs, DatasetKind::kLanguage, {4});
  ASSERT_EQ(serial.records.size(), threaded.records.size());
  for (size_t i = 0; i < serial.records.size(); ++i)
    EXPECT_EQ(serial.records[i].comments, threaded.records[i].comments);
  EXPECT_EQ(serial.drops, threaded.drops);
}

SplitAuthor pool_author(const std::string& id, const std::string& label,
                        std::optional<std::string> language = std::nullopt) {
  SplitAuthor a;
  a.author_id = id;
  a.attribute_kind = DatasetKind::kLanguage;
  a.attribute_value = label;
  a.native_language = std::move(language);
  return a;
}

std::vector<SplitAuthor> two_group_pool(size_t per_group) {
  std::vector<SplitAuthor> pool;
  for (size_t i = 0; i < per_group; ++i) {
    pool.push_back(pool_author("n" + std::to_string(i), "N", "en"));
    pool.push_back(pool_author("x" + std::to_string(i), "nN", i % 2 ? "de" : "fr"));
  }
  return pool;
}

TEST(Sampling, CompositionAndDisjointness) {
  const auto pool = two_group_pool(20);
  const auto sets = sample_suspect_sets(pool, "N", "nN", 3, 8, 4, 7);
  ASSERT_EQ(sets.size(), 4u);
  std::set<std::string> used;
  for (const auto& s : sets) {
    ASSERT_EQ(s.members.size(), 8u);
    EXPECT_EQ(s.dc_count, 3u);
    EXPECT_EQ(s.ndc_count, 5u);
    for (size_t i = 0; i < s.members.size(); ++i) {
      EXPECT_EQ(s.members[i]->attribute_value, i < 3 ? "N" : "nN");
      EXPECT_TRUE(used.insert(s.members[i]->author_id).second);
    }
  }
}

TEST(Sampling, DeterministicPerSeed) {
  const auto pool = two_group_pool(20);
  auto ids = [](const std::vector<SuspectSet>& sets) {
    std::vector<std::string> out;
    for (const auto& s : sets)
      for (const auto* m : s.members) out.push_back(m->author_id);
    return out;
  };
  EXPECT_EQ(ids(sample_suspect_sets(pool, "N", "nN", 4, 8, 2, 5)),
            ids(sample_suspect_sets(pool, "N", "nN", 4, 8, 2, 5)));
  EXPECT_NE(ids(sample_suspect_sets(pool, "N", "nN", 4, 8, 2, 5)),
            ids(sample_suspect_sets(pool, "N", "nN", 4, 8, 2, 6)));
}

TEST(Sampling, PoolExhaustedReportsShortfall) {
  const auto pool = two_group_pool(10);
  try {
    sample_suspect_sets(pool, "N", "nN", 4, 8, 3, 1);
    FAIL() << "expected exhaustion";
  } catch (const PoolExhaustedError& e) {
    EXPECT_EQ(e.shortfall(), 2);
  }
  EXPECT_THROW(sample_suspect_sets(pool, "N", "nN", 9, 8, 1, 1), UsageError);
  EXPECT_THROW(sample_suspect_sets(pool, "N", "N", 4, 8, 1, 1), UsageError);
}

TEST(Sampling, ExcludedAuthorsNeverDrawn) {
  const auto pool = two_group_pool(10);
  SamplingOptions options;
  options.exclude = {"n0", "n1", "x0"};
  const auto sets = sample_suspect_sets(pool, "N", "nN", 4, 8, 2, 3, options);
  for (const auto& s : sets)
    for (const auto* m : s.members)
      EXPECT_EQ(std::count(options.exclude.begin(), options.exclude.end(), m->author_id), 0);
}

TEST(Sampling, SharedNativeLanguage) {
  std::vector<SplitAuthor> pool;
  for (int i = 0; i < 20; ++i) pool.push_back(pool_author("de" + std::to_string(i), "nN", "de"));
  for (int i = 0; i < 3; ++i) pool.push_back(pool_author("fr" + std::to_string(i), "nN", "fr"));
  for (int i = 0; i < 20; ++i) pool.push_back(pool_author("en" + std::to_string(i), "N", "en"));
  SamplingOptions shared;
  shared.nl_mode = NativeLanguageMode::kShared;
  const auto sets = sample_suspect_sets(pool, "N", "nN", 2, 8, 3, 9, shared);
  for (const auto& s : sets) {
    std::set<std::string> langs;
    for (size_t i = s.dc_count; i < s.members.size(); ++i) langs.insert(*s.members[i]->native_language);
    EXPECT_EQ(langs, std::set<std::string>{"de"});
  }
  // A fourth repeat needs 24 German speakers; only 20 exist and French has 3.
  EXPECT_THROW(sample_suspect_sets(pool, "N", "nN", 2, 8, 4, 9, shared), PoolExhaustedError);
}

TEST(Store, CorpusAndSplitsRoundTrip) {
  TempDir dir;
  std::vector<AuthorRecord> records = {record_with_lengths("a", repeated(500, 20)),
                                       record_with_lengths("b", repeated(250, 40))};
  records[1].attribute_kind = DatasetKind::kLanguage;
  records[1].attribute_value = "nN";
  records[1].native_language = "de";
  records[0].comments[3].text = "quotes \" and\nnewlines 🎉";
  write_corpus(dir / "corpus.ndjson", records);
  const auto back = read_corpus(dir / "corpus.ndjson");
  ASSERT_EQ(back.size(), 2u);
  for (size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(back[i].author_id, records[i].author_id);
    EXPECT_EQ(back[i].attribute_kind, records[i].attribute_kind);
    EXPECT_EQ(back[i].attribute_value, records[i].attribute_value);
    EXPECT_EQ(back[i].native_language, records[i].native_language);
    EXPECT_EQ(back[i].comments, records[i].comments);
  }

  std::vector<SplitAuthor> splits = {split_author(records[0]), split_author(records[1])};
  write_splits(dir / "splits.ndjson", splits);
  const auto splits_back = read_splits(dir / "splits.ndjson", back);
  ASSERT_EQ(splits_back.size(), 2u);
  for (size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(splits_back[i].train_comments, splits[i].train_comments);
    EXPECT_EQ(splits_back[i].test_comments, splits[i].test_comments);
    EXPECT_EQ(splits_back[i].native_language, splits[i].native_language);
  }

  const std::vector<DropRecord> drops = {{"c", "min-comment-count"}, {"d", "split-infeasible"}};
  write_drops(dir / "drops.ndjson", drops);
  EXPECT_EQ(read_drops(dir / "drops.ndjson"), drops);
}

TEST(Store, SplitsReferencingUnknownAuthorAreRejected) {
  TempDir dir;
  const std::vector<AuthorRecord> records = {record_with_lengths("a", repeated(500, 20))};
  write_splits(dir / "splits.ndjson", std::vector<SplitAuthor>{split_author(records[0])});
  EXPECT_THROW(read_splits(dir / "splits.ndjson", std::vector<AuthorRecord>{}), DataError);
}

}  // namespace
}  // namespace stylofair::corpus
