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

#include "stylofair/ingest.hpp"
#include "stylofair/ndjson.hpp"
#include "test_support.hpp"

namespace stylofair::ingest {
namespace {

using testing::fixture_path;
using testing::TempDir;

struct Replay {
  FixtureTransport transport{fixture_path("crawl")};
  ManualClock clock;
  HttpClient client{transport, clock};
};

std::set<std::string> ids(const std::vector<ThreadRef>& refs) {
  std::set<std::string> out;
  for (const auto& r : refs) out.insert(r.thread_id);
  return out;
}

TEST(ListSnapshots, DedupesRecordedIndex) {
  Replay r;
  const auto snaps = list_snapshots(r.client, "languagelearning");
  ASSERT_EQ(snaps.size(), 2u);
  EXPECT_LT(snaps[0].capture_timestamp, snaps[1].capture_timestamp);
  EXPECT_EQ(snaps[0].capture_timestamp, 1551441600);
  for (const auto& s : snaps) {
    EXPECT_NE(s.archived_url.find("/r/languagelearning"), std::string::npos);
    EXPECT_EQ(s.subreddit, "languagelearning");
  }
}

TEST(ListSnapshots, ZeroCapturesIsEmpty) {
  Replay r;
  EXPECT_TRUE(list_snapshots(r.client, "emptysub").empty());
  EXPECT_TRUE(parse_cdx_rows("x", "").empty());
  EXPECT_TRUE(parse_cdx_rows("x", "[[\"timestamp\",\"original\"]]").empty());
}

TEST(ListSnapshots, RejectsInvalidName) {
  Replay r;
  EXPECT_THROW(list_snapshots(r.client, "bad name!"), UsageError);
  EXPECT_TRUE(is_valid_subreddit("language_learning2"));
  EXPECT_FALSE(is_valid_subreddit(""));
}

TEST(ArchiveTimestamp, ToUtc) {
  EXPECT_EQ(archive_timestamp_to_utc("19700101000000"), 0);
  EXPECT_EQ(archive_timestamp_to_utc("20200615083000"), 1592209800);
  EXPECT_THROW(archive_timestamp_to_utc("2020x"), DataError);
}

TEST(ExtractThreadIds, Examples) {
  EXPECT_TRUE(extract_thread_ids("").empty());
  const auto two = extract_thread_ids(
      "<a href=\"/r/x/comments/abc123/title/\">a</a> <a href=\"/r/x/comments/abc123/title/\">b</a>");
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].thread_id, "abc123");
  EXPECT_EQ(two[0].subreddit, "x");
  EXPECT_TRUE(extract_thread_ids("<<<not html comments/ comments//").empty());
}

TEST(ExtractThreadIds, RecordedSnapshotsMatchHandEnumeration) {
  const auto first = extract_thread_ids(read_file(fixture_path("crawl/snapshot_20190301.html")));
  EXPECT_EQ(ids(first), (std::set<std::string>{"abc123", "def456", "ghi789"}));
  const auto second = extract_thread_ids(read_file(fixture_path("crawl/snapshot_20200615.html")));
  EXPECT_EQ(ids(second), (std::set<std::string>{"def456", "ghi789", "jkl012"}));
}

TEST(ExtractThreadIds, UnionOfConcatenationIdempotentOrderFree) {
  const std::string a = read_file(fixture_path("crawl/snapshot_20190301.html"));
  const std::string b = read_file(fixture_path("crawl/snapshot_20200615.html"));
  std::set<std::string> both = ids(extract_thread_ids(a));
  for (const auto& id : ids(extract_thread_ids(b))) both.insert(id);
  EXPECT_EQ(ids(extract_thread_ids(a + b)), both);
  EXPECT_EQ(extract_thread_ids(a + b), extract_thread_ids(b + a));
  EXPECT_EQ(extract_thread_ids(a + a), extract_thread_ids(a));
}

TEST(FetchThreadParticipants, DistinctUsersWithFlair) {
  Replay r;
  const auto obs = fetch_thread_participants(r.client, {"abc123", "languagelearning"});
  ASSERT_EQ(obs.size(), 3u);
  const auto it = std::find_if(obs.begin(), obs.end(),
                               [](const FlairObservation& o) { return o.username == "anna_de"; });
  ASSERT_NE(it, obs.end());
  EXPECT_EQ(it->flair_text, "Native: 🇩🇪");
}

TEST(FetchThreadParticipants, DeletedUsersOmitted) {
  Replay r;
  EXPECT_TRUE(fetch_thread_participants(r.client, {"def456", "languagelearning"}).empty());
}

TEST(FetchThreadParticipants, RateLimitCarriesRetryAfter) {
  Replay r;
  try {
    fetch_thread_participants(r.client, {"ghi789", "languagelearning"});
    FAIL() << "expected a rate-limit error";
  } catch (const RateLimitError& e) {
    EXPECT_DOUBLE_EQ(e.retry_after(), 7.0);
    EXPECT_TRUE(e.retryable());
  }
  EXPECT_EQ(fetch_thread_participants(r.client, {"ghi789", "languagelearning"}).size(), 2u);
}

TEST(FetchThreadParticipants, GoneThread) {
  Replay r;
  EXPECT_THROW(fetch_thread_participants(r.client, {"jkl012", "languagelearning"}), ThreadGoneError);
  EXPECT_THROW(fetch_thread_participants(r.client, {"BAD", "x"}), UsageError);
}

TEST(FetchUserHistory, TwoPagesDescending) {
  Replay r;
  std::vector<size_t> page_sizes;
  const auto history = fetch_user_history(
      r.client, "anna_de",
      [&](const std::vector<RawComment>& page, const std::optional<std::string>&) {
        page_sizes.push_back(page.size());
      });
  ASSERT_EQ(history.size(), 137u);
  EXPECT_EQ(page_sizes, (std::vector<size_t>{100, 37}));
  for (size_t i = 1; i < history.size(); ++i)
    EXPECT_GT(history[i - 1].created_utc, history[i].created_utc);
}

TEST(FetchUserHistory, AccountUnavailable) {
  Replay r;
  EXPECT_THROW(fetch_user_history(r.client, "ben_en"), AccountUnavailableError);
}

TEST(FetchUserHistory, EmptyHistory) {
  Replay r;
  EXPECT_TRUE(fetch_user_history(r.client, "carla").empty());
  EXPECT_THROW(fetch_user_history(r.client, ""), UsageError);
}

TEST(RateLimiting, TokenBucketSpacesRequests) {
  ManualClock clock;
  TokenBucket bucket(clock, 60.0);
  bucket.acquire();
  EXPECT_TRUE(clock.sleeps().empty());
  bucket.acquire();
  bucket.acquire();
  ASSERT_EQ(clock.sleeps().size(), 2u);
  EXPECT_NEAR(clock.sleeps()[0], 1.0, 1e-12);
  EXPECT_NEAR(clock.sleeps()[1], 1.0, 1e-12);
}

TEST(RateLimiting, BackoffDelays) {
  BackoffPolicy p;
  EXPECT_DOUBLE_EQ(p.delay(0), 2.0);
  EXPECT_DOUBLE_EQ(p.delay(1), 4.0);
  EXPECT_DOUBLE_EQ(p.delay(5), 64.0);
  EXPECT_DOUBLE_EQ(p.delay(6), 120.0);
  EXPECT_DOUBLE_EQ(p.delay(10), 120.0);
  EXPECT_DOUBLE_EQ(p.delay(0, 30.0), 30.0);
}

TEST(RateLimiting, GivesUpAfterMaxAttempts) {
  TempDir dir;
  write_file(dir / "routes.json",
             R"([{"url": "https://www.reddit.com/comments/zzz999.json?limit=500", "status": 429,
                  "headers": {"Retry-After": "1"}}])");
  FixtureTransport transport(dir.path());
  ManualClock clock;
  HttpClient client(transport, clock, 1e9);
  BackoffPolicy policy;
  policy.max_attempts = 3;
  EXPECT_THROW(with_backoff(clock, policy,
                            [&] { return fetch_thread_participants(client, {"zzz999", "x"}); }),
               RateLimitError);
  EXPECT_EQ(transport.requests().size(), 3u);
  EXPECT_EQ(clock.sleeps(), (std::vector<double>{2.0, 4.0}));
}

TEST(Crawl, ThreadsWithBackoffReplay) {
  TempDir dir;
  Replay r;
  const auto snaps = crawl_snapshots(r.client, "languagelearning", dir.path());
  EXPECT_EQ(snaps.snapshots, 2u);
  const auto report = crawl_threads(r.client, dir / "snapshots.ndjson", dir.path());
  EXPECT_EQ(report.threads, 4u);
  EXPECT_EQ(report.threads_gone, 1u);
  EXPECT_EQ(report.observations, 4u);
  EXPECT_NE(std::find(r.clock.sleeps().begin(), r.clock.sleeps().end(), 7.0), r.clock.sleeps().end());
  EXPECT_EQ(read_flairs(dir / "flairs.ndjson").size(), 4u);
}

TEST(Crawl, FlairObservationsRoundTripByteEqual) {
  TempDir dir;
  const std::vector<FlairObservation> rows = {
      {"anna_de", "languagelearning", "Native: 🇩🇪"},
      {"x", "y", "  spaces  and \"quotes\" \\ "},
      {"z", "", ""}};
  write_flairs(dir / "f.ndjson", rows);
  EXPECT_EQ(read_flairs(dir / "f.ndjson"), rows);
  EXPECT_NE(read_file(dir / "f.ndjson").find("Native: 🇩🇪"), std::string::npos);
}

TEST(Crawl, UsersResumeToSameResult) {
  TempDir full, partial;
  Replay prep;
  crawl_snapshots(prep.client, "languagelearning", full.path());
  crawl_threads(prep.client, full / "snapshots.ndjson", full.path());
  const auto flairs = full / "flairs.ndjson";

  Replay a;
  const auto uninterrupted = crawl_users(a.client, flairs, DatasetKind::kLanguage, full.path());
  EXPECT_EQ(uninterrupted.users_selected, 3u);
  EXPECT_EQ(uninterrupted.users_completed, 2u);
  EXPECT_EQ(uninterrupted.users_unavailable, 1u);
  EXPECT_EQ(uninterrupted.comments, 137u);

  Replay b;
  crawl_users(b.client, flairs, DatasetKind::kLanguage, partial.path(), {}, 1);
  Replay c;
  const auto resumed = crawl_users(c.client, flairs, DatasetKind::kLanguage, partial.path());
  EXPECT_EQ(resumed.comments, 137u);
  EXPECT_EQ(read_file(partial / "comments.ndjson"), read_file(full / "comments.ndjson"));
}

TEST(Persistence, RawCommentRoundTrip) {
  const RawComment c{"abc", "u", "s", 1600000000, "line one\nline \"two\" 🎉"};
  EXPECT_EQ(comment_from_json(to_json(c)), c);
  const auto j = to_json(c);
  EXPECT_EQ(j.size(), 5u);
  for (const char* key : {"comment_id", "username", "subreddit", "created_utc", "body"})
    EXPECT_TRUE(j.contains(key));
}

}  // namespace
}  // namespace stylofair::ingest
