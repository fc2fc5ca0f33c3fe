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

// Collection pipeline: archive snapshots -> thread ids -> participants and
// flair -> user comment histories. All network access goes through
// HttpTransport so crawls can be replayed from recorded fixtures.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stylofair/error.hpp"
#include "stylofair/flair.hpp"
#include "json.hpp"

namespace stylofair::ingest {

struct SnapshotRef {
  std::string subreddit;
  int64_t capture_timestamp = 0;  // UTC seconds
  std::string archived_url;

  bool operator==(const SnapshotRef&) const = default;
};

struct ThreadRef {
  std::string thread_id;  // base36
  std::string subreddit;  // empty when the link did not name one

  auto operator<=>(const ThreadRef&) const = default;
};

struct FlairObservation {
  std::string username;
  std::string subreddit;
  std::string flair_text;

  bool operator==(const FlairObservation&) const = default;
};

struct RawComment {
  std::string comment_id;
  std::string username;
  std::string subreddit;
  int64_t created_utc = 0;
  std::string body;

  bool operator==(const RawComment&) const = default;
};

bool is_valid_subreddit(std::string_view name);
bool is_valid_thread_id(std::string_view id);

// ---------------------------------------------------------------------------
// Transport

struct HttpResponse {
  int status = 0;
  std::map<std::string, std::string> headers;  // lowercase names
  std::string body;
};

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  // Throws NetworkError when no response could be obtained at all.
  virtual HttpResponse get(const std::string& url) = 0;
};

// Replays recorded responses. `DIR/routes.json` is an array of
// {"url", "status", "headers"?, "body_file"? | "body"?}; entries for the same
// url are served in order, the last one repeating once exhausted.
class FixtureTransport : public HttpTransport {
 public:
  explicit FixtureTransport(std::filesystem::path dir);
  HttpResponse get(const std::string& url) override;
  const std::vector<std::string>& requests() const { return requests_; }

 private:
  std::filesystem::path dir_;
  std::map<std::string, std::vector<HttpResponse>> routes_;
  std::map<std::string, size_t> served_;
  std::vector<std::string> requests_;
};

// HTTPS transport; an OAuth bearer token is read from STYLOFAIR_REDDIT_TOKEN
// when set.
class LiveTransport : public HttpTransport {
 public:
  explicit LiveTransport(std::string user_agent = "stylofair/0.1 (research crawler)");
  HttpResponse get(const std::string& url) override;

 private:
  std::string user_agent_;
  std::optional<std::string> bearer_token_;
};

// ---------------------------------------------------------------------------
// Time and rate limiting

class Clock {
 public:
  virtual ~Clock() = default;
  virtual double now() = 0;  // seconds, arbitrary epoch
  virtual void sleep(double seconds) = 0;
};

class SystemClock : public Clock {
 public:
  double now() override;
  void sleep(double seconds) override;
};

// Sleeping advances time instantly; used by replay crawls and tests.
class ManualClock : public Clock {
 public:
  double now() override { return now_; }
  void sleep(double seconds) override {
    sleeps_.push_back(seconds);
    now_ += seconds;
  }
  const std::vector<double>& sleeps() const { return sleeps_; }

 private:
  double now_ = 0.0;
  std::vector<double> sleeps_;
};

class TokenBucket {
 public:
  TokenBucket(Clock& clock, double requests_per_minute = 60.0, double burst = 1.0);
  // Blocks (via the clock) until a request may be sent.
  void acquire();

 private:
  Clock& clock_;
  double rate_per_second_;
  double capacity_;
  double tokens_;
  double last_;
};

struct BackoffPolicy {
  double base_seconds = 2.0;
  double cap_seconds = 120.0;
  int max_attempts = 6;

  // Wait before retry number `attempt` (0-based); never shorter than the
  // server's retry-after.
  double delay(int attempt, double retry_after = 0.0) const;
};

// Serializes requests per host behind a token bucket.
class HttpClient {
 public:
  HttpClient(HttpTransport& transport, Clock& clock, double requests_per_minute = 60.0);
  HttpResponse get(const std::string& url);
  Clock& clock() { return clock_; }

 private:
  HttpTransport& transport_;
  Clock& clock_;
  double rate_;
  std::map<std::string, std::unique_ptr<TokenBucket>> buckets_;
};

// Runs `fn`, retrying retryable network errors with exponential backoff.
template <typename Fn>
auto with_backoff(Clock& clock, const BackoffPolicy& policy, Fn&& fn) -> decltype(fn()) {
  for (int attempt = 0;; ++attempt) {
    try {
      return fn();
    } catch (const RateLimitError& e) {
      if (attempt + 1 >= policy.max_attempts) throw;
      clock.sleep(policy.delay(attempt, e.retry_after()));
    } catch (const NetworkError& e) {
      if (!e.retryable() || attempt + 1 >= policy.max_attempts) throw;
      clock.sleep(policy.delay(attempt));
    }
  }
}

// ---------------------------------------------------------------------------
// Operations

std::string cdx_query_url(std::string_view subreddit);
std::string thread_json_url(const ThreadRef& thread);
std::string user_history_url(std::string_view username, std::string_view after = {});

// Converts a 14-digit archive timestamp (YYYYMMDDhhmmss) to UTC seconds.
int64_t archive_timestamp_to_utc(std::string_view ts);

std::vector<SnapshotRef> parse_cdx_rows(std::string_view subreddit, std::string_view body);
std::vector<SnapshotRef> list_snapshots(HttpClient& client, std::string_view subreddit);

// Every distinct id appearing in a path "comments/<id>/", sorted by id.
std::vector<ThreadRef> extract_thread_ids(std::string_view archived_html);

std::vector<FlairObservation> parse_thread_participants(std::string_view thread_json);
std::vector<FlairObservation> fetch_thread_participants(HttpClient& client, const ThreadRef& thread);

struct HistoryPage {
  std::vector<RawComment> comments;
  std::optional<std::string> after;
};
HistoryPage parse_history_page(std::string_view listing_json);

// Receives each page as it arrives, with the cursor that resumes after it.
using PageSink = std::function<void(const std::vector<RawComment>&, const std::optional<std::string>&)>;

std::vector<RawComment> fetch_user_history(HttpClient& client, std::string_view username,
                                           const PageSink& sink = {},
                                           std::optional<std::string> resume_after = {});

// ---------------------------------------------------------------------------
// Persistence (NDJSON)

nlohmann::json to_json(const SnapshotRef& s);
nlohmann::json to_json(const ThreadRef& t);
nlohmann::json to_json(const FlairObservation& f);
nlohmann::json to_json(const RawComment& c);
SnapshotRef snapshot_from_json(const nlohmann::json& j);
ThreadRef thread_from_json(const nlohmann::json& j);
FlairObservation flair_from_json(const nlohmann::json& j);
RawComment comment_from_json(const nlohmann::json& j);

std::vector<SnapshotRef> read_snapshots(const std::filesystem::path& path);
std::vector<FlairObservation> read_flairs(const std::filesystem::path& path);
std::vector<RawComment> read_comments(const std::filesystem::path& path);
void write_flairs(const std::filesystem::path& path, const std::vector<FlairObservation>& rows);
void write_comments(const std::filesystem::path& path, const std::vector<RawComment>& rows);

// ---------------------------------------------------------------------------
// Crawls

struct CrawlOptions {
  BackoffPolicy backoff;
};

struct SnapshotCrawlReport {
  size_t snapshots = 0;
};
SnapshotCrawlReport crawl_snapshots(HttpClient& client, std::string_view subreddit,
                                    const std::filesystem::path& out_dir,
                                    const CrawlOptions& options = {});

struct ThreadCrawlReport {
  size_t snapshots = 0;
  size_t threads = 0;
  size_t threads_gone = 0;
  size_t observations = 0;
};
// Reads snapshots NDJSON, writes threads.ndjson and flairs.ndjson to out_dir.
ThreadCrawlReport crawl_threads(HttpClient& client, const std::filesystem::path& snapshots_file,
                                const std::filesystem::path& out_dir,
                                const CrawlOptions& options = {});

struct UserCrawlReport {
  size_t users_selected = 0;
  size_t users_completed = 0;
  size_t users_unavailable = 0;
  size_t comments = 0;
};
// Selects users whose flair parses to an attribute of `kind` and collects
// their histories into out_dir/comments.ndjson. Progress is checkpointed to
// out_dir/crawl_progress.ndjson after every page, so an interrupted crawl
// resumes where it stopped. `max_pages` (0 = unlimited) bounds the pages
// fetched in this invocation; used to simulate interruption.
UserCrawlReport crawl_users(HttpClient& client, const std::filesystem::path& flairs_file,
                            DatasetKind kind, const std::filesystem::path& out_dir,
                            const CrawlOptions& options = {}, size_t max_pages = 0);

}  // namespace stylofair::ingest
