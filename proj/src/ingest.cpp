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

#include "stylofair/ingest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "stylofair/ndjson.hpp"

namespace stylofair::ingest {

using nlohmann::json;

bool is_valid_subreddit(std::string_view name) {
  return !name.empty() && name.size() <= 64 &&
         std::all_of(name.begin(), name.end(), [](char c) {
           return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
         });
}

bool is_valid_thread_id(std::string_view id) {
  return id.size() >= 4 && id.size() <= 10 &&
         std::all_of(id.begin(), id.end(),
                     [](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); });
}

// ---------------------------------------------------------------------------
// Fixture transport

FixtureTransport::FixtureTransport(std::filesystem::path dir) : dir_(std::move(dir)) {
  const auto routes_path = dir_ / "routes.json";
  json routes;
  try {
    routes = json::parse(read_file(routes_path));
  } catch (const json::parse_error& e) {
    throw DataError(routes_path.string() + ": " + e.what());
  }
  for (const auto& r : routes) {
    HttpResponse resp;
    resp.status = r.value("status", 200);
    if (r.contains("headers")) {
      for (const auto& [k, v] : r["headers"].items()) {
        std::string key = k;
        std::transform(key.begin(), key.end(), key.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        resp.headers[key] = v.is_string() ? v.get<std::string>() : v.dump();
      }
    }
    if (r.contains("body_file")) {
      resp.body = read_file(dir_ / r["body_file"].get<std::string>());
    } else if (r.contains("body")) {
      resp.body = r["body"].is_string() ? r["body"].get<std::string>() : r["body"].dump();
    }
    routes_[r.at("url").get<std::string>()].push_back(std::move(resp));
  }
}

HttpResponse FixtureTransport::get(const std::string& url) {
  requests_.push_back(url);
  const auto it = routes_.find(url);
  if (it == routes_.end()) throw NetworkError("no fixture recorded for " + url, false);
  size_t& idx = served_[url];
  const HttpResponse& resp = it->second[std::min(idx, it->second.size() - 1)];
  ++idx;
  return resp;
}

// ---------------------------------------------------------------------------
// Clock, rate limiting

double SystemClock::now() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

void SystemClock::sleep(double seconds) {
  if (seconds > 0) std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
}

TokenBucket::TokenBucket(Clock& clock, double requests_per_minute, double burst)
    : clock_(clock),
      rate_per_second_(requests_per_minute / 60.0),
      capacity_(std::max(1.0, burst)),
      tokens_(std::max(1.0, burst)),
      last_(clock.now()) {}

void TokenBucket::acquire() {
  const double t = clock_.now();
  tokens_ = std::min(capacity_, tokens_ + (t - last_) * rate_per_second_);
  last_ = t;
  if (tokens_ < 1.0) {
    const double wait = (1.0 - tokens_) / rate_per_second_;
    clock_.sleep(wait);
    last_ = clock_.now();
    tokens_ = 1.0;
  }
  tokens_ -= 1.0;
}

double BackoffPolicy::delay(int attempt, double retry_after) const {
  const double exp = base_seconds * std::pow(2.0, attempt);
  return std::max(retry_after, std::min(cap_seconds, exp));
}

namespace {

std::string host_of(const std::string& url) {
  const auto scheme = url.find("://");
  const size_t start = scheme == std::string::npos ? 0 : scheme + 3;
  const auto end = url.find('/', start);
  return url.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

double parse_retry_after(const HttpResponse& resp) {
  for (const char* key : {"retry-after", "x-ratelimit-reset"}) {
    if (auto it = resp.headers.find(key); it != resp.headers.end()) {
      try {
        return std::stod(it->second);
      } catch (const std::exception&) {
      }
    }
  }
  return 0.0;
}

enum class Resource { kArchive, kThread, kUser };

// Maps non-200 statuses onto the typed errors of each operation.
void check_status(const HttpResponse& resp, Resource resource, const std::string& what) {
  if (resp.status == 200) return;
  if (resp.status == 429)
    throw RateLimitError("rate limited while fetching " + what, parse_retry_after(resp));
  if (resource == Resource::kThread && (resp.status == 404 || resp.status == 410))
    throw ThreadGoneError("thread gone: " + what);
  if (resource == Resource::kUser && (resp.status == 403 || resp.status == 404))
    throw AccountUnavailableError("account unavailable: " + what);
  if (resp.status >= 500)
    throw NetworkError("server error " + std::to_string(resp.status) + " for " + what);
  throw NetworkError("unexpected status " + std::to_string(resp.status) + " for " + what, false);
}

json parse_json_body(const std::string& body, const std::string& what) {
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw DataError("malformed JSON from " + what + ": " + e.what());
  }
}

std::string string_field(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return {};
  return j[key].is_string() ? j[key].get<std::string>() : j[key].dump();
}

bool is_deleted_author(const std::string& author) {
  return author.empty() || author == "[deleted]" || author == "[removed]";
}

void collect_participants(const json& listing, std::vector<FlairObservation>& out,
                          std::set<std::string>& seen) {
  if (!listing.is_object() || !listing.contains("data")) return;
  const json& data = listing["data"];
  if (!data.contains("children") || !data["children"].is_array()) return;
  for (const json& child : data["children"]) {
    if (child.value("kind", "") != "t1" || !child.contains("data")) continue;
    const json& c = child["data"];
    const std::string author = string_field(c, "author");
    if (!is_deleted_author(author) && seen.insert(author).second) {
      out.push_back({author, string_field(c, "subreddit"), string_field(c, "author_flair_text")});
    }
    if (c.contains("replies") && c["replies"].is_object()) collect_participants(c["replies"], out, seen);
  }
}

}  // namespace

HttpClient::HttpClient(HttpTransport& transport, Clock& clock, double requests_per_minute)
    : transport_(transport), clock_(clock), rate_(requests_per_minute) {}

HttpResponse HttpClient::get(const std::string& url) {
  auto& bucket = buckets_[host_of(url)];
  if (!bucket) bucket = std::make_unique<TokenBucket>(clock_, rate_);
  bucket->acquire();
  return transport_.get(url);
}

// ---------------------------------------------------------------------------
// Operations

std::string cdx_query_url(std::string_view subreddit) {
  return "https://web.archive.org/cdx/search/cdx?url=reddit.com/r/" + std::string(subreddit) +
         "/&matchType=prefix&output=json&fl=timestamp,original,statuscode&filter=statuscode:200";
}

std::string thread_json_url(const ThreadRef& thread) {
  return "https://www.reddit.com/comments/" + thread.thread_id + ".json?limit=500";
}

std::string user_history_url(std::string_view username, std::string_view after) {
  std::string url = "https://www.reddit.com/user/" + std::string(username) +
                    "/comments.json?limit=100&sort=new";
  if (!after.empty()) url += "&after=" + std::string(after);
  return url;
}

int64_t archive_timestamp_to_utc(std::string_view ts) {
  if (ts.size() < 8 || !std::all_of(ts.begin(), ts.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw DataError("bad archive timestamp '" + std::string(ts) + "'");
  auto field = [&](size_t pos, size_t len) {
    return pos + len <= ts.size() ? std::stoi(std::string(ts.substr(pos, len))) : 0;
  };
  using namespace std::chrono;
  const year_month_day ymd{year{field(0, 4)}, month{static_cast<unsigned>(field(4, 2))},
                           day{static_cast<unsigned>(field(6, 2))}};
  if (!ymd.ok()) throw DataError("bad archive timestamp '" + std::string(ts) + "'");
  const auto days = sys_days{ymd}.time_since_epoch().count();
  return static_cast<int64_t>(days) * 86400 + field(8, 2) * 3600 + field(10, 2) * 60 + field(12, 2);
}

std::vector<SnapshotRef> parse_cdx_rows(std::string_view subreddit, std::string_view body) {
  std::vector<SnapshotRef> out;
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return out;
  const json rows = parse_json_body(std::string(body), "archive index");
  if (!rows.is_array() || rows.empty()) return out;
  const json& header = rows.front();
  auto column = [&](const std::string& name) -> long {
    for (size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<long>(i);
    return -1;
  };
  const long ts_col = column("timestamp");
  const long url_col = column("original");
  if (ts_col < 0 || url_col < 0) throw DataError("archive index lacks timestamp/original columns");
  std::set<std::pair<int64_t, std::string>> seen;
  for (size_t r = 1; r < rows.size(); ++r) {
    const json& row = rows[r];
    const std::string ts = row.at(ts_col).get<std::string>();
    const std::string original = row.at(url_col).get<std::string>();
    // Thread pages are captured under the same prefix; keep listings only.
    if (original.find("/comments/") != std::string::npos) continue;
    SnapshotRef ref{std::string(subreddit), archive_timestamp_to_utc(ts),
                    "https://web.archive.org/web/" + ts + "/" + original};
    if (seen.emplace(ref.capture_timestamp, ref.archived_url).second) out.push_back(std::move(ref));
  }
  std::sort(out.begin(), out.end(), [](const SnapshotRef& a, const SnapshotRef& b) {
    return std::tie(a.capture_timestamp, a.archived_url) < std::tie(b.capture_timestamp, b.archived_url);
  });
  return out;
}

std::vector<SnapshotRef> list_snapshots(HttpClient& client, std::string_view subreddit) {
  if (!is_valid_subreddit(subreddit))
    throw UsageError("invalid subreddit name '" + std::string(subreddit) + "'");
  const std::string url = cdx_query_url(subreddit);
  const HttpResponse resp = client.get(url);
  check_status(resp, Resource::kArchive, url);
  return parse_cdx_rows(subreddit, resp.body);
}

std::vector<ThreadRef> extract_thread_ids(std::string_view html) {
  static constexpr std::string_view kMarker = "comments/";
  std::map<std::string, std::string> found;  // id -> smallest non-empty subreddit
  size_t pos = 0;
  while ((pos = html.find(kMarker, pos)) != std::string_view::npos) {
    const size_t id_start = pos + kMarker.size();
    const bool bounded = pos == 0 || html[pos - 1] == '/';
    size_t id_end = id_start;
    while (id_end < html.size() &&
           ((html[id_end] >= 'a' && html[id_end] <= 'z') || (html[id_end] >= '0' && html[id_end] <= '9')))
      ++id_end;
    const std::string_view id = html.substr(id_start, id_end - id_start);
    if (bounded && id_end < html.size() && html[id_end] == '/' && is_valid_thread_id(id)) {
      std::string subreddit;
      // Look back for "/r/<name>/" immediately before "comments/".
      if (pos >= 4) {
        size_t name_end = pos - 1;  // index of '/' before comments
        size_t name_start = name_end;
        while (name_start > 0 && (std::isalnum(static_cast<unsigned char>(html[name_start - 1])) ||
                                  html[name_start - 1] == '_'))
          --name_start;
        if (name_start >= 3 && name_start < name_end && html.substr(name_start - 3, 3) == "/r/")
          subreddit = std::string(html.substr(name_start, name_end - name_start));
      }
      auto [it, inserted] = found.emplace(std::string(id), subreddit);
      if (!inserted && !subreddit.empty() && (it->second.empty() || subreddit < it->second))
        it->second = subreddit;
    }
    pos = id_start;
  }
  std::vector<ThreadRef> out;
  out.reserve(found.size());
  for (auto& [id, sub] : found) out.push_back({id, sub});
  return out;
}

std::vector<FlairObservation> parse_thread_participants(std::string_view thread_json) {
  const json root = parse_json_body(std::string(thread_json), "thread");
  std::vector<FlairObservation> out;
  std::set<std::string> seen;
  if (root.is_array()) {
    for (size_t i = 1; i < root.size(); ++i) collect_participants(root[i], out, seen);
  } else {
    collect_participants(root, out, seen);
  }
  return out;
}

std::vector<FlairObservation> fetch_thread_participants(HttpClient& client, const ThreadRef& thread) {
  if (!is_valid_thread_id(thread.thread_id))
    throw UsageError("malformed thread id '" + thread.thread_id + "'");
  const std::string url = thread_json_url(thread);
  const HttpResponse resp = client.get(url);
  check_status(resp, Resource::kThread, url);
  return parse_thread_participants(resp.body);
}

HistoryPage parse_history_page(std::string_view listing_json) {
  const json root = parse_json_body(std::string(listing_json), "user history");
  HistoryPage page;
  if (!root.contains("data")) return page;
  const json& data = root["data"];
  if (data.contains("children") && data["children"].is_array()) {
    for (const json& child : data["children"]) {
      if (!child.contains("data")) continue;
      const json& c = child["data"];
      RawComment rc;
      rc.comment_id = string_field(c, "id");
      rc.username = string_field(c, "author");
      rc.subreddit = string_field(c, "subreddit");
      rc.created_utc = c.contains("created_utc") && c["created_utc"].is_number()
                           ? static_cast<int64_t>(c["created_utc"].get<double>())
                           : 0;
      rc.body = string_field(c, "body");
      if (rc.comment_id.empty() || rc.created_utc <= 0) continue;
      page.comments.push_back(std::move(rc));
    }
  }
  if (data.contains("after") && data["after"].is_string()) page.after = data["after"].get<std::string>();
  return page;
}

namespace {

HistoryPage fetch_history_page(HttpClient& client, std::string_view username,
                               const std::optional<std::string>& after) {
  const std::string url = user_history_url(username, after.value_or(""));
  const HttpResponse resp = client.get(url);
  check_status(resp, Resource::kUser, std::string(username));
  return parse_history_page(resp.body);
}

void sort_newest_first(std::vector<RawComment>& comments) {
  std::stable_sort(comments.begin(), comments.end(), [](const RawComment& a, const RawComment& b) {
    return a.created_utc != b.created_utc ? a.created_utc > b.created_utc : a.comment_id < b.comment_id;
  });
}

}  // namespace

std::vector<RawComment> fetch_user_history(HttpClient& client, std::string_view username,
                                           const PageSink& sink, std::optional<std::string> resume_after) {
  if (username.empty()) throw UsageError("empty username");
  std::vector<RawComment> all;
  std::set<std::string> ids;
  std::optional<std::string> after = std::move(resume_after);
  while (true) {
    HistoryPage page = fetch_history_page(client, username, after);
    std::vector<RawComment> fresh;
    for (auto& c : page.comments)
      if (ids.insert(c.comment_id).second) fresh.push_back(c);
    if (sink) sink(fresh, page.after);
    all.insert(all.end(), fresh.begin(), fresh.end());
    if (!page.after || page.comments.empty()) break;
    after = page.after;
  }
  sort_newest_first(all);
  return all;
}

// ---------------------------------------------------------------------------
// Persistence

json to_json(const SnapshotRef& s) {
  return {{"subreddit", s.subreddit}, {"capture_timestamp", s.capture_timestamp}, {"archived_url", s.archived_url}};
}
json to_json(const ThreadRef& t) { return {{"thread_id", t.thread_id}, {"subreddit", t.subreddit}}; }
json to_json(const FlairObservation& f) {
  return {{"username", f.username}, {"subreddit", f.subreddit}, {"flair_text", f.flair_text}};
}
json to_json(const RawComment& c) {
  return {{"comment_id", c.comment_id}, {"username", c.username}, {"subreddit", c.subreddit},
          {"created_utc", c.created_utc}, {"body", c.body}};
}

SnapshotRef snapshot_from_json(const json& j) {
  return {j.at("subreddit").get<std::string>(), j.at("capture_timestamp").get<int64_t>(),
          j.at("archived_url").get<std::string>()};
}
ThreadRef thread_from_json(const json& j) {
  return {j.at("thread_id").get<std::string>(), j.value("subreddit", std::string())};
}
FlairObservation flair_from_json(const json& j) {
  return {j.at("username").get<std::string>(), j.value("subreddit", std::string()),
          j.value("flair_text", std::string())};
}
RawComment comment_from_json(const json& j) {
  return {j.at("comment_id").get<std::string>(), j.at("username").get<std::string>(),
          j.value("subreddit", std::string()), j.at("created_utc").get<int64_t>(),
          j.at("body").get<std::string>()};
}

std::vector<SnapshotRef> read_snapshots(const std::filesystem::path& path) {
  std::vector<SnapshotRef> out;
  for_each_ndjson(path, [&](const json& j) { out.push_back(snapshot_from_json(j)); });
  return out;
}

std::vector<FlairObservation> read_flairs(const std::filesystem::path& path) {
  std::vector<FlairObservation> out;
  for_each_ndjson(path, [&](const json& j) { out.push_back(flair_from_json(j)); });
  return out;
}

std::vector<RawComment> read_comments(const std::filesystem::path& path) {
  std::vector<RawComment> out;
  for_each_ndjson(path, [&](const json& j) { out.push_back(comment_from_json(j)); });
  return out;
}

void write_flairs(const std::filesystem::path& path, const std::vector<FlairObservation>& rows) {
  NdjsonWriter w(path);
  for (const auto& r : rows) w.write(to_json(r));
  w.flush();
}

void write_comments(const std::filesystem::path& path, const std::vector<RawComment>& rows) {
  NdjsonWriter w(path);
  for (const auto& r : rows) w.write(to_json(r));
  w.flush();
}

// ---------------------------------------------------------------------------
// Crawls

SnapshotCrawlReport crawl_snapshots(HttpClient& client, std::string_view subreddit,
                                    const std::filesystem::path& out_dir, const CrawlOptions& options) {
  std::filesystem::create_directories(out_dir);
  const auto snapshots =
      with_backoff(client.clock(), options.backoff, [&] { return list_snapshots(client, subreddit); });
  NdjsonWriter w(out_dir / "snapshots.ndjson");
  for (const auto& s : snapshots) w.write(to_json(s));
  w.flush();
  return {snapshots.size()};
}

ThreadCrawlReport crawl_threads(HttpClient& client, const std::filesystem::path& snapshots_file,
                                const std::filesystem::path& out_dir, const CrawlOptions& options) {
  std::filesystem::create_directories(out_dir);
  ThreadCrawlReport report;
  std::map<std::string, ThreadRef> threads;
  for (const SnapshotRef& snap : read_snapshots(snapshots_file)) {
    ++report.snapshots;
    const HttpResponse resp = with_backoff(client.clock(), options.backoff, [&] {
      HttpResponse r = client.get(snap.archived_url);
      check_status(r, Resource::kArchive, snap.archived_url);
      return r;
    });
    for (ThreadRef& t : extract_thread_ids(resp.body)) {
      if (t.subreddit.empty()) t.subreddit = snap.subreddit;
      threads.emplace(t.thread_id, t);
    }
  }
  NdjsonWriter thread_out(out_dir / "threads.ndjson");
  for (const auto& [id, t] : threads) thread_out.write(to_json(t));
  thread_out.flush();
  report.threads = threads.size();

  std::vector<FlairObservation> rows;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const auto& [id, t] : threads) {
    std::vector<FlairObservation> obs;
    try {
      obs = with_backoff(client.clock(), options.backoff,
                         [&] { return fetch_thread_participants(client, t); });
    } catch (const ThreadGoneError&) {
      ++report.threads_gone;
      continue;
    }
    for (auto& o : obs) {
      if (o.subreddit.empty()) o.subreddit = t.subreddit;
      if (seen.emplace(o.username, o.subreddit, o.flair_text).second) rows.push_back(std::move(o));
    }
  }
  write_flairs(out_dir / "flairs.ndjson", rows);
  report.observations = rows.size();
  return report;
}

UserCrawlReport crawl_users(HttpClient& client, const std::filesystem::path& flairs_file,
                            DatasetKind kind, const std::filesystem::path& out_dir,
                            const CrawlOptions& options, size_t max_pages) {
  std::filesystem::create_directories(out_dir);
  UserCrawlReport report;

  std::set<std::string> with_attribute;
  std::set<std::string> conflicted;
  for (const auto& obs : read_flairs(flairs_file)) {
    const FlairOutcome outcome = parse_flair(kind, obs.flair_text);
    if (std::holds_alternative<FlairConflict>(outcome)) conflicted.insert(obs.username);
    if (std::holds_alternative<ParsedAttribute>(outcome)) with_attribute.insert(obs.username);
  }
  std::vector<std::string> users;
  std::set_difference(with_attribute.begin(), with_attribute.end(), conflicted.begin(),
                      conflicted.end(), std::back_inserter(users));
  report.users_selected = users.size();

  const auto comments_path = out_dir / "comments.ndjson";
  const auto progress_path = out_dir / "crawl_progress.ndjson";

  struct Progress {
    std::optional<std::string> after;
    bool done = false;
    bool unavailable = false;
  };
  std::map<std::string, Progress> progress;
  for_each_ndjson(progress_path, [&](const json& j) {
    Progress p;
    if (j.contains("after") && j["after"].is_string()) p.after = j["after"].get<std::string>();
    p.done = j.value("done", false);
    p.unavailable = j.value("unavailable", false);
    progress[j.at("username").get<std::string>()] = p;
  }, /*allow_missing=*/true);

  NdjsonWriter comments_out(comments_path, /*append=*/true);
  NdjsonWriter progress_out(progress_path, /*append=*/true);
  size_t pages = 0;
  bool interrupted = false;

  for (const std::string& user : users) {
    Progress& p = progress[user];
    if (p.done) continue;
    while (!p.done) {
      if (max_pages > 0 && pages >= max_pages) {
        interrupted = true;
        break;
      }
      HistoryPage page;
      try {
        page = with_backoff(client.clock(), options.backoff, [&] {
          const std::string url = user_history_url(user, p.after.value_or(""));
          HttpResponse r = client.get(url);
          check_status(r, Resource::kUser, user);
          return parse_history_page(r.body);
        });
      } catch (const AccountUnavailableError&) {
        p.done = true;
        p.unavailable = true;
        progress_out.write({{"username", user}, {"after", nullptr}, {"done", true}, {"unavailable", true}});
        progress_out.flush();
        break;
      }
      ++pages;
      for (const auto& c : page.comments) comments_out.write(to_json(c));
      comments_out.flush();
      p.after = page.after;
      p.done = !page.after || page.comments.empty();
      progress_out.write({{"username", user},
                          {"after", p.after ? json(*p.after) : json(nullptr)},
                          {"done", p.done}});
      progress_out.flush();
    }
    if (interrupted) break;
  }

  // Canonicalize: dedupe pages replayed after an interruption, order by user
  // then newest first.
  std::vector<RawComment> all;
  std::set<std::string> ids;
  for_each_ndjson(comments_path, [&](const json& j) {
    RawComment c = comment_from_json(j);
    if (ids.insert(c.comment_id).second) all.push_back(std::move(c));
  }, /*allow_missing=*/true);
  std::stable_sort(all.begin(), all.end(), [](const RawComment& a, const RawComment& b) {
    if (a.username != b.username) return a.username < b.username;
    if (a.created_utc != b.created_utc) return a.created_utc > b.created_utc;
    return a.comment_id < b.comment_id;
  });
  if (!interrupted) {
    std::string body;
    for (const auto& c : all) body += dump_line(to_json(c)) + "\n";
    write_file(comments_path, body);
  }
  for (const auto& u : users) {
    const auto it = progress.find(u);
    if (it == progress.end() || !it->second.done) continue;
    if (it->second.unavailable) {
      ++report.users_unavailable;
    } else {
      ++report.users_completed;
    }
  }
  report.comments = all.size();
  return report;
}

}  // namespace stylofair::ingest
