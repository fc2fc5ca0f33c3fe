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

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include <cstdlib>

#include "stylofair/ingest.hpp"

namespace stylofair::ingest {

LiveTransport::LiveTransport(std::string user_agent) : user_agent_(std::move(user_agent)) {
  if (const char* token = std::getenv("STYLOFAIR_REDDIT_TOKEN"); token && *token)
    bearer_token_ = token;
}

HttpResponse LiveTransport::get(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw NetworkError("not an absolute URL: " + url, false);
  const auto path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client cli(origin);
  cli.set_follow_location(true);
  cli.set_connection_timeout(30);
  cli.set_read_timeout(60);
  httplib::Headers headers = {{"User-Agent", user_agent_}};
  if (bearer_token_ && origin.find("reddit.com") != std::string::npos)
    headers.emplace("Authorization", "bearer " + *bearer_token_);

  auto res = cli.Get(path, headers);
  if (!res) throw NetworkError("request failed for " + url + ": " + httplib::to_string(res.error()));
  HttpResponse out;
  out.status = res->status;
  out.body = res->body;
  for (const auto& [k, v] : res->headers) {
    std::string key = k;
    for (char& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    out.headers[key] = v;
  }
  return out;
}

}  // namespace stylofair::ingest
