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

#include <stdlib.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "stylofair/corpus.hpp"
#include "stylofair/ndjson.hpp"
#include "stylofair/text.hpp"

namespace stylofair::testing {

inline std::filesystem::path fixture_path(const std::string& rel) {
  return std::filesystem::path(STYLOFAIR_FIXTURES) / rel;
}

class TempDir {
 public:
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "stylofair-test-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& rel) const { return path_ / rel; }

 private:
  std::filesystem::path path_;
};

// `n` words of English prose, starting `offset` words into the fixture
// paragraph and wrapping around.
inline std::string english_text(size_t n, size_t offset = 0) {
  static const std::vector<std::string> words =
      text::tokenize_words(read_file(fixture_path("text/english_prose.txt")));
  std::string out;
  for (size_t i = 0; i < n; ++i) {
    if (i) out += (i % 17 == 0) ? ". " : " ";
    out += words[(offset + i) % words.size()];
  }
  return out + ".";
}

// A cleaned comment whose text is `words` copies of "word".
inline corpus::Comment plain_comment(const std::string& id, const std::string& author,
                                     int64_t ts, size_t words) {
  std::string text;
  for (size_t i = 0; i < words; ++i) text += i ? " word" : "word";
  return corpus::Comment{id, author, ts, text, words};
}

inline corpus::AuthorRecord record_with_lengths(const std::string& author,
                                                const std::vector<size_t>& lengths) {
  corpus::AuthorRecord r;
  r.author_id = author;
  r.attribute_value = "F";
  for (size_t i = 0; i < lengths.size(); ++i) {
    std::ostringstream id;
    id << author << "_" << (i < 10 ? "0" : "") << i;
    r.comments.push_back(plain_comment(id.str(), author, 1000 + static_cast<int64_t>(i) * 60,
                                       lengths[i]));
  }
  return r;
}

}  // namespace stylofair::testing
