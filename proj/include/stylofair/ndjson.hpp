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

// Newline-delimited JSON helpers shared by every store.

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace stylofair {

// Compact single-line dump; invalid UTF-8 is replaced rather than thrown on.
inline std::string dump_line(const nlohmann::json& j) {
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

// Calls `fn` for every non-empty line; throws DataError naming the line on
// malformed JSON. A missing file reads as empty when `allow_missing`.
void for_each_ndjson(const std::filesystem::path& path,
                     const std::function<void(const nlohmann::json&)>& fn,
                     bool allow_missing = false);

std::vector<nlohmann::json> read_ndjson(const std::filesystem::path& path,
                                        bool allow_missing = false);

class NdjsonWriter {
 public:
  // Truncates unless `append`.
  explicit NdjsonWriter(const std::filesystem::path& path, bool append = false);
  void write(const nlohmann::json& j);
  // Flushes to the OS; call at checkpoints.
  void flush();

 private:
  std::ofstream out_;
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);
// Writes atomically enough for our purposes: temp file then rename.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace stylofair
