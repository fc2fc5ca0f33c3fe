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

#include "stylofair/ndjson.hpp"

#include <sstream>

#include "stylofair/error.hpp"

namespace stylofair {

void for_each_ndjson(const std::filesystem::path& path,
                     const std::function<void(const nlohmann::json&)>& fn, bool allow_missing) {
  std::ifstream in(path);
  if (!in) {
    if (allow_missing && !std::filesystem::exists(path)) return;
    throw DataError("cannot open " + path.string());
  }
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    fn(j);
  }
}

std::vector<nlohmann::json> read_ndjson(const std::filesystem::path& path, bool allow_missing) {
  std::vector<nlohmann::json> rows;
  for_each_ndjson(path, [&](const nlohmann::json& j) { rows.push_back(j); }, allow_missing);
  return rows;
}

NdjsonWriter::NdjsonWriter(const std::filesystem::path& path, bool append)
    : out_(path, append ? std::ios::app : std::ios::trunc), path_(path) {
  if (!out_) throw DataError("cannot write " + path.string());
}

void NdjsonWriter::write(const nlohmann::json& j) { out_ << dump_line(j) << '\n'; }

void NdjsonWriter::flush() {
  out_.flush();
  if (!out_) throw DataError("write failed: " + path_.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp);
    out << contents;
    if (!out) throw DataError("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace stylofair
