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

#include "stylofair/manifest.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <memory>
#include <set>

#include "stylofair/error.hpp"
#include "stylofair/ndjson.hpp"

#ifndef STYLOFAIR_VERSION
#define STYLOFAIR_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace stylofair::manifest {

namespace {

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1)
      throw std::runtime_error("sha256 init failed");
  }
  void update(const void* data, size_t n) {
    if (EVP_DigestUpdate(ctx_.get(), data, n) != 1) throw std::runtime_error("sha256 update failed");
  }
  std::string hex() {
    unsigned char out[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_.get(), out, &len) != 1) throw std::runtime_error("sha256 final failed");
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
      s += digits[out[i] >> 4];
      s += digits[out[i] & 15];
    }
    return s;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

json digest_json(const FileDigest& d) {
  return json{{"path", d.path}, {"sha256", d.sha256}, {"bytes", d.bytes}};
}

FileDigest digest_from_json(const json& j) {
  return FileDigest{j.at("path").get<std::string>(), j.at("sha256").get<std::string>(),
                    j.value("bytes", uint64_t{0})};
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  Sha256 h;
  h.update(data.data(), data.size());
  return h.hex();
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  Sha256 h;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    if (in.gcount() > 0) h.update(buf, static_cast<size_t>(in.gcount()));
  }
  return h.hex();
}

const std::map<std::string, std::string>& module_versions() {
  static const std::map<std::string, std::string> versions = {
      {"stylofair", STYLOFAIR_VERSION}, {"ingest", "1"},      {"corpus", "1"},
      {"features", "1"},                {"model", "1"},       {"stats", "1"},
      {"experiments", "1"},             {"synth", "1"},       {"cli", "1"},
  };
  return versions;
}

json to_json(const RunManifest& m) {
  json inputs = json::array(), outputs = json::array();
  for (const auto& d : m.inputs) inputs.push_back(digest_json(d));
  for (const auto& d : m.outputs) outputs.push_back(digest_json(d));
  return json{{"type", "run-manifest"},
              {"tool_version", m.tool_version},
              {"arguments", m.arguments},
              {"seed", m.seed},
              {"jobs", m.jobs},
              {"config_hashes", m.config_hashes},
              {"module_versions", m.module_versions},
              {"inputs", inputs},
              {"outputs", outputs},
              {"output_dir", m.output_dir},
              {"started_utc", m.started_utc},
              {"finished_utc", m.finished_utc}};
}

RunManifest manifest_from_json(const json& j) {
  try {
    RunManifest m;
    m.tool_version = j.value("tool_version", "");
    m.arguments = j.at("arguments").get<std::vector<std::string>>();
    m.seed = j.at("seed").get<uint64_t>();
    m.jobs = j.value("jobs", size_t{1});
    m.config_hashes = j.value("config_hashes", std::map<std::string, std::string>{});
    m.module_versions = j.value("module_versions", std::map<std::string, std::string>{});
    for (const auto& d : j.value("inputs", json::array())) m.inputs.push_back(digest_from_json(d));
    for (const auto& d : j.at("outputs")) m.outputs.push_back(digest_from_json(d));
    m.output_dir = j.value("output_dir", "");
    m.started_utc = j.value("started_utc", "");
    m.finished_utc = j.value("finished_utc", "");
    return m;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed manifest: ") + e.what());
  }
}

FileDigest digest_file(const fs::path& path, const std::string& label) {
  return FileDigest{label, sha256_file(path), static_cast<uint64_t>(fs::file_size(path))};
}

std::vector<FileDigest> digest_outputs(const fs::path& dir) {
  std::vector<FileDigest> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string rel = fs::relative(entry.path(), dir).generic_string();
    if (rel == kManifestFile) continue;
    out.push_back(digest_file(entry.path(), rel));
  }
  std::sort(out.begin(), out.end(),
            [](const FileDigest& a, const FileDigest& b) { return a.path < b.path; });
  return out;
}

void write_manifest(const fs::path& dir, const RunManifest& m) {
  write_file(dir / kManifestFile, to_json(m).dump(2) + "\n");
}

RunManifest read_manifest(const fs::path& path) {
  const fs::path file = fs::is_directory(path) ? path / kManifestFile : path;
  if (!fs::exists(file)) throw DataError("no manifest at " + file.string());
  json j;
  try {
    j = json::parse(read_file(file));
  } catch (const json::parse_error& e) {
    throw DataError("malformed manifest " + file.string() + ": " + e.what());
  }
  return manifest_from_json(j);
}

std::string utc_now_iso8601() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

std::string first_difference(const fs::path& a, const fs::path& b) {
  const std::string x = read_file(a), y = read_file(b);
  const size_t n = std::min(x.size(), y.size());
  size_t i = 0;
  while (i < n && x[i] == y[i]) ++i;
  if (i == n && x.size() == y.size()) return "contents equal, digest mismatch";
  size_t line = 1;
  for (size_t p = 0; p < i; ++p) line += x[p] == '\n';
  return "first differing byte at offset " + std::to_string(i) + " (line " + std::to_string(line) +
         "), sizes " + std::to_string(x.size()) + " vs " + std::to_string(y.size());
}

}  // namespace

std::optional<Divergence> compare_outputs(const RunManifest& recorded, const fs::path& replay_dir,
                                          const fs::path& original_dir) {
  const std::vector<FileDigest> replayed = digest_outputs(replay_dir);
  std::map<std::string, const FileDigest*> by_path;
  for (const auto& d : replayed) by_path[d.path] = &d;
  for (const auto& want : recorded.outputs) {
    const auto it = by_path.find(want.path);
    if (it == by_path.end()) return Divergence{want.path, "missing from replay"};
    if (it->second->sha256 == want.sha256) continue;
    std::string detail = "sha256 " + want.sha256 + " recorded, " + it->second->sha256 + " replayed";
    const fs::path original = original_dir / want.path;
    if (!original_dir.empty() && fs::exists(original) && sha256_file(original) == want.sha256)
      detail += "; " + first_difference(original, replay_dir / want.path);
    return Divergence{want.path, detail};
  }
  std::set<std::string> expected;
  for (const auto& d : recorded.outputs) expected.insert(d.path);
  for (const auto& d : replayed)
    if (!expected.count(d.path)) return Divergence{d.path, "not produced by the recorded run"};
  return std::nullopt;
}

}  // namespace stylofair::manifest
