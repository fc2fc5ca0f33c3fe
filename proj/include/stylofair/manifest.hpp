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

// Run manifests: enough to re-execute a CLI run and check that it reproduces
// its outputs byte for byte.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace stylofair::manifest {

inline constexpr std::string_view kManifestFile = "manifest.json";

std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::filesystem::path& path);

struct FileDigest {
  std::string path;  // relative to the output directory for outputs
  std::string sha256;
  uint64_t bytes = 0;

  bool operator==(const FileDigest&) const = default;
};

struct RunManifest {
  std::string tool_version;
  std::vector<std::string> arguments;  // argv without the program name
  uint64_t seed = 0;
  size_t jobs = 1;
  std::map<std::string, std::string> config_hashes;
  std::map<std::string, std::string> module_versions;
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;
  std::string output_dir;
  std::string started_utc;
  std::string finished_utc;
};

const std::map<std::string, std::string>& module_versions();

nlohmann::json to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);

FileDigest digest_file(const std::filesystem::path& path, const std::string& label);
// Every regular file under dir except the manifest, by relative path.
std::vector<FileDigest> digest_outputs(const std::filesystem::path& dir);

void write_manifest(const std::filesystem::path& dir, const RunManifest& m);
// Accepts the manifest file itself or the directory holding it.
RunManifest read_manifest(const std::filesystem::path& path);

std::string utc_now_iso8601();

struct Divergence {
  std::string path;
  std::string detail;
};

// First recorded output that is missing or differs in `replay_dir`, then the
// first unexpected extra file. When the original file is still present the
// detail names the first differing byte.
std::optional<Divergence> compare_outputs(const RunManifest& recorded,
                                          const std::filesystem::path& replay_dir,
                                          const std::filesystem::path& original_dir = {});

}  // namespace stylofair::manifest
