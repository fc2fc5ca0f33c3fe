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

// Cleaned comments, per-author records, chronological train/test splits and
// suspect-set sampling.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "stylofair/flair.hpp"
#include "stylofair/ingest.hpp"

namespace stylofair::corpus {

inline constexpr size_t kMinRawComments = 30;
inline constexpr size_t kMinCommentWords = 128;
inline constexpr size_t kMinAuthorWords = 6280;
inline constexpr size_t kTrainWordsLow = 4950;
inline constexpr size_t kTrainWordsHigh = 5050;
inline constexpr size_t kTestComments = 10;

struct Comment {
  std::string comment_id;
  std::string author_id;
  int64_t created_utc = 0;
  std::string text;  // cleaned
  size_t word_count = 0;

  bool operator==(const Comment&) const = default;
};

// Ascending created_utc, ties by comment_id.
bool chronological_less(const Comment& a, const Comment& b);

struct AuthorRecord {
  std::string author_id;
  DatasetKind attribute_kind = DatasetKind::kGender;
  std::string attribute_value;
  std::optional<std::string> native_language;
  std::vector<Comment> comments;  // chronological
};

struct SplitAuthor {
  std::string author_id;
  DatasetKind attribute_kind = DatasetKind::kGender;
  std::string attribute_value;
  std::optional<std::string> native_language;
  std::vector<Comment> train_comments;
  std::vector<Comment> test_comments;

  size_t train_words() const;
};

struct DropRecord {
  std::string author_id;
  std::string reason;  // min-comment-count, insufficient-words, split-infeasible,
                       // conflicting-flair, no-attribute
  bool operator==(const DropRecord&) const = default;
};

struct BuildOptions {
  size_t jobs = 1;
};

struct BuildResult {
  std::vector<AuthorRecord> records;  // sorted by author_id
  std::vector<DropRecord> drops;      // sorted by author_id
};

// Cleans one raw comment; nullopt when it fails the language or length gate.
std::optional<Comment> prepare_comment(const ingest::RawComment& raw);

BuildResult build_author_records(std::span<const ingest::RawComment> raw_comments,
                                 std::span<const ingest::FlairObservation> flair_table,
                                 DatasetKind kind, const BuildOptions& options = {});

// Greedy oldest-first training window with skip-on-overshoot; throws
// SplitInfeasibleError.
SplitAuthor split_author(const AuthorRecord& record);

// ---------------------------------------------------------------------------
// Suspect sets

enum class NativeLanguageMode { kRandom, kShared };

struct SuspectSet {
  std::vector<const SplitAuthor*> members;  // dc members first, then ndc
  DatasetKind attribute_kind = DatasetKind::kGender;
  std::string dc_label;
  std::string ndc_label;
  size_t dc_count = 0;
  size_t ndc_count = 0;
};

struct SamplingOptions {
  NativeLanguageMode nl_mode = NativeLanguageMode::kRandom;
  // Authors that must not be drawn (e.g. already used in this repeat).
  std::vector<std::string> exclude;
};

// `repeats` pairwise author-disjoint sets of size n with exactly k_dc members
// labelled `dc_label` and n - k_dc labelled `ndc_label`. In shared mode the
// non-native side of each set shares one native language. Throws
// PoolExhaustedError naming the shortfall.
std::vector<SuspectSet> sample_suspect_sets(std::span<const SplitAuthor> pool,
                                            const std::string& dc_label,
                                            const std::string& ndc_label, size_t k_dc, size_t n,
                                            size_t repeats, uint64_t seed,
                                            const SamplingOptions& options = {});

// ---------------------------------------------------------------------------
// Stores

nlohmann::json to_json(const Comment& c);
Comment comment_from_json(const nlohmann::json& j);

// corpus.ndjson: an author header line followed by that author's comments.
void write_corpus(const std::filesystem::path& path, std::span<const AuthorRecord> records);
std::vector<AuthorRecord> read_corpus(const std::filesystem::path& path);
void write_drops(const std::filesystem::path& path, std::span<const DropRecord> drops);
std::vector<DropRecord> read_drops(const std::filesystem::path& path);

// splits.ndjson: {author_id, train: [comment ids], test: [comment ids]}.
void write_splits(const std::filesystem::path& path, std::span<const SplitAuthor> splits);
// Resolves split comment ids against the corpus records.
std::vector<SplitAuthor> read_splits(const std::filesystem::path& path,
                                     std::span<const AuthorRecord> records);

// Reads DIR/corpus.ndjson and DIR/splits.ndjson (splitting on the fly when
// the latter is absent).
std::vector<SplitAuthor> load_split_pool(const std::filesystem::path& dir);

}  // namespace stylofair::corpus
