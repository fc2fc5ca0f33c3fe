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

// Flair grammars: reduce a free-text subreddit flair to one demographic
// attribute, no signal, or a contradiction.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace stylofair {

enum class DatasetKind { kLanguage, kGender, kGeneration };

std::string to_string(DatasetKind kind);
DatasetKind parse_dataset_kind(std::string_view s);  // throws UsageError

namespace labels {
inline constexpr std::string_view kNative = "N";
inline constexpr std::string_view kNonNative = "nN";
inline constexpr std::string_view kWoman = "F";
inline constexpr std::string_view kMan = "M";
inline constexpr std::string_view kTrans = "T";
inline constexpr std::string_view kGenX = "GenX";
inline constexpr std::string_view kGenZ = "GenZ";
inline constexpr std::string_view kOtherGeneration = "Other";
}  // namespace labels

// Every label an attribute of the given kind can take.
const std::vector<std::string>& label_set(DatasetKind kind);

struct ParsedAttribute {
  DatasetKind kind = DatasetKind::kGender;
  std::string label;
  std::optional<std::string> native_language;  // language kind only
  std::optional<std::string> english_skill;    // CEFR level, language kind only
  std::optional<int> birth_year;               // generation kind only

  bool operator==(const ParsedAttribute&) const = default;
};

struct FlairNone {
  bool operator==(const FlairNone&) const = default;
};

struct FlairConflict {
  std::string reason;
  bool operator==(const FlairConflict&) const = default;
};

using FlairOutcome = std::variant<FlairNone, ParsedAttribute, FlairConflict>;

struct BirthYearBucket {
  std::string label;
  int first_year;
  int last_year;
};

// Token tables behind the grammars. Configuration, not ground truth.
struct FlairTables {
  std::set<std::string> woman_tokens;
  std::set<std::string> man_tokens;
  std::set<std::string> trans_tokens;
  std::map<std::string, std::string> language_names;  // lowercase name -> language
  std::map<std::string, std::string> flag_countries;  // ISO country -> language
  std::vector<BirthYearBucket> generation_buckets;
  int min_birth_year = 1900;
  int max_birth_year = 2015;
};

const FlairTables& default_flair_tables();

FlairOutcome parse_flair(DatasetKind kind, std::string_view flair_text,
                         const FlairTables& tables = default_flair_tables());

}  // namespace stylofair
