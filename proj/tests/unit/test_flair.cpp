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

#include <gtest/gtest.h>

#include "stylofair/error.hpp"
#include "stylofair/flair.hpp"

namespace stylofair {
namespace {

ParsedAttribute parsed(const FlairOutcome& o) {
  const auto* p = std::get_if<ParsedAttribute>(&o);
  EXPECT_NE(p, nullptr);
  return p ? *p : ParsedAttribute{};
}

TEST(ParseFlair, BirthYearBuckets) {
  const auto x = parsed(parse_flair(DatasetKind::kGeneration, "1970"));
  EXPECT_EQ(x.label, labels::kGenX);
  EXPECT_EQ(x.birth_year, 1970);
  EXPECT_EQ(parsed(parse_flair(DatasetKind::kGeneration, "born 2001, Ohio")).label, labels::kGenZ);
  EXPECT_EQ(parsed(parse_flair(DatasetKind::kGeneration, "1968")).label, labels::kGenX);
  EXPECT_EQ(parsed(parse_flair(DatasetKind::kGeneration, "2003")).label, labels::kGenZ);
  EXPECT_EQ(parsed(parse_flair(DatasetKind::kGeneration, "1985")).label, labels::kOtherGeneration);
}

TEST(ParseFlair, NoYearIsNone) {
  EXPECT_TRUE(std::holds_alternative<FlairNone>(parse_flair(DatasetKind::kGeneration, "millennial")));
  EXPECT_TRUE(std::holds_alternative<FlairNone>(parse_flair(DatasetKind::kGeneration, "1850")));
}

TEST(ParseFlair, EmptyIsNoneForEveryKind) {
  for (auto kind : {DatasetKind::kLanguage, DatasetKind::kGender, DatasetKind::kGeneration})
    EXPECT_TRUE(std::holds_alternative<FlairNone>(parse_flair(kind, "")));
}

TEST(ParseFlair, GenderTokens) {
  EXPECT_EQ(parsed(parse_flair(DatasetKind::kGender, "Woman")).label, labels::kWoman);
  EXPECT_EQ(parsed(parse_flair(DatasetKind::kGender, "MAN, 34")).label, labels::kMan);
  EXPECT_TRUE(std::holds_alternative<FlairNone>(parse_flair(DatasetKind::kGender, "Germany")));
}

TEST(ParseFlair, GenderConflictWhenTwoSetsMatch) {
  const auto o = parse_flair(DatasetKind::kGender, "woman / man");
  EXPECT_TRUE(std::holds_alternative<FlairConflict>(o));
}

TEST(ParseFlair, LanguageMarkers) {
  const auto de = parsed(parse_flair(DatasetKind::kLanguage, "Native: 🇩🇪"));
  EXPECT_EQ(de.label, labels::kNonNative);
  EXPECT_EQ(de.native_language, "german");
  const auto en = parsed(parse_flair(DatasetKind::kLanguage, "English (N)"));
  EXPECT_EQ(en.label, labels::kNative);
  const auto es = parsed(parse_flair(DatasetKind::kLanguage, "Spanish (N) | English (C1)"));
  EXPECT_EQ(es.label, labels::kNonNative);
  EXPECT_EQ(es.native_language, "spanish");
  EXPECT_EQ(es.english_skill, "C1");
}

TEST(ParseFlair, IsPure) {
  for (int i = 0; i < 3; ++i)
    EXPECT_EQ(parse_flair(DatasetKind::kLanguage, "🇫🇷 N | EN B2"),
              parse_flair(DatasetKind::kLanguage, "🇫🇷 N | EN B2"));
}

TEST(ParseFlair, TotalOverArbitraryBytes) {
  const std::string junk[] = {"\xff\xfe", "(((", "N N N", "C2", "🇩🇪🇫🇷 native", "0000"};
  for (auto kind : {DatasetKind::kLanguage, DatasetKind::kGender, DatasetKind::kGeneration})
    for (const auto& s : junk) EXPECT_NO_THROW(parse_flair(kind, s));
}

TEST(DatasetKindNames, RoundTrip) {
  for (auto kind : {DatasetKind::kLanguage, DatasetKind::kGender, DatasetKind::kGeneration})
    EXPECT_EQ(parse_dataset_kind(to_string(kind)), kind);
  EXPECT_THROW(parse_dataset_kind("height"), UsageError);
}

}  // namespace
}  // namespace stylofair
