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

#include <sstream>

#include "stylofair/cli.hpp"
#include "stylofair/corpus.hpp"
#include "stylofair/experiments.hpp"
#include "stylofair/manifest.hpp"
#include "test_support.hpp"

namespace stylofair {
namespace {

using testing::fixture_path;
using testing::TempDir;

void run_ok(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  std::string joined;
  for (const auto& a : args) joined += a + " ";
  ASSERT_EQ(code, 0) << joined << "\n" << err.str();
}

void replay_identical(const std::filesystem::path& dir) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::run({"replay", dir.string()}, out, err), 0) << dir << "\n" << err.str();
  EXPECT_NE(out.str().find("replay identical"), std::string::npos);
}

size_t line_count(const std::filesystem::path& p) {
  const std::string s = read_file(p);
  return static_cast<size_t>(std::count(s.begin(), s.end(), '\n'));
}

class SynthPipeline : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new TempDir;
    const auto& d = *dir_;
    write_file(d / "synth.json",
               R"({"attribute": "gender", "n_authors_per_group": 9, "comments_per_author": 55})");
    run_ok({"--seed", "3", "--out", (d / "gen").string(), "synth", "generate", "--config",
            (d / "synth.json").string()});
    run_ok({"--out", (d / "corpus").string(), "corpus", "build", "--in", (d / "gen").string(),
            "--dataset-kind", "gender"});
    run_ok({"--out", (d / "split").string(), "corpus", "split", "--in", (d / "corpus").string()});
  }
  static void TearDownTestSuite() {
    delete dir_;
    dir_ = nullptr;
  }
  static std::filesystem::path at(const std::string& rel) { return *dir_ / rel; }
  static TempDir* dir_;
};
TempDir* SynthPipeline::dir_ = nullptr;

TEST_F(SynthPipeline, CorpusStagesAreConsistent) {
  const auto records = corpus::read_corpus(at("corpus/corpus.ndjson"));
  const auto drops = corpus::read_drops(at("corpus/drops.ndjson"));
  EXPECT_EQ(records.size() + drops.size(), 18u);
  EXPECT_GE(records.size(), 12u);
  const auto pool = corpus::load_split_pool(at("split"));
  EXPECT_EQ(pool.size(), records.size());
  for (const auto& a : pool) EXPECT_EQ(a.test_comments.size(), corpus::kTestComments);
  replay_identical(at("gen"));
  replay_identical(at("corpus"));
  replay_identical(at("split"));
}

TEST_F(SynthPipeline, FeaturesFitAndExtract) {
  run_ok({"--out", at("vocab").string(), "features", "fit", "--in", at("split").string(),
          "--block-size", "200"});
  run_ok({"--out", at("vectors").string(), "features", "extract", "--in", at("split").string(),
          "--vocab", (at("vocab") / "vocab.json").string()});
  const auto vocab = features::vocab_from_json(nlohmann::json::parse(read_file(at("vocab/vocab.json"))));
  EXPECT_EQ(vocab.char_ngrams.size(), 200u);
  size_t comments = 0;
  for (const auto& a : corpus::load_split_pool(at("split")))
    comments += a.train_comments.size() + a.test_comments.size();
  EXPECT_EQ(line_count(at("vectors/features.ndjson")), comments);
  const auto first = nlohmann::json::parse(read_file(at("vectors/features.ndjson")).substr(0, read_file(at("vectors/features.ndjson")).find('\n')));
  EXPECT_EQ(first.at("vector").size(), vocab.dimension());
  replay_identical(at("vocab"));
  replay_identical(at("vectors"));
}

TEST_F(SynthPipeline, AuditsReportAndReplay) {
  const std::vector<std::string> common = {"--in", at("split").string(), "--attribute", "gender",
                                           "--dc", "F", "--ndc", "M"};
  auto audit = [&](const std::string& kind, const std::string& out, std::vector<std::string> extra) {
    std::vector<std::string> args = {"--seed", "8", "--out", at(out).string(), "audit", kind};
    args.insert(args.end(), common.begin(), common.end());
    args.insert(args.end(), extra.begin(), extra.end());
    run_ok(args);
  };
  audit("odds", "odds", {"--n", "2,4", "--repeats", "2"});
  audit("forced", "forced", {"--n", "4", "--holdouts", "2", "--repeats", "1"});
  audit("sweep", "sweep", {"--n", "2", "--metric", "f1", "--repeats", "2"});

  const auto odds = nlohmann::json::parse(read_file(at("odds/results.json")));
  EXPECT_EQ(odds.at("audit"), "odds");
  EXPECT_EQ(odds.at("runs").size(), 2u);
  EXPECT_TRUE(odds.contains("pooled"));
  const auto first = experiments::audit_result_from_json(odds.at("runs")[0]);
  const auto& o = std::get<experiments::OddsResult>(first);
  EXPECT_EQ(o.dc_values.size(), 2u);  // one dc author per set, two repeats
  EXPECT_EQ(o.models_trained, 2u);

  run_ok({"--out", at("report").string(), "report", "--in", (at("odds") / "results.json").string()});
  for (const char* f : {"n2/odds.json", "n2/odds_values.csv", "n2/odds.svg", "n4/odds.svg",
                        "pooled/odds.json"})
    EXPECT_TRUE(std::filesystem::exists(at("report") / f)) << f;

  for (const char* d : {"odds", "forced", "sweep", "report"}) replay_identical(at(d));
}

TEST_F(SynthPipeline, AuditIndependentOfJobCount) {
  for (const char* jobs : {"1", "3"})
    run_ok({"--seed", "4", "--jobs", jobs, "--out", at(std::string("jobs") + jobs).string(), "audit",
            "odds", "--in", at("split").string(), "--attribute", "gender", "--dc", "F", "--ndc", "M",
            "--n", "4", "--repeats", "2"});
  EXPECT_EQ(read_file(at("jobs1/results.json")), read_file(at("jobs3/results.json")));
}

TEST(IngestPipeline, RecordedCrawlEndToEnd) {
  TempDir d;
  const std::string fixture = fixture_path("crawl").string();
  run_ok({"--fixture", fixture, "--out", (d / "snap").string(), "ingest", "snapshots",
          "--subreddit", "languagelearning"});
  EXPECT_EQ(line_count(d / "snap/snapshots.ndjson"), 2u);
  run_ok({"--fixture", fixture, "--out", (d / "threads").string(), "ingest", "threads", "--in",
          (d / "snap/snapshots.ndjson").string()});
  EXPECT_EQ(line_count(d / "threads/flairs.ndjson"), 4u);
  run_ok({"--fixture", fixture, "--out", (d / "users").string(), "ingest", "users", "--in",
          (d / "threads/flairs.ndjson").string(), "--dataset-kind", "language"});
  EXPECT_EQ(line_count(d / "users/comments.ndjson"), 137u);
  run_ok({"--out", (d / "corpus").string(), "corpus", "build", "--in", (d / "users").string(),
          "--flairs", (d / "threads/flairs.ndjson").string(), "--dataset-kind", "language"});
  EXPECT_TRUE(std::filesystem::exists(d / "corpus/drops.ndjson"));
  for (const char* stage : {"snap", "threads", "users", "corpus"}) replay_identical(d / stage);
}

}  // namespace
}  // namespace stylofair
