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

#include "stylofair/cli.hpp"

#include <stdlib.h>

#include <algorithm>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stylofair/corpus.hpp"
#include "stylofair/experiments.hpp"
#include "stylofair/features.hpp"
#include "stylofair/ingest.hpp"
#include "stylofair/manifest.hpp"
#include "stylofair/ndjson.hpp"
#include "stylofair/parallel.hpp"
#include "stylofair/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace stylofair::cli {

int exit_code(ErrorClass cls) {
  switch (cls) {
    case ErrorClass::kUsage:
      return kExitUsage;
    case ErrorClass::kData:
      return kExitData;
    case ErrorClass::kNetwork:
      return kExitNetwork;
  }
  return kExitData;
}

namespace {

const std::set<std::string> kPathFlags = {"--in",      "--out",    "--config",      "--vocab",
                                          "--fixture", "--flairs", "--train-config"};

// Splits "--flag=value" and makes path values absolute, so a recorded command
// line replays from any working directory.
std::vector<std::string> normalize_args(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (size_t i = 0; i < args.size(); ++i) {
    std::string a = args[i];
    std::optional<std::string> inline_value;
    if (a.size() > 2 && a.rfind("--", 0) == 0) {
      const size_t eq = a.find('=');
      if (eq != std::string::npos) {
        inline_value = a.substr(eq + 1);
        a.resize(eq);
      }
    }
    out.push_back(a);
    if (!kPathFlags.count(a)) {
      if (inline_value) out.push_back(*inline_value);
      continue;
    }
    std::string value;
    if (inline_value) {
      value = *inline_value;
    } else if (i + 1 < args.size()) {
      value = args[++i];
    } else {
      continue;
    }
    out.push_back(value.empty() ? value : fs::absolute(value).lexically_normal().string());
  }
  return out;
}

std::vector<std::string> with_option(std::vector<std::string> args, const std::string& flag,
                                     const std::string& value) {
  for (size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == flag) {
      args[i + 1] = value;
      return args;
    }
  }
  args.push_back(flag);
  args.push_back(value);
  return args;
}

struct Globals {
  uint64_t seed = 0;
  size_t jobs = default_jobs();
  std::string out;
  std::string fixture;
  bool live = false;
  double rate = 60.0;
};

// What a command read and wrote, for its manifest.
struct Outcome {
  std::vector<fs::path> inputs;
  std::vector<std::string> outputs;  // relative to --out
  std::map<std::string, std::string> config_hashes;
  std::optional<uint64_t> seed;  // effective seed when not --seed
};

json parse_json_file(const fs::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw DataError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

model::TrainConfig load_train_config(const std::string& path) {
  if (path.empty()) return {};
  return model::train_config_from_json(parse_json_file(path));
}

std::string config_hash(const json& j) { return manifest::sha256_hex(j.dump()); }

void write_run_manifest(const std::vector<std::string>& args, const Globals& g, Outcome o,
                        const std::string& started) {
  const fs::path out_dir = fs::absolute(g.out).lexically_normal();
  manifest::RunManifest m;
  m.tool_version = manifest::module_versions().at("stylofair");
  m.arguments = args;
  m.seed = o.seed.value_or(g.seed);
  m.jobs = g.jobs;
  m.config_hashes = std::move(o.config_hashes);
  std::string joined;
  for (const auto& a : args) joined += a + '\n';
  m.config_hashes["arguments"] = manifest::sha256_hex(joined);
  m.module_versions = manifest::module_versions();
  std::set<std::string> seen;
  for (const auto& p : o.inputs) {
    const fs::path abs = fs::absolute(p).lexically_normal();
    if (fs::is_directory(abs)) {
      std::vector<std::string> files;
      for (const auto& e : fs::recursive_directory_iterator(abs))
        if (e.is_regular_file()) files.push_back(e.path().string());
      std::sort(files.begin(), files.end());
      for (const auto& f : files)
        if (seen.insert(f).second) m.inputs.push_back(manifest::digest_file(f, f));
    } else if (fs::exists(abs) && seen.insert(abs.string()).second) {
      m.inputs.push_back(manifest::digest_file(abs, abs.string()));
    }
  }
  std::sort(o.outputs.begin(), o.outputs.end());
  o.outputs.erase(std::unique(o.outputs.begin(), o.outputs.end()), o.outputs.end());
  for (const auto& rel : o.outputs) m.outputs.push_back(manifest::digest_file(out_dir / rel, rel));
  m.output_dir = out_dir.string();
  m.started_utc = started;
  m.finished_utc = manifest::utc_now_iso8601();
  manifest::write_manifest(out_dir, m);
}

// ---------------------------------------------------------------------------
// ingest

struct Network {
  std::unique_ptr<ingest::HttpTransport> transport;
  std::unique_ptr<ingest::Clock> clock;
  std::unique_ptr<ingest::HttpClient> client;
};

Network connect(const Globals& g, Outcome& o) {
  if (g.live == !g.fixture.empty())
    throw UsageError("ingest needs exactly one of --fixture DIR or --live");
  Network net;
  if (g.live) {
    net.transport = std::make_unique<ingest::LiveTransport>();
    net.clock = std::make_unique<ingest::SystemClock>();
  } else {
    net.transport = std::make_unique<ingest::FixtureTransport>(g.fixture);
    net.clock = std::make_unique<ingest::ManualClock>();
    o.inputs.push_back(g.fixture);
  }
  net.client = std::make_unique<ingest::HttpClient>(*net.transport, *net.clock, g.rate);
  return net;
}

// ---------------------------------------------------------------------------
// corpus / features

std::vector<corpus::SplitAuthor> load_pool(const fs::path& dir, Outcome& o) {
  o.inputs.push_back(dir / "corpus.ndjson");
  if (fs::exists(dir / "splits.ndjson")) o.inputs.push_back(dir / "splits.ndjson");
  auto pool = corpus::load_split_pool(dir);
  if (pool.empty()) throw DataError("no usable authors in " + dir.string());
  return pool;
}

std::vector<const features::CommentAnalysis*> analyze_all(
    features::FeatureSpace& space, const std::vector<const corpus::Comment*>& comments,
    size_t jobs) {
  std::vector<const features::CommentAnalysis*> out(comments.size());
  parallel_for(comments.size(), jobs, [&](size_t i) { out[i] = &space.analyze(*comments[i]); });
  return out;
}

// ---------------------------------------------------------------------------
// audit

struct AuditArgs {
  std::string in;
  std::string attribute;
  std::string dc;
  std::string ndc;
  std::vector<size_t> sizes{4, 8, 16};
  size_t repeats = experiments::kDefaultRepeats;
  std::string nl_mode = "random";
  std::string metric = "accuracy";
  size_t holdouts = experiments::kDefaultHoldoutsPerGroup;
  std::string train_config;
};

size_t setup_size(const experiments::AuditResult& r) {
  return std::visit([](const auto& x) { return x.setup.n; }, r);
}

Outcome run_audit(const std::string& kind, const AuditArgs& a, const Globals& g,
                  std::ostream& out) {
  Outcome o;
  const fs::path out_dir = g.out;
  const auto pool = load_pool(a.in, o);
  experiments::AuditOptions options;
  options.jobs = g.jobs;
  options.train = load_train_config(a.train_config);
  if (!a.train_config.empty()) o.inputs.push_back(a.train_config);
  const std::string train_hash = config_hash(model::to_json(options.train));
  o.config_hashes["train_config"] = train_hash;
  if (a.sizes.empty()) throw UsageError("--n needs at least one suspect-set size");

  experiments::AuditSetup base;
  base.attribute = parse_dataset_kind(a.attribute);
  base.dc = a.dc;
  base.ndc = a.ndc;
  base.repeats = a.repeats;
  base.seed = g.seed;
  base.nl_mode = experiments::parse_nl_mode(a.nl_mode);
  base.train = options.train;

  json runs = json::array();
  json pooled;
  std::vector<experiments::OddsResult> odds;
  std::vector<experiments::ForcedResult> forced;
  for (size_t n : a.sizes) {
    experiments::AuditSetup setup = base;
    setup.n = n;
    experiments::AuditResult result;
    if (kind == "sweep") {
      result = experiments::run_composition_sweep(pool, setup,
                                                  experiments::parse_metric_kind(a.metric), options);
      const auto& s = std::get<experiments::SweepResult>(result);
      out << "sweep n=" << n << ": slope " << s.fit.slope << ", intercept " << s.fit.intercept
          << ", r2 " << s.fit.r2 << "\n";
    } else if (kind == "odds") {
      result = experiments::run_equity_of_odds(pool, setup, options);
      const auto& r = std::get<experiments::OddsResult>(result);
      odds.push_back(r);
      out << "odds n=" << n << ": ";
      if (r.ranksum.result)
        out << "rank-sum p " << r.ranksum.result->p_value << "\n";
      else
        out << r.ranksum.error << "\n";
    } else {
      result = experiments::run_forced_misclassification(pool, setup, a.holdouts, options);
      const auto& r = std::get<experiments::ForcedResult>(result);
      forced.push_back(r);
      out << "forced n=" << n << ":";
      for (const auto& c : r.comparisons)
        out << " [" << c.name << (c.significant_05 ? " significant" : " not significant") << "]";
      out << "\n";
    }
    runs.push_back(experiments::to_json(result));
  }
  if (odds.size() > 1) pooled = experiments::to_json(experiments::AuditResult(experiments::pool_odds(odds)));
  if (forced.size() > 1)
    pooled = experiments::to_json(experiments::AuditResult(experiments::pool_forced(forced)));

  json doc = {{"type", "audit-results"}, {"audit", kind}, {"train_config_hash", train_hash},
              {"runs", runs}};
  if (!pooled.is_null()) doc["pooled"] = pooled;
  write_file(out_dir / "results.json", doc.dump(2) + "\n");
  o.outputs.push_back("results.json");
  return o;
}

Outcome run_report(const std::string& in, const Globals& g, std::ostream& out) {
  Outcome o;
  o.inputs.push_back(in);
  const json doc = parse_json_file(in);
  if (!doc.contains("runs") || !doc["runs"].is_array())
    throw DataError(in + " is not an audit results file");
  const fs::path out_dir = fs::absolute(g.out).lexically_normal();
  auto emit = [&](const experiments::AuditResult& r, const std::string& sub) {
    for (const auto& p : experiments::emit_report(r, out_dir / sub))
      o.outputs.push_back(fs::relative(fs::absolute(p), out_dir).generic_string());
  };
  for (const auto& j : doc["runs"]) {
    const auto r = experiments::audit_result_from_json(j);
    emit(r, "n" + std::to_string(setup_size(r)));
  }
  if (doc.contains("pooled")) emit(experiments::audit_result_from_json(doc["pooled"]), "pooled");
  out << "wrote " << o.outputs.size() << " report files to " << out_dir.string() << "\n";
  return o;
}

// ---------------------------------------------------------------------------
// replay

int run_replay(const std::string& manifest_path, const Globals& g, std::ostream& out,
               std::ostream& err) {
  const manifest::RunManifest m = manifest::read_manifest(manifest_path);
  fs::path original =
      fs::is_directory(manifest_path) ? fs::path(manifest_path) : fs::path(manifest_path).parent_path();
  if (!m.output_dir.empty() && fs::is_directory(m.output_dir)) original = m.output_dir;
  if (m.arguments.empty() || m.arguments.front() == "replay")
    throw DataError("manifest does not record a replayable command");
  for (const auto& in : m.inputs) {
    if (!fs::exists(in.path)) throw DataError("replay input missing: " + in.path);
    if (manifest::sha256_file(in.path) != in.sha256)
      throw DataError("replay input changed since the recorded run: " + in.path);
  }

  fs::path dir;
  const bool temporary = g.out.empty();
  if (temporary) {
    std::string tmpl = (fs::temp_directory_path() / "stylofair-replay-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw DataError("cannot create a temporary replay directory");
    dir = tmpl;
  } else {
    dir = fs::absolute(g.out).lexically_normal();
    if (fs::exists(dir) && !fs::is_empty(dir))
      throw UsageError("replay --out must be a new or empty directory: " + dir.string());
  }

  std::vector<std::string> args = with_option(m.arguments, "--seed", std::to_string(m.seed));
  args = with_option(args, "--jobs", std::to_string(m.jobs));
  args = with_option(args, "--out", dir.string());
  const int rc = run(args, out, err);
  std::optional<manifest::Divergence> divergence;
  if (rc == kExitOk) divergence = manifest::compare_outputs(m, dir, original);
  if (temporary) {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  if (rc != kExitOk) {
    err << "replay: re-execution failed with exit code " << rc << "\n";
    return rc;
  }
  if (divergence) {
    err << "replay diverged at " << divergence->path << ": " << divergence->detail << "\n";
    return kExitData;
  }
  out << "replay identical: " << m.outputs.size() << " outputs\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  try {
    args = normalize_args(raw_args);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Stylometric authorship attribution and fairness audits.", "stylofair"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  auto* seed_opt = app.add_option("--seed", g.seed, "Root seed for every random stream");
  app.add_option("--jobs", g.jobs, "Worker threads (default: logical cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output directory");
  app.add_option("--fixture", g.fixture, "Serve HTTP from a recorded fixture directory")
      ->check(CLI::ExistingDirectory);
  app.add_flag("--live", g.live, "Use the network (credentials from STYLOFAIR_REDDIT_TOKEN)");
  app.add_option("--rate", g.rate, "Requests per minute per host")->check(CLI::PositiveNumber);

  std::string subreddit, in_path, kind_name, flairs_path, vocab_path, config_path, train_config;
  size_t max_pages = 0, block_size = features::kBlockSize;

  auto* ingest_cmd = app.add_subcommand("ingest", "Collect snapshots, flairs and user histories");
  ingest_cmd->require_subcommand(1);
  auto* snapshots = ingest_cmd->add_subcommand("snapshots", "List archive captures of a subreddit");
  snapshots->add_option("--subreddit", subreddit, "Subreddit name")->required();
  auto* threads = ingest_cmd->add_subcommand("threads", "Resolve threads and participant flair");
  threads->add_option("--in", in_path, "snapshots.ndjson")->required();
  auto* users = ingest_cmd->add_subcommand("users", "Collect histories of flaired users");
  users->add_option("--in", in_path, "flairs.ndjson")->required();
  users->add_option("--dataset-kind", kind_name, "language, gender or generation")->required();
  users->add_option("--max-pages", max_pages, "Stop after this many pages (0: no limit)");

  auto* corpus_cmd = app.add_subcommand("corpus", "Clean, filter and split comments");
  corpus_cmd->require_subcommand(1);
  auto* build = corpus_cmd->add_subcommand("build", "Build author records from a crawl");
  build->add_option("--in", in_path, "Directory holding comments.ndjson")->required();
  build->add_option("--flairs", flairs_path, "Flair table (default: <in>/flairs.ndjson)");
  build->add_option("--dataset-kind", kind_name, "language, gender or generation")->required();
  auto* split = corpus_cmd->add_subcommand("split", "Chronological train/test splits");
  split->add_option("--in", in_path, "Directory holding corpus.ndjson (default: --out)");

  auto* features_cmd = app.add_subcommand("features", "Fit vocabularies and extract vectors");
  features_cmd->require_subcommand(1);
  auto* fit = features_cmd->add_subcommand("fit", "Fit a vocabulary on training comments");
  fit->add_option("--in", in_path, "Corpus directory")->required();
  fit->add_option("--block-size", block_size, "Grams kept per block")->check(CLI::PositiveNumber);
  auto* extract = features_cmd->add_subcommand("extract", "Extract standardized vectors");
  extract->add_option("--in", in_path, "Corpus directory")->required();
  extract->add_option("--vocab", vocab_path, "vocab.json")->required();

  auto* synth_cmd = app.add_subcommand("synth", "Synthetic corpora");
  synth_cmd->require_subcommand(1);
  auto* generate = synth_cmd->add_subcommand("generate", "Generate a corpus in ingest format");
  generate->add_option("--config", config_path, "SynthConfig JSON")->required();
  double target = 0.8;
  size_t calib_n = 8, calib_sets = 3, calib_verify = 4, calib_steps = 10;
  auto* calibrate = synth_cmd->add_subcommand("calibrate", "Find author_effect for a target accuracy");
  calibrate->add_option("--target", target, "Target closed-world accuracy")->required();
  calibrate->add_option("--n", calib_n, "Suspect-set size")->required();
  calibrate->add_option("--config", config_path, "Base SynthConfig JSON");
  calibrate->add_option("--sets", calib_sets, "Suspect sets per evaluation");
  calibrate->add_option("--verification-sets", calib_verify, "Suspect sets in the verification run");
  calibrate->add_option("--max-steps", calib_steps, "Bisection steps");
  calibrate->add_option("--train-config", train_config, "TrainConfig JSON");

  auto* audit_cmd = app.add_subcommand("audit", "Run a fairness audit");
  audit_cmd->require_subcommand(1);
  AuditArgs audit_args;
  std::map<std::string, CLI::App*> audits;
  for (const char* name : {"sweep", "odds", "forced"}) {
    auto* s = audit_cmd->add_subcommand(name, std::string(name == std::string("sweep")
                                                              ? "Suspect-set composition sweep"
                                                          : name == std::string("odds")
                                                              ? "Equity of odds"
                                                              : "Forced misclassification"));
    s->add_option("--in", audit_args.in, "Corpus directory")->required();
    s->add_option("--attribute", audit_args.attribute, "language, gender or generation")->required();
    s->add_option("--dc", audit_args.dc, "Label holding the characteristic")->required();
    s->add_option("--ndc", audit_args.ndc, "Label without it")->required();
    s->add_option("--n", audit_args.sizes, "Suspect-set sizes")->delimiter(',');
    s->add_option("--repeats", audit_args.repeats, "Repeats per configuration")
        ->check(CLI::PositiveNumber);
    s->add_option("--nl-mode", audit_args.nl_mode, "shared or random");
    s->add_option("--train-config", audit_args.train_config, "TrainConfig JSON");
    if (name == std::string("sweep")) s->add_option("--metric", audit_args.metric, "accuracy or f1");
    if (name == std::string("forced"))
      s->add_option("--holdouts", audit_args.holdouts, "Held-out authors per group")
          ->check(CLI::PositiveNumber);
    audits[name] = s;
  }

  auto* report = app.add_subcommand("report", "Render CSV, JSON and SVG from audit results");
  report->add_option("--in", in_path, "results.json")->required();

  std::string manifest_path;
  auto* replay = app.add_subcommand("replay", "Re-execute a run and compare its outputs");
  replay->add_option("manifest", manifest_path, "manifest.json or its directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (replay->parsed()) return run_replay(manifest_path, g, out, err);
    if (g.out.empty()) throw UsageError("--out DIR is required");
    const std::string started = manifest::utc_now_iso8601();
    const fs::path out_dir = g.out;
    fs::create_directories(out_dir);
    Outcome o;
    ingest::CrawlOptions crawl;

    if (snapshots->parsed()) {
      Network net = connect(g, o);
      const auto r = ingest::crawl_snapshots(*net.client, subreddit, out_dir, crawl);
      o.outputs = {"snapshots.ndjson"};
      out << "snapshots: " << r.snapshots << "\n";
    } else if (threads->parsed()) {
      Network net = connect(g, o);
      o.inputs.push_back(in_path);
      const auto r = ingest::crawl_threads(*net.client, in_path, out_dir, crawl);
      o.outputs = {"threads.ndjson", "flairs.ndjson"};
      out << "snapshots: " << r.snapshots << ", threads: " << r.threads
          << ", gone: " << r.threads_gone << ", observations: " << r.observations << "\n";
    } else if (users->parsed()) {
      const DatasetKind kind = parse_dataset_kind(kind_name);
      Network net = connect(g, o);
      o.inputs.push_back(in_path);
      const auto r = ingest::crawl_users(*net.client, in_path, kind, out_dir, crawl, max_pages);
      o.outputs = {"comments.ndjson", "crawl_progress.ndjson"};
      out << "users selected: " << r.users_selected << ", completed: " << r.users_completed
          << ", unavailable: " << r.users_unavailable << ", comments: " << r.comments << "\n";
    } else if (build->parsed()) {
      const DatasetKind kind = parse_dataset_kind(kind_name);
      const fs::path in_dir = in_path;
      const fs::path flairs = flairs_path.empty() ? in_dir / "flairs.ndjson" : fs::path(flairs_path);
      o.inputs = {in_dir / "comments.ndjson", flairs};
      const auto raw = ingest::read_comments(in_dir / "comments.ndjson");
      const auto table = ingest::read_flairs(flairs);
      const auto result = corpus::build_author_records(raw, table, kind, {g.jobs});
      corpus::write_corpus(out_dir / "corpus.ndjson", result.records);
      corpus::write_drops(out_dir / "drops.ndjson", result.drops);
      o.outputs = {"corpus.ndjson", "drops.ndjson"};
      out << "authors kept: " << result.records.size() << ", dropped: " << result.drops.size()
          << "\n";
    } else if (split->parsed()) {
      const fs::path in_dir = in_path.empty() ? out_dir : fs::path(in_path);
      o.inputs = {in_dir / "corpus.ndjson"};
      const auto records = corpus::read_corpus(in_dir / "corpus.ndjson");
      std::vector<corpus::SplitAuthor> splits(records.size());
      parallel_for(records.size(), g.jobs,
                   [&](size_t i) { splits[i] = corpus::split_author(records[i]); });
      if (fs::absolute(in_dir).lexically_normal() != fs::absolute(out_dir).lexically_normal()) {
        corpus::write_corpus(out_dir / "corpus.ndjson", records);
        o.outputs.push_back("corpus.ndjson");
      }
      corpus::write_splits(out_dir / "splits.ndjson", splits);
      o.outputs.push_back("splits.ndjson");
      out << "split authors: " << splits.size() << "\n";
    } else if (fit->parsed()) {
      const auto pool = load_pool(in_path, o);
      std::vector<const corpus::Comment*> train;
      for (const auto& a : pool)
        for (const auto& c : a.train_comments) train.push_back(&c);
      features::FeatureSpace space;
      const auto analyses = analyze_all(space, train, g.jobs);
      const auto vocab = space.fit(analyses, block_size);
      write_file(out_dir / "vocab.json", features::to_json(vocab).dump(2) + "\n");
      o.outputs = {"vocab.json"};
      out << "vocabulary dimension: " << vocab.dimension() << "\n";
    } else if (extract->parsed()) {
      const auto pool = load_pool(in_path, o);
      o.inputs.push_back(vocab_path);
      const json vocab_json = parse_json_file(vocab_path);
      o.config_hashes["vocab"] = config_hash(vocab_json);
      const auto vocab = features::vocab_from_json(vocab_json);
      std::vector<const corpus::Comment*> comments;
      std::vector<std::string> roles;
      for (const auto& a : pool) {
        for (const auto& c : a.train_comments) comments.push_back(&c), roles.push_back("train");
        for (const auto& c : a.test_comments) comments.push_back(&c), roles.push_back("test");
      }
      features::FeatureSpace space;
      const auto analyses = analyze_all(space, comments, g.jobs);
      const auto vectors = space.extract_batch(analyses, vocab);
      NdjsonWriter w(out_dir / "features.ndjson");
      for (size_t i = 0; i < comments.size(); ++i)
        w.write({{"comment_id", comments[i]->comment_id},
                 {"author_id", comments[i]->author_id},
                 {"role", roles[i]},
                 {"vector", vectors[i]}});
      w.flush();
      o.outputs = {"features.ndjson"};
      out << "vectors: " << vectors.size() << " x " << vocab.dimension() << "\n";
    } else if (generate->parsed()) {
      o.inputs.push_back(config_path);
      synth::SynthConfig cfg = synth::synth_config_from_json(parse_json_file(config_path));
      if (seed_opt->count() > 0) cfg.seed = g.seed;
      cfg.validate();
      const auto corpus = synth::generate(cfg, g.jobs);
      synth::write_corpus(corpus, out_dir);
      const json cfg_json = synth::to_json(cfg);
      write_file(out_dir / "synth_config.json", cfg_json.dump(2) + "\n");
      o.outputs = {"comments.ndjson", "flairs.ndjson", "synth_config.json"};
      o.config_hashes["synth_config"] = config_hash(cfg_json);
      o.seed = cfg.seed;
      out << "authors: " << corpus.authors.size() << ", comments: " << corpus.comments.size()
          << "\n";
    } else if (calibrate->parsed()) {
      synth::CalibrationOptions options;
      if (!config_path.empty()) {
        o.inputs.push_back(config_path);
        options.base = synth::synth_config_from_json(parse_json_file(config_path));
      }
      options.sets_per_evaluation = calib_sets;
      options.verification_sets = calib_verify;
      options.max_steps = calib_steps;
      options.jobs = g.jobs;
      options.train = load_train_config(train_config);
      if (!train_config.empty()) o.inputs.push_back(train_config);
      o.config_hashes["train_config"] = config_hash(model::to_json(options.train));
      const auto result = synth::calibrate(target, calib_n, g.seed, options);
      json trace = json::array();
      for (const auto& s : result.trace)
        trace.push_back({{"author_effect", s.author_effect}, {"accuracy", s.accuracy}});
      const json cfg_json = synth::to_json(result.config);
      const json doc = {{"type", "calibration"},
                        {"target_accuracy", target},
                        {"n", calib_n},
                        {"tolerance", options.tolerance},
                        {"trace", trace},
                        {"verification_accuracy", result.verification_accuracy},
                        {"config", cfg_json}};
      write_file(out_dir / "calibration.json", doc.dump(2) + "\n");
      write_file(out_dir / "synth_config.json", cfg_json.dump(2) + "\n");
      o.outputs = {"calibration.json", "synth_config.json"};
      o.config_hashes["synth_config"] = config_hash(cfg_json);
      out << "author_effect " << result.config.author_effect << ", verification accuracy "
          << result.verification_accuracy << "\n";
    } else if (report->parsed()) {
      o = run_report(in_path, g, out);
    } else {
      bool ran = false;
      for (const auto& [name, sub] : audits) {
        if (!sub->parsed()) continue;
        o = run_audit(name, audit_args, g, out);
        ran = true;
      }
      if (!ran) throw UsageError("no command given");
    }
    write_run_manifest(args, g, std::move(o), started);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.error_class());
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace stylofair::cli
