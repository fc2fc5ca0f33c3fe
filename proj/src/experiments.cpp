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

#include "stylofair/experiments.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stylofair/error.hpp"
#include "stylofair/parallel.hpp"
#include "stylofair/rng.hpp"

namespace stylofair::experiments {

using corpus::NativeLanguageMode;
using corpus::SplitAuthor;
using corpus::SuspectSet;
using nlohmann::json;

std::string_view to_string(MetricKind m) { return m == MetricKind::kMacroF1 ? "f1" : "accuracy"; }

MetricKind parse_metric_kind(std::string_view s) {
  if (s == "accuracy") return MetricKind::kAccuracy;
  if (s == "f1" || s == "macro_f1") return MetricKind::kMacroF1;
  throw UsageError("unknown metric '" + std::string(s) + "' (expected accuracy or f1)");
}

std::string_view to_string(NativeLanguageMode m) {
  return m == NativeLanguageMode::kShared ? "shared" : "random";
}

NativeLanguageMode parse_nl_mode(std::string_view s) {
  if (s == "shared" || s == "sharedNL") return NativeLanguageMode::kShared;
  if (s == "random" || s == "randomNL") return NativeLanguageMode::kRandom;
  throw UsageError("unknown native-language mode '" + std::string(s) + "' (expected shared or random)");
}

namespace {

uint64_t sub_seed(uint64_t seed, std::string_view name, uint64_t index = 0) {
  Stream s = make_stream(seed, name, index);
  return s();
}

void validate(const AuditSetup& setup) {
  if (setup.n < 2) throw UsageError("suspect-set size must be at least 2");
  if (setup.repeats == 0) throw UsageError("repeats must be positive");
  if (setup.dc.empty() || setup.ndc.empty()) throw UsageError("both --dc and --ndc labels are required");
  if (setup.dc == setup.ndc) throw UsageError("--dc and --ndc must differ");
  const auto& valid = label_set(setup.attribute);
  for (const auto& l : {setup.dc, setup.ndc})
    if (std::find(valid.begin(), valid.end(), l) == valid.end())
      throw UsageError("label '" + l + "' is not valid for attribute " + std::string(to_string(setup.attribute)));
}

struct Engine {
  std::unique_ptr<StylometricAttributor> attributor;
  Assigner assign;

  Engine(const AuditOptions& options, const model::TrainConfig& train) {
    if (options.assigner) {
      assign = options.assigner;
    } else {
      attributor = std::make_unique<StylometricAttributor>(train, options.block_size);
      assign = attributor->as_assigner();
    }
  }
  size_t trained() const { return attributor ? attributor->models_trained() : 0; }
  size_t converged() const { return attributor ? attributor->models_converged() : 0; }
};

TestOutcome run_ranksum(const std::vector<double>& a, const std::vector<double>& b) {
  TestOutcome out;
  try {
    out.result = stats::ranksum(a, b);
  } catch (const DataError& e) {
    out.error = e.what();
  }
  return out;
}

NormalityOutcome run_normality(const std::vector<double>& x) {
  NormalityOutcome out;
  try {
    out.result = stats::shapiro_wilk(x);
  } catch (const DataError& e) {
    out.error = e.what();
  }
  return out;
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

std::vector<double> values_of(const std::vector<AuthorRate>& rates) {
  std::vector<double> v;
  v.reserve(rates.size());
  for (const auto& r : rates) v.push_back(r.value);
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------

StylometricAttributor::StylometricAttributor(model::TrainConfig train, size_t block_size)
    : train_(train), block_size_(block_size) {}

StylometricAttributor::Fitted StylometricAttributor::fit(const SuspectSet& set) {
  std::vector<const features::CommentAnalysis*> analyses;
  std::vector<std::string> labels;
  for (const auto* member : set.members) {
    for (const auto& c : member->train_comments) {
      analyses.push_back(&space_.analyze(c));
      labels.push_back(member->author_id);
    }
  }
  Fitted fitted;
  fitted.vocab = space_.fit(analyses, block_size_);
  const auto rows = space_.extract_batch(analyses, fitted.vocab, true);
  Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(fitted.vocab.dimension()));
  for (size_t i = 0; i < rows.size(); ++i)
    x.row(static_cast<Eigen::Index>(i)) =
        Eigen::Map<const Eigen::RowVectorXd>(rows[i].data(), static_cast<Eigen::Index>(rows[i].size()));
  fitted.model = model::train(x, labels, train_);
  ++trained_;
  if (fitted.model.report.converged) ++converged_;
  return fitted;
}

std::vector<features::FeatureVector> StylometricAttributor::vectors(
    const features::VocabSpec& vocab, std::span<const corpus::Comment* const> comments) {
  std::vector<const features::CommentAnalysis*> analyses;
  analyses.reserve(comments.size());
  for (const auto* c : comments) analyses.push_back(&space_.analyze(*c));
  return space_.extract_batch(analyses, vocab, true);
}

std::vector<model::Prediction> StylometricAttributor::classify(
    const Fitted& fitted, std::span<const corpus::Comment* const> queries) {
  std::vector<model::Prediction> out;
  out.reserve(queries.size());
  for (const auto& v : vectors(fitted.vocab, queries)) out.push_back(model::predict(fitted.model, v));
  return out;
}

Assigner StylometricAttributor::as_assigner() {
  return [this](const SuspectSet& set, std::span<const corpus::Comment* const> queries, uint64_t) {
    const Fitted fitted = fit(set);
    std::vector<std::string> labels;
    for (const auto& p : classify(fitted, queries)) labels.push_back(p.predicted_label);
    return labels;
  };
}

// ---------------------------------------------------------------------------

SweepResult run_composition_sweep(std::span<const SplitAuthor> pool, const AuditSetup& setup,
                                  MetricKind metric, const AuditOptions& options) {
  validate(setup);
  SweepResult result;
  result.setup = setup;
  result.metric_kind = metric;

  std::vector<std::vector<SuspectSet>> sets(setup.n + 1);
  for (size_t k = 0; k <= setup.n; ++k)
    sets[k] = corpus::sample_suspect_sets(pool, setup.dc, setup.ndc, k, setup.n, setup.repeats,
                                          sub_seed(setup.seed, "composition", k),
                                          {setup.nl_mode, {}});
  result.points.resize((setup.n + 1) * setup.repeats);
  Engine engine(options, setup.train);
  parallel_for(result.points.size(), options.jobs, [&](size_t t) {
    const size_t k = t / setup.repeats;
    const size_t r = t % setup.repeats;
    const SuspectSet& set = sets[k][r];
    std::vector<const corpus::Comment*> queries;
    std::vector<std::string> truth;
    for (const auto* m : set.members)
      for (const auto& c : m->test_comments) {
        queries.push_back(&c);
        truth.push_back(m->author_id);
      }
    const auto predicted = engine.assign(set, queries, sub_seed(setup.seed, "sweep-task", t));
    result.points[t] = {k, r,
                        metric == MetricKind::kAccuracy ? model::accuracy(predicted, truth)
                                                        : model::macro_f1(predicted, truth)};
  });
  std::vector<std::pair<double, double>> xy;
  for (const auto& p : result.points) xy.emplace_back(static_cast<double>(p.k), p.metric);
  result.fit = stats::linfit(xy);
  result.models_trained = engine.trained();
  result.models_converged = engine.converged();
  return result;
}

// ---------------------------------------------------------------------------

OddsResult run_equity_of_odds(std::span<const SplitAuthor> pool, const AuditSetup& setup,
                              const AuditOptions& options) {
  validate(setup);
  OddsResult result;
  result.setup = setup;
  const auto sets = corpus::sample_suspect_sets(pool, setup.dc, setup.ndc, setup.n / 2, setup.n,
                                                setup.repeats, sub_seed(setup.seed, "odds"),
                                                {setup.nl_mode, {}});
  std::vector<std::vector<AuthorRate>> per_repeat(sets.size());
  Engine engine(options, setup.train);
  parallel_for(sets.size(), options.jobs, [&](size_t r) {
    const SuspectSet& set = sets[r];
    std::vector<const corpus::Comment*> queries;
    for (const auto* m : set.members)
      for (const auto& c : m->test_comments) queries.push_back(&c);
    const auto predicted = engine.assign(set, queries, sub_seed(setup.seed, "odds-task", r));
    size_t at = 0;
    for (const auto* m : set.members) {
      size_t wrong = 0;
      for (size_t i = 0; i < m->test_comments.size(); ++i, ++at) wrong += predicted[at] != m->author_id;
      per_repeat[r].push_back({m->author_id, m->attribute_value, setup.n, r,
                               stats::misclassification_probability(wrong, m->test_comments.size())});
    }
  });
  for (const auto& rates : per_repeat)
    for (const auto& a : rates) (a.label == setup.dc ? result.dc_values : result.ndc_values).push_back(a);
  const auto dc = values_of(result.dc_values);
  const auto ndc = values_of(result.ndc_values);
  result.ranksum = run_ranksum(dc, ndc);
  result.dc_normality = run_normality(dc);
  result.ndc_normality = run_normality(ndc);
  result.models_trained = engine.trained();
  result.models_converged = engine.converged();
  return result;
}

OddsResult pool_odds(std::span<const OddsResult> runs) {
  if (runs.empty()) throw UsageError("nothing to pool");
  OddsResult pooled;
  pooled.setup = runs.front().setup;
  pooled.setup.n = 0;
  for (const auto& r : runs) {
    pooled.dc_values.insert(pooled.dc_values.end(), r.dc_values.begin(), r.dc_values.end());
    pooled.ndc_values.insert(pooled.ndc_values.end(), r.ndc_values.begin(), r.ndc_values.end());
    pooled.models_trained += r.models_trained;
    pooled.models_converged += r.models_converged;
  }
  const auto dc = values_of(pooled.dc_values);
  const auto ndc = values_of(pooled.ndc_values);
  pooled.ranksum = run_ranksum(dc, ndc);
  pooled.dc_normality = run_normality(dc);
  pooled.ndc_normality = run_normality(ndc);
  return pooled;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<double> forced_values(const std::vector<HeldOutRate>& rates, const std::string& label,
                                  bool intra) {
  std::vector<double> v;
  for (const auto& r : rates)
    if (r.label == label) v.push_back(intra ? r.intra : r.inter);
  return v;
}

void compute_comparisons(ForcedResult& result) {
  const auto dc_dc = result.dist_dc_dc();
  const auto ndc_dc = result.dist_ndc_dc();
  const auto ndc_ndc = result.dist_ndc_ndc();
  const auto dc_ndc = result.dist_dc_ndc();
  const std::pair<const std::vector<double>*, const std::vector<double>*> pairs[] = {
      {&dc_dc, &ndc_dc}, {&ndc_ndc, &dc_ndc}, {&dc_dc, &ndc_ndc}, {&dc_ndc, &ndc_dc}};
  static constexpr const char* kNames[] = {"P(dc|dc) vs P(ndc|dc)", "P(ndc|ndc) vs P(dc|ndc)",
                                           "P(dc|dc) vs P(ndc|ndc)", "P(dc|ndc) vs P(ndc|dc)"};
  result.comparisons.clear();
  for (size_t i = 0; i < 4; ++i) {
    Comparison c;
    c.name = kNames[i];
    c.mean_first = mean_of(*pairs[i].first);
    c.mean_second = mean_of(*pairs[i].second);
    c.test = run_ranksum(*pairs[i].first, *pairs[i].second);
    if (c.test.result) {
      c.significant_05 = c.test.result->p_value < 0.05;
      c.significant_01 = c.test.result->p_value < 0.01;
    }
    result.comparisons.push_back(std::move(c));
  }
}

std::vector<const SplitAuthor*> draw_holdouts(std::span<const SplitAuthor> pool, const SuspectSet& set,
                                              const std::string& label,
                                              const std::optional<std::string>& language,
                                              size_t count, Stream& rng) {
  std::set<std::string> members;
  for (const auto* m : set.members) members.insert(m->author_id);
  std::vector<const SplitAuthor*> cands;
  for (const auto& a : pool)
    if (a.attribute_value == label && !members.count(a.author_id) &&
        (!language || a.native_language == language))
      cands.push_back(&a);
  std::sort(cands.begin(), cands.end(),
            [](const SplitAuthor* x, const SplitAuthor* y) { return x->author_id < y->author_id; });
  if (cands.size() < count) {
    const int shortfall = static_cast<int>(count - cands.size());
    throw PoolExhaustedError("pool exhausted: need " + std::to_string(count) + " held-out '" + label +
                                 "' authors outside the suspect set, have " +
                                 std::to_string(cands.size()) + " (short by " +
                                 std::to_string(shortfall) + ")",
                             shortfall);
  }
  shuffle(cands, rng);
  cands.resize(count);
  return cands;
}

}  // namespace

std::vector<double> ForcedResult::dist_dc_dc() const { return forced_values(rates, setup.dc, true); }
std::vector<double> ForcedResult::dist_ndc_dc() const { return forced_values(rates, setup.dc, false); }
std::vector<double> ForcedResult::dist_ndc_ndc() const { return forced_values(rates, setup.ndc, true); }
std::vector<double> ForcedResult::dist_dc_ndc() const { return forced_values(rates, setup.ndc, false); }

ForcedResult run_forced_misclassification(std::span<const SplitAuthor> pool, const AuditSetup& setup,
                                          size_t holdouts_per_group, const AuditOptions& options) {
  validate(setup);
  if (holdouts_per_group == 0) throw UsageError("holdouts per group must be positive");
  ForcedResult result;
  result.setup = setup;
  result.holdouts_per_group = holdouts_per_group;
  if (holdouts_per_group < 3)
    result.warnings.push_back("fewer than 3 held-out authors per group: the rank-sum tests are underpowered");

  const auto sets = corpus::sample_suspect_sets(pool, setup.dc, setup.ndc, setup.n / 2, setup.n,
                                                setup.repeats, sub_seed(setup.seed, "forced-sets"),
                                                {setup.nl_mode, {}});
  std::vector<std::vector<const SplitAuthor*>> holdouts(sets.size());
  for (size_t r = 0; r < sets.size(); ++r) {
    Stream rng = make_stream(setup.seed, "holdouts", r);
    for (const auto& label : {setup.dc, setup.ndc}) {
      std::optional<std::string> language;
      if (setup.nl_mode == NativeLanguageMode::kShared && label == labels::kNonNative)
        for (const auto* m : sets[r].members)
          if (m->attribute_value == label) language = m->native_language;
      const auto drawn = draw_holdouts(pool, sets[r], label, language, holdouts_per_group, rng);
      holdouts[r].insert(holdouts[r].end(), drawn.begin(), drawn.end());
    }
  }

  std::vector<std::vector<HeldOutRate>> per_repeat(sets.size());
  Engine engine(options, setup.train);
  parallel_for(sets.size(), options.jobs, [&](size_t r) {
    const SuspectSet& set = sets[r];
    std::map<std::string, std::string> member_label;
    for (const auto* m : set.members) member_label[m->author_id] = m->attribute_value;
    std::vector<const corpus::Comment*> queries;
    for (const auto* h : holdouts[r])
      for (const auto& c : h->test_comments) queries.push_back(&c);
    const auto predicted = engine.assign(set, queries, sub_seed(setup.seed, "forced-task", r));
    size_t at = 0;
    for (const auto* h : holdouts[r]) {
      size_t same = 0;
      for (size_t i = 0; i < h->test_comments.size(); ++i, ++at) {
        const auto it = member_label.find(predicted[at]);
        if (it == member_label.end())
          throw DataError("assigner returned '" + predicted[at] + "', not a suspect-set member");
        same += it->second == h->attribute_value;
      }
      HeldOutRate rate{h->author_id, h->attribute_value, setup.n, r, 0.0, 0.0};
      rate.intra = static_cast<double>(same) / static_cast<double>(h->test_comments.size());
      rate.inter = 1.0 - rate.intra;
      per_repeat[r].push_back(rate);
    }
  });
  for (auto& rates : per_repeat) result.rates.insert(result.rates.end(), rates.begin(), rates.end());
  compute_comparisons(result);
  result.models_trained = engine.trained();
  result.models_converged = engine.converged();
  return result;
}

ForcedResult pool_forced(std::span<const ForcedResult> runs) {
  if (runs.empty()) throw UsageError("nothing to pool");
  ForcedResult pooled;
  pooled.setup = runs.front().setup;
  pooled.setup.n = 0;
  pooled.holdouts_per_group = runs.front().holdouts_per_group;
  for (const auto& r : runs) {
    pooled.rates.insert(pooled.rates.end(), r.rates.begin(), r.rates.end());
    pooled.warnings.insert(pooled.warnings.end(), r.warnings.begin(), r.warnings.end());
    pooled.models_trained += r.models_trained;
    pooled.models_converged += r.models_converged;
  }
  compute_comparisons(pooled);
  return pooled;
}

// ---------------------------------------------------------------------------
// Result JSON

namespace {

json setup_json(const AuditSetup& s) {
  return {{"attribute", to_string(s.attribute)},
          {"dc", s.dc},
          {"ndc", s.ndc},
          {"n", s.n},
          {"repeats", s.repeats},
          {"seed", s.seed},
          {"nl_mode", to_string(s.nl_mode)},
          {"train_config", model::to_json(s.train)}};
}

AuditSetup setup_from_json(const json& j) {
  AuditSetup s;
  s.attribute = parse_dataset_kind(j.at("attribute").get<std::string>());
  s.dc = j.at("dc").get<std::string>();
  s.ndc = j.at("ndc").get<std::string>();
  s.n = j.at("n").get<size_t>();
  s.repeats = j.at("repeats").get<size_t>();
  s.seed = j.at("seed").get<uint64_t>();
  s.nl_mode = parse_nl_mode(j.at("nl_mode").get<std::string>());
  s.train = model::train_config_from_json(j.at("train_config"));
  return s;
}

json test_json(const TestOutcome& t) {
  if (!t.result) return {{"error", t.error}};
  return {{"statistic", t.result->statistic},
          {"p_value", t.result->p_value},
          {"method", stats::to_string(t.result->method)},
          {"continuity_correction", t.result->continuity_correction}};
}

TestOutcome test_from_json(const json& j) {
  TestOutcome t;
  if (j.contains("error")) {
    t.error = j["error"].get<std::string>();
    return t;
  }
  stats::RankSumResult r;
  r.statistic = j.at("statistic").get<double>();
  r.p_value = j.at("p_value").get<double>();
  r.method = j.at("method").get<std::string>() == "exact" ? stats::RankSumMethod::kExact
                                                          : stats::RankSumMethod::kAsymptotic;
  r.continuity_correction = j.at("continuity_correction").get<bool>();
  t.result = r;
  return t;
}

json normality_json(const NormalityOutcome& n) {
  if (!n.result) return {{"error", n.error}};
  return {{"W", n.result->w}, {"p_value", n.result->p_value}};
}

NormalityOutcome normality_from_json(const json& j) {
  NormalityOutcome n;
  if (j.contains("error")) {
    n.error = j["error"].get<std::string>();
    return n;
  }
  n.result = stats::NormalityResult{j.at("W").get<double>(), j.at("p_value").get<double>()};
  return n;
}

json rates_json(const std::vector<AuthorRate>& rates) {
  json a = json::array();
  for (const auto& r : rates)
    a.push_back({{"author_id", r.author_id}, {"label", r.label}, {"n", r.n}, {"repeat", r.repeat}, {"value", r.value}});
  return a;
}

std::vector<AuthorRate> rates_from_json(const json& j) {
  std::vector<AuthorRate> out;
  for (const auto& r : j)
    out.push_back({r.at("author_id").get<std::string>(), r.at("label").get<std::string>(),
                   r.at("n").get<size_t>(), r.at("repeat").get<size_t>(), r.at("value").get<double>()});
  return out;
}

json fit_json(const stats::RegressionFit& f) {
  return {{"slope", f.slope}, {"intercept", f.intercept}, {"mse", f.mse}, {"r2", f.r2}};
}

}  // namespace

json to_json(const AuditResult& result) {
  return std::visit(
      [](const auto& r) -> json {
        using T = std::decay_t<decltype(r)>;
        json j;
        j["setup"] = setup_json(r.setup);
        j["models_trained"] = r.models_trained;
        j["models_converged"] = r.models_converged;
        if constexpr (std::is_same_v<T, SweepResult>) {
          j["audit"] = "sweep";
          j["metric"] = to_string(r.metric_kind);
          j["k_range"] = {0, r.setup.n};
          json pts = json::array();
          for (const auto& p : r.points) pts.push_back({{"k", p.k}, {"repeat", p.repeat}, {"metric", p.metric}});
          j["points"] = pts;
          j["fit"] = fit_json(r.fit);
        } else if constexpr (std::is_same_v<T, OddsResult>) {
          j["audit"] = "odds";
          j["composition"] = "balanced (k = n/2)";
          j["pooling"] = "per-author values pooled across repeats";
          j["dc_values"] = rates_json(r.dc_values);
          j["ndc_values"] = rates_json(r.ndc_values);
          j["ranksum"] = test_json(r.ranksum);
          j["normality"] = {{"dc", normality_json(r.dc_normality)}, {"ndc", normality_json(r.ndc_normality)}};
        } else {
          j["audit"] = "forced";
          j["composition"] = "balanced (k = n/2)";
          j["holdouts_per_group"] = r.holdouts_per_group;
          j["holdouts_reused_across_repeats"] = true;
          json rates = json::array();
          for (const auto& h : r.rates)
            rates.push_back({{"author_id", h.author_id}, {"label", h.label}, {"n", h.n},
                             {"repeat", h.repeat}, {"intra", h.intra}, {"inter", h.inter}});
          j["rates"] = rates;
          json comps = json::array();
          for (const auto& c : r.comparisons)
            comps.push_back({{"name", c.name}, {"test", test_json(c.test)}, {"mean_first", c.mean_first},
                             {"mean_second", c.mean_second}, {"significant_05", c.significant_05},
                             {"significant_01", c.significant_01}});
          j["comparisons"] = comps;
          j["warnings"] = r.warnings;
        }
        return j;
      },
      result);
}

AuditResult audit_result_from_json(const json& j) {
  try {
    const std::string audit = j.at("audit").get<std::string>();
    auto common = [&](auto& r) {
      r.setup = setup_from_json(j.at("setup"));
      r.models_trained = j.value("models_trained", size_t{0});
      r.models_converged = j.value("models_converged", size_t{0});
    };
    if (audit == "sweep") {
      SweepResult r;
      common(r);
      r.metric_kind = parse_metric_kind(j.at("metric").get<std::string>());
      for (const auto& p : j.at("points"))
        r.points.push_back({p.at("k").get<size_t>(), p.at("repeat").get<size_t>(), p.at("metric").get<double>()});
      const auto& f = j.at("fit");
      r.fit = {f.at("slope").get<double>(), f.at("intercept").get<double>(), f.at("mse").get<double>(),
               f.at("r2").get<double>()};
      return r;
    }
    if (audit == "odds") {
      OddsResult r;
      common(r);
      r.dc_values = rates_from_json(j.at("dc_values"));
      r.ndc_values = rates_from_json(j.at("ndc_values"));
      r.ranksum = test_from_json(j.at("ranksum"));
      r.dc_normality = normality_from_json(j.at("normality").at("dc"));
      r.ndc_normality = normality_from_json(j.at("normality").at("ndc"));
      return r;
    }
    if (audit == "forced") {
      ForcedResult r;
      common(r);
      r.holdouts_per_group = j.at("holdouts_per_group").get<size_t>();
      for (const auto& h : j.at("rates"))
        r.rates.push_back({h.at("author_id").get<std::string>(), h.at("label").get<std::string>(),
                           h.at("n").get<size_t>(), h.at("repeat").get<size_t>(),
                           h.at("intra").get<double>(), h.at("inter").get<double>()});
      for (const auto& c : j.at("comparisons")) {
        Comparison cmp;
        cmp.name = c.at("name").get<std::string>();
        cmp.test = test_from_json(c.at("test"));
        cmp.mean_first = c.at("mean_first").get<double>();
        cmp.mean_second = c.at("mean_second").get<double>();
        cmp.significant_05 = c.at("significant_05").get<bool>();
        cmp.significant_01 = c.at("significant_01").get<bool>();
        r.comparisons.push_back(std::move(cmp));
      }
      r.warnings = j.value("warnings", std::vector<std::string>{});
      return r;
    }
    throw DataError("unknown audit kind '" + audit + "'");
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed audit result: ") + e.what());
  }
}

}  // namespace stylofair::experiments
