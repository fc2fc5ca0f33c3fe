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

#include "stylofair/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stylofair/error.hpp"
#include "stylofair/langid.hpp"
#include "stylofair/ndjson.hpp"
#include "stylofair/parallel.hpp"
#include "stylofair/rng.hpp"
#include "stylofair/text.hpp"

namespace stylofair::corpus {

using nlohmann::json;

bool chronological_less(const Comment& a, const Comment& b) {
  return a.created_utc != b.created_utc ? a.created_utc < b.created_utc : a.comment_id < b.comment_id;
}

size_t SplitAuthor::train_words() const {
  size_t total = 0;
  for (const auto& c : train_comments) total += c.word_count;
  return total;
}

std::optional<Comment> prepare_comment(const ingest::RawComment& raw) {
  std::string cleaned = text::clean_text(raw.body);
  if (cleaned.empty()) return std::nullopt;
  const size_t words = text::word_count(cleaned);
  if (words < kMinCommentWords) return std::nullopt;
  if (!langid::is_confident_english(langid::detect_language(cleaned))) return std::nullopt;
  return Comment{raw.comment_id, raw.username, raw.created_utc, std::move(cleaned), words};
}

namespace {

struct ResolvedFlair {
  std::optional<ParsedAttribute> attribute;
  bool conflict = false;
};

std::map<std::string, ResolvedFlair> resolve_flairs(std::span<const ingest::FlairObservation> table,
                                                    DatasetKind kind) {
  std::map<std::string, ResolvedFlair> out;
  for (const auto& obs : table) {
    ResolvedFlair& r = out[obs.username];
    const FlairOutcome outcome = parse_flair(kind, obs.flair_text);
    if (std::holds_alternative<FlairConflict>(outcome)) {
      r.conflict = true;
    } else if (const auto* attr = std::get_if<ParsedAttribute>(&outcome)) {
      if (!r.attribute) {
        r.attribute = *attr;
      } else if (r.attribute->label != attr->label) {
        r.conflict = true;  // flairs in different threads disagree
      }
    }
  }
  return out;
}

}  // namespace

BuildResult build_author_records(std::span<const ingest::RawComment> raw_comments,
                                 std::span<const ingest::FlairObservation> flair_table,
                                 DatasetKind kind, const BuildOptions& options) {
  const auto flairs = resolve_flairs(flair_table, kind);

  std::map<std::string, std::vector<const ingest::RawComment*>> by_user;
  std::set<std::string> seen_ids;
  for (const auto& c : raw_comments)
    if (seen_ids.insert(c.comment_id).second) by_user[c.username].push_back(&c);

  struct Outcome {
    std::optional<AuthorRecord> record;
    std::optional<DropRecord> drop;
  };
  std::vector<std::pair<const std::string*, const std::vector<const ingest::RawComment*>*>> users;
  users.reserve(by_user.size());
  for (const auto& [name, comments] : by_user) users.emplace_back(&name, &comments);
  std::vector<Outcome> outcomes(users.size());

  parallel_for(users.size(), options.jobs, [&](size_t i) {
    const std::string& name = *users[i].first;
    const auto& raw = *users[i].second;
    Outcome& out = outcomes[i];
    const auto flair = flairs.find(name);
    if (flair != flairs.end() && flair->second.conflict) {
      out.drop = DropRecord{name, "conflicting-flair"};
      return;
    }
    if (flair == flairs.end() || !flair->second.attribute) {
      out.drop = DropRecord{name, "no-attribute"};
      return;
    }
    if (raw.size() < kMinRawComments) {
      out.drop = DropRecord{name, "min-comment-count"};
      return;
    }
    AuthorRecord record;
    record.author_id = name;
    record.attribute_kind = kind;
    record.attribute_value = flair->second.attribute->label;
    record.native_language = flair->second.attribute->native_language;
    size_t total_words = 0;
    for (const auto* rc : raw) {
      if (auto c = prepare_comment(*rc)) {
        total_words += c->word_count;
        record.comments.push_back(std::move(*c));
      }
    }
    std::sort(record.comments.begin(), record.comments.end(), chronological_less);
    if (total_words < kMinAuthorWords) {
      out.drop = DropRecord{name, "insufficient-words"};
      return;
    }
    try {
      split_author(record);
    } catch (const SplitInfeasibleError&) {
      out.drop = DropRecord{name, "split-infeasible"};
      return;
    }
    out.record = std::move(record);
  });

  BuildResult result;
  for (auto& o : outcomes) {
    if (o.record) result.records.push_back(std::move(*o.record));
    if (o.drop) result.drops.push_back(std::move(*o.drop));
  }
  return result;
}

SplitAuthor split_author(const AuthorRecord& record) {
  std::vector<Comment> comments = record.comments;
  std::sort(comments.begin(), comments.end(), chronological_less);

  SplitAuthor split;
  split.author_id = record.author_id;
  split.attribute_kind = record.attribute_kind;
  split.attribute_value = record.attribute_value;
  split.native_language = record.native_language;

  size_t total = 0;
  size_t cut = comments.size();  // index of the last training comment
  for (size_t i = 0; i < comments.size(); ++i) {
    const size_t w = comments[i].word_count;
    if (total + w > kTrainWordsHigh) continue;  // overshoot: skip, keep scanning
    total += w;
    split.train_comments.push_back(comments[i]);
    if (total >= kTrainWordsLow) {
      cut = i;
      break;
    }
  }
  if (cut == comments.size())
    throw SplitInfeasibleError(record.author_id + ": training window [" +
                               std::to_string(kTrainWordsLow) + ", " +
                               std::to_string(kTrainWordsHigh) + "] words is unreachable");
  const int64_t last_train = comments[cut].created_utc;
  for (size_t i = cut + 1; i < comments.size() && split.test_comments.size() < kTestComments; ++i) {
    // Test comments must be strictly newer than every training comment;
    // comments skipped on overshoot are older and so never qualify.
    if (comments[i].created_utc > last_train)
      split.test_comments.push_back(comments[i]);
  }
  if (split.test_comments.size() < kTestComments)
    throw SplitInfeasibleError(record.author_id + ": only " +
                               std::to_string(split.test_comments.size()) +
                               " test comments after the training cut");
  return split;
}

// ---------------------------------------------------------------------------
// Suspect sets

std::vector<SuspectSet> sample_suspect_sets(std::span<const SplitAuthor> pool,
                                            const std::string& dc_label,
                                            const std::string& ndc_label, size_t k_dc, size_t n,
                                            size_t repeats, uint64_t seed,
                                            const SamplingOptions& options) {
  if (k_dc > n) throw UsageError("k_dc must not exceed the suspect-set size");
  if (dc_label == ndc_label) throw UsageError("dc and ndc labels must differ");
  const std::set<std::string> excluded(options.exclude.begin(), options.exclude.end());

  std::vector<const SplitAuthor*> dc;
  std::vector<const SplitAuthor*> ndc;
  for (const auto& a : pool) {
    if (excluded.count(a.author_id)) continue;
    if (a.attribute_value == dc_label) dc.push_back(&a);
    if (a.attribute_value == ndc_label) ndc.push_back(&a);
  }
  auto by_id = [](const SplitAuthor* a, const SplitAuthor* b) { return a->author_id < b->author_id; };
  std::sort(dc.begin(), dc.end(), by_id);
  std::sort(ndc.begin(), ndc.end(), by_id);
  Stream rng = make_stream(seed, "suspect-sets");
  shuffle(dc, rng);
  shuffle(ndc, rng);

  const size_t k_ndc = n - k_dc;
  const bool shared = options.nl_mode == NativeLanguageMode::kShared;
  const bool dc_shared = shared && dc_label == labels::kNonNative;
  const bool ndc_shared = shared && ndc_label == labels::kNonNative;

  // Plain side: consecutive blocks of the shuffled candidates.
  auto check_plain = [&](const std::vector<const SplitAuthor*>& cands, size_t need,
                         const std::string& label) {
    const size_t required = need * repeats;
    if (cands.size() < required) {
      const int shortfall = static_cast<int>(required - cands.size());
      throw PoolExhaustedError("pool exhausted: need " + std::to_string(required) + " '" + label +
                                   "' authors, have " + std::to_string(cands.size()) +
                                   " (short by " + std::to_string(shortfall) + ")",
                               shortfall);
    }
  };
  if (!dc_shared) check_plain(dc, k_dc, dc_label);
  if (!ndc_shared) check_plain(ndc, k_ndc, ndc_label);

  // Shared side: per repeat, one native language with enough unused authors.
  auto draw_shared = [&](std::map<std::string, std::vector<const SplitAuthor*>>& by_lang,
                         size_t need, const std::string& label) {
    std::vector<const SplitAuthor*> out;
    if (need == 0) return out;
    std::vector<std::string> eligible;
    size_t best = 0;
    for (const auto& [lang, authors] : by_lang) {
      best = std::max(best, authors.size());
      if (authors.size() >= need) eligible.push_back(lang);
    }
    if (eligible.empty()) {
      const int shortfall = static_cast<int>(need - best);
      throw PoolExhaustedError("pool exhausted: no native language has " + std::to_string(need) +
                                   " unused '" + label + "' authors (largest has " +
                                   std::to_string(best) + ", short by " +
                                   std::to_string(shortfall) + ")",
                               shortfall);
    }
    auto& bucket = by_lang[eligible[uniform_index(rng, eligible.size())]];
    out.assign(bucket.begin(), bucket.begin() + static_cast<long>(need));
    bucket.erase(bucket.begin(), bucket.begin() + static_cast<long>(need));
    return out;
  };
  auto group_by_language = [](const std::vector<const SplitAuthor*>& cands) {
    std::map<std::string, std::vector<const SplitAuthor*>> by_lang;
    for (const auto* a : cands) by_lang[a->native_language.value_or("")].push_back(a);
    return by_lang;
  };
  auto dc_langs = group_by_language(dc);
  auto ndc_langs = group_by_language(ndc);

  std::vector<SuspectSet> sets;
  sets.reserve(repeats);
  for (size_t r = 0; r < repeats; ++r) {
    SuspectSet s;
    s.dc_label = dc_label;
    s.ndc_label = ndc_label;
    s.dc_count = k_dc;
    s.ndc_count = k_ndc;
    s.attribute_kind = pool.empty() ? DatasetKind::kGender : pool.front().attribute_kind;
    if (dc_shared) {
      s.members = draw_shared(dc_langs, k_dc, dc_label);
    } else {
      s.members.assign(dc.begin() + static_cast<long>(r * k_dc),
                       dc.begin() + static_cast<long>((r + 1) * k_dc));
    }
    std::vector<const SplitAuthor*> others;
    if (ndc_shared) {
      others = draw_shared(ndc_langs, k_ndc, ndc_label);
    } else {
      others.assign(ndc.begin() + static_cast<long>(r * k_ndc),
                    ndc.begin() + static_cast<long>((r + 1) * k_ndc));
    }
    s.members.insert(s.members.end(), others.begin(), others.end());
    sets.push_back(std::move(s));
  }
  return sets;
}

// ---------------------------------------------------------------------------
// Stores

json to_json(const Comment& c) {
  return {{"type", "comment"},          {"comment_id", c.comment_id}, {"author_id", c.author_id},
          {"created_utc", c.created_utc}, {"text", c.text},           {"word_count", c.word_count}};
}

Comment comment_from_json(const json& j) {
  return {j.at("comment_id").get<std::string>(), j.at("author_id").get<std::string>(),
          j.at("created_utc").get<int64_t>(), j.at("text").get<std::string>(),
          j.at("word_count").get<size_t>()};
}

void write_corpus(const std::filesystem::path& path, std::span<const AuthorRecord> records) {
  NdjsonWriter w(path);
  for (const auto& r : records) {
    w.write({{"type", "author"},
             {"author_id", r.author_id},
             {"attribute_kind", to_string(r.attribute_kind)},
             {"attribute_value", r.attribute_value},
             {"native_language", r.native_language ? json(*r.native_language) : json(nullptr)},
             {"n_comments", r.comments.size()}});
    for (const auto& c : r.comments) w.write(to_json(c));
  }
  w.flush();
}

std::vector<AuthorRecord> read_corpus(const std::filesystem::path& path) {
  std::vector<AuthorRecord> records;
  for_each_ndjson(path, [&](const json& j) {
    const std::string type = j.value("type", "");
    if (type == "author") {
      AuthorRecord r;
      r.author_id = j.at("author_id").get<std::string>();
      r.attribute_kind = parse_dataset_kind(j.at("attribute_kind").get<std::string>());
      r.attribute_value = j.at("attribute_value").get<std::string>();
      if (j.contains("native_language") && j["native_language"].is_string())
        r.native_language = j["native_language"].get<std::string>();
      records.push_back(std::move(r));
    } else if (type == "comment") {
      if (records.empty()) throw DataError(path.string() + ": comment before any author header");
      Comment c = comment_from_json(j);
      if (c.author_id != records.back().author_id)
        throw DataError(path.string() + ": comment " + c.comment_id + " under foreign author header");
      records.back().comments.push_back(std::move(c));
    } else {
      throw DataError(path.string() + ": unknown record type '" + type + "'");
    }
  });
  for (auto& r : records) std::sort(r.comments.begin(), r.comments.end(), chronological_less);
  return records;
}

void write_drops(const std::filesystem::path& path, std::span<const DropRecord> drops) {
  NdjsonWriter w(path);
  for (const auto& d : drops) w.write({{"author_id", d.author_id}, {"reason", d.reason}});
  w.flush();
}

std::vector<DropRecord> read_drops(const std::filesystem::path& path) {
  std::vector<DropRecord> out;
  for_each_ndjson(path, [&](const json& j) {
    out.push_back({j.at("author_id").get<std::string>(), j.at("reason").get<std::string>()});
  });
  return out;
}

void write_splits(const std::filesystem::path& path, std::span<const SplitAuthor> splits) {
  NdjsonWriter w(path);
  for (const auto& s : splits) {
    json train = json::array();
    json test = json::array();
    for (const auto& c : s.train_comments) train.push_back(c.comment_id);
    for (const auto& c : s.test_comments) test.push_back(c.comment_id);
    w.write({{"author_id", s.author_id}, {"train", train}, {"test", test}});
  }
  w.flush();
}

std::vector<SplitAuthor> read_splits(const std::filesystem::path& path,
                                     std::span<const AuthorRecord> records) {
  std::map<std::string, const AuthorRecord*> by_author;
  for (const auto& r : records) by_author[r.author_id] = &r;
  std::vector<SplitAuthor> out;
  for_each_ndjson(path, [&](const json& j) {
    const std::string id = j.at("author_id").get<std::string>();
    const auto it = by_author.find(id);
    if (it == by_author.end()) throw DataError("split references unknown author " + id);
    const AuthorRecord& r = *it->second;
    std::map<std::string, const Comment*> by_comment;
    for (const auto& c : r.comments) by_comment[c.comment_id] = &c;
    SplitAuthor s;
    s.author_id = id;
    s.attribute_kind = r.attribute_kind;
    s.attribute_value = r.attribute_value;
    s.native_language = r.native_language;
    auto resolve = [&](const json& ids, std::vector<Comment>& dest) {
      for (const auto& cid : ids) {
        const auto c = by_comment.find(cid.get<std::string>());
        if (c == by_comment.end())
          throw DataError("split for " + id + " references unknown comment " + cid.get<std::string>());
        dest.push_back(*c->second);
      }
    };
    resolve(j.at("train"), s.train_comments);
    resolve(j.at("test"), s.test_comments);
    out.push_back(std::move(s));
  });
  return out;
}

std::vector<SplitAuthor> load_split_pool(const std::filesystem::path& dir) {
  const auto records = read_corpus(dir / "corpus.ndjson");
  if (std::filesystem::exists(dir / "splits.ndjson")) return read_splits(dir / "splits.ndjson", records);
  std::vector<SplitAuthor> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(split_author(r));
  return out;
}

}  // namespace stylofair::corpus
