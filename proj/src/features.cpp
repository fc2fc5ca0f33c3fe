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

#include "stylofair/features.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "stylofair/error.hpp"
#include "stylofair/text.hpp"

namespace stylofair::features {

using nlohmann::json;

std::string_view to_string(PosTag tag) {
  static constexpr std::string_view kNames[] = {"NOUN", "VERB", "ADJ", "ADV",  "PRON",  "DET",
                                                "ADP",  "NUM",  "CONJ", "PRT", "PUNCT", "X"};
  return kNames[static_cast<int>(tag)];
}

namespace {

const std::unordered_map<std::string_view, PosTag>& lexicon() {
  static const auto* table = [] {
    auto* m = new std::unordered_map<std::string_view, PosTag>;
    auto add = [&](PosTag tag, std::initializer_list<std::string_view> words) {
      for (auto w : words) m->emplace(w, tag);
    };
    add(PosTag::PRON,
        {"i",        "me",     "my",      "mine",     "myself",   "you",       "your",   "yours",
         "yourself", "he",     "him",     "his",      "himself",  "she",       "her",    "hers",
         "herself",  "it",     "its",     "itself",   "we",       "us",        "our",    "ours",
         "ourselves", "they",  "them",    "their",    "theirs",   "themselves", "who",   "whom",
         "whose",    "which",  "what",    "someone",  "anyone",   "everyone",  "nobody", "somebody",
         "anybody",  "everybody", "something", "anything", "everything", "nothing", "i'm", "you're",
         "he's",     "she's",  "it's",    "we're",    "they're",  "i've",      "you've", "we've",
         "they've",  "i'd",    "you'd",   "i'll",     "you'll",   "we'll",     "they'll", "that's"});
    add(PosTag::DET, {"the",  "a",     "an",   "this",  "that",  "these", "those",   "some",
                      "any",  "each",  "every", "no",   "all",   "both",  "either",  "neither",
                      "another", "such", "many", "much", "few",  "several", "most", "more"});
    add(PosTag::ADP, {"in",     "on",      "at",     "by",      "for",     "with",   "about",
                      "against", "between", "into",  "through", "during",  "before", "after",
                      "above",  "below",   "from",   "up",      "down",    "of",     "off",
                      "over",   "under",   "around", "among",   "without", "within", "across",
                      "behind", "beyond",  "near",   "since",   "until",   "toward", "towards",
                      "upon",   "like",    "via",    "per",     "despite", "except", "along"});
    add(PosTag::CONJ, {"and", "or", "but", "nor", "so", "yet", "because", "although", "though",
                       "while", "whereas", "if", "unless", "whether", "than", "as", "when",
                       "where", "once"});
    add(PosTag::PRT, {"to", "not", "n't", "don't", "doesn't", "didn't", "can't", "won't",
                      "isn't", "aren't", "wasn't", "weren't", "haven't", "hasn't", "wouldn't",
                      "couldn't", "shouldn't", "there", "'s"});
    add(PosTag::VERB, {"is",    "am",    "are",   "was",    "were",  "be",    "been",  "being",
                       "have",  "has",   "had",   "do",     "does",  "did",   "can",   "could",
                       "will",  "would", "shall", "should", "may",   "might", "must",  "get",
                       "got",   "go",    "went",  "gone",   "make",  "made",  "say",   "said",
                       "know",  "knew",  "think", "thought", "see",  "saw",   "seen",  "come",
                       "came",  "take",  "took",  "want",   "use",   "find",  "found", "give",
                       "gave",  "tell",  "told",  "feel",   "felt",  "seem",  "keep",  "kept",
                       "let",   "put",   "mean",  "meant",  "become", "became", "leave", "left",
                       "learn", "speak", "spoke", "write",  "wrote", "read",  "run",   "ran"});
    add(PosTag::ADV, {"very", "really", "just", "also", "too", "quite", "still", "already",
                      "always", "never", "often", "sometimes", "usually", "again", "here", "now",
                      "then", "maybe", "perhaps", "almost", "even", "only", "soon", "well",
                      "rather", "ever", "yes", "sure", "probably", "actually", "how", "why"});
    add(PosTag::ADJ, {"good", "bad", "new", "old", "great", "big", "small", "little", "long",
                      "short", "high", "low", "other", "same", "different", "important", "right",
                      "wrong", "own", "able", "hard", "easy", "nice", "best", "better", "worse",
                      "worst", "real", "true", "free", "full", "sure", "last", "next", "first"});
    return m;
  }();
  return *table;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_punctuation_mark(std::string_view token) {
  static const std::unordered_set<std::string_view> kMarks = {
      ".", ",", ";", ":", "!", "?", "'", "\"", "(", ")", "[", "]", "{", "}", "-", "/",
      "\\", "`", "*", "_", "…", "–", "—", "‘", "’", "“", "”", "«", "»", "¿", "¡", "·"};
  return kMarks.count(token) > 0;
}

PosTag base_tag(const std::string& token) {
  const std::u32string cps = text::decode_utf8(token);
  if (cps.empty()) return PosTag::X;
  if (!text::is_alnum(cps[0])) return is_punctuation_mark(token) ? PosTag::PUNCT : PosTag::X;
  if (text::is_digit(cps[0])) return PosTag::NUM;
  const std::string lower = text::to_lower(token);
  const auto& lex = lexicon();
  if (const auto it = lex.find(lower); it != lex.end()) return it->second;
  if (ends_with(lower, "ly")) return PosTag::ADV;
  if (ends_with(lower, "ing") || ends_with(lower, "ed")) return PosTag::VERB;
  if (ends_with(lower, "ous") || ends_with(lower, "ful") || ends_with(lower, "ive") ||
      ends_with(lower, "able") || ends_with(lower, "ible") || ends_with(lower, "al") ||
      ends_with(lower, "less") || ends_with(lower, "ic"))
    return PosTag::ADJ;
  return PosTag::NOUN;
}

}  // namespace

std::vector<PosTag> pos_tag(std::span<const std::string> tokens) {
  static const std::unordered_set<std::string> kPossessives = {"my",  "your", "his",  "her",
                                                               "its", "our",  "their", "whose"};
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    PosTag tag = base_tag(tokens[i]);
    if (tag == PosTag::NOUN && i > 0) {
      const PosTag prev = tags.back();
      const std::string lower = text::to_lower(tokens[i]);
      // "the cat runs", "they walk", "to go", "can swim"
      if ((prev == PosTag::NOUN || prev == PosTag::PRON) && ends_with(lower, "s") &&
          !ends_with(lower, "ss"))
        tag = PosTag::VERB;
      else if (prev == PosTag::PRON && !ends_with(lower, "s") &&
               !kPossessives.count(text::to_lower(tokens[i - 1])))
        tag = PosTag::VERB;
      else if (prev == PosTag::PRT && text::to_lower(tokens[i - 1]) == "to")
        tag = PosTag::VERB;
    }
    tags.push_back(tag);
  }
  return tags;
}

double yules_k(std::span<const std::string> tokens) {
  if (tokens.empty()) throw DataError("Yule's K of an empty token sequence");
  std::unordered_map<std::string_view, size_t> freq;
  for (const auto& t : tokens) ++freq[t];
  std::map<size_t, size_t> spectrum;
  for (const auto& [_, f] : freq) ++spectrum[f];
  double s2 = 0.0;
  for (const auto& [i, v] : spectrum) s2 += static_cast<double>(i) * static_cast<double>(i) * v;
  const double n = static_cast<double>(tokens.size());
  return 1e4 * (s2 - n) / (n * n);
}

double type_token_ratio(std::span<const std::string> tokens) {
  if (tokens.empty()) throw DataError("type-token ratio of an empty token sequence");
  const std::unordered_set<std::string_view> types(tokens.begin(), tokens.end());
  return static_cast<double>(types.size()) / static_cast<double>(tokens.size());
}

std::array<double, kScalarCount> lexical_scalars(std::string_view cleaned) {
  std::array<double, kScalarCount> out{};
  out[3] = static_cast<double>(text::decode_utf8(cleaned).size());
  const auto words = text::tokenize_words(cleaned);
  if (words.empty()) return out;
  std::vector<double> lengths;
  lengths.reserve(words.size());
  for (const auto& w : words) lengths.push_back(static_cast<double>(text::decode_utf8(w).size()));
  const double n = static_cast<double>(lengths.size());
  double sum = 0.0;
  for (double l : lengths) sum += l;
  const double mean = sum / n;
  double ss = 0.0;
  for (double l : lengths) ss += (l - mean) * (l - mean);
  std::sort(lengths.begin(), lengths.end());
  const size_t mid = lengths.size() / 2;
  out[0] = mean;
  out[1] = lengths.size() % 2 ? lengths[mid] : 0.5 * (lengths[mid - 1] + lengths[mid]);
  out[2] = std::sqrt(ss / n);
  std::vector<std::string> lower;
  lower.reserve(words.size());
  for (const auto& w : words) lower.push_back(text::to_lower(w));
  out[4] = yules_k(lower);
  out[5] = type_token_ratio(lower);
  return out;
}

namespace {

struct Tokenized {
  std::vector<std::string> all;    // words and punctuation
  std::vector<std::string> words;  // lowercased word tokens
};

Tokenized tokenize_for_grams(std::string_view cleaned) {
  Tokenized t;
  for (auto& tok : text::tokenize(cleaned)) {
    if (tok.is_word) t.words.push_back(text::to_lower(tok.text));
    t.all.push_back(std::move(tok.text));
  }
  return t;
}

template <typename Emit>
void char_grams(const std::string& token, Emit&& emit) {
  const std::u32string cps = text::decode_utf8(token);
  for (size_t order = 1; order <= kMaxOrder; ++order)
    for (size_t i = 0; i + order <= cps.size(); ++i)
      emit(text::encode_utf8(std::u32string_view(cps.data() + i, order)));
}

template <typename T, typename Name, typename Emit>
void sequence_grams(const std::vector<T>& items, Name&& name, Emit&& emit) {
  for (size_t order = 1; order <= kMaxOrder; ++order) {
    for (size_t i = 0; i + order <= items.size(); ++i) {
      std::string g(name(items[i]));
      for (size_t k = 1; k < order; ++k) {
        g += ' ';
        g += name(items[i + k]);
      }
      emit(std::move(g));
    }
  }
}

const std::string& identity(const std::string& s) { return s; }

}  // namespace

std::array<std::unordered_map<std::string, uint32_t>, 3> count_ngrams(std::string_view cleaned) {
  std::array<std::unordered_map<std::string, uint32_t>, 3> out;
  const Tokenized t = tokenize_for_grams(cleaned);
  for (const auto& tok : t.all) char_grams(tok, [&](std::string g) { ++out[0][std::move(g)]; });
  sequence_grams(t.words, identity, [&](std::string g) { ++out[1][std::move(g)]; });
  sequence_grams(pos_tag(t.all), to_string, [&](std::string g) { ++out[2][std::move(g)]; });
  return out;
}

// ---------------------------------------------------------------------------

struct FeatureSpace::Impl {
  std::mutex mu;
  std::array<std::unordered_map<std::string, uint32_t>, 3> ids;
  std::array<std::vector<std::string>, 3> names;
  std::unordered_map<std::string, std::vector<uint32_t>> token_char_grams;
  std::unordered_map<std::string, std::unique_ptr<CommentAnalysis>> cache;

  uint32_t intern(size_t block, std::string g) {
    auto [it, inserted] = ids[block].try_emplace(std::move(g), static_cast<uint32_t>(names[block].size()));
    if (inserted) names[block].push_back(it->first);
    return it->second;
  }

  std::vector<std::unordered_map<uint32_t, uint32_t>> slot_maps(const VocabSpec& vocab) {
    std::vector<std::unordered_map<uint32_t, uint32_t>> maps(3);
    const std::vector<std::string>* lists[3] = {&vocab.char_ngrams, &vocab.word_ngrams,
                                                &vocab.pos_ngrams};
    for (size_t b = 0; b < 3; ++b) {
      maps[b].reserve(lists[b]->size());
      for (size_t s = 0; s < lists[b]->size(); ++s)
        maps[b].emplace(intern(b, (*lists[b])[s]), static_cast<uint32_t>(s));
    }
    return maps;
  }
};

FeatureSpace::FeatureSpace() : impl_(std::make_unique<Impl>()) {}
FeatureSpace::~FeatureSpace() = default;

const CommentAnalysis& FeatureSpace::analyze(const corpus::Comment& comment) {
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto& slot = impl_->cache[comment.comment_id];
  if (slot) return *slot;
  auto a = std::make_unique<CommentAnalysis>();
  a->scalars = lexical_scalars(comment.text);
  const Tokenized t = tokenize_for_grams(comment.text);
  std::array<std::unordered_map<uint32_t, uint32_t>, 3> counts;
  for (const auto& tok : t.all) {
    auto it = impl_->token_char_grams.find(tok);
    if (it == impl_->token_char_grams.end()) {
      std::vector<uint32_t> grams;
      char_grams(tok, [&](std::string g) { grams.push_back(impl_->intern(0, std::move(g))); });
      it = impl_->token_char_grams.emplace(tok, std::move(grams)).first;
    }
    for (uint32_t id : it->second) ++counts[0][id];
  }
  sequence_grams(t.words, identity,
                 [&](std::string g) { ++counts[1][impl_->intern(1, std::move(g))]; });
  sequence_grams(pos_tag(t.all), to_string,
                 [&](std::string g) { ++counts[2][impl_->intern(2, std::move(g))]; });
  for (size_t b = 0; b < 3; ++b) {
    a->grams[b].assign(counts[b].begin(), counts[b].end());
    std::sort(a->grams[b].begin(), a->grams[b].end());
    for (const auto& [_, c] : a->grams[b]) a->totals[b] += c;
  }
  slot = std::move(a);
  return *slot;
}

VocabSpec FeatureSpace::fit(std::span<const CommentAnalysis* const> train, size_t block_size) {
  if (train.empty()) throw DataError("cannot fit a vocabulary on an empty training set");
  VocabSpec vocab;
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    std::vector<std::string>* lists[3] = {&vocab.char_ngrams, &vocab.word_ngrams,
                                          &vocab.pos_ngrams};
    for (size_t b = 0; b < 3; ++b) {
      std::unordered_map<uint32_t, uint64_t> freq;
      for (const auto* a : train)
        for (const auto& [id, c] : a->grams[b]) freq[id] += c;
      std::vector<std::pair<uint64_t, const std::string*>> ranked;
      ranked.reserve(freq.size());
      for (const auto& [id, c] : freq) ranked.emplace_back(c, &impl_->names[b][id]);
      const size_t keep = std::min(block_size, ranked.size());
      auto order = [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first > y.first : *x.second < *y.second;
      };
      std::partial_sort(ranked.begin(), ranked.begin() + static_cast<long>(keep), ranked.end(), order);
      for (size_t i = 0; i < keep; ++i) lists[b]->push_back(*ranked[i].second);
    }
  }
  const size_t dim = vocab.dimension();
  std::vector<double> sum(dim, 0.0);
  const std::vector<FeatureVector> raw = extract_batch(train, vocab, false);
  for (const auto& v : raw)
    for (size_t d = 0; d < dim; ++d) sum[d] += v[d];
  const double m = static_cast<double>(train.size());
  vocab.feature_means.resize(dim);
  vocab.feature_stds.resize(dim);
  for (size_t d = 0; d < dim; ++d) {
    const double mean = sum[d] / m;
    double ss = 0.0;
    for (const auto& v : raw) ss += (v[d] - mean) * (v[d] - mean);
    double sd = std::sqrt(ss / m);
    // Constant columns leave rounding residue in `sd`.
    if (sd <= 1e-12 * std::max(1.0, std::abs(mean))) sd = 0.0;
    vocab.feature_means[d] = mean;
    vocab.feature_stds[d] = sd;
  }
  return vocab;
}

namespace {

FeatureVector raw_vector(const CommentAnalysis& a, const VocabSpec& vocab,
                         const std::vector<std::unordered_map<uint32_t, uint32_t>>& maps) {
  FeatureVector v(vocab.dimension(), 0.0);
  std::copy(a.scalars.begin(), a.scalars.end(), v.begin());
  size_t offset = kScalarCount;
  const size_t sizes[3] = {vocab.char_ngrams.size(), vocab.word_ngrams.size(),
                           vocab.pos_ngrams.size()};
  for (size_t b = 0; b < 3; ++b) {
    if (a.totals[b] > 0) {
      const double total = static_cast<double>(a.totals[b]);
      for (const auto& [id, c] : a.grams[b])
        if (const auto it = maps[b].find(id); it != maps[b].end())
          v[offset + it->second] = static_cast<double>(c) / total;
    }
    offset += sizes[b];
  }
  return v;
}

}  // namespace

FeatureVector FeatureSpace::extract_raw(const CommentAnalysis& a, const VocabSpec& vocab) {
  return extract_batch(std::span<const CommentAnalysis* const>(std::array{&a}), vocab, false)[0];
}

std::vector<FeatureVector> FeatureSpace::extract_batch(std::span<const CommentAnalysis* const> batch,
                                                       const VocabSpec& vocab, bool standardized) {
  std::vector<std::unordered_map<uint32_t, uint32_t>> maps;
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    maps = impl_->slot_maps(vocab);
  }
  std::vector<FeatureVector> out;
  out.reserve(batch.size());
  for (const auto* a : batch) {
    out.push_back(raw_vector(*a, vocab, maps));
    if (standardized) standardize(out.back(), vocab);
  }
  return out;
}

FeatureVector FeatureSpace::extract(const CommentAnalysis& a, const VocabSpec& vocab) {
  FeatureVector v = extract_raw(a, vocab);
  standardize(v, vocab);
  return v;
}

void standardize(FeatureVector& v, const VocabSpec& vocab) {
  if (vocab.feature_means.size() != v.size() || vocab.feature_stds.size() != v.size())
    throw DataError("vocabulary standardization parameters do not match its dimension");
  for (size_t d = 0; d < v.size(); ++d)
    v[d] = vocab.feature_stds[d] > 0.0 ? (v[d] - vocab.feature_means[d]) / vocab.feature_stds[d]
                                       : 0.0;
}

// ---------------------------------------------------------------------------

VocabSpec fit_vocab(std::span<const corpus::Comment> train_comments, size_t block_size) {
  FeatureSpace space;
  std::vector<const CommentAnalysis*> analyses;
  for (const auto& c : train_comments) {
    corpus::Comment keyed = c;
    keyed.comment_id = std::to_string(analyses.size());
    analyses.push_back(&space.analyze(keyed));
  }
  return space.fit(analyses, block_size);
}

FeatureVector extract_raw(const corpus::Comment& comment, const VocabSpec& vocab) {
  FeatureSpace space;
  return space.extract_raw(space.analyze(comment), vocab);
}

FeatureVector extract(const corpus::Comment& comment, const VocabSpec& vocab) {
  FeatureVector v = extract_raw(comment, vocab);
  standardize(v, vocab);
  return v;
}

std::vector<double> extract_char_ngram_profile(const corpus::Comment& comment,
                                               const VocabSpec& vocab) {
  const auto counts = count_ngrams(comment.text);
  std::vector<double> out(vocab.char_ngrams.size(), 0.0);
  double total = 0.0;
  for (size_t i = 0; i < out.size(); ++i) {
    if (const auto it = counts[0].find(vocab.char_ngrams[i]); it != counts[0].end()) {
      out[i] = it->second;
      total += it->second;
    }
  }
  if (total > 0.0)
    for (double& x : out) x /= total;
  return out;
}

json to_json(const VocabSpec& v) {
  return {{"char_ngrams", v.char_ngrams},
          {"word_ngrams", v.word_ngrams},
          {"pos_ngrams", v.pos_ngrams},
          {"feature_means", v.feature_means},
          {"feature_stds", v.feature_stds}};
}

VocabSpec vocab_from_json(const json& j) {
  VocabSpec v;
  try {
    j.at("char_ngrams").get_to(v.char_ngrams);
    j.at("word_ngrams").get_to(v.word_ngrams);
    j.at("pos_ngrams").get_to(v.pos_ngrams);
    j.at("feature_means").get_to(v.feature_means);
    j.at("feature_stds").get_to(v.feature_stds);
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed vocabulary: ") + e.what());
  }
  if (v.feature_means.size() != v.dimension() || v.feature_stds.size() != v.dimension())
    throw DataError("vocabulary standardization parameters do not match its dimension");
  return v;
}

}  // namespace stylofair::features
