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

#include "stylofair/synth.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "stylofair/error.hpp"
#include "stylofair/experiments.hpp"
#include "stylofair/parallel.hpp"
#include "stylofair/rng.hpp"

namespace stylofair::synth {

using nlohmann::json;

namespace {

// Common English words, roughly by frequency.
constexpr const char* kWords[] = {
    "the", "of", "and", "to", "a", "in", "is", "it", "you", "that", "he", "was", "for", "on",
    "are", "with", "as", "i", "his", "they", "be", "at", "one", "have", "this", "from", "or",
    "had", "by", "not", "but", "what", "some", "we", "can", "out", "other", "were", "all",
    "there", "when", "up", "use", "your", "how", "said", "an", "each", "she", "which", "do",
    "their", "time", "if", "will", "way", "about", "many", "then", "them", "would", "write",
    "like", "so", "these", "her", "long", "make", "thing", "see", "him", "two", "has", "look",
    "more", "day", "could", "go", "come", "did", "number", "sound", "no", "most", "people", "my",
    "over", "know", "water", "than", "call", "first", "who", "may", "down", "side", "been", "now",
    "find", "any", "new", "work", "part", "take", "get", "place", "made", "live", "where",
    "after", "back", "little", "only", "round", "man", "year", "came", "show", "every", "good",
    "me", "give", "our", "under", "name", "very", "through", "just", "form", "sentence", "great",
    "think", "say", "help", "low", "line", "differ", "turn", "cause", "much", "mean", "before",
    "move", "right", "boy", "old", "too", "same", "tell", "does", "set", "three", "want", "air",
    "well", "also", "play", "small", "end", "put", "home", "read", "hand", "port", "large",
    "spell", "add", "even", "land", "here", "must", "big", "high", "such", "follow", "act",
    "why", "ask", "men", "change", "went", "light", "kind", "off", "need", "house", "picture",
    "try", "us", "again", "animal", "point", "mother", "world", "near", "build", "self", "earth",
    "father", "head", "stand", "own", "page", "should", "country", "found", "answer", "school",
    "grow", "study", "still", "learn", "plant", "cover", "food", "sun", "four", "between",
    "state", "keep", "eye", "never", "last", "let", "thought", "city", "tree", "cross", "farm",
    "hard", "start", "might", "story", "saw", "far", "sea", "draw", "left", "late", "run",
    "while", "press", "close", "night", "real", "life", "few", "north", "open", "seem",
    "together", "next", "white", "children", "begin", "got", "walk", "example", "ease", "paper",
    "group", "always", "music", "those", "both", "mark", "often", "letter", "until", "mile",
    "river", "car", "feet", "care", "second", "book", "carry", "took", "science", "eat", "room",
    "friend", "began", "idea", "fish", "mountain", "stop", "once", "base", "hear", "horse", "cut",
    "sure", "watch", "color", "face", "wood", "main", "enough", "plain", "girl", "usual", "young",
    "ready", "above", "ever", "red", "list", "though", "feel", "talk", "bird", "soon", "body",
    "dog", "family", "direct", "pose", "leave", "song", "measure", "door", "product", "black",
    "short", "numeral", "class", "wind", "question", "happen", "complete", "ship", "area", "half",
    "rock", "order", "fire", "south", "problem", "piece", "told", "knew", "pass", "since", "top",
    "whole", "king", "space", "heard", "best", "hour", "better", "true", "during", "hundred",
    "five", "remember", "step", "early", "hold", "west", "ground", "interest", "reach", "fast",
    "verb", "sing", "listen", "six", "table", "travel", "less", "morning", "ten", "simple",
    "several", "vowel", "toward", "war", "lay", "against", "pattern", "slow", "center", "love",
    "person", "money", "serve", "appear", "road", "map", "rain", "rule", "govern", "pull",
    "cold", "notice", "voice", "unit", "power", "town", "fine", "certain", "fly", "fall", "lead",
    "cry", "dark", "machine", "note", "wait", "plan", "figure", "star", "box", "noun", "field",
    "rest", "correct", "able", "pound", "done", "beauty", "drive", "stood", "contain", "front",
    "teach", "week", "final", "gave", "green", "quick", "develop", "ocean", "warm", "free",
    "minute", "strong", "special", "mind", "behind", "clear", "tail", "produce", "fact", "street",
    "inch", "multiply", "nothing", "course", "stay", "wheel", "full", "force", "blue", "object",
    "decide", "surface", "deep", "moon", "island", "foot", "system", "busy", "test", "record",
    "boat", "common", "gold", "possible", "plane", "stead", "dry", "wonder", "laugh", "thousand",
    "ago", "ran", "check", "game", "shape", "equate", "hot", "miss", "brought", "heat", "snow",
    "tire", "bring", "yes", "distant", "fill", "east", "paint", "language", "among", "grand",
    "ball", "yet", "wave", "drop", "heart", "present", "heavy", "dance", "engine", "position",
    "arm", "wide", "sail", "material", "size", "vary", "settle", "speak", "weight", "general",
    "ice", "matter", "circle", "pair", "include", "divide", "syllable", "felt", "perhaps", "pick",
    "sudden", "count", "square", "reason", "length", "represent", "art", "subject", "region",
    "energy", "hunt", "probable", "bed", "brother", "egg", "ride", "cell", "believe", "fraction",
    "forest", "sit", "race", "window", "store", "summer", "train", "sleep", "prove", "lone",
    "exercise", "wall", "catch", "mount", "wish", "sky", "board", "joy", "winter", "sat",
    "written", "wild", "instrument", "kept", "glass", "grass", "cow", "job", "edge", "sign",
    "visit", "past", "soft", "fun", "bright", "gas", "weather", "month", "million", "bear",
    "finish", "happy", "hope", "flower", "clothe", "strange", "gone", "jump", "baby", "eight",
    "village", "meet", "root", "buy", "raise", "solve", "metal", "whether", "push", "seven",
    "paragraph", "third", "shall", "held", "hair", "describe", "cook", "floor", "either",
    "result", "burn", "hill", "safe", "cat", "century", "consider", "type", "law", "bit", "coast",
    "copy", "phrase", "silent", "tall", "sand", "soil", "roll", "finger", "industry", "value",
    "fight", "lie", "beat", "excite", "natural", "view", "sense", "ear", "else", "quite", "broke",
    "case", "middle", "kill", "son", "lake", "moment", "scale", "loud", "spring", "observe",
    "child", "straight", "consonant", "nation", "dictionary", "milk", "speed", "method", "organ",
    "pay", "age", "section", "dress", "cloud", "surprise", "quiet", "stone", "tiny", "climb",
    "cool", "design", "poor", "lot", "experiment", "bottom", "key", "iron", "single", "stick",
    "flat", "twenty", "skin", "smile", "crease", "hole", "trade", "melody", "trip", "office",
    "receive", "row", "mouth", "exact", "symbol", "die", "least", "trouble", "shout", "except",
    "wrote", "seed", "tone", "join", "suggest", "clean", "break", "lady", "yard", "rise", "bad",
    "blow", "oil", "blood", "touch", "grew", "cent", "mix", "team", "wire", "cost", "lost",
    "brown", "wear", "garden", "equal", "sent", "choose", "fell", "fit", "flow", "fair", "bank",
    "collect", "save", "control", "decimal", "gentle", "woman", "captain", "practice", "separate",
    "difficult", "doctor", "please", "protect", "noon", "whose", "locate", "ring", "character",
    "insect", "caught", "period", "indicate", "radio", "spoke", "atom", "human", "history",
    "effect", "electric", "expect", "crop", "modern", "element", "hit", "student", "corner",
    "party", "supply", "bone", "rail", "imagine", "provide", "agree", "thus", "capital", "chair",
    "danger", "fruit", "rich", "thick", "soldier", "process", "operate", "guess", "necessary",
    "sharp", "wing", "create", "neighbor", "wash", "bat", "rather", "crowd", "corn", "compare",
    "poem", "string", "bell", "depend", "meat", "rub", "tube", "famous", "dollar", "stream",
    "fear", "sight", "thin", "triangle", "planet", "hurry", "chief", "colony", "clock", "mine",
    "tie", "enter", "major", "fresh", "search", "send", "yellow", "gun", "allow", "print", "dead",
    "spot", "desert", "suit", "current", "lift", "rose", "continue", "block", "chart", "hat",
    "sell", "success", "company", "subtract", "event", "particular", "deal", "swim", "term",
    "opposite", "wife", "shoe", "shoulder", "spread", "arrange", "camp", "invent", "cotton",
    "born", "determine", "quart", "nine", "truck", "noise", "level", "chance", "gather", "shop",
    "stretch", "throw", "shine", "property", "column", "molecule", "select", "wrong", "gray",
    "repeat", "require", "broad", "prepare", "salt", "nose", "plural", "anger", "claim",
    "continent", "oxygen", "sugar", "death", "pretty", "skill", "season", "solution", "magnet",
    "silver", "thank", "branch", "match", "suffix", "especially", "fig", "afraid", "huge",
    "sister", "steel", "discuss", "forward", "similar", "guide", "experience", "score", "apple",
    "bought", "led", "pitch", "coat", "mass", "card", "band", "rope", "slip", "win", "dream",
    "evening", "condition", "feed", "tool", "total", "basic", "smell", "valley", "nor", "double",
    "seat", "arrive", "master", "track", "parent", "shore", "division", "sheet", "substance",
    "favor", "connect", "post", "spend", "chord", "fat", "glad", "original", "share", "station",
    "dad", "bread", "charge", "proper", "bar", "offer", "segment", "slave", "duck", "instant",
    "market", "degree", "populate", "chick", "dear", "enemy", "reply", "drink", "occur",
    "support", "speech", "nature", "range", "steam", "motion", "path", "liquid", "log", "meant",
    "quotient", "teeth", "shell", "neck"};

constexpr const char* kSuffixes[] = {"s", "ed", "ing", "er", "ly", "ness", "ful", "able", "ment", "less"};

const std::vector<std::string>& language_list() {
  static const std::vector<std::string> langs = {"german", "french", "spanish", "italian",
                                                 "portuguese", "dutch", "polish", "swedish"};
  return langs;
}

std::string capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::vector<double> normal_vector(Stream& rng, size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = standard_normal(rng);
  return v;
}

// Group offsets: one shared vector per group label, or per native language
// for the language attribute.
struct Offset {
  std::vector<double> words;
  std::vector<double> punctuation;
  double length = 0.0;
};

Offset make_offset(uint64_t seed, std::string_view key, size_t vocab) {
  Stream rng = make_stream(seed, std::string("group-offset/") + std::string(key));
  Offset o;
  o.words = normal_vector(rng, vocab);
  o.punctuation = normal_vector(rng, 4);
  o.length = standard_normal(rng);
  return o;
}

constexpr double kZipfExponent = 1.0;
constexpr double kBasePunctuation[] = {-2.2, 2.5, 0.0, 0.0};  // comma logit; end-mark logits
constexpr double kBaseSentenceLength = 14.0;

size_t sample_cdf(const std::vector<double>& cdf, Stream& rng) {
  const double u = uniform01(rng) * cdf.back();
  return static_cast<size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
}

std::string flair_text(DatasetKind kind, const std::string& label,
                       const std::optional<std::string>& language, Stream& rng) {
  switch (kind) {
    case DatasetKind::kGender:
      return label == labels::kWoman ? "Woman" : label == labels::kMan ? "Man" : "MtF";
    case DatasetKind::kGeneration:
      return std::to_string(label == labels::kGenX ? 1968 + uniform_index(rng, 5)
                                                   : 1999 + uniform_index(rng, 5));
    case DatasetKind::kLanguage:
      if (label == labels::kNative) return "English (N)";
      return capitalize(language.value_or("german")) + " (N) | English (C1)";
  }
  return {};
}

}  // namespace

std::pair<std::string, std::string> group_labels(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::kGender: return {std::string(labels::kWoman), std::string(labels::kMan)};
    case DatasetKind::kLanguage: return {std::string(labels::kNative), std::string(labels::kNonNative)};
    case DatasetKind::kGeneration: return {std::string(labels::kGenX), std::string(labels::kGenZ)};
  }
  throw UsageError("unknown attribute");
}

const std::vector<std::string>& native_languages() { return language_list(); }

std::vector<std::string> vocabulary(size_t size) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const char* w : kWords)
    if (out.size() < size && seen.insert(w).second) out.push_back(w);
  const size_t base = out.size();
  // Suffixed forms of content words (the first 120 words stay closed).
  for (const char* suffix : kSuffixes)
    for (size_t i = 120; i < base && out.size() < size; ++i) {
      const std::string w = out[i] + suffix;
      if (seen.insert(w).second) out.push_back(w);
    }
  if (out.size() < size)
    throw UsageError("vocab_size " + std::to_string(size) + " exceeds the " +
                     std::to_string(out.size()) + " available synthetic words");
  return out;
}

void SynthConfig::validate() const {
  if (n_authors_per_group == 0) throw UsageError("n_authors_per_group must be positive");
  if (!(group_effect >= 0.0)) throw UsageError("group_effect must be non-negative");
  if (!(author_effect >= 0.0)) throw UsageError("author_effect must be non-negative");
  if (vocab_size < 50) throw UsageError("vocab_size must be at least 50");
  if (comments_per_author == 0) throw UsageError("comments_per_author must be positive");
  if (min_words < corpus::kMinCommentWords)
    throw UsageError("min_words below the " + std::to_string(corpus::kMinCommentWords) +
                     "-word comment gate");
  if (max_words < min_words) throw UsageError("max_words must be at least min_words");
  if (comments_per_author * min_words < corpus::kMinAuthorWords)
    throw UsageError("comments_per_author * min_words must reach " +
                     std::to_string(corpus::kMinAuthorWords) + " words");
  if (comments_per_author < corpus::kMinRawComments)
    throw UsageError("comments_per_author must be at least " + std::to_string(corpus::kMinRawComments));
  if (attribute == DatasetKind::kLanguage &&
      (n_native_languages == 0 || n_native_languages > language_list().size()))
    throw UsageError("n_native_languages must be in [1, " + std::to_string(language_list().size()) + "]");
  const auto [a, b] = group_labels(attribute);
  for (const auto& [label, scale] : author_effect_scale) {
    if (label != a && label != b) throw UsageError("author_effect_scale names unknown group '" + label + "'");
    if (!(scale >= 0.0)) throw UsageError("author_effect_scale values must be non-negative");
  }
  vocabulary(vocab_size);
}

json to_json(const SynthConfig& c) {
  return {{"attribute", to_string(c.attribute)},
          {"n_authors_per_group", c.n_authors_per_group},
          {"group_effect", c.group_effect},
          {"author_effect", c.author_effect},
          {"vocab_size", c.vocab_size},
          {"comments_per_author", c.comments_per_author},
          {"words_per_comment", {c.min_words, c.max_words}},
          {"n_native_languages", c.n_native_languages},
          {"seed", c.seed},
          {"author_effect_scale", c.author_effect_scale},
          {"subreddit", c.subreddit}};
}

SynthConfig synth_config_from_json(const json& j) {
  SynthConfig c;
  try {
    if (j.contains("attribute")) c.attribute = parse_dataset_kind(j["attribute"].get<std::string>());
    c.n_authors_per_group = j.value("n_authors_per_group", c.n_authors_per_group);
    c.group_effect = j.value("group_effect", c.group_effect);
    c.author_effect = j.value("author_effect", c.author_effect);
    c.vocab_size = j.value("vocab_size", c.vocab_size);
    c.comments_per_author = j.value("comments_per_author", c.comments_per_author);
    if (j.contains("words_per_comment")) {
      const auto range = j["words_per_comment"].get<std::vector<size_t>>();
      if (range.size() != 2) throw UsageError("words_per_comment must be [min, max]");
      c.min_words = range[0];
      c.max_words = range[1];
    }
    c.n_native_languages = j.value("n_native_languages", c.n_native_languages);
    c.seed = j.value("seed", c.seed);
    c.author_effect_scale = j.value("author_effect_scale", c.author_effect_scale);
    c.subreddit = j.value("subreddit", c.subreddit);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed synth config: ") + e.what());
  }
  c.validate();
  return c;
}

SynthCorpus generate(const SynthConfig& config, size_t jobs) {
  config.validate();
  const auto words = vocabulary(config.vocab_size);
  const auto [label_a, label_b] = group_labels(config.attribute);
  const bool language = config.attribute == DatasetKind::kLanguage;

  std::vector<double> base(config.vocab_size);
  for (size_t i = 0; i < base.size(); ++i) base[i] = -kZipfExponent * std::log(static_cast<double>(i + 1));

  std::map<std::string, Offset> offsets;
  if (language) {
    offsets["english"] = make_offset(config.seed, "english", config.vocab_size);
    for (size_t l = 0; l < config.n_native_languages; ++l)
      offsets[language_list()[l]] = make_offset(config.seed, language_list()[l], config.vocab_size);
  } else {
    offsets[label_a] = make_offset(config.seed, label_a, config.vocab_size);
    offsets[label_b] = make_offset(config.seed, label_b, config.vocab_size);
  }

  const size_t n_authors = 2 * config.n_authors_per_group;
  SynthCorpus out;
  out.authors.resize(n_authors);
  std::vector<std::vector<ingest::RawComment>> comments(n_authors);
  std::vector<ingest::FlairObservation> flairs(n_authors);

  parallel_for(n_authors, jobs, [&](size_t a) {
    const bool first = a < config.n_authors_per_group;
    const size_t idx = first ? a : a - config.n_authors_per_group;
    SynthAuthor& author = out.authors[a];
    author.label = first ? label_a : label_b;
    author.username = "synth_" + author.label + "_" + std::to_string(idx);
    Stream rng = make_stream(config.seed, "author/" + author.label, idx);
    if (language && author.label == labels::kNonNative)
      author.native_language = language_list()[uniform_index(rng, config.n_native_languages)];
    else if (language)
      author.native_language = "english";

    const Offset& offset = offsets.at(language ? *author.native_language : author.label);
    const auto scale_it = config.author_effect_scale.find(author.label);
    const double ae = config.author_effect * (scale_it == config.author_effect_scale.end() ? 1.0 : scale_it->second);
    const double ge = config.group_effect;

    const auto noise = normal_vector(rng, config.vocab_size);
    const auto punct_noise = normal_vector(rng, 4);
    const double length_noise = standard_normal(rng);
    StyleProfile& p = author.profile;
    p.unigram_logits.resize(config.vocab_size);
    for (size_t i = 0; i < config.vocab_size; ++i)
      p.unigram_logits[i] = base[i] + ae * noise[i] + ge * offset.words[i];
    std::vector<double> punct_logits(4);
    for (size_t i = 0; i < 4; ++i)
      punct_logits[i] = kBasePunctuation[i] + 0.5 * (ae * punct_noise[i] + ge * offset.punctuation[i]);
    p.punctuation_rates.resize(4);
    p.punctuation_rates[0] = 1.0 / (1.0 + std::exp(-punct_logits[0]));
    const double top = *std::max_element(punct_logits.begin() + 1, punct_logits.end());
    double z = 0.0;
    for (size_t i = 1; i < 4; ++i) z += std::exp(punct_logits[i] - top);
    for (size_t i = 1; i < 4; ++i) p.punctuation_rates[i] = std::exp(punct_logits[i] - top) / z;
    p.mean_sentence_length = std::clamp(
        kBaseSentenceLength * std::exp(0.25 * (ae * length_noise + ge * offset.length)), 6.0, 30.0);

    std::vector<double> cdf(config.vocab_size);
    const double lmax = *std::max_element(p.unigram_logits.begin(), p.unigram_logits.end());
    double acc = 0.0;
    for (size_t i = 0; i < config.vocab_size; ++i) cdf[i] = (acc += std::exp(p.unigram_logits[i] - lmax));
    const std::vector<double> end_cdf = {p.punctuation_rates[1], p.punctuation_rates[1] + p.punctuation_rates[2], 1.0};
    static constexpr const char* kEnds[] = {".", "!", "?"};

    int64_t t = 1'500'000'000 + static_cast<int64_t>(uniform_index(rng, 10'000'000));
    comments[a].reserve(config.comments_per_author);
    for (size_t c = 0; c < config.comments_per_author; ++c) {
      t += 3600 + static_cast<int64_t>(uniform_index(rng, 172800));
      const size_t target = config.min_words + uniform_index(rng, config.max_words - config.min_words + 1);
      std::string body;
      size_t written = 0;
      while (written < target) {
        const double spread = 0.5 + uniform01(rng);
        size_t len = std::max<size_t>(3, static_cast<size_t>(std::lround(p.mean_sentence_length * spread)));
        len = std::min(len, target - written);
        for (size_t w = 0; w < len; ++w) {
          if (!body.empty()) body += ' ';
          const std::string& word = words[sample_cdf(cdf, rng)];
          body += w == 0 ? capitalize(word) : word;
          if (w + 1 < len && uniform01(rng) < p.punctuation_rates[0]) body += ',';
        }
        body += kEnds[sample_cdf(end_cdf, rng)];
        written += len;
      }
      comments[a].push_back({author.username + "_" + std::to_string(c), author.username,
                             config.subreddit, t, std::move(body)});
    }
    flairs[a] = {author.username, config.subreddit,
                 flair_text(config.attribute, author.label, author.native_language, rng)};
  });
  for (auto& cs : comments)
    for (auto& c : cs) out.comments.push_back(std::move(c));
  out.flairs = std::move(flairs);
  return out;
}

void write_corpus(const SynthCorpus& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  ingest::write_comments(dir / "comments.ndjson", corpus.comments);
  ingest::write_flairs(dir / "flairs.ndjson", corpus.flairs);
}

std::vector<corpus::SplitAuthor> split_pool(const SynthCorpus& synthetic, DatasetKind kind, size_t jobs) {
  const auto built = corpus::build_author_records(synthetic.comments, synthetic.flairs, kind, {jobs});
  std::vector<corpus::SplitAuthor> pool;
  pool.reserve(built.records.size());
  for (const auto& r : built.records) pool.push_back(corpus::split_author(r));
  return pool;
}

// ---------------------------------------------------------------------------

double closed_world_accuracy(const SynthConfig& config, size_t n, size_t sets, size_t jobs,
                             const model::TrainConfig& train) {
  const auto corpus = generate(config, jobs);
  const auto pool = split_pool(corpus, config.attribute, jobs);
  const auto [dc, ndc] = group_labels(config.attribute);
  experiments::AuditSetup setup;
  setup.attribute = config.attribute;
  setup.dc = dc;
  setup.ndc = ndc;
  setup.n = n;
  setup.repeats = sets;
  setup.seed = config.seed;
  setup.train = train;
  experiments::AuditOptions options;
  options.jobs = jobs;
  options.train = train;
  const auto odds = experiments::run_equity_of_odds(pool, setup, options);
  double mis = 0.0;
  size_t count = 0;
  for (const auto* rates : {&odds.dc_values, &odds.ndc_values})
    for (const auto& r : *rates) {
      mis += r.value;
      ++count;
    }
  return count ? 1.0 - mis / static_cast<double>(count) : 0.0;
}

CalibrationResult calibrate(double target_accuracy, size_t n, uint64_t seed,
                            const CalibrationOptions& options) {
  if (!(target_accuracy > 0.0 && target_accuracy <= 1.0)) throw UsageError("target accuracy must be in (0, 1]");
  if (n < 2) throw UsageError("suspect-set size must be at least 2");
  SynthConfig config = options.base;
  config.seed = seed;
  const size_t per_group = (n - n / 2) * std::max(options.sets_per_evaluation, options.verification_sets);
  // Headroom for authors the greedy split rejects.
  config.n_authors_per_group = std::max(config.n_authors_per_group, per_group + per_group / 4 + 2);

  CalibrationResult result;
  auto evaluate = [&](double ae) {
    SynthConfig c = config;
    c.author_effect = ae;
    const double acc = closed_world_accuracy(c, n, options.sets_per_evaluation, options.jobs, options.train);
    result.trace.push_back({ae, acc});
    return acc;
  };
  auto close_enough = [&](double acc) { return std::abs(acc - target_accuracy) <= options.tolerance / 2; };

  double lo = 0.0, hi = 1.0;
  double best = 0.0;
  bool done = close_enough(evaluate(0.0));
  if (!done) {
    double acc_hi = evaluate(hi);
    size_t steps = 2;
    while (acc_hi < target_accuracy && hi < 64.0 && steps < options.max_steps) {
      lo = hi;
      hi *= 2.0;
      acc_hi = evaluate(hi);
      ++steps;
    }
    done = close_enough(acc_hi);
    while (!done && steps < options.max_steps) {
      const double mid = 0.5 * (lo + hi);
      const double acc = evaluate(mid);
      ++steps;
      done = close_enough(acc);
      (acc < target_accuracy ? lo : hi) = mid;
    }
  }
  double best_gap = 2.0;
  for (const auto& s : result.trace)
    if (std::abs(s.accuracy - target_accuracy) < best_gap) {
      best_gap = std::abs(s.accuracy - target_accuracy);
      best = s.author_effect;
    }
  config.author_effect = best;
  result.config = config;
  result.config.seed = seed;

  SynthConfig verify = config;
  verify.seed = make_stream(seed, "calibration-verify")();
  result.verification_accuracy =
      closed_world_accuracy(verify, n, options.verification_sets, options.jobs, options.train);
  return result;
}

}  // namespace stylofair::synth
