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

#include "stylofair/langid.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "stylofair/text.hpp"

namespace stylofair::langid {
namespace {

constexpr size_t kProfileSize = 300;
// Relative margin between best and runner-up distance that maps to full
// confidence.
constexpr double kFullConfidenceMargin = 0.2;

// A gram of up to three code points packed 21 bits each, first code point
// highest; numeric order equals the lexicographic order of the UTF-8 text.
uint64_t pack_gram(const std::u32string& cps, size_t i, size_t n) {
  uint64_t key = 0;
  for (size_t k = 0; k < 3; ++k) {
    key <<= 21;
    if (k < n) key |= static_cast<uint64_t>(cps[i + k]);
  }
  return key;
}

// Grams ranked by descending frequency, ties lexicographic; at most `limit`.
std::vector<uint64_t> ranked_grams(std::string_view text, size_t limit) {
  std::unordered_map<uint64_t, int> counts;
  for (const std::string& token : text::tokenize_words(text)) {
    const std::u32string cps = text::decode_utf8("_" + text::to_lower(token) + "_");
    for (size_t n = 1; n <= 3; ++n) {
      for (size_t i = 0; i + n <= cps.size(); ++i) {
        if (n == 1 && cps[i] == U'_') continue;
        ++counts[pack_gram(cps, i, n)];
      }
    }
  }
  std::vector<std::pair<uint64_t, int>> items(counts.begin(), counts.end());
  const auto by_rank = [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  };
  if (items.size() > limit) {
    std::partial_sort(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(limit), items.end(),
                      by_rank);
    items.resize(limit);
  } else {
    std::sort(items.begin(), items.end(), by_rank);
  }
  std::vector<uint64_t> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(item.first);
  return out;
}

}  // namespace

Detector::Detector() : Detector(bundled_reference_texts()) {}

Detector::Detector(const std::map<std::string, std::string>& references) {
  for (const auto& [code, reference] : references) codes_.push_back(code);
  for (size_t p = 0; p < codes_.size(); ++p) {
    const auto grams = ranked_grams(references.at(codes_[p]), kProfileSize);
    for (size_t r = 0; r < grams.size(); ++r) {
      auto& ranks = ranks_[grams[r]];
      if (ranks.empty()) ranks.assign(codes_.size(), -1);
      ranks[p] = static_cast<int>(r);
    }
  }
}

const Detector& Detector::instance() {
  static const Detector detector;
  return detector;
}

std::vector<std::pair<std::string, double>> Detector::distances(std::string_view text) const {
  const auto grams = ranked_grams(text, kProfileSize);
  std::vector<long> totals(codes_.size(), 0);
  for (size_t r = 0; r < grams.size(); ++r) {
    const auto it = ranks_.find(grams[r]);
    for (size_t p = 0; p < codes_.size(); ++p) {
      const int rank = it == ranks_.end() ? -1 : it->second[p];
      totals[p] += rank < 0 ? kProfileSize : std::abs(rank - static_cast<int>(r));
    }
  }
  std::vector<std::pair<std::string, double>> out;
  out.reserve(codes_.size());
  for (size_t p = 0; p < codes_.size(); ++p) {
    const double d = grams.empty() ? 1.0
                                   : static_cast<double>(totals[p]) /
                                         (static_cast<double>(grams.size()) * kProfileSize);
    out.emplace_back(codes_[p], d);
  }
  return out;
}

Detection Detector::detect(std::string_view text) const {
  auto dist = distances(text);
  if (dist.empty()) return {};
  std::sort(dist.begin(), dist.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  Detection d;
  d.language = dist.front().first;
  if (dist.size() == 1) {
    d.confidence = 100;
  } else {
    const double best = dist[0].second;
    const double second = dist[1].second;
    const double margin = second > 0 ? (second - best) / second : 0.0;
    d.confidence = static_cast<int>(
        std::floor(100.0 * std::clamp(margin / kFullConfidenceMargin, 0.0, 1.0)));
  }
  if (text::decode_utf8(text).size() < kMinReliableChars)
    d.confidence = std::min(d.confidence, kShortTextConfidenceCap);
  return d;
}

}  // namespace stylofair::langid
