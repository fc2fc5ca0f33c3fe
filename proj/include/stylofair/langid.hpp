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

// Character n-gram language identification (rank-order profile distance).

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stylofair::langid {

struct Detection {
  std::string language;  // ISO 639-1 code; "ru" for transliterated Russian
  int confidence = 0;    // 0..100
};

// Texts shorter than this many characters never reach high confidence.
inline constexpr size_t kMinReliableChars = 20;
inline constexpr int kShortTextConfidenceCap = 50;

class Detector {
 public:
  // Builds profiles from the bundled reference texts.
  Detector();
  // Builds profiles from caller-supplied reference texts (code -> text).
  explicit Detector(const std::map<std::string, std::string>& references);

  Detection detect(std::string_view text) const;

  // Out-of-place distance of `text` to every profile, normalized to [0,1].
  std::vector<std::pair<std::string, double>> distances(std::string_view text) const;

  const std::vector<std::string>& languages() const { return codes_; }

  static const Detector& instance();

 private:
  std::vector<std::string> codes_;
  // gram -> rank in each profile, -1 when absent
  std::unordered_map<uint64_t, std::vector<int>> ranks_;
};

inline Detection detect_language(std::string_view text) {
  return Detector::instance().detect(text);
}

// The corpus keeps a comment only when this holds.
inline bool is_confident_english(const Detection& d) {
  return d.language == "en" && d.confidence >= 99;
}

const std::map<std::string, std::string>& bundled_reference_texts();

}  // namespace stylofair::langid
