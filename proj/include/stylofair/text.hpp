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

// Unicode-aware text handling shared by the corpus and feature modules:
// UTF-8 decoding, comment cleaning and word tokenization.

#include <string>
#include <string_view>
#include <vector>

namespace stylofair::text {

// Decodes UTF-8; malformed bytes become U+FFFD.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);
void append_utf8(std::string& out, char32_t cp);

bool is_extended_pictographic(char32_t cp);
// Extended_Pictographic plus the emoji building blocks (regional indicators,
// skin-tone modifiers, tag characters, keycap).
bool is_emoji_component(char32_t cp);
bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_space(char32_t cp);
inline bool is_alnum(char32_t cp) { return is_letter(cp) || is_digit(cp); }

// Removes URLs, emoji and quote lines, collapses whitespace runs to one
// space and trims. Idempotent.
std::string clean_text(std::string_view raw);

// Maximal runs of letters/digits, joined across single internal apostrophes
// or hyphens ("it's", "test-case").
std::vector<std::string> tokenize_words(std::string_view text);

struct Token {
  std::string text;
  bool is_word = true;  // false: a single punctuation or symbol code point

  bool operator==(const Token&) const = default;
};

// Word tokens as above, interleaved with every other non-space code point
// as its own token.
std::vector<Token> tokenize(std::string_view text);

inline size_t word_count(std::string_view text) { return tokenize_words(text).size(); }

// Lowercases ASCII and the Latin-1 / Latin Extended-A / Cyrillic / Greek
// ranges; other code points pass through.
std::string to_lower(std::string_view s);

}  // namespace stylofair::text
