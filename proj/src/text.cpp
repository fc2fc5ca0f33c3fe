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

#include "stylofair/text.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

namespace stylofair::text {
namespace {

struct Range {
  char32_t lo;
  char32_t hi;
};

// Extended_Pictographic, from emoji-data.txt (Unicode 15).
constexpr Range kPictographic[] = {
    {0x00A9, 0x00A9},   {0x00AE, 0x00AE},   {0x203C, 0x203C},   {0x2049, 0x2049},
    {0x2122, 0x2122},   {0x2139, 0x2139},   {0x2194, 0x2199},   {0x21A9, 0x21AA},
    {0x231A, 0x231B},   {0x2328, 0x2328},   {0x2388, 0x2388},   {0x23CF, 0x23CF},
    {0x23E9, 0x23F3},   {0x23F8, 0x23FA},   {0x24C2, 0x24C2},   {0x25AA, 0x25AB},
    {0x25B6, 0x25B6},   {0x25C0, 0x25C0},   {0x25FB, 0x25FE},   {0x2600, 0x2605},
    {0x2607, 0x2612},   {0x2614, 0x2685},   {0x2690, 0x2705},   {0x2708, 0x2712},
    {0x2714, 0x2714},   {0x2716, 0x2716},   {0x271D, 0x271D},   {0x2721, 0x2721},
    {0x2728, 0x2728},   {0x2733, 0x2734},   {0x2744, 0x2744},   {0x2747, 0x2747},
    {0x274C, 0x274C},   {0x274E, 0x274E},   {0x2753, 0x2755},   {0x2757, 0x2757},
    {0x2763, 0x2767},   {0x2795, 0x2797},   {0x27A1, 0x27A1},   {0x27B0, 0x27B0},
    {0x27BF, 0x27BF},   {0x2934, 0x2935},   {0x2B05, 0x2B07},   {0x2B1B, 0x2B1C},
    {0x2B50, 0x2B50},   {0x2B55, 0x2B55},   {0x3030, 0x3030},   {0x303D, 0x303D},
    {0x3297, 0x3297},   {0x3299, 0x3299},   {0x1F000, 0x1F0FF}, {0x1F10D, 0x1F10F},
    {0x1F12F, 0x1F12F}, {0x1F16C, 0x1F171}, {0x1F17E, 0x1F17F}, {0x1F18E, 0x1F18E},
    {0x1F191, 0x1F19A}, {0x1F1AD, 0x1F1E5}, {0x1F201, 0x1F20F}, {0x1F21A, 0x1F21A},
    {0x1F22F, 0x1F22F}, {0x1F232, 0x1F23A}, {0x1F23C, 0x1F23F}, {0x1F249, 0x1F3FA},
    {0x1F400, 0x1F53D}, {0x1F546, 0x1F64F}, {0x1F680, 0x1F6FF}, {0x1F774, 0x1F77F},
    {0x1F7D5, 0x1F7FF}, {0x1F80C, 0x1F80F}, {0x1F848, 0x1F84F}, {0x1F85A, 0x1F85F},
    {0x1F888, 0x1F88F}, {0x1F8AE, 0x1F8FF}, {0x1F90C, 0x1F93A}, {0x1F93C, 0x1F945},
    {0x1F947, 0x1FAFF}, {0x1FC00, 0x1FFFD},
};

template <size_t N>
bool in_ranges(char32_t cp, const Range (&ranges)[N]) {
  auto it = std::upper_bound(std::begin(ranges), std::end(ranges), cp,
                             [](char32_t v, const Range& r) { return v < r.lo; });
  if (it == std::begin(ranges)) return false;
  --it;
  return cp <= it->hi;
}

bool is_joiner(char32_t cp) { return cp == 0x200D || cp == 0xFE0E || cp == 0xFE0F; }

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2019; }

std::u32string_view ltrim(std::u32string_view s) {
  size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return s.substr(i);
}

bool starts_with_ci(std::u32string_view s, std::u32string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    char32_t c = s[i];
    if (c >= U'A' && c <= U'Z') c += 32;
    if (c != prefix[i]) return false;
  }
  return true;
}

std::u32string strip_emoji(std::u32string_view line) {
  std::vector<bool> drop(line.size(), false);
  for (size_t i = 0; i < line.size(); ++i) drop[i] = is_emoji_component(line[i]);
  // Joiners and variation selectors go when they touch removed material;
  // repeat so chains like emoji ZWJ VS16 collapse fully.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (drop[i] || !is_joiner(line[i])) continue;
      const bool prev = i > 0 && drop[i - 1];
      const bool next = i + 1 < line.size() && drop[i + 1];
      if (prev || next) {
        drop[i] = true;
        changed = true;
      }
    }
  }
  std::u32string out;
  out.reserve(line.size());
  for (size_t i = 0; i < line.size(); ++i)
    if (!drop[i]) out.push_back(line[i]);
  return out;
}

std::u32string strip_urls(std::u32string_view line) {
  std::u32string out;
  out.reserve(line.size());
  size_t i = 0;
  while (i < line.size()) {
    const std::u32string_view rest = line.substr(i);
    const bool token_start = i == 0 || is_space(line[i - 1]);
    if (starts_with_ci(rest, U"http://") || starts_with_ci(rest, U"https://") ||
        (token_start && starts_with_ci(rest, U"www."))) {
      while (i < line.size() && !is_space(line[i])) ++i;
      continue;
    }
    out.push_back(line[i]);
    ++i;
  }
  return out;
}

bool is_quote_line(std::u32string_view line) {
  const auto t = ltrim(line);
  return (!t.empty() && t.front() == U'>') || starts_with_ci(t, U"&gt;");
}

}  // namespace

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    int len = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    }
    bool ok = len > 0 && i + len <= s.size();
    for (int k = 1; ok && k < len; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
      } else {
        cp = (cp << 6) | (b & 0x3F);
      }
    }
    if (!ok) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) append_utf8(out, cp);
  return out;
}

bool is_extended_pictographic(char32_t cp) { return in_ranges(cp, kPictographic); }

bool is_emoji_component(char32_t cp) {
  return is_extended_pictographic(cp) || (cp >= 0x1F1E6 && cp <= 0x1F1FF) ||
         (cp >= 0x1F3FB && cp <= 0x1F3FF) || (cp >= 0xE0020 && cp <= 0xE007F) ||
         cp == 0x20E3;
}

bool is_letter(char32_t cp) {
  if (cp < 0x80) return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
  if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
  return (cp >= 0x250 && cp <= 0x2AF) ||   // IPA
         (cp >= 0x370 && cp <= 0x3FF && cp != 0x37E && cp != 0x387) ||  // Greek
         (cp >= 0x400 && cp <= 0x52F) ||   // Cyrillic
         (cp >= 0x531 && cp <= 0x587) ||   // Armenian
         (cp >= 0x5D0 && cp <= 0x5EA) ||   // Hebrew
         (cp >= 0x620 && cp <= 0x64A) ||   // Arabic
         (cp >= 0x900 && cp <= 0x963) ||   // Devanagari
         (cp >= 0xE00 && cp <= 0xE30) ||   // Thai
         (cp >= 0x1E00 && cp <= 0x1FFF) ||  // Latin/Greek extended
         (cp >= 0x3040 && cp <= 0x30FF) ||  // kana
         (cp >= 0x4E00 && cp <= 0x9FFF) ||  // CJK
         (cp >= 0xAC00 && cp <= 0xD7AF);    // Hangul
}

bool is_digit(char32_t cp) {
  return (cp >= U'0' && cp <= U'9') || (cp >= 0x660 && cp <= 0x669) ||
         (cp >= 0xFF10 && cp <= 0xFF19);
}

bool is_space(char32_t cp) {
  return cp == U' ' || (cp >= 0x09 && cp <= 0x0D) || cp == 0x85 || cp == 0xA0 ||
         cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 ||
         cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

std::string clean_text(std::string_view raw) {
  const std::u32string cps = decode_utf8(raw);
  std::u32string kept;
  kept.reserve(cps.size());
  size_t start = 0;
  while (start <= cps.size()) {
    size_t end = start;
    while (end < cps.size() && cps[end] != U'\n') ++end;
    const std::u32string_view line(cps.data() + start, end - start);
    std::u32string processed = strip_urls(strip_emoji(line));
    if (!is_quote_line(processed)) {
      kept += processed;
      kept.push_back(U'\n');
    }
    start = end + 1;
  }
  std::string out;
  out.reserve(kept.size());
  bool pending_space = false;
  for (char32_t cp : kept) {
    if (is_space(cp)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    append_utf8(out, cp);
  }
  return out;
}

namespace {

template <typename Emit>
void scan_tokens(std::string_view text, bool punctuation, Emit&& emit) {
  const std::u32string cps = decode_utf8(text);
  size_t i = 0;
  const size_t n = cps.size();
  while (i < n) {
    if (!is_alnum(cps[i])) {
      if (punctuation && !is_space(cps[i]))
        emit(encode_utf8(std::u32string_view(cps.data() + i, 1)), false);
      ++i;
      continue;
    }
    size_t j = i;
    while (j < n) {
      if (is_alnum(cps[j])) {
        ++j;
      } else if ((is_apostrophe(cps[j]) || cps[j] == U'-') && j + 1 < n &&
                 is_alnum(cps[j + 1])) {
        j += 2;
      } else {
        break;
      }
    }
    emit(encode_utf8(std::u32string_view(cps.data() + i, j - i)), true);
    i = j;
  }
}

}  // namespace

std::vector<std::string> tokenize_words(std::string_view text) {
  std::vector<std::string> tokens;
  scan_tokens(text, false, [&](std::string t, bool) { tokens.push_back(std::move(t)); });
  return tokens;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  scan_tokens(text, true, [&](std::string t, bool word) { tokens.push_back({std::move(t), word}); });
  return tokens;
}

std::string to_lower(std::string_view s) {
  bool ascii = std::all_of(s.begin(), s.end(),
                           [](char c) { return static_cast<unsigned char>(c) < 0x80; });
  if (ascii) {
    std::string out(s);
    for (char& c : out)
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
    return out;
  }
  std::u32string cps = decode_utf8(s);
  for (char32_t& cp : cps) {
    if ((cp >= U'A' && cp <= U'Z') || (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) ||
        (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) || (cp >= 0x410 && cp <= 0x42F)) {
      cp += 32;
    } else if (cp >= 0x400 && cp <= 0x40F) {
      cp += 80;
    } else if (cp >= 0x100 && cp <= 0x17F && cp % 2 == 0 && cp != 0x138) {
      cp += 1;
    }
  }
  return encode_utf8(cps);
}

}  // namespace stylofair::text
