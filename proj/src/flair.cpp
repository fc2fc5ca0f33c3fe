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

#include "stylofair/flair.hpp"

#include <algorithm>

#include "stylofair/error.hpp"
#include "stylofair/text.hpp"

namespace stylofair {
namespace {

bool is_segment_separator(char32_t cp) {
  return cp == U'|' || cp == U',' || cp == U';' || cp == U'/' || cp == U'\n' ||
         cp == 0x2022 || cp == 0xB7;
}

bool is_regional_indicator(char32_t cp) { return cp >= 0x1F1E6 && cp <= 0x1F1FF; }

std::vector<std::u32string> split_segments(std::u32string_view s) {
  std::vector<std::u32string> out(1);
  for (char32_t cp : s) {
    if (is_segment_separator(cp)) {
      out.emplace_back();
    } else {
      out.back().push_back(cp);
    }
  }
  return out;
}

// Languages named by flags in `segment`, in order of appearance.
std::vector<std::string> flag_languages(std::u32string_view segment, const FlairTables& tables) {
  std::vector<std::string> out;
  for (size_t i = 0; i < segment.size(); ++i) {
    if (is_regional_indicator(segment[i]) && i + 1 < segment.size() &&
        is_regional_indicator(segment[i + 1])) {
      std::string country;
      country.push_back(static_cast<char>('A' + (segment[i] - 0x1F1E6)));
      country.push_back(static_cast<char>('A' + (segment[i + 1] - 0x1F1E6)));
      if (auto it = tables.flag_countries.find(country); it != tables.flag_countries.end())
        out.push_back(it->second);
      ++i;
    } else if (segment[i] == 0x1F3F4) {
      // Subdivision flags: black flag + tag letters + cancel tag.
      std::string tag;
      size_t j = i + 1;
      while (j < segment.size() && segment[j] >= 0xE0061 && segment[j] <= 0xE007A) {
        tag.push_back(static_cast<char>('a' + (segment[j] - 0xE0061)));
        ++j;
      }
      if (tag == "gbeng" || tag == "gbsct" || tag == "gbwls") out.push_back("english");
      i = j;
    }
  }
  return out;
}

bool is_cefr(std::string_view lower) {
  return lower.size() == 2 && lower[0] >= 'a' && lower[0] <= 'c' && (lower[1] == '1' || lower[1] == '2');
}

bool is_native_marker(std::string_view lower) {
  return lower == "n" || lower == "native" || lower == "nativ" || lower == "l1";
}

bool is_level_word(std::string_view lower) {
  return is_cefr(lower) || lower == "learning" || lower == "fluent" || lower == "beginner" ||
         lower == "intermediate" || lower == "advanced" || lower == "learner";
}

const std::set<std::string>& iso_language_codes() {
  static const std::set<std::string> codes = {"ar", "de", "en", "es", "fr", "it", "ja", "ko",
                                              "nl", "pl", "pt", "ru", "sv", "tr", "zh", "uk"};
  return codes;
}

FlairOutcome parse_language(std::string_view flair, const FlairTables& tables) {
  const std::u32string cps = text::decode_utf8(flair);
  std::vector<std::string> natives;
  std::optional<std::string> english_skill;
  bool english_leveled = false;
  bool sticky_native = false;

  for (const std::u32string& segment : split_segments(cps)) {
    const std::string seg_utf8 = text::encode_utf8(segment);
    std::vector<std::string> languages = flag_languages(segment, tables);
    bool native = false;
    std::optional<std::string> level;
    bool has_level_word = false;
    const auto tokens = text::tokenize_words(seg_utf8);
    for (const std::string& token : tokens) {
      const std::string lower = text::to_lower(token);
      if (auto it = tables.language_names.find(lower); it != tables.language_names.end()) {
        languages.push_back(it->second);
        continue;
      }
      if (token.size() == 2 && std::isupper(static_cast<unsigned char>(token[0])) &&
          std::isupper(static_cast<unsigned char>(token[1])) && iso_language_codes().count(lower)) {
        languages.push_back(lower == "en" ? "english" : lower);
        continue;
      }
      if (is_native_marker(lower)) native = true;
      if (is_cefr(lower) && !level) level = token;
      if (is_level_word(lower)) has_level_word = true;
    }
    // "Native: X, Y" marks the following segments until another level shows up.
    const bool starts_native =
        !tokens.empty() && text::to_lower(tokens.front()) == "native" &&
        seg_utf8.find(':') != std::string::npos;
    if (has_level_word) sticky_native = false;
    if (starts_native) sticky_native = true;
    if (languages.empty()) continue;
    if (native || (sticky_native && !has_level_word)) {
      for (const auto& lang : languages)
        if (std::find(natives.begin(), natives.end(), lang) == natives.end()) natives.push_back(lang);
    }
    if (level && std::find(languages.begin(), languages.end(), "english") != languages.end()) {
      english_leveled = true;
      if (!english_skill) {
        std::string upper = *level;
        for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        english_skill = upper;
      }
    }
  }

  if (natives.empty()) return FlairNone{};
  ParsedAttribute attr;
  attr.kind = DatasetKind::kLanguage;
  const bool english_native = std::find(natives.begin(), natives.end(), "english") != natives.end();
  if (english_native) {
    if (english_leveled) return FlairConflict{"english marked both native and with a CEFR level"};
    attr.label = std::string(labels::kNative);
    attr.native_language = "english";
  } else {
    attr.label = std::string(labels::kNonNative);
    attr.native_language = natives.front();
    attr.english_skill = english_skill;
  }
  return attr;
}

// Matches tokens like "28f" or "m35".
char age_sex_letter(std::string_view lower) {
  if (lower.size() < 2 || lower.size() > 4) return 0;
  const char first = lower.front();
  const char last = lower.back();
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if ((last == 'm' || last == 'f') && all_digits(lower.substr(0, lower.size() - 1))) return last;
  if ((first == 'm' || first == 'f') && all_digits(lower.substr(1))) return first;
  return 0;
}

FlairOutcome parse_gender(std::string_view flair, const FlairTables& tables) {
  bool woman = false;
  bool man = false;
  bool trans = false;
  for (const std::string& token : text::tokenize_words(flair)) {
    const std::string lower = text::to_lower(token);
    woman = woman || tables.woman_tokens.count(lower) > 0;
    man = man || tables.man_tokens.count(lower) > 0;
    trans = trans || tables.trans_tokens.count(lower) > 0;
    const char sex = age_sex_letter(lower);
    woman = woman || sex == 'f';
    man = man || sex == 'm';
  }
  const int matches = int{woman} + int{man} + int{trans};
  if (matches == 0) return FlairNone{};
  if (matches > 1) return FlairConflict{"flair matches more than one gender token set"};
  ParsedAttribute attr;
  attr.kind = DatasetKind::kGender;
  attr.label = std::string(woman ? labels::kWoman : man ? labels::kMan : labels::kTrans);
  return attr;
}

FlairOutcome parse_generation(std::string_view flair, const FlairTables& tables) {
  size_t i = 0;
  while (i < flair.size()) {
    if (!std::isdigit(static_cast<unsigned char>(flair[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < flair.size() && std::isdigit(static_cast<unsigned char>(flair[j]))) ++j;
    if (j - i == 4) {
      const int year = std::stoi(std::string(flair.substr(i, 4)));
      if (year >= tables.min_birth_year && year <= tables.max_birth_year) {
        ParsedAttribute attr;
        attr.kind = DatasetKind::kGeneration;
        attr.birth_year = year;
        attr.label = std::string(labels::kOtherGeneration);
        for (const auto& bucket : tables.generation_buckets) {
          if (year >= bucket.first_year && year <= bucket.last_year) {
            attr.label = bucket.label;
            break;
          }
        }
        return attr;
      }
    }
    i = j;
  }
  return FlairNone{};
}

}  // namespace

std::string to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::kLanguage:
      return "language";
    case DatasetKind::kGender:
      return "gender";
    case DatasetKind::kGeneration:
      return "generation";
  }
  return "unknown";
}

DatasetKind parse_dataset_kind(std::string_view s) {
  if (s == "language") return DatasetKind::kLanguage;
  if (s == "gender") return DatasetKind::kGender;
  if (s == "generation") return DatasetKind::kGeneration;
  throw UsageError("unknown dataset kind '" + std::string(s) +
                   "' (expected language, gender or generation)");
}

const std::vector<std::string>& label_set(DatasetKind kind) {
  static const std::vector<std::string> language = {std::string(labels::kNative),
                                                    std::string(labels::kNonNative)};
  static const std::vector<std::string> gender = {
      std::string(labels::kMan), std::string(labels::kWoman), std::string(labels::kTrans)};
  static const std::vector<std::string> generation = {std::string(labels::kGenX),
                                                      std::string(labels::kGenZ),
                                                      std::string(labels::kOtherGeneration)};
  switch (kind) {
    case DatasetKind::kLanguage:
      return language;
    case DatasetKind::kGender:
      return gender;
    case DatasetKind::kGeneration:
      return generation;
  }
  return gender;
}

const FlairTables& default_flair_tables() {
  static const FlairTables tables = [] {
    FlairTables t;
    t.woman_tokens = {"woman", "women", "female", "girl", "lady", "f", "she", "her", "wife",
                      "mother", "mom"};
    t.man_tokens = {"man", "men", "male", "guy", "dude", "m", "he", "him", "husband",
                    "father", "dad"};
    t.trans_tokens = {"trans",      "transgender", "transwoman", "transman", "mtf",
                      "ftm",        "nonbinary",   "non-binary", "enby",     "nb",
                      "genderqueer", "genderfluid", "agender",   "transfem", "transmasc"};
    t.language_names = {
        {"english", "english"},       {"german", "german"},        {"deutsch", "german"},
        {"french", "french"},         {"français", "french"},      {"francais", "french"},
        {"spanish", "spanish"},       {"español", "spanish"},      {"espanol", "spanish"},
        {"italian", "italian"},       {"italiano", "italian"},     {"portuguese", "portuguese"},
        {"português", "portuguese"},  {"dutch", "dutch"},          {"nederlands", "dutch"},
        {"russian", "russian"},       {"polish", "polish"},        {"swedish", "swedish"},
        {"norwegian", "norwegian"},   {"danish", "danish"},        {"finnish", "finnish"},
        {"japanese", "japanese"},     {"chinese", "chinese"},      {"mandarin", "chinese"},
        {"cantonese", "cantonese"},   {"korean", "korean"},        {"arabic", "arabic"},
        {"turkish", "turkish"},       {"hindi", "hindi"},          {"ukrainian", "ukrainian"},
        {"czech", "czech"},           {"greek", "greek"},          {"hungarian", "hungarian"},
        {"romanian", "romanian"},     {"hebrew", "hebrew"},        {"vietnamese", "vietnamese"},
        {"indonesian", "indonesian"}, {"tagalog", "tagalog"},      {"persian", "persian"},
        {"catalan", "catalan"},
    };
    t.flag_countries = {
        {"GB", "english"},    {"US", "english"},    {"AU", "english"},    {"CA", "english"},
        {"IE", "english"},    {"NZ", "english"},    {"DE", "german"},     {"AT", "german"},
        {"CH", "german"},     {"FR", "french"},     {"BE", "french"},     {"ES", "spanish"},
        {"MX", "spanish"},    {"AR", "spanish"},    {"CO", "spanish"},    {"CL", "spanish"},
        {"IT", "italian"},    {"PT", "portuguese"}, {"BR", "portuguese"}, {"NL", "dutch"},
        {"RU", "russian"},    {"PL", "polish"},     {"SE", "swedish"},    {"NO", "norwegian"},
        {"DK", "danish"},     {"FI", "finnish"},    {"JP", "japanese"},   {"CN", "chinese"},
        {"TW", "chinese"},    {"HK", "cantonese"},  {"KR", "korean"},     {"SA", "arabic"},
        {"EG", "arabic"},     {"TR", "turkish"},    {"IN", "hindi"},      {"UA", "ukrainian"},
        {"CZ", "czech"},      {"GR", "greek"},      {"HU", "hungarian"},  {"RO", "romanian"},
        {"IL", "hebrew"},     {"VN", "vietnamese"}, {"ID", "indonesian"}, {"PH", "tagalog"},
        {"IR", "persian"},
    };
    t.generation_buckets = {{std::string(labels::kGenX), 1968, 1972},
                            {std::string(labels::kGenZ), 1999, 2003}};
    return t;
  }();
  return tables;
}

FlairOutcome parse_flair(DatasetKind kind, std::string_view flair_text, const FlairTables& tables) {
  if (flair_text.empty()) return FlairNone{};
  switch (kind) {
    case DatasetKind::kLanguage:
      return parse_language(flair_text, tables);
    case DatasetKind::kGender:
      return parse_gender(flair_text, tables);
    case DatasetKind::kGeneration:
      return parse_generation(flair_text, tables);
  }
  return FlairNone{};
}

}  // namespace stylofair
