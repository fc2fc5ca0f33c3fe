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

#include <gtest/gtest.h>

#include "stylofair/langid.hpp"
#include "stylofair/text.hpp"
#include "test_support.hpp"

namespace stylofair {
namespace {

using testing::fixture_path;

TEST(CleanText, RemovesUrls) {
  EXPECT_EQ(text::clean_text("see https://x.y/z ok"), "see ok");
  EXPECT_EQ(text::clean_text("go to www.example.org/path now"), "go to now");
  EXPECT_EQ(text::clean_text("plain http://a.b"), "plain");
}

TEST(CleanText, RemovesQuoteLines) {
  EXPECT_EQ(text::clean_text("> quoted line\nmy reply"), "my reply");
  EXPECT_EQ(text::clean_text("   > indented quote\n>another\nkept > not a quote"),
            "kept > not a quote");
}

TEST(CleanText, RemovesEmoji) {
  EXPECT_EQ(text::clean_text("nice 🎉🎉 work"), "nice work");
  EXPECT_EQ(text::clean_text("family 👨‍👩‍👧 here"), "family here");
  EXPECT_EQ(text::clean_text("heart ❤️ ok"), "heart ok");
  EXPECT_EQ(text::clean_text("flag 🇩🇪 native"), "flag native");
}

TEST(CleanText, CollapsesWhitespace) {
  EXPECT_EQ(text::clean_text("  a \t b\n\n c  "), "a b c");
  EXPECT_EQ(text::clean_text(""), "");
}

TEST(CleanText, IsIdempotent) {
  const std::vector<std::string> inputs = {
      "see https://x.y/z ok",
      "> q\n> r\nbody 🎉 with www.x.com and text",
      "a‍b 👍🏽 c️",
      ">\n>\n",
      "mixed \xff invalid bytes",
      testing::english_text(150),
      "trailing url http://example.com/a?b=c#d",
  };
  for (const auto& in : inputs) {
    const std::string once = text::clean_text(in);
    EXPECT_EQ(text::clean_text(once), once) << in;
    for (char32_t cp : text::decode_utf8(once)) EXPECT_FALSE(text::is_extended_pictographic(cp));
    EXPECT_EQ(once.find("\n>"), std::string::npos);
    EXPECT_NE(once.rfind(">", 0), 0u);
  }
}

TEST(TokenizeWords, Examples) {
  using V = std::vector<std::string>;
  EXPECT_EQ(text::tokenize_words("it's a test-case"), (V{"it's", "a", "test-case"}));
  EXPECT_EQ(text::tokenize_words(""), V{});
  EXPECT_EQ(text::tokenize_words("a  b\nc"), (V{"a", "b", "c"}));
  EXPECT_EQ(text::tokenize_words("end-- 'quoted' x-"), (V{"end", "quoted", "x"}));
  EXPECT_EQ(text::word_count("Über größe 42"), 3u);
}

TEST(Tokenize, SplitsPunctuation) {
  const auto tokens = text::tokenize("Hi, you!");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[0], (text::Token{"Hi", true}));
  EXPECT_EQ(tokens[1], (text::Token{",", false}));
  EXPECT_EQ(tokens[2], (text::Token{"you", true}));
  EXPECT_EQ(tokens[3], (text::Token{"!", false}));
}

TEST(Utf8, MalformedBytesBecomeReplacement) {
  const auto cps = text::decode_utf8("a\xffz");
  ASSERT_EQ(cps.size(), 3u);
  EXPECT_EQ(cps[1], U'�');
  EXPECT_EQ(text::encode_utf8(text::decode_utf8("grüße €")), "grüße €");
}

TEST(ToLower, LatinAndCyrillic) {
  EXPECT_EQ(text::to_lower("ÄBC Привет"), "äbc привет");
}

TEST(LanguageId, EnglishProseIsConfident) {
  const auto d = langid::detect_language(read_file(fixture_path("text/english_prose.txt")));
  EXPECT_EQ(d.language, "en");
  EXPECT_GE(d.confidence, 99);
  EXPECT_TRUE(langid::is_confident_english(d));
}

TEST(LanguageId, GermanProseIsNotConfidentEnglish) {
  const auto d = langid::detect_language(read_file(fixture_path("text/german_prose.txt")));
  EXPECT_TRUE(d.language == "de" || d.confidence < 99);
  EXPECT_FALSE(langid::is_confident_english(d));
}

TEST(LanguageId, ShortTextNeverConfident) {
  EXPECT_LT(langid::detect_language("ok").confidence, 99);
  EXPECT_LT(langid::detect_language("the cat and the dog").confidence, 99);
}

TEST(LanguageId, ConfidenceInRange) {
  for (const char* s : {"", "x", "Je suis très content de vous voir aujourd'hui, mes amis."}) {
    const auto d = langid::detect_language(s);
    EXPECT_GE(d.confidence, 0);
    EXPECT_LE(d.confidence, 100);
  }
}

}  // namespace
}  // namespace stylofair
