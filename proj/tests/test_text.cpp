// Copyright 2026 The socialcorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "socialcorr/text.hpp"
#include "socialcorr/timeutil.hpp"

using namespace socialcorr;
using Tokens = std::vector<std::string>;

TEST(Tokenize, SplitsTrailingPunctuation) {
    EXPECT_EQ(tokenize("I hate this!"), (Tokens{"I", "hate", "this", "!"}));
}

TEST(Tokenize, EmptyText) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, KeepsUrlWhole) {
    EXPECT_EQ(tokenize("see https://x.co/a"), (Tokens{"see", "https://x.co/a"}));
}

TEST(Tokenize, KeepsMentionWhole) {
    const auto t = tokenize("@some_user, really?");
    ASSERT_FALSE(t.empty());
    EXPECT_EQ(t.front(), "@some_user");
    EXPECT_EQ(t.back(), "?");
}

TEST(Tokenize, LeadingPunctuationSeparated) {
    EXPECT_EQ(tokenize("(wow)"), (Tokens{"(", "wow", ")"}));
}

TEST(Tokenize, PreservesCase) { EXPECT_EQ(tokenize("NOT Good"), (Tokens{"NOT", "Good"})); }

TEST(Tokenize, UrlTrailingPeriodIsPunctuation) {
    EXPECT_EQ(tokenize("go http://a.b/c."), (Tokens{"go", "http://a.b/c", "."}));
}

TEST(WordTokens, DropsPunctuation) {
    EXPECT_EQ(word_tokens("Hi, there!!"), (Tokens{"Hi", "there"}));
}

TEST(SentenceSplit, TwoSentences) { EXPECT_EQ(sentence_split("A. B!").size(), 2u); }

TEST(SentenceSplit, NoTerminator) {
    EXPECT_EQ(sentence_split("no stop"), (Tokens{"no stop"}));
}

TEST(SentenceSplit, Empty) { EXPECT_TRUE(sentence_split("").empty()); }

TEST(SentenceSplit, TerminatorRunsCollapse) {
    EXPECT_EQ(sentence_split("Really?!? Yes...").size(), 2u);
}

TEST(Utf8, CountsAlphanumericCodepoints) {
    EXPECT_EQ(count_alnum("caf\xc3\xa9"), 4u); // café
    EXPECT_EQ(count_alnum("a-1"), 2u);
}

TEST(Caps, AllCapsNeedsALetter) {
    EXPECT_TRUE(is_all_caps("GREAT"));
    EXPECT_FALSE(is_all_caps("Great"));
    EXPECT_FALSE(is_all_caps("123"));
}

TEST(Time, Iso8601RoundTrip) {
    const auto t = parse_iso8601("2021-03-04T05:06:07Z");
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(*t, 1614834367);
    EXPECT_EQ(format_iso8601(*t), "2021-03-04T05:06:07Z");
}

TEST(Time, OffsetIsNormalizedToUtc) {
    EXPECT_EQ(parse_iso8601("2021-03-04T07:06:07+02:00"), parse_iso8601("2021-03-04T05:06:07Z"));
}

TEST(Time, RejectsGarbage) {
    EXPECT_FALSE(parse_iso8601("yesterday").has_value());
    EXPECT_FALSE(parse_iso8601("2021-13-01T00:00:00Z").has_value());
}
