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

#include <sstream>

#include "fixtures.hpp"

using namespace socialcorr;
using fixture::tweet;

namespace {

const char* kTweetLine =
    R"({"kind":"tweet","id":"%s","text":"vaccines are poison","author_id":"u1",)"
    R"("created_at":"2021-05-01T12:00:00Z","like_count":4,"retweet_count":2,"quote_count":1,)"
    R"("reply_setting":"everyone","replies":[{"id":"r1","text":"false","counter_label":true},)"
    R"({"id":"r2","text":"yes"}]})";

std::string tweet_line(const std::string& id) {
    char buf[1024];
    std::snprintf(buf, sizeof buf, kTweetLine, id.c_str());
    return buf;
}

const char* kPosterLine =
    R"({"kind":"poster","user_id":"u1","account_created_at":"2019-01-01T00:00:00Z",)"
    R"("verified":false,"follower_count":10,"following_count":20,"total_tweet_count":30,)"
    R"("history":[{"text":"hello","created_at":"2021-04-30T00:00:00Z","like_count":1,"retweet_count":0}]})";

} // namespace

TEST(LoadCorpus, TwoValidLines) {
    std::istringstream in(tweet_line("a") + "\n" + tweet_line("b") + "\n" + kPosterLine + "\n");
    const auto r = parse_corpus(in);
    EXPECT_EQ(r.corpus.tweets.size(), 2u);
    EXPECT_EQ(r.corpus.posters.size(), 1u);
    EXPECT_TRUE(r.diagnostics.empty());
    const auto& t = r.corpus.tweets[0];
    EXPECT_EQ(t.reply_count(), 2);
    EXPECT_EQ(t.replies[0].parent_id, "a");
    EXPECT_EQ(t.replies[0].counter_label, std::optional<bool>(true));
    EXPECT_FALSE(t.replies[1].counter_label.has_value());
    EXPECT_TRUE(r.corpus.profile_missing().empty());
}

TEST(LoadCorpus, MalformedLineIsSkippedWithDiagnostic) {
    std::istringstream in(tweet_line("a") + "\n{not json\n");
    const auto r = parse_corpus(in);
    EXPECT_EQ(r.corpus.tweets.size(), 1u);
    ASSERT_EQ(r.diagnostics.size(), 1u);
    EXPECT_EQ(r.diagnostics[0].line, 2u);
}

TEST(LoadCorpus, SchemaViolationIsSkipped) {
    std::string bad = tweet_line("b");
    bad.replace(bad.find("\"like_count\":4"), 14, "\"like_count\":-4");
    std::istringstream in(tweet_line("a") + "\n" + bad + "\n");
    const auto r = parse_corpus(in);
    EXPECT_EQ(r.corpus.tweets.size(), 1u);
    EXPECT_EQ(r.diagnostics.size(), 1u);
}

TEST(LoadCorpus, MismatchedParentIdIsRejected) {
    std::string bad = tweet_line("b");
    bad.replace(bad.find("\"id\":\"r1\""), 9, R"("id":"r1","parent_id":"zzz")");
    std::istringstream in(bad + "\n");
    const auto r = parse_corpus(in);
    EXPECT_TRUE(r.corpus.tweets.empty());
    EXPECT_EQ(r.diagnostics.size(), 1u);
}

TEST(LoadCorpus, DuplicateIdIsFatal) {
    std::istringstream in(tweet_line("a") + "\n" + tweet_line("a") + "\n");
    EXPECT_THROW(parse_corpus(in), DataError);
}

TEST(LoadCorpus, UnreadableFileIsFatal) {
    EXPECT_THROW(load_corpus("/nonexistent/corpus.jsonl"), DataError);
}

TEST(LoadCorpus, MissingProfileIsFlagged) {
    std::istringstream in(tweet_line("a") + "\n");
    const auto r = parse_corpus(in);
    EXPECT_EQ(r.corpus.profile_missing(), std::vector<std::string>{"a"});
}

TEST(LoadCorpus, SerializeRoundTrip) {
    std::istringstream in(tweet_line("a") + "\n" + tweet_line("b") + "\n" + kPosterLine + "\n");
    const auto first = parse_corpus(in).corpus;
    std::ostringstream out;
    write_corpus(out, first);
    std::istringstream again(out.str());
    const auto second = parse_corpus(again);
    EXPECT_TRUE(second.diagnostics.empty());
    EXPECT_EQ(second.corpus.tweets, first.tweets);
    EXPECT_EQ(second.corpus.posters, first.posters);
    std::ostringstream out2;
    write_corpus(out2, second.corpus);
    EXPECT_EQ(out2.str(), out.str());
}

TEST(LoadCorpus, MetaLinesAreIgnored) {
    std::istringstream in(std::string(R"({"kind":"meta","seed":1})") + "\n" + tweet_line("a"));
    const auto r = parse_corpus(in);
    EXPECT_EQ(r.corpus.tweets.size(), 1u);
    EXPECT_TRUE(r.diagnostics.empty());
}

TEST(Filter, KeepsThreeToNinetyEight) {
    Corpus c;
    for (int n = 1; n <= 100; ++n) {
        c.tweets.push_back(tweet("t" + std::to_string(n), n, 0));
    }
    const auto f = filter_for_analysis(c);
    ASSERT_EQ(f.tweets.size(), 96u);
    std::int64_t lo = 1000, hi = 0;
    for (const auto& t : f.tweets) {
        lo = std::min(lo, t.reply_count());
        hi = std::max(hi, t.reply_count());
    }
    EXPECT_EQ(lo, 3);
    EXPECT_EQ(hi, 98);
}

TEST(Filter, BruteForceNearestRankCut) {
    // Heavy ties at the cut value are retained.
    Corpus c;
    std::vector<std::int64_t> counts;
    for (int i = 0; i < 200; ++i) {
        const int n = 3 + (i * 7) % 23;
        counts.push_back(n);
        c.tweets.push_back(tweet("t" + std::to_string(i), n, 0));
    }
    std::sort(counts.begin(), counts.end());
    const auto cut = counts[static_cast<std::size_t>(std::ceil(0.98 * 200)) - 1];
    std::size_t expected = 0;
    for (auto n : counts) expected += n <= cut ? 1 : 0;
    EXPECT_EQ(filter_for_analysis(c).tweets.size(), expected);
}

TEST(Filter, AllRestrictedGivesEmptyWithWarning) {
    Corpus c;
    for (int i = 0; i < 5; ++i) {
        c.tweets.push_back(tweet("t" + std::to_string(i), 5, 1, ReplySetting::restricted));
    }
    Warnings w;
    const auto f = filter_for_analysis(c, 3, 0.02, &w);
    EXPECT_TRUE(f.tweets.empty());
    EXPECT_EQ(w.size(), 1u);
}

TEST(Filter, Idempotent) {
    Corpus c;
    for (int n = 1; n <= 300; ++n) {
        c.tweets.push_back(tweet("t" + std::to_string(n), (n * 37) % 90 + 1, 0));
    }
    const auto once = filter_for_analysis(c);
    const auto twice = filter_for_analysis(once);
    EXPECT_EQ(once.tweets, twice.tweets);
}

TEST(Filter, AlreadyInBoundsIsUnchanged) {
    Corpus c;
    for (int i = 0; i < 10; ++i) {
        c.tweets.push_back(tweet("t" + std::to_string(i), 5, 1));
    }
    EXPECT_EQ(filter_for_analysis(c).tweets, c.tweets);
}

TEST(CounterProportion, Basic) {
    EXPECT_DOUBLE_EQ(counter_proportion(tweet("a", 4, 1)), 0.25);
    EXPECT_DOUBLE_EQ(counter_proportion(tweet("a", 3, 3)), 1.0);
}

TEST(CounterProportion, Errors) {
    EXPECT_THROW(counter_proportion(tweet("a", 0, 0)), DataError);
    auto t = tweet("a", 3, 1);
    t.replies[2].counter_label.reset();
    EXPECT_THROW(counter_proportion(t), DataError);
    EXPECT_THROW(label_countered(t), DataError);
}

TEST(CounterProportion, MatchesRecountAndCounteredRule) {
    for (int n = 1; n <= 20; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto t = tweet("a", n, k);
            int recount = 0;
            for (const auto& r : t.replies) recount += *r.counter_label ? 1 : 0;
            const double p = counter_proportion(t);
            EXPECT_EQ(p, static_cast<double>(recount) / n);
            EXPECT_GE(p, 0.0);
            EXPECT_LE(p, 1.0);
            EXPECT_EQ(label_countered(t), p > 0);
        }
    }
}

TEST(LabelCountered, Examples) {
    auto t = tweet("a", 3, 0);
    t.replies[2].counter_label = true;
    EXPECT_TRUE(label_countered(t));
    EXPECT_FALSE(label_countered(tweet("b", 2, 0)));
}

TEST(KeywordMatch, Examples) {
    EXPECT_TRUE(keyword_match("Pfizer shot tomorrow"));
    EXPECT_FALSE(keyword_match("nice weather"));
    EXPECT_TRUE(keyword_match("VACCINE!!!"));
    EXPECT_TRUE(keyword_match("antivaccine crowd"));
}
