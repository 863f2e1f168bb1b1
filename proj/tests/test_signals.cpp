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

#include <algorithm>
#include <random>

#include "fixtures.hpp"

using namespace socialcorr;

namespace {

constexpr EpochSeconds kT = 1700000000;

HistoryPost post(EpochSeconds at, std::int64_t likes = 0, std::int64_t rts = 0,
                 std::string text = "just a post") {
    return HistoryPost{std::move(text), at, likes, rts};
}

const std::vector<std::string>& keywords() { return default_vaccine_keywords(); }

} // namespace

TEST(Engagement, Ratios) {
    auto t = fixture::tweet("a", 5, 0);
    t.like_count = 10;
    const auto f = engagement_features(t);
    EXPECT_EQ(f.reply_count, 5);
    EXPECT_DOUBLE_EQ(f.likes_per_reply, 2.0);
}

TEST(Engagement, ZeroCountsGiveZeroRatios) {
    const auto f = engagement_features(fixture::tweet("a", 3, 0));
    EXPECT_EQ(f.likes_per_reply, 0.0);
    EXPECT_EQ(f.rts_per_reply, 0.0);
    EXPECT_EQ(f.qts_per_reply, 0.0);
}

TEST(Engagement, NoRepliesIsAnError) {
    EXPECT_THROW(engagement_features(fixture::tweet("a", 0, 0)), DataError);
}

TEST(Engagement, RatioTimesRepliesIsExact) {
    std::mt19937 gen(3);
    for (int i = 0; i < 500; ++i) {
        auto t = fixture::tweet("a", 1 + static_cast<int>(gen() % 60), 0);
        t.like_count = gen() % 100000;
        t.retweet_count = gen() % 1000;
        t.quote_count = gen() % 50;
        const auto f = engagement_features(t);
        const double n = static_cast<double>(f.reply_count);
        EXPECT_EQ(std::llround(f.likes_per_reply * n), t.like_count);
        EXPECT_EQ(std::llround(f.rts_per_reply * n), t.retweet_count);
        EXPECT_EQ(std::llround(f.qts_per_reply * n), t.quote_count);
    }
}

TEST(PosterFeatures, FourteenPostsIsTwoPerDay) {
    PosterProfile p;
    for (int i = 0; i < 14; ++i) {
        p.history.push_back(post(kT - 3600 * (i + 1)));
    }
    EXPECT_DOUBLE_EQ(poster_features(p, kT, keywords(), {}).avg_tweets_per_day_7d, 2.0);
}

TEST(PosterFeatures, LowerMiddleMedian) {
    PosterProfile p;
    p.history = {post(kT - 10, 0), post(kT - 20, 5), post(kT - 30, 100)};
    EXPECT_EQ(poster_features(p, kT, keywords(), {}).median_likes_7d, 5.0);
    p.history.push_back(post(kT - 40, 7));
    EXPECT_EQ(poster_features(p, kT, keywords(), {}).median_likes_7d, 5.0);
}

TEST(PosterFeatures, NoVaccinePostsMeansMissingProportion) {
    PosterProfile p;
    p.history = {post(kT - 10)};
    const auto f = poster_features(p, kT, keywords(), [](std::string_view) { return true; });
    EXPECT_EQ(f.vaccine_tweet_count_7d, 0);
    EXPECT_FALSE(f.misinfo_proportion_7d.has_value());
}

TEST(PosterFeatures, MisinfoProportion) {
    PosterProfile p;
    p.history = {post(kT - 10, 0, 0, "the vaccine is poison"), post(kT - 20, 0, 0, "got my pfizer"),
                 post(kT - 30, 0, 0, "nice day"), post(kT - 40, 0, 0, "moderna poison too")};
    const auto f = poster_features(p, kT, keywords(), [](std::string_view s) {
        return s.find("poison") != std::string_view::npos;
    });
    EXPECT_EQ(f.vaccine_tweet_count_7d, 3);
    ASSERT_TRUE(f.misinfo_proportion_7d.has_value());
    EXPECT_DOUBLE_EQ(*f.misinfo_proportion_7d, 2.0 / 3.0);
}

TEST(PosterFeatures, WindowIsHalfOpen) {
    PosterProfile p;
    p.history = {post(kT - 7 * kSecondsPerDay, 1), post(kT, 2),
                 post(kT - 7 * kSecondsPerDay - 1, 3)};
    const auto f = poster_features(p, kT, keywords(), {});
    EXPECT_DOUBLE_EQ(f.avg_tweets_per_day_7d, 1.0 / 7.0);
    EXPECT_EQ(f.median_likes_7d, 1.0);
}

TEST(PosterFeatures, IndependentOfHistoryOrder) {
    std::mt19937 gen(5);
    PosterProfile p;
    p.follower_count = 12;
    p.verified = true;
    for (int i = 0; i < 40; ++i) {
        p.history.push_back(post(kT - static_cast<EpochSeconds>(gen() % (9 * kSecondsPerDay)),
                                 gen() % 50, gen() % 9, i % 3 == 0 ? "vaccine talk" : "other"));
    }
    auto pred = [](std::string_view s) { return s.size() % 2 == 0; };
    const auto base = poster_features(p, kT, keywords(), pred);
    EXPECT_EQ(base.verified01, 1);
    for (int i = 0; i < 10; ++i) {
        std::shuffle(p.history.begin(), p.history.end(), gen);
        EXPECT_EQ(poster_features(p, kT, keywords(), pred), base);
    }
}

TEST(UserAri, MeanOfDefinedPosts) {
    PosterProfile p;
    p.history = {post(0, 0, 0, "The cat sat."), post(0, 0, 0, "Vaccines save lives every day.")};
    EXPECT_NEAR(*user_ari(p), (ari("The cat sat.") + ari("Vaccines save lives every day.")) / 2,
                1e-12);
}

TEST(UserAri, EmptyHistoryIsMissing) { EXPECT_FALSE(user_ari(PosterProfile{}).has_value()); }

TEST(UserAri, UndefinedPostsAreSkipped) {
    PosterProfile p;
    p.history = {post(0, 0, 0, "!!!"), post(0, 0, 0, "The cat sat.")};
    EXPECT_NEAR(*user_ari(p), -5.80, 1e-9);
}
