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

#ifndef SOCIALCORR_SIGNALS_HPP
#define SOCIALCORR_SIGNALS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socialcorr/corpus.hpp"
#include "socialcorr/error.hpp"
#include "socialcorr/textfeat.hpp"

namespace socialcorr {

struct EngagementFeatures {
    std::int64_t reply_count = 0;
    std::int64_t like_count = 0;
    std::int64_t retweet_count = 0;
    std::int64_t quote_count = 0;
    double likes_per_reply = 0.0;
    double rts_per_reply = 0.0;
    double qts_per_reply = 0.0;

    bool operator==(const EngagementFeatures&) const = default;
};

inline EngagementFeatures engagement_features(const TweetRecord& tweet) {
    if (tweet.reply_count() < 1) {
        throw DataError("engagement_features: tweet " + tweet.id + " has no replies");
    }
    EngagementFeatures f;
    f.reply_count = tweet.reply_count();
    f.like_count = tweet.like_count;
    f.retweet_count = tweet.retweet_count;
    f.quote_count = tweet.quote_count;
    const auto n = static_cast<double>(f.reply_count);
    f.likes_per_reply = static_cast<double>(f.like_count) / n;
    f.rts_per_reply = static_cast<double>(f.retweet_count) / n;
    f.qts_per_reply = static_cast<double>(f.quote_count) / n;
    return f;
}

inline constexpr EpochSeconds kPreMisinfoWindow = 7 * kSecondsPerDay;

struct PosterFeatures {
    std::int64_t follower_count = 0;
    std::int64_t following_count = 0;
    int verified01 = 0;
    std::int64_t total_tweet_count = 0;
    double avg_tweets_per_day_7d = 0.0;
    double median_likes_7d = 0.0;
    double median_rts_7d = 0.0;
    std::int64_t vaccine_tweet_count_7d = 0;
    /// Missing when the window holds no vaccine posts or no predictor is given.
    std::optional<double> misinfo_proportion_7d;

    bool operator==(const PosterFeatures&) const = default;
};

/// Text -> "is misinformation".
using MisinfoPredictor = std::function<bool(std::string_view)>;

/// Lower-middle median; 0 for an empty sample.
inline double lower_median(std::vector<std::int64_t> values) {
    if (values.empty()) {
        return 0.0;
    }
    const std::size_t k = (values.size() - 1) / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k), values.end());
    return static_cast<double>(values[k]);
}

/// Poster attributes; the history window is [misinfo_time - 7 days, misinfo_time).
inline PosterFeatures poster_features(const PosterProfile& profile, EpochSeconds misinfo_time,
                                      std::span<const std::string> keywords,
                                      const MisinfoPredictor& misinfo_predictor) {
    PosterFeatures f;
    f.follower_count = profile.follower_count;
    f.following_count = profile.following_count;
    f.verified01 = profile.verified ? 1 : 0;
    f.total_tweet_count = profile.total_tweet_count;

    std::vector<std::int64_t> likes;
    std::vector<std::int64_t> rts;
    std::int64_t misinfo = 0;
    for (const auto& post : profile.history) {
        if (post.created_at < misinfo_time - kPreMisinfoWindow || post.created_at >= misinfo_time) {
            continue;
        }
        likes.push_back(post.like_count);
        rts.push_back(post.retweet_count);
        if (keyword_match(post.text, keywords)) {
            ++f.vaccine_tweet_count_7d;
            if (misinfo_predictor && misinfo_predictor(post.text)) {
                ++misinfo;
            }
        }
    }
    f.avg_tweets_per_day_7d = static_cast<double>(likes.size()) / 7.0;
    f.median_likes_7d = lower_median(std::move(likes));
    f.median_rts_7d = lower_median(std::move(rts));
    if (f.vaccine_tweet_count_7d > 0 && misinfo_predictor) {
        f.misinfo_proportion_7d =
            static_cast<double>(misinfo) / static_cast<double>(f.vaccine_tweet_count_7d);
    }
    return f;
}

/// Mean ARI over history posts with a defined ARI.
inline std::optional<double> user_ari(const PosterProfile& profile) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& post : profile.history) {
        if (auto a = try_ari(post.text)) {
            sum += *a;
            ++n;
        }
    }
    if (n == 0) {
        return std::nullopt;
    }
    return sum / static_cast<double>(n);
}

} // namespace socialcorr

#endif
