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

#ifndef SOCIALCORR_ATTRIBUTES_HPP
#define SOCIALCORR_ATTRIBUTES_HPP

#include <optional>
#include <string>
#include <vector>

#include "socialcorr/lexicon.hpp"
#include "socialcorr/signals.hpp"
#include "socialcorr/textfeat.hpp"

namespace socialcorr {

// The tweet attribute list: linguistic (length, sentiment, politeness, one
// count per lexicon category), engagement, and poster attributes.

inline const std::vector<std::string>& length_sentiment_attributes() {
    static const std::vector<std::string> names = {"word_count", "vader_positive",
                                                   "vader_negative", "vader_compound"};
    return names;
}

inline const std::vector<std::string>& politeness_attributes() {
    static const std::vector<std::string> names = {"politeness", "impoliteness"};
    return names;
}

inline const std::vector<std::string>& engagement_attributes() {
    static const std::vector<std::string> names = {
        "reply_count",     "like_count",    "retweet_count", "quote_count",
        "likes_per_reply", "rts_per_reply", "qts_per_reply"};
    return names;
}

inline const std::vector<std::string>& poster_attributes() {
    static const std::vector<std::string> names = {
        "follower_count",        "following_count", "verified",
        "total_tweet_count",     "avg_tweets_per_day_7d", "median_likes_7d",
        "median_rts_7d",         "vaccine_tweet_count_7d", "misinfo_proportion_7d"};
    return names;
}

/// Attributes that may be missing for individual tweets and are therefore
/// never used as model inputs.
inline bool is_nullable_attribute(const std::string& name) {
    return name == "misinfo_proportion_7d";
}

/// Attributes passed to models unscaled.
inline bool is_passthrough_attribute(const std::string& name) { return name == "verified"; }

inline std::string category_attribute(const std::string& category) { return "liwc_" + category; }

inline std::vector<std::string> attribute_names(const CategoryLexicon& categories) {
    std::vector<std::string> names = length_sentiment_attributes();
    names.insert(names.end(), politeness_attributes().begin(), politeness_attributes().end());
    for (const auto& c : categories.names()) {
        names.push_back(category_attribute(c));
    }
    names.insert(names.end(), engagement_attributes().begin(), engagement_attributes().end());
    names.insert(names.end(), poster_attributes().begin(), poster_attributes().end());
    return names;
}

/// Values aligned with attribute_names(). Engagement and poster blocks are
/// missing when the corresponding pointer is null.
inline std::vector<std::optional<double>> attribute_values(const LinguisticFeatures& ling,
                                                           const EngagementFeatures* engagement,
                                                           const PosterFeatures* poster) {
    std::vector<std::optional<double>> v;
    auto d = [](auto x) { return std::optional<double>(static_cast<double>(x)); };
    v.push_back(d(ling.word_count));
    v.push_back(ling.sentiment.positive);
    v.push_back(ling.sentiment.negative);
    v.push_back(ling.sentiment.compound);
    v.push_back(d(ling.politeness.politeness_score));
    v.push_back(d(ling.politeness.impoliteness_score));
    for (const auto& [name, count] : ling.category_counts) {
        v.push_back(d(count));
    }
    if (engagement != nullptr) {
        v.push_back(d(engagement->reply_count));
        v.push_back(d(engagement->like_count));
        v.push_back(d(engagement->retweet_count));
        v.push_back(d(engagement->quote_count));
        v.push_back(engagement->likes_per_reply);
        v.push_back(engagement->rts_per_reply);
        v.push_back(engagement->qts_per_reply);
    } else {
        v.insert(v.end(), engagement_attributes().size(), std::nullopt);
    }
    if (poster != nullptr) {
        v.push_back(d(poster->follower_count));
        v.push_back(d(poster->following_count));
        v.push_back(d(poster->verified01));
        v.push_back(d(poster->total_tweet_count));
        v.push_back(poster->avg_tweets_per_day_7d);
        v.push_back(poster->median_likes_7d);
        v.push_back(poster->median_rts_7d);
        v.push_back(d(poster->vaccine_tweet_count_7d));
        v.push_back(poster->misinfo_proportion_7d);
    } else {
        v.insert(v.end(), poster_attributes().size(), std::nullopt);
    }
    return v;
}

} // namespace socialcorr

#endif
