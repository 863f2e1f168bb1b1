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

#ifndef SOCIALCORR_CORPUS_HPP
#define SOCIALCORR_CORPUS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "socialcorr/error.hpp"
#include "socialcorr/text.hpp"
#include "socialcorr/timeutil.hpp"

namespace socialcorr {

enum class ReplySetting { everyone, restricted };

/// A direct reply to a misinformation post.
struct ReplyRecord {
    std::string id;
    std::string text;
    std::string parent_id;
    /// true = countering; absent until labeled.
    std::optional<bool> counter_label;

    bool operator==(const ReplyRecord&) const = default;
};

/// A misinformation post together with its direct replies.
struct TweetRecord {
    std::string id;
    std::string text;
    std::string author_id;
    EpochSeconds created_at = 0;
    std::int64_t like_count = 0;
    std::int64_t retweet_count = 0;
    std::int64_t quote_count = 0;
    ReplySetting reply_setting = ReplySetting::everyone;
    std::vector<ReplyRecord> replies;

    std::int64_t reply_count() const { return static_cast<std::int64_t>(replies.size()); }

    bool fully_labeled() const {
        return std::all_of(replies.begin(), replies.end(),
                           [](const ReplyRecord& r) { return r.counter_label.has_value(); });
    }

    bool operator==(const TweetRecord&) const = default;
};

struct HistoryPost {
    std::string text;
    EpochSeconds created_at = 0;
    std::int64_t like_count = 0;
    std::int64_t retweet_count = 0;

    bool operator==(const HistoryPost&) const = default;
};

struct PosterProfile {
    std::string user_id;
    EpochSeconds account_created_at = 0;
    bool verified = false;
    std::int64_t follower_count = 0;
    std::int64_t following_count = 0;
    std::int64_t total_tweet_count = 0;
    std::vector<HistoryPost> history;

    bool operator==(const PosterProfile&) const = default;
};

/// Parameters of an applied analysis filter, kept so that re-filtering is a no-op.
struct AnalysisFilter {
    std::int64_t min_replies = 3;
    double top_fraction = 0.02;
    std::int64_t max_replies = 0;

    bool operator==(const AnalysisFilter&) const = default;
};

struct Corpus {
    std::vector<TweetRecord> tweets;
    std::map<std::string, PosterProfile> posters;
    std::optional<AnalysisFilter> applied_filter;

    const PosterProfile* poster_of(const TweetRecord& t) const {
        auto it = posters.find(t.author_id);
        return it == posters.end() ? nullptr : &it->second;
    }

    /// Ids of tweets whose author has no profile in the corpus.
    std::vector<std::string> profile_missing() const {
        std::vector<std::string> ids;
        for (const auto& t : tweets) {
            if (!posters.contains(t.author_id)) {
                ids.push_back(t.id);
            }
        }
        return ids;
    }
};

struct LoadDiagnostic {
    std::size_t line = 0;
    std::string message;
};

struct LoadedCorpus {
    Corpus corpus;
    std::vector<LoadDiagnostic> diagnostics;
};

inline const std::vector<std::string>& default_vaccine_keywords() {
    static const std::vector<std::string> keywords = {"vaccine",     "pfizer",  "moderna",
                                                      "astrazeneca", "sputnik", "sinopharm"};
    return keywords;
}

/// True iff the case-folded text contains any keyword as a substring.
inline bool keyword_match(std::string_view text, std::span<const std::string> keywords) {
    const std::string folded = ascii_lower(text);
    return std::any_of(keywords.begin(), keywords.end(), [&](const std::string& k) {
        return folded.find(k) != std::string::npos;
    });
}

inline bool keyword_match(std::string_view text) {
    return keyword_match(text, default_vaccine_keywords());
}

/// p(m): fraction of a tweet's replies that are labeled countering.
inline double counter_proportion(const TweetRecord& tweet) {
    if (tweet.replies.empty()) {
        throw DataError("counter_proportion: tweet " + tweet.id + " has no replies");
    }
    std::int64_t counter = 0;
    for (const auto& r : tweet.replies) {
        if (!r.counter_label) {
            throw DataError("counter_proportion: reply " + r.id + " of tweet " + tweet.id +
                            " is unlabeled");
        }
        counter += *r.counter_label ? 1 : 0;
    }
    return static_cast<double>(counter) / static_cast<double>(tweet.replies.size());
}

/// RQ1 target: countered iff at least one reply counters the post.
inline bool label_countered(const TweetRecord& tweet) {
    bool any = false;
    for (const auto& r : tweet.replies) {
        if (!r.counter_label) {
            throw DataError("label_countered: reply " + r.id + " of tweet " + tweet.id +
                            " is unlabeled");
        }
        any = any || *r.counter_label;
    }
    return any;
}

/// Nearest-rank percentile (q in (0, 1]) of a non-empty sample.
inline std::int64_t nearest_rank(std::vector<std::int64_t> values, double q) {
    std::sort(values.begin(), values.end());
    auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size()) - 1e-9));
    rank = std::clamp<std::size_t>(rank, 1, values.size());
    return values[rank - 1];
}

/// Removes restricted-reply tweets, tweets with fewer than `min_replies`
/// replies, and the top `top_fraction` by reply count. The upper cut is the
/// nearest-rank (1 - top_fraction) percentile of the reply counts of the
/// unrestricted tweets; ties at the cut are kept.
inline Corpus filter_for_analysis(const Corpus& corpus, std::int64_t min_replies = 3,
                                  double top_fraction = 0.02, Warnings* warnings = nullptr) {
    if (top_fraction < 0.0 || top_fraction >= 1.0) {
        throw UsageError("filter_for_analysis: top_fraction must be in [0, 1)");
    }
    if (corpus.applied_filter && corpus.applied_filter->min_replies == min_replies &&
        corpus.applied_filter->top_fraction == top_fraction) {
        return corpus;
    }

    Corpus out;
    out.posters = corpus.posters;

    std::vector<std::int64_t> counts;
    for (const auto& t : corpus.tweets) {
        if (t.reply_setting == ReplySetting::everyone) {
            counts.push_back(t.reply_count());
        }
    }
    std::int64_t max_replies = 0;
    if (!counts.empty()) {
        max_replies = nearest_rank(std::move(counts), 1.0 - top_fraction);
        for (const auto& t : corpus.tweets) {
            if (t.reply_setting == ReplySetting::everyone && t.reply_count() >= min_replies &&
                t.reply_count() <= max_replies) {
                out.tweets.push_back(t);
            }
        }
    }
    if (out.tweets.empty()) {
        warn(warnings, "filter_for_analysis: no tweets remain after filtering");
    }
    out.applied_filter = AnalysisFilter{min_replies, top_fraction, max_replies};
    return out;
}

// ---------------------------------------------------------------------------
// Line-delimited record file

namespace detail {

using nlohmann::json;

struct DuplicateId : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw DataError(std::string("missing field '") + key + "'");
    }
    return *it;
}

inline std::string require_string(const json& obj, const char* key) {
    const json& v = require(obj, key);
    if (!v.is_string()) {
        throw DataError(std::string("field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

inline std::int64_t require_count(const json& obj, const char* key) {
    const json& v = require(obj, key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw DataError(std::string("field '") + key + "' must be a non-negative integer");
    }
    return v.get<std::int64_t>();
}

inline EpochSeconds require_time(const json& obj, const char* key) {
    const std::string s = require_string(obj, key);
    auto t = parse_iso8601(s);
    if (!t) {
        throw DataError(std::string("field '") + key + "' is not an ISO-8601 timestamp: " + s);
    }
    return *t;
}

inline TweetRecord parse_tweet(const json& obj) {
    TweetRecord t;
    t.id = require_string(obj, "id");
    if (t.id.empty()) {
        throw DataError("tweet id must be non-empty");
    }
    t.text = require_string(obj, "text");
    t.author_id = require_string(obj, "author_id");
    t.created_at = require_time(obj, "created_at");
    t.like_count = require_count(obj, "like_count");
    t.retweet_count = require_count(obj, "retweet_count");
    t.quote_count = require_count(obj, "quote_count");
    const std::string setting = require_string(obj, "reply_setting");
    if (setting == "everyone") {
        t.reply_setting = ReplySetting::everyone;
    } else if (setting == "restricted") {
        t.reply_setting = ReplySetting::restricted;
    } else {
        throw DataError("reply_setting must be 'everyone' or 'restricted', got '" + setting + "'");
    }
    const json& replies = require(obj, "replies");
    if (!replies.is_array()) {
        throw DataError("field 'replies' must be an array");
    }
    for (const auto& r : replies) {
        if (!r.is_object()) {
            throw DataError("reply entries must be objects");
        }
        ReplyRecord reply;
        reply.id = require_string(r, "id");
        reply.text = require_string(r, "text");
        reply.parent_id = t.id;
        if (auto it = r.find("parent_id"); it != r.end()) {
            if (!it->is_string() || it->get<std::string>() != t.id) {
                throw DataError("reply " + reply.id + " parent_id does not match tweet " + t.id);
            }
        }
        if (auto it = r.find("counter_label"); it != r.end() && !it->is_null()) {
            if (!it->is_boolean()) {
                throw DataError("reply " + reply.id + " counter_label must be boolean");
            }
            reply.counter_label = it->get<bool>();
        }
        t.replies.push_back(std::move(reply));
    }
    if (auto it = obj.find("reply_count"); it != obj.end()) {
        if (!it->is_number_integer() || it->get<std::int64_t>() != t.reply_count()) {
            throw DataError("reply_count does not match the number of replies for tweet " + t.id);
        }
    }
    return t;
}

inline PosterProfile parse_poster(const json& obj) {
    PosterProfile p;
    p.user_id = require_string(obj, "user_id");
    if (p.user_id.empty()) {
        throw DataError("user_id must be non-empty");
    }
    p.account_created_at = require_time(obj, "account_created_at");
    const json& verified = require(obj, "verified");
    if (!verified.is_boolean()) {
        throw DataError("field 'verified' must be boolean");
    }
    p.verified = verified.get<bool>();
    p.follower_count = require_count(obj, "follower_count");
    p.following_count = require_count(obj, "following_count");
    p.total_tweet_count = require_count(obj, "total_tweet_count");
    const json& history = require(obj, "history");
    if (!history.is_array()) {
        throw DataError("field 'history' must be an array");
    }
    for (const auto& h : history) {
        if (!h.is_object()) {
            throw DataError("history entries must be objects");
        }
        HistoryPost post;
        post.text = require_string(h, "text");
        post.created_at = require_time(h, "created_at");
        post.like_count = require_count(h, "like_count");
        post.retweet_count = require_count(h, "retweet_count");
        p.history.push_back(std::move(post));
    }
    return p;
}

} // namespace detail

/// Parses a line-delimited corpus. Malformed lines are skipped and reported;
/// duplicate tweet or poster ids are fatal. Lines of kind "meta" are ignored.
inline LoadedCorpus parse_corpus(std::istream& in) {
    LoadedCorpus result;
    std::set<std::string> tweet_ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        try {
            const auto obj = nlohmann::json::parse(line);
            if (!obj.is_object()) {
                throw DataError("record is not an object");
            }
            const std::string kind = detail::require_string(obj, "kind");
            if (kind == "tweet") {
                TweetRecord t = detail::parse_tweet(obj);
                if (!tweet_ids.insert(t.id).second) {
                    throw detail::DuplicateId("duplicate tweet id '" + t.id + "' at line " +
                                              std::to_string(lineno));
                }
                result.corpus.tweets.push_back(std::move(t));
            } else if (kind == "poster") {
                PosterProfile p = detail::parse_poster(obj);
                const std::string uid = p.user_id;
                if (!result.corpus.posters.emplace(uid, std::move(p)).second) {
                    throw detail::DuplicateId("duplicate poster id '" + uid + "' at line " +
                                              std::to_string(lineno));
                }
            } else if (kind == "meta") {
                continue;
            } else {
                throw DataError("unknown record kind '" + kind + "'");
            }
        } catch (const detail::DuplicateId& e) {
            throw DataError(e.what());
        } catch (const DataError& e) {
            result.diagnostics.push_back({lineno, e.what()});
        } catch (const nlohmann::json::exception& e) {
            result.diagnostics.push_back({lineno, e.what()});
        }
    }
    return result;
}

inline LoadedCorpus load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot read corpus file: " + path);
    }
    return parse_corpus(in);
}

inline nlohmann::ordered_json to_json(const TweetRecord& t) {
    nlohmann::ordered_json obj;
    obj["kind"] = "tweet";
    obj["id"] = t.id;
    obj["text"] = t.text;
    obj["author_id"] = t.author_id;
    obj["created_at"] = format_iso8601(t.created_at);
    obj["like_count"] = t.like_count;
    obj["retweet_count"] = t.retweet_count;
    obj["quote_count"] = t.quote_count;
    obj["reply_setting"] = t.reply_setting == ReplySetting::everyone ? "everyone" : "restricted";
    auto replies = nlohmann::ordered_json::array();
    for (const auto& r : t.replies) {
        nlohmann::ordered_json ro;
        ro["id"] = r.id;
        ro["text"] = r.text;
        if (r.counter_label) {
            ro["counter_label"] = *r.counter_label;
        }
        replies.push_back(std::move(ro));
    }
    obj["replies"] = std::move(replies);
    return obj;
}

inline nlohmann::ordered_json to_json(const PosterProfile& p) {
    nlohmann::ordered_json obj;
    obj["kind"] = "poster";
    obj["user_id"] = p.user_id;
    obj["account_created_at"] = format_iso8601(p.account_created_at);
    obj["verified"] = p.verified;
    obj["follower_count"] = p.follower_count;
    obj["following_count"] = p.following_count;
    obj["total_tweet_count"] = p.total_tweet_count;
    auto history = nlohmann::ordered_json::array();
    for (const auto& h : p.history) {
        nlohmann::ordered_json ho;
        ho["text"] = h.text;
        ho["created_at"] = format_iso8601(h.created_at);
        ho["like_count"] = h.like_count;
        ho["retweet_count"] = h.retweet_count;
        history.push_back(std::move(ho));
    }
    obj["history"] = std::move(history);
    return obj;
}

/// Writes tweets in corpus order, then posters in user-id order. An optional
/// meta object is written first as a kind=meta record.
inline void write_corpus(std::ostream& out, const Corpus& corpus,
                         const nlohmann::ordered_json* meta = nullptr) {
    if (meta != nullptr) {
        nlohmann::ordered_json m;
        m["kind"] = "meta";
        for (const auto& [k, v] : meta->items()) {
            m[k] = v;
        }
        out << m.dump() << '\n';
    }
    for (const auto& t : corpus.tweets) {
        out << to_json(t).dump() << '\n';
    }
    for (const auto& [id, p] : corpus.posters) {
        out << to_json(p).dump() << '\n';
    }
}

} // namespace socialcorr

#endif
