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

#ifndef SOCIALCORR_SYNTH_HPP
#define SOCIALCORR_SYNTH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "socialcorr/classifiers.hpp"
#include "socialcorr/corpus.hpp"
#include "socialcorr/error.hpp"
#include "socialcorr/rng.hpp"

namespace socialcorr {

/// Parameters of the synthetic corpus generator.
///
/// Each tweet is countered with probability
///   clamp(countered_intercept + ari_slope * (poster ARI - ari_mean), 0.02, 0.98).
/// A countered tweet with n replies gets 1 + Binomial(n - 1, u) counter-replies,
/// u ~ U(0.05, 0.95). Its latent signal is
///   s = rq1_signal + rq2_signal * (p(m) - 0.5) / 0.75
/// (0 for uncountered tweets). The anger-word count of the tweet text and the
/// poster's following count are each s plus independent unit-normal noise,
/// on their own scales.
struct SynthConfig {
    std::size_t n_tweets = 2000;
    std::uint64_t seed = 1;
    double rq1_signal = 2.5;
    double rq2_signal = 1.25;
    double countered_intercept = 0.7;
    double ari_slope = 0.0;
    double ari_mean = 8.0;
    double ari_sd = 3.0;
    double restricted_fraction = 0.02;
    double unlabeled_fraction = 0.0;
    std::size_t history_posts = 6;
    std::size_t pair_annotations = 2000;
    std::size_t misinfo_annotations = 1000;
};

/// Named presets: "planted" (learnable signal, no readability effect),
/// "inequality" (countering falls with poster ARI) and "flat" (no effects).
inline SynthConfig synth_preset(const std::string& name) {
    SynthConfig c;
    if (name == "planted") {
        return c;
    }
    if (name == "inequality") {
        c.countered_intercept = 0.5;
        c.ari_slope = -0.05;
        return c;
    }
    if (name == "flat") {
        c.countered_intercept = 0.55;
        c.ari_slope = 0.0;
        c.rq1_signal = 0.0;
        c.rq2_signal = 0.0;
        return c;
    }
    throw UsageError("unknown synthetic preset \"" + name + "\" (planted, inequality, flat)");
}

struct SynthOutput {
    Corpus corpus;
    std::vector<PairExample> pairs;
    std::vector<TextExample> misinfo;
};

namespace synth_detail {

inline const std::vector<std::string>& filler_words() {
    static const std::vector<std::string> w = {
        "shot",    "rollout", "government", "people",  "today",  "article", "read",
        "report",  "data",    "mandate",    "pharma",  "trial",  "study",   "news",
        "week",    "booster", "company",    "country", "policy", "numbers", "official",
        "release", "update",  "video",      "watch",   "thread", "share",   "media"};
    return w;
}

inline const std::vector<std::string>& anger_words() {
    static const std::vector<std::string> w = {"angry",   "furious", "outraged", "hate",
                                               "disgusting", "rage", "stupid", "mad"};
    return w;
}

inline const std::vector<std::string>& counter_markers() {
    static const std::vector<std::string> w = {"false",  "misinformation", "lie",      "debunked",
                                               "wrong",  "misleading",     "fake",     "myth",
                                               "evidence", "source"};
    return w;
}

inline const std::vector<std::string>& support_markers() {
    static const std::vector<std::string> w = {"agree", "exactly", "true",  "thanks",
                                               "shared", "right",  "yes",   "spot"};
    return w;
}

inline const std::vector<std::string>& misinfo_markers() {
    static const std::vector<std::string> w = {"microchip",    "poison",       "plandemic", "toxic",
                                               "depopulation", "experimental", "coverup"};
    return w;
}

inline const std::vector<std::string>& benign_markers() {
    static const std::vector<std::string> w = {"appointment", "booked", "pharmacy",
                                               "schedule",    "second", "grateful"};
    return w;
}

inline const std::string& pick(Rng& rng, const std::vector<std::string>& words) {
    return words[rng.below(words.size())];
}

inline std::string join(const std::vector<std::string>& words) {
    std::string s;
    for (const auto& w : words) {
        if (!s.empty()) {
            s += ' ';
        }
        s += w;
    }
    return s;
}

inline std::string tweet_text(Rng& rng, std::int64_t anger) {
    std::vector<std::string> words = {"the", "vaccine"};
    const auto n_fill = 4 + rng.below(6);
    for (std::uint64_t k = 0; k < n_fill; ++k) {
        words.push_back(pick(rng, filler_words()));
    }
    for (std::int64_t k = 0; k < anger; ++k) {
        words.push_back(pick(rng, anger_words()));
    }
    words.push_back(pick(rng, misinfo_markers()));
    rng.shuffle(words);
    return join(words) + ".";
}

inline std::string reply_text(Rng& rng, bool counter) {
    std::vector<std::string> words;
    const auto& markers = counter ? counter_markers() : support_markers();
    const auto n_mark = 1 + rng.below(2);
    for (std::uint64_t k = 0; k < n_mark; ++k) {
        words.push_back(pick(rng, markers));
    }
    const auto n_fill = 2 + rng.below(5);
    for (std::uint64_t k = 0; k < n_fill; ++k) {
        words.push_back(pick(rng, filler_words()));
    }
    rng.shuffle(words);
    return join(words);
}

/// Two twelve-word sentences of pseudo-words whose mean length gives the
/// target ARI: 4.71 * L + 0.5 * 12 - 21.43 = ari.
inline std::string history_text(Rng& rng, double ari, bool vaccine, bool misinfo) {
    const double letters = std::max(1.0, (ari + 15.43) / 4.71);
    const double base = std::floor(letters);
    const double frac = letters - base;
    std::string text;
    for (int sentence = 0; sentence < 2; ++sentence) {
        for (int w = 0; w < 12; ++w) {
            if (w > 0) {
                text += ' ';
            }
            if (vaccine && sentence == 0 && w == 0) {
                text += "vaccine";
                continue;
            }
            if (vaccine && sentence == 0 && w == 1) {
                text += pick(rng, misinfo ? misinfo_markers() : benign_markers());
                continue;
            }
            const auto len = static_cast<int>(base) + (rng.bernoulli(frac) ? 1 : 0);
            for (int c = 0; c < len; ++c) {
                text += static_cast<char>('a' + rng.below(26));
            }
        }
        text += ". ";
    }
    text.pop_back();
    return text;
}

inline std::int64_t lognormal_count(Rng& rng, double median, double sigma, std::int64_t lo,
                                    std::int64_t hi) {
    const double v = std::exp(std::log(median) + sigma * rng.normal());
    return std::clamp(static_cast<std::int64_t>(std::llround(v)), lo, hi);
}

inline std::string make_id(char prefix, std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%c%06zu", prefix, i);
    return buf;
}

} // namespace synth_detail

inline constexpr EpochSeconds kSynthEpoch = 1609459200; // 2021-01-01T00:00:00Z

/// Deterministic synthetic corpus plus seed annotations for the pair and
/// misinformation classifiers.
inline SynthOutput generate_synthetic(const SynthConfig& cfg) {
    using namespace synth_detail;
    if (cfg.unlabeled_fraction < 0.0 || cfg.unlabeled_fraction > 1.0 ||
        cfg.restricted_fraction < 0.0 || cfg.restricted_fraction > 1.0) {
        throw UsageError("synthetic fractions must lie in [0, 1]");
    }
    Rng rng(cfg.seed);
    SynthOutput out;
    for (std::size_t i = 0; i < cfg.n_tweets; ++i) {
        TweetRecord t;
        t.id = make_id('t', i + 1);
        t.author_id = make_id('u', i + 1);
        t.created_at = kSynthEpoch + 20 * kSecondsPerDay +
                       static_cast<EpochSeconds>(i) * 600 +
                       static_cast<EpochSeconds>(rng.below(600));
        t.like_count = lognormal_count(rng, 20.0, 1.0, 0, 100000);
        t.retweet_count = lognormal_count(rng, 5.0, 1.0, 0, 100000);
        t.quote_count = lognormal_count(rng, 2.0, 1.0, 0, 100000);
        if (rng.bernoulli(cfg.restricted_fraction)) {
            t.reply_setting = ReplySetting::restricted;
        }

        const double user_ari = std::clamp(rng.normal(cfg.ari_mean, cfg.ari_sd), -3.0, 20.0);
        const double p_countered = std::clamp(
            cfg.countered_intercept + cfg.ari_slope * (user_ari - cfg.ari_mean), 0.02, 0.98);
        const auto n = lognormal_count(rng, 10.0, 0.7, 1, 120);
        const bool countered = rng.bernoulli(p_countered);
        std::int64_t k = 0;
        if (countered) {
            const double u = rng.uniform(0.05, 0.95);
            k = 1 + rng.binomial(static_cast<int>(n - 1), u);
        }
        const double p = static_cast<double>(k) / static_cast<double>(n);
        const double s =
            countered ? cfg.rq1_signal + cfg.rq2_signal * (p - 0.5) / 0.75 : 0.0;

        const auto anger = std::max<std::int64_t>(
            0, static_cast<std::int64_t>(std::llround(1.5 + s + rng.normal())));
        t.text = tweet_text(rng, anger);

        std::vector<bool> is_counter(static_cast<std::size_t>(n), false);
        std::fill_n(is_counter.begin(), k, true);
        rng.shuffle(is_counter);
        for (std::int64_t r = 0; r < n; ++r) {
            ReplyRecord reply;
            char rid[16];
            std::snprintf(rid, sizeof rid, "-r%03lld", static_cast<long long>(r + 1));
            reply.id = t.id + rid;
            reply.parent_id = t.id;
            reply.text = reply_text(rng, is_counter[static_cast<std::size_t>(r)]);
            if (!rng.bernoulli(cfg.unlabeled_fraction)) {
                reply.counter_label = is_counter[static_cast<std::size_t>(r)];
            }
            t.replies.push_back(std::move(reply));
        }

        PosterProfile poster;
        poster.user_id = t.author_id;
        poster.account_created_at = kSynthEpoch - static_cast<EpochSeconds>(rng.below(2000)) *
                                                      kSecondsPerDay;
        poster.verified = rng.bernoulli(0.1);
        poster.follower_count = lognormal_count(rng, 800.0, 1.2, 0, 10000000);
        poster.following_count = std::max<std::int64_t>(
            0, std::llround(500.0 + 150.0 * (s + rng.normal())));
        poster.total_tweet_count = lognormal_count(rng, 3000.0, 1.0, 1, 10000000);
        for (std::size_t h = 0; h < cfg.history_posts; ++h) {
            HistoryPost post;
            post.created_at = t.created_at - 1 -
                              static_cast<EpochSeconds>(rng.below(10 * kSecondsPerDay));
            const bool vaccine = rng.bernoulli(0.3);
            const bool misinfo = vaccine && rng.bernoulli(0.5);
            post.text = history_text(rng, user_ari, vaccine, misinfo);
            post.like_count = lognormal_count(rng, 10.0, 1.0, 0, 100000);
            post.retweet_count = lognormal_count(rng, 3.0, 1.0, 0, 100000);
            poster.history.push_back(std::move(post));
        }
        out.corpus.posters.emplace(poster.user_id, std::move(poster));
        out.corpus.tweets.push_back(std::move(t));
    }

    for (std::size_t i = 0; i < cfg.pair_annotations; ++i) {
        PairExample ex;
        ex.tweet_text = tweet_text(rng, static_cast<std::int64_t>(rng.below(3)));
        ex.counter = rng.bernoulli(0.4);
        ex.reply_text = reply_text(rng, ex.counter);
        out.pairs.push_back(std::move(ex));
    }
    for (std::size_t i = 0; i < cfg.misinfo_annotations; ++i) {
        TextExample ex;
        ex.positive = rng.bernoulli(0.4);
        ex.text = history_text(rng, rng.normal(cfg.ari_mean, cfg.ari_sd), true, ex.positive);
        out.misinfo.push_back(std::move(ex));
    }
    return out;
}

} // namespace socialcorr

#endif
