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

#ifndef SOCIALCORR_CLASSIFIERS_HPP
#define SOCIALCORR_CLASSIFIERS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socialcorr/corpus.hpp"
#include "socialcorr/cv.hpp"
#include "socialcorr/error.hpp"
#include "socialcorr/features.hpp"
#include "socialcorr/hashing.hpp"
#include "socialcorr/models.hpp"
#include "socialcorr/signals.hpp"

namespace socialcorr {

// Text-only classifiers: the reply/tweet pair classifier that labels counter
// replies, and the single-text classifier used as the misinformation predictor.

/// Hash width of the text-only classifiers. Wider than the tweet-model text
/// block: their inputs are nothing but text.
inline constexpr std::size_t kTextClassifierDim = 4096;

struct PairExample {
    std::string tweet_text;
    std::string reply_text;
    bool counter = false;
};

struct TextExample {
    std::string text;
    bool positive = false;
};

/// Hashed-text logistic model over one (text) or two (reply, tweet) blocks.
struct TextClassifier {
    FeatureManifest manifest;
    LinearModel model;

    bool operator==(const TextClassifier&) const = default;
};

inline FeatureManifest pair_manifest(std::size_t text_dim, std::vector<int> ngram_orders) {
    return make_manifest("pair", "counter", {}, text_dim, std::move(ngram_orders), 2);
}

inline FeatureManifest text_manifest(std::string task, std::string positive_class,
                                     std::size_t text_dim, std::vector<int> ngram_orders) {
    return make_manifest(std::move(task), std::move(positive_class), {}, text_dim,
                         std::move(ngram_orders), 1);
}

/// hashed(reply) followed by hashed(tweet).
inline std::vector<double> pair_features(std::string_view tweet_text, std::string_view reply_text,
                                         const FeatureManifest& m) {
    std::vector<double> v(2 * m.text_dim, 0.0);
    std::span<double> all(v);
    hash_text_into(reply_text, all.first(m.text_dim), m.ngram_orders);
    hash_text_into(tweet_text, all.last(m.text_dim), m.ngram_orders);
    return v;
}

inline std::vector<double> text_features(std::string_view text, const FeatureManifest& m) {
    std::vector<double> v(m.text_dim, 0.0);
    hash_text_into(text, v, m.ngram_orders);
    return v;
}

/// Unstandardized dataset of pair vectors; ids are the example positions.
inline LabeledDataset pair_dataset(std::span<const PairExample> pairs, const FeatureManifest& m) {
    LabeledDataset d;
    d.manifest = m;
    d.raw = Matrix(pairs.size(), m.length());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto v = pair_features(pairs[i].tweet_text, pairs[i].reply_text, m);
        std::copy(v.begin(), v.end(), d.raw.row(i).begin());
        d.labels.push_back(pairs[i].counter ? 1 : 0);
        char id[24];
        std::snprintf(id, sizeof id, "%012zu", i);
        d.ids.emplace_back(id);
    }
    return d;
}

inline LabeledDataset text_dataset(std::span<const TextExample> examples,
                                   const FeatureManifest& m) {
    LabeledDataset d;
    d.manifest = m;
    d.raw = Matrix(examples.size(), m.length());
    for (std::size_t i = 0; i < examples.size(); ++i) {
        const auto v = text_features(examples[i].text, m);
        std::copy(v.begin(), v.end(), d.raw.row(i).begin());
        d.labels.push_back(examples[i].positive ? 1 : 0);
        char id[24];
        std::snprintf(id, sizeof id, "%012zu", i);
        d.ids.emplace_back(id);
    }
    return d;
}

inline TextClassifier train_on_dataset(const LabeledDataset& d, const LogregConfig& cfg) {
    TextClassifier c;
    c.manifest = d.manifest;
    c.model = train_logreg(d.raw, d.labels, cfg);
    return c;
}

/// Logistic regression on hashed(reply) ++ hashed(tweet). Throws when only
/// one class is present.
inline TextClassifier train_pair_classifier(std::span<const PairExample> pairs,
                                            const LogregConfig& cfg,
                                            std::size_t text_dim = kTextClassifierDim,
                                            std::vector<int> ngram_orders = {1, 2}) {
    return train_on_dataset(pair_dataset(pairs, pair_manifest(text_dim, std::move(ngram_orders))),
                            cfg);
}

inline TextClassifier train_text_classifier(std::span<const TextExample> examples,
                                            const LogregConfig& cfg, std::string task,
                                            std::size_t text_dim = kTextClassifierDim,
                                            std::vector<int> ngram_orders = {1, 2}) {
    return train_on_dataset(
        text_dataset(examples,
                     text_manifest(std::move(task), "positive", text_dim, std::move(ngram_orders))),
        cfg);
}

inline bool predict_counter(const TextClassifier& c, std::string_view tweet_text,
                            std::string_view reply_text) {
    if (c.manifest.text_blocks != 2) {
        throw DataError("classifier is not a reply/tweet pair classifier");
    }
    return classify(c.model, pair_features(tweet_text, reply_text, c.manifest));
}

inline MisinfoPredictor as_predictor(const TextClassifier& c) {
    if (c.manifest.text_blocks != 1) {
        throw DataError("classifier is not a single-text classifier");
    }
    return
        [c](std::string_view text) { return classify(c.model, text_features(text, c.manifest)); };
}

/// Copy of the corpus with every missing reply label filled by the pair
/// classifier. Existing labels are kept. `filled` receives the number of
/// labels assigned.
inline Corpus label_replies(const Corpus& corpus, const TextClassifier& pair_model,
                            std::size_t* filled = nullptr) {
    Corpus out = corpus;
    std::size_t n = 0;
    for (auto& t : out.tweets) {
        for (auto& r : t.replies) {
            if (!r.counter_label) {
                r.counter_label = predict_counter(pair_model, t.text, r.text);
                ++n;
            }
        }
    }
    if (filled != nullptr) {
        *filled = n;
    }
    return out;
}

inline std::size_t unlabeled_reply_count(const Corpus& corpus) {
    std::size_t n = 0;
    for (const auto& t : corpus.tweets) {
        for (const auto& r : t.replies) {
            n += r.counter_label ? 0 : 1;
        }
    }
    return n;
}

} // namespace socialcorr

#endif
