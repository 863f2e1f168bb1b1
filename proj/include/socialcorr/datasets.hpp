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

#ifndef SOCIALCORR_DATASETS_HPP
#define SOCIALCORR_DATASETS_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "socialcorr/attributes.hpp"
#include "socialcorr/corpus.hpp"
#include "socialcorr/error.hpp"
#include "socialcorr/features.hpp"
#include "socialcorr/parallel.hpp"
#include "socialcorr/signals.hpp"
#include "socialcorr/stats.hpp"
#include "socialcorr/textfeat.hpp"

namespace socialcorr {

/// Every tweet attribute of every corpus tweet, row-aligned with corpus.tweets.
struct AttributeTable {
    std::vector<std::string> names;
    std::vector<std::vector<std::optional<double>>> rows;
    std::vector<std::optional<double>> ari; // tweet ARI, for reporting only

    std::optional<std::size_t> column(const std::string& name) const {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - names.begin());
    }
};

struct AttributeContext {
    const ValenceLexicon* valence = nullptr;
    const CategoryLexicon* categories = nullptr;
    std::vector<std::string> keywords = default_vaccine_keywords();
    MisinfoPredictor misinfo_predictor;
};

/// Featurizes all tweets on up to `workers` threads. Engagement attributes are
/// missing for tweets without replies and poster attributes for tweets whose
/// author has no profile.
inline AttributeTable compute_attribute_table(const Corpus& corpus, const AttributeContext& ctx,
                                              std::size_t workers = 1) {
    if (ctx.valence == nullptr || ctx.categories == nullptr) {
        throw UsageError("attribute context needs both lexicons");
    }
    AttributeTable table;
    table.names = attribute_names(*ctx.categories);
    table.rows.resize(corpus.tweets.size());
    table.ari.resize(corpus.tweets.size());
    parallel_for(corpus.tweets.size(), workers, [&](std::size_t i) {
        const auto& t = corpus.tweets[i];
        const auto ling = linguistic_features(t.text, *ctx.valence, *ctx.categories);
        std::optional<EngagementFeatures> eng;
        if (t.reply_count() > 0) {
            eng = engagement_features(t);
        }
        std::optional<PosterFeatures> poster;
        if (const auto* p = corpus.poster_of(t)) {
            poster = poster_features(*p, t.created_at, ctx.keywords, ctx.misinfo_predictor);
        }
        table.rows[i] = attribute_values(ling, eng ? &*eng : nullptr, poster ? &*poster : nullptr);
        table.ari[i] = ling.ari;
    });
    return table;
}

/// Attributes usable as model inputs: the given (significant) names minus
/// nullable attributes and any attribute missing for one of `rows`.
inline std::vector<std::string> model_attributes(std::span<const std::string> significant,
                                                 const AttributeTable& table,
                                                 std::span<const std::size_t> rows,
                                                 Warnings* warnings = nullptr) {
    std::vector<std::string> out;
    for (const auto& name : significant) {
        if (is_nullable_attribute(name)) {
            continue;
        }
        const auto col = table.column(name);
        if (!col) {
            throw DataError("unknown attribute " + name);
        }
        const bool complete = std::all_of(rows.begin(), rows.end(), [&](std::size_t i) {
            return table.rows[i][*col].has_value();
        });
        if (!complete) {
            warn(warnings, "attribute " + name + " has missing values; not used as a model input");
            continue;
        }
        out.push_back(name);
    }
    return out;
}

namespace detail {

inline LabeledDataset make_dataset(const Corpus& corpus, const AttributeTable& table,
                                   std::span<const std::size_t> rows, std::span<const int> labels,
                                   const FeatureManifest& manifest) {
    LabeledDataset d;
    d.manifest = manifest;
    d.raw = Matrix(rows.size(), manifest.length());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& t = corpus.tweets[rows[k]];
        const auto fv = raw_feature_vector(t.text, table.names, table.rows[rows[k]], manifest);
        std::copy(fv.values.begin(), fv.values.end(), d.raw.row(k).begin());
        d.ids.push_back(t.id);
        d.labels.push_back(labels[k]);
    }
    return d;
}

} // namespace detail

/// Tweets with at least one reply and complete reply labels.
inline std::vector<std::size_t> rq1_rows(const Corpus& corpus) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < corpus.tweets.size(); ++i) {
        const auto& t = corpus.tweets[i];
        if (t.reply_count() > 0 && t.fully_labeled()) {
            rows.push_back(i);
        }
    }
    return rows;
}

/// Label = countered (at least one counter-reply). Tweets with incomplete
/// reply labels are excluded.
inline LabeledDataset build_rq1_dataset(const Corpus& corpus, const AttributeTable& table,
                                        FeatureManifest manifest) {
    manifest.task = "rq1";
    manifest.positive_class = "countered";
    const auto rows = rq1_rows(corpus);
    std::vector<int> labels;
    for (std::size_t i : rows) {
        labels.push_back(label_countered(corpus.tweets[i]) ? 1 : 0);
    }
    return detail::make_dataset(corpus, table, rows, labels, manifest);
}

/// Countered tweets with complete labels, with their labels under the
/// global quartile rule: p <= Q1 -> 0, p >= Q3 -> 1, others dropped.
inline std::pair<std::vector<std::size_t>, std::vector<int>>
rq2_rows(const Corpus& corpus, Warnings* warnings = nullptr) {
    std::vector<std::size_t> candidates;
    std::vector<double> p;
    for (std::size_t i = 0; i < corpus.tweets.size(); ++i) {
        const auto& t = corpus.tweets[i];
        if (t.reply_count() > 0 && t.fully_labeled() && label_countered(t)) {
            candidates.push_back(i);
            p.push_back(counter_proportion(t));
        }
    }
    std::pair<std::vector<std::size_t>, std::vector<int>> out;
    if (candidates.empty()) {
        warn(warnings, "rq2: no countered tweets");
        return out;
    }
    const double q1 = stats::quantile(p, 0.25);
    const double q3 = stats::quantile(p, 0.75);
    if (!(q1 < q3)) {
        warn(warnings, "rq2: countering proportions do not spread (Q1 == Q3); dataset is empty");
        return out;
    }
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (p[k] <= q1) {
            out.first.push_back(candidates[k]);
            out.second.push_back(0);
        } else if (p[k] >= q3) {
            out.first.push_back(candidates[k]);
            out.second.push_back(1);
        }
    }
    return out;
}

inline LabeledDataset build_rq2_dataset(const Corpus& corpus, const AttributeTable& table,
                                        FeatureManifest manifest, Warnings* warnings = nullptr) {
    manifest.task = "rq2";
    manifest.positive_class = "highly_countered";
    const auto [rows, labels] = rq2_rows(corpus, warnings);
    return detail::make_dataset(corpus, table, rows, labels, manifest);
}

} // namespace socialcorr

#endif
