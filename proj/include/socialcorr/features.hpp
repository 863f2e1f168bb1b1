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

#ifndef SOCIALCORR_FEATURES_HPP
#define SOCIALCORR_FEATURES_HPP

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socialcorr/attributes.hpp"
#include "socialcorr/corpus.hpp"
#include "socialcorr/error.hpp"
#include "socialcorr/hashing.hpp"
#include "socialcorr/matrix.hpp"

namespace socialcorr {

/// Column layout of a model input: named dense attributes followed by
/// `text_blocks` hashed text blocks of `text_dim` values each.
struct FeatureManifest {
    std::string task;
    std::string positive_class;
    std::vector<std::string> dense_names;
    std::vector<bool> passthrough;
    /// Standardization statistics; empty until fitted.
    std::vector<double> means;
    std::vector<double> sds;
    std::size_t text_dim = 256;
    std::size_t text_blocks = 1;
    std::vector<int> ngram_orders = {1, 2};

    std::size_t dense_size() const { return dense_names.size(); }
    std::size_t length() const { return dense_names.size() + text_dim * text_blocks; }
    bool fitted() const { return means.size() == dense_names.size(); }

    bool operator==(const FeatureManifest&) const = default;
};

inline FeatureManifest make_manifest(std::string task, std::string positive_class,
                                     std::vector<std::string> dense_names, std::size_t text_dim,
                                     std::vector<int> ngram_orders, std::size_t text_blocks = 1) {
    validate_hashing(text_dim, ngram_orders);
    FeatureManifest m;
    m.task = std::move(task);
    m.positive_class = std::move(positive_class);
    for (const auto& n : dense_names) {
        m.passthrough.push_back(is_passthrough_attribute(n));
    }
    m.dense_names = std::move(dense_names);
    m.text_dim = text_dim;
    m.text_blocks = text_blocks;
    m.ngram_orders = std::move(ngram_orders);
    return m;
}

struct FeatureVector {
    std::vector<double> values;
    std::size_t dense_size = 0;
};

/// Unstandardized row: selected attribute values, then the hashed text block.
/// `names`/`values` are the full attribute list of the tweet.
inline FeatureVector raw_feature_vector(std::string_view text,
                                        std::span<const std::string> names,
                                        std::span<const std::optional<double>> values,
                                        const FeatureManifest& manifest) {
    FeatureVector fv;
    fv.values.reserve(manifest.length());
    std::vector<std::string> missing;
    for (const auto& want : manifest.dense_names) {
        std::optional<double> v;
        bool found = false;
        for (std::size_t k = 0; k < names.size(); ++k) {
            if (names[k] == want) {
                v = values[k];
                found = true;
                break;
            }
        }
        if (!found || !v) {
            missing.push_back(want);
            continue;
        }
        fv.values.push_back(*v);
    }
    if (!missing.empty()) {
        std::string msg = "missing feature values:";
        for (const auto& m : missing) {
            msg += ' ' + m;
        }
        throw DataError(msg);
    }
    fv.dense_size = fv.values.size();
    fv.values.resize(manifest.length(), 0.0);
    hash_text_into(text, std::span<double>(fv.values).subspan(fv.dense_size, manifest.text_dim),
                   manifest.ngram_orders);
    return fv;
}

inline void standardize_in_place(std::span<double> row, const FeatureManifest& m) {
    if (!m.fitted()) {
        throw DataError("feature manifest has no standardization statistics");
    }
    for (std::size_t j = 0; j < m.dense_size(); ++j) {
        if (m.passthrough[j]) {
            continue;
        }
        row[j] = m.sds[j] > 0.0 ? (row[j] - m.means[j]) / m.sds[j] : 0.0;
    }
}

/// Model-ready vector: dense attributes z-scored with the manifest's training
/// statistics (zero-variance attributes map to 0; pass-through attributes are
/// left as is), hashed text appended.
inline FeatureVector assemble_features(const TweetRecord& tweet, const LinguisticFeatures& ling,
                                       const EngagementFeatures* engagement,
                                       const PosterFeatures* poster,
                                       const CategoryLexicon& categories,
                                       const FeatureManifest& manifest) {
    const auto names = attribute_names(categories);
    const auto values = attribute_values(ling, engagement, poster);
    FeatureVector fv = raw_feature_vector(tweet.text, names, values, manifest);
    standardize_in_place(fv.values, manifest);
    return fv;
}

/// Rows of raw feature vectors with 0/1 labels.
struct LabeledDataset {
    std::vector<std::string> ids;
    Matrix raw;
    std::vector<int> labels;
    FeatureManifest manifest;

    std::size_t size() const { return ids.size(); }
};

/// Fits mean/sd (population sd) of the dense columns over `rows`.
inline void fit_standardization(const Matrix& raw, std::span<const std::size_t> rows,
                                FeatureManifest& m) {
    const std::size_t d = m.dense_size();
    m.means.assign(d, 0.0);
    m.sds.assign(d, 0.0);
    if (rows.empty()) {
        return;
    }
    const double n = static_cast<double>(rows.size());
    for (std::size_t i : rows) {
        for (std::size_t j = 0; j < d; ++j) {
            m.means[j] += raw(i, j);
        }
    }
    for (double& v : m.means) {
        v /= n;
    }
    for (std::size_t i : rows) {
        for (std::size_t j = 0; j < d; ++j) {
            const double dv = raw(i, j) - m.means[j];
            m.sds[j] += dv * dv;
        }
    }
    for (double& v : m.sds) {
        v = std::sqrt(v / n);
    }
}

inline Matrix standardized_rows(const Matrix& raw, std::span<const std::size_t> rows,
                                const FeatureManifest& m) {
    Matrix out = raw.select_rows(rows);
    for (std::size_t i = 0; i < out.rows; ++i) {
        standardize_in_place(out.row(i), m);
    }
    return out;
}

} // namespace socialcorr

#endif
