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

#ifndef SOCIALCORR_CV_HPP
#define SOCIALCORR_CV_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "socialcorr/error.hpp"
#include "socialcorr/features.hpp"
#include "socialcorr/models.hpp"
#include "socialcorr/parallel.hpp"
#include "socialcorr/rng.hpp"

namespace socialcorr {

struct Metrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;

    bool operator==(const Metrics&) const = default;
};

/// Precision, recall and F1 of the positive class. Precision is 0 without
/// positive predictions; F1 is 0 when precision and recall are both 0.
inline Metrics metrics(std::span<const int> predictions, std::span<const int> labels,
                       int positive = 1) {
    if (predictions.size() != labels.size()) {
        throw DataError("metrics: predictions and labels differ in length");
    }
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const bool pred = (predictions[i] != 0) == (positive != 0);
        const bool actual = (labels[i] != 0) == (positive != 0);
        tp += pred && actual ? 1 : 0;
        fp += pred && !actual ? 1 : 0;
        fn += !pred && actual ? 1 : 0;
    }
    if (tp + fn == 0) {
        throw DataError("metrics: no positive labels");
    }
    Metrics m;
    m.precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    m.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    m.f1 = m.precision + m.recall > 0.0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    return m;
}

struct CvReport {
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::vector<Metrics> folds;
    Metrics mean;
};

/// Trains a classifier on standardized rows.
using Trainer = std::function<Classifier(const Matrix&, std::span<const int>)>;

/// Fold index of every row: rows are put in id order, each class is shuffled
/// with the seed, and the concatenated (positives, negatives) sequence is
/// dealt round-robin. Class counts per fold differ by at most one.
inline std::vector<std::size_t> stratified_folds(const LabeledDataset& data, std::size_t k,
                                                 std::uint64_t seed) {
    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return data.ids[a] < data.ids[b]; });
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t i : order) {
        (data.labels[i] != 0 ? pos : neg).push_back(i);
    }
    if (k < 2) {
        throw UsageError("kfold_cv: k must be >= 2");
    }
    if (k > std::min(pos.size(), neg.size())) {
        throw DataError("kfold_cv: k = " + std::to_string(k) +
                        " exceeds the minority class count " +
                        std::to_string(std::min(pos.size(), neg.size())));
    }
    Rng rng(seed);
    rng.shuffle(pos);
    rng.shuffle(neg);
    std::vector<std::size_t> fold(data.size());
    std::size_t slot = 0;
    for (const auto* group : {&pos, &neg}) {
        for (std::size_t i : *group) {
            fold[i] = slot++ % k;
        }
    }
    return fold;
}

/// Stratified k-fold cross-validation. Standardization statistics are
/// recomputed from each training fold. Folds may run on `workers` threads;
/// the report does not depend on the worker count.
inline CvReport kfold_cv(const LabeledDataset& data, std::size_t k, const Trainer& trainer,
                         std::uint64_t seed, std::size_t workers = 1) {
    const auto fold = stratified_folds(data, k, seed);
    CvReport report;
    report.k = k;
    report.seed = seed;
    report.folds.resize(k);
    parallel_for(k, workers, [&](std::size_t f) {
        std::vector<std::size_t> train;
        std::vector<std::size_t> valid;
        for (std::size_t i = 0; i < data.size(); ++i) {
            (fold[i] == f ? valid : train).push_back(i);
        }
        FeatureManifest manifest = data.manifest;
        fit_standardization(data.raw, train, manifest);
        const Matrix xtrain = standardized_rows(data.raw, train, manifest);
        std::vector<int> ytrain;
        for (std::size_t i : train) {
            ytrain.push_back(data.labels[i]);
        }
        const Classifier model = trainer(xtrain, ytrain);
        const Matrix xvalid = standardized_rows(data.raw, valid, manifest);
        std::vector<int> pred;
        std::vector<int> yvalid;
        for (std::size_t r = 0; r < valid.size(); ++r) {
            pred.push_back(classify(model, xvalid.row(r)) ? 1 : 0);
            yvalid.push_back(data.labels[valid[r]]);
        }
        report.folds[f] = metrics(pred, yvalid);
    });
    for (const auto& m : report.folds) {
        report.mean.precision += m.precision;
        report.mean.recall += m.recall;
        report.mean.f1 += m.f1;
    }
    const double kk = static_cast<double>(k);
    report.mean.precision /= kk;
    report.mean.recall /= kk;
    report.mean.f1 /= kk;
    return report;
}

inline Trainer logreg_trainer(const LogregConfig& cfg) {
    return [cfg](const Matrix& x, std::span<const int> y) -> Classifier {
        return train_logreg(x, y, cfg);
    };
}

inline Trainer mlp_trainer(const MlpConfig& cfg) {
    return [cfg](const Matrix& x, std::span<const int> y) -> Classifier {
        return train_mlp(x, y, cfg);
    };
}

} // namespace socialcorr

#endif
