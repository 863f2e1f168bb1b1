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

#ifndef SOCIALCORR_MODELS_HPP
#define SOCIALCORR_MODELS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "socialcorr/error.hpp"
#include "socialcorr/matrix.hpp"
#include "socialcorr/rng.hpp"

namespace socialcorr {

struct LogregConfig {
    double lr = 0.5;
    int epochs = 500;
    double l2 = 1e-4;
    std::uint64_t seed = 0;

    bool operator==(const LogregConfig&) const = default;
};

struct MlpConfig {
    std::size_t hidden = 64;
    double lr = 0.1;
    int epochs = 500;
    double l2 = 1e-4;
    std::uint64_t seed = 0;

    bool operator==(const MlpConfig&) const = default;
};

struct LinearModel {
    std::vector<double> weights;
    double bias = 0.0;
    LogregConfig config;
    /// Training objective before each update and after the last one.
    std::vector<double> loss_history;

    std::size_t inputs() const { return weights.size(); }

    bool operator==(const LinearModel&) const = default;
};

/// One rectifier hidden layer, sigmoid output.
struct MlpModel {
    std::size_t inputs = 0;
    std::size_t hidden = 0;
    std::vector<double> w1; // hidden x inputs, row-major
    std::vector<double> b1; // hidden
    std::vector<double> w2; // hidden
    double b2 = 0.0;
    MlpConfig config;
    std::vector<double> loss_history;

    bool operator==(const MlpModel&) const = default;
};

using Classifier = std::variant<LinearModel, MlpModel>;

inline double sigmoid(double z) {
    if (z >= 0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

/// log(1 + exp(x)) without overflow.
inline double softplus(double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::fabs(x))); }

/// Cross-entropy of a logit against a 0/1 label.
inline double logit_loss(double z, int y) { return y != 0 ? softplus(-z) : softplus(z); }

namespace detail {

inline void check_training_data(const Matrix& x, std::span<const int> y) {
    if (x.rows == 0 || x.rows != y.size()) {
        throw DataError("training data is empty or labels do not match rows");
    }
    bool pos = false;
    bool neg = false;
    for (int v : y) {
        pos = pos || v != 0;
        neg = neg || v == 0;
    }
    if (!pos || !neg) {
        throw DataError("training data must contain both classes");
    }
}

/// Column indices of the non-zero entries of each row. Hashed text blocks are
/// mostly zero, so training loops visit only these.
inline std::vector<std::vector<std::uint32_t>> nonzero_columns(const Matrix& x) {
    std::vector<std::vector<std::uint32_t>> nz(x.rows);
    for (std::size_t i = 0; i < x.rows; ++i) {
        const auto row = x.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] != 0.0) {
                nz[i].push_back(static_cast<std::uint32_t>(j));
            }
        }
    }
    return nz;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Logistic regression

inline double logit(const LinearModel& m, std::span<const double> x) {
    return detail::dot(m.weights, x) + m.bias;
}

/// Mean cross-entropy + (l2 / 2) * |w|^2. Parameters are ordered (weights..., bias).
inline double logreg_objective(const LinearModel& m, const Matrix& x, std::span<const int> y,
                               double l2) {
    double loss = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) {
        loss += logit_loss(logit(m, x.row(i)), y[i]);
    }
    loss /= static_cast<double>(x.rows);
    return loss + 0.5 * l2 * detail::dot(m.weights, m.weights);
}

namespace detail {

inline std::vector<double> logreg_gradient(const LinearModel& m, const Matrix& x,
                                           const std::vector<std::vector<std::uint32_t>>& nz,
                                           std::span<const int> y, double l2,
                                           double* loss = nullptr) {
    std::vector<double> g(m.weights.size() + 1, 0.0);
    const double inv_n = 1.0 / static_cast<double>(x.rows);
    double total = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) {
        const auto row = x.row(i);
        double z = 0.0;
        for (std::uint32_t j : nz[i]) {
            z += m.weights[j] * row[j];
        }
        z += m.bias;
        total += logit_loss(z, y[i]);
        const double dz = (sigmoid(z) - (y[i] != 0 ? 1.0 : 0.0)) * inv_n;
        for (std::uint32_t j : nz[i]) {
            g[j] += dz * row[j];
        }
        g.back() += dz;
    }
    for (std::size_t j = 0; j < m.weights.size(); ++j) {
        g[j] += l2 * m.weights[j];
    }
    if (loss != nullptr) {
        *loss = total / static_cast<double>(x.rows) + 0.5 * l2 * dot(m.weights, m.weights);
    }
    return g;
}

} // namespace detail

/// Gradient of logreg_objective, flattened as (weights..., bias).
inline std::vector<double> logreg_gradient(const LinearModel& m, const Matrix& x,
                                           std::span<const int> y, double l2) {
    return detail::logreg_gradient(m, x, detail::nonzero_columns(x), y, l2);
}

/// Full-batch gradient descent from zero weights.
inline LinearModel train_logreg(const Matrix& x, std::span<const int> y, const LogregConfig& cfg) {
    detail::check_training_data(x, y);
    LinearModel m;
    m.weights.assign(x.cols, 0.0);
    m.config = cfg;
    const auto nz = detail::nonzero_columns(x);
    m.loss_history.reserve(static_cast<std::size_t>(cfg.epochs) + 1);
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        double loss = 0.0;
        const auto g = detail::logreg_gradient(m, x, nz, y, cfg.l2, &loss);
        m.loss_history.push_back(loss);
        for (std::size_t j = 0; j < m.weights.size(); ++j) {
            m.weights[j] -= cfg.lr * g[j];
        }
        m.bias -= cfg.lr * g.back();
    }
    m.loss_history.push_back(logreg_objective(m, x, y, cfg.l2));
    return m;
}

// ---------------------------------------------------------------------------
// One-hidden-layer network

namespace detail {

struct MlpForward {
    std::vector<double> pre;  // hidden pre-activations
    std::vector<double> post; // rectified
    double z = 0.0;
};

inline void mlp_forward(const MlpModel& m, std::span<const double> x,
                        std::span<const std::uint32_t> nz, MlpForward& f) {
    f.pre.resize(m.hidden);
    f.post.resize(m.hidden);
    double z = m.b2;
    for (std::size_t h = 0; h < m.hidden; ++h) {
        const double* w = m.w1.data() + h * m.inputs;
        double a = 0.0;
        for (std::uint32_t j : nz) {
            a += w[j] * x[j];
        }
        a += m.b1[h];
        f.pre[h] = a;
        f.post[h] = a > 0.0 ? a : 0.0;
        z += m.w2[h] * f.post[h];
    }
    f.z = z;
}

inline void mlp_forward(const MlpModel& m, std::span<const double> x, MlpForward& f) {
    std::vector<std::uint32_t> all(x.size());
    for (std::size_t j = 0; j < all.size(); ++j) {
        all[j] = static_cast<std::uint32_t>(j);
    }
    mlp_forward(m, x, all, f);
}

inline double mlp_weight_norm2(const MlpModel& m) { return dot(m.w1, m.w1) + dot(m.w2, m.w2); }

} // namespace detail

inline double logit(const MlpModel& m, std::span<const double> x) {
    detail::MlpForward f;
    detail::mlp_forward(m, x, f);
    return f.z;
}

/// Mean cross-entropy + (l2 / 2) * (|W1|^2 + |w2|^2); biases are not penalized.
namespace detail {

inline double mlp_objective(const MlpModel& m, const Matrix& x,
                            const std::vector<std::vector<std::uint32_t>>& nz,
                            std::span<const int> y, double l2) {
    MlpForward f;
    double loss = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) {
        mlp_forward(m, x.row(i), nz[i], f);
        loss += logit_loss(f.z, y[i]);
    }
    return loss / static_cast<double>(x.rows) + 0.5 * l2 * mlp_weight_norm2(m);
}

} // namespace detail

inline double mlp_objective(const MlpModel& m, const Matrix& x, std::span<const int> y, double l2) {
    return detail::mlp_objective(m, x, detail::nonzero_columns(x), y, l2);
}

/// Parameter count with the flattening order (w1, b1, w2, b2).
inline std::size_t mlp_parameter_count(const MlpModel& m) {
    return m.w1.size() + m.b1.size() + m.w2.size() + 1;
}

inline std::vector<double> mlp_parameters(const MlpModel& m) {
    std::vector<double> p;
    p.reserve(mlp_parameter_count(m));
    p.insert(p.end(), m.w1.begin(), m.w1.end());
    p.insert(p.end(), m.b1.begin(), m.b1.end());
    p.insert(p.end(), m.w2.begin(), m.w2.end());
    p.push_back(m.b2);
    return p;
}

inline void set_mlp_parameters(MlpModel& m, std::span<const double> p) {
    auto it = p.begin();
    std::copy_n(it, m.w1.size(), m.w1.begin());
    it += static_cast<std::ptrdiff_t>(m.w1.size());
    std::copy_n(it, m.b1.size(), m.b1.begin());
    it += static_cast<std::ptrdiff_t>(m.b1.size());
    std::copy_n(it, m.w2.size(), m.w2.begin());
    it += static_cast<std::ptrdiff_t>(m.w2.size());
    m.b2 = *it;
}

namespace detail {

/// Gradient of the objective; the objective value itself goes to `loss` when given.
inline std::vector<double> mlp_gradient(const MlpModel& m, const Matrix& x,
                                        const std::vector<std::vector<std::uint32_t>>& nz,
                                        std::span<const int> y, double l2,
                                        double* loss = nullptr) {
    std::vector<double> g(mlp_parameter_count(m), 0.0);
    double total = 0.0;
    double* gw1 = g.data();
    double* gb1 = gw1 + m.w1.size();
    double* gw2 = gb1 + m.b1.size();
    double& gb2 = g.back();
    const double inv_n = 1.0 / static_cast<double>(x.rows);
    MlpForward f;
    for (std::size_t i = 0; i < x.rows; ++i) {
        const auto row = x.row(i);
        mlp_forward(m, row, nz[i], f);
        total += logit_loss(f.z, y[i]);
        const double dz = (sigmoid(f.z) - (y[i] != 0 ? 1.0 : 0.0)) * inv_n;
        gb2 += dz;
        for (std::size_t h = 0; h < m.hidden; ++h) {
            gw2[h] += dz * f.post[h];
            if (f.pre[h] <= 0.0) {
                continue;
            }
            const double dh = dz * m.w2[h];
            gb1[h] += dh;
            double* grow = gw1 + h * m.inputs;
            for (std::uint32_t j : nz[i]) {
                grow[j] += dh * row[j];
            }
        }
    }
    for (std::size_t k = 0; k < m.w1.size(); ++k) {
        gw1[k] += l2 * m.w1[k];
    }
    for (std::size_t h = 0; h < m.hidden; ++h) {
        gw2[h] += l2 * m.w2[h];
    }
    if (loss != nullptr) {
        *loss = total / static_cast<double>(x.rows) + 0.5 * l2 * mlp_weight_norm2(m);
    }
    return g;
}

} // namespace detail

/// Backpropagated gradient of mlp_objective, flattened as (w1, b1, w2, b2).
inline std::vector<double> mlp_gradient(const MlpModel& m, const Matrix& x, std::span<const int> y,
                                        double l2) {
    return detail::mlp_gradient(m, x, detail::nonzero_columns(x), y, l2);
}

/// Glorot-uniform initialization from the seeded generator; biases start at zero.
inline MlpModel init_mlp(std::size_t inputs, const MlpConfig& cfg) {
    if (cfg.hidden < 1) {
        throw UsageError("mlp: hidden width must be >= 1");
    }
    MlpModel m;
    m.inputs = inputs;
    m.hidden = cfg.hidden;
    m.config = cfg;
    Rng rng(cfg.seed);
    const double r1 = std::sqrt(6.0 / static_cast<double>(inputs + cfg.hidden));
    const double r2 = std::sqrt(6.0 / static_cast<double>(cfg.hidden + 1));
    m.w1.resize(cfg.hidden * inputs);
    for (double& w : m.w1) {
        w = rng.uniform(-r1, r1);
    }
    m.b1.assign(cfg.hidden, 0.0);
    m.w2.resize(cfg.hidden);
    for (double& w : m.w2) {
        w = rng.uniform(-r2, r2);
    }
    return m;
}

inline MlpModel train_mlp(const Matrix& x, std::span<const int> y, const MlpConfig& cfg) {
    detail::check_training_data(x, y);
    MlpModel m = init_mlp(x.cols, cfg);
    const auto nz = detail::nonzero_columns(x);
    auto params = mlp_parameters(m);
    m.loss_history.reserve(static_cast<std::size_t>(cfg.epochs) + 1);
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        double loss = 0.0;
        const auto g = detail::mlp_gradient(m, x, nz, y, cfg.l2, &loss);
        m.loss_history.push_back(loss);
        for (std::size_t k = 0; k < params.size(); ++k) {
            params[k] -= cfg.lr * g[k];
        }
        set_mlp_parameters(m, params);
    }
    m.loss_history.push_back(detail::mlp_objective(m, x, nz, y, cfg.l2));
    return m;
}

// ---------------------------------------------------------------------------
// Prediction

inline std::size_t input_size(const Classifier& c) {
    return std::visit(
        [](const auto& m) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, LinearModel>) {
                return m.inputs();
            } else {
                return m.inputs;
            }
        },
        c);
}

inline double predict_proba(const Classifier& c, std::span<const double> x) {
    if (x.size() != input_size(c)) {
        throw DataError("feature vector has " + std::to_string(x.size()) +
                        " values; model expects " + std::to_string(input_size(c)));
    }
    return std::visit([&](const auto& m) { return sigmoid(logit(m, x)); }, c);
}

inline bool classify(const Classifier& c, std::span<const double> x, double threshold = 0.5) {
    return predict_proba(c, x) >= threshold;
}

} // namespace socialcorr

#endif
