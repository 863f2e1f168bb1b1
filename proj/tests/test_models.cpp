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

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "socialcorr/models.hpp"

using namespace socialcorr;

namespace {

struct Data {
    Matrix x;
    std::vector<int> y;
};

// Two Gaussian blobs separated along a known direction with a margin.
Data blobs(std::size_t n, std::uint64_t seed, double margin = 1.0) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> noise(0.0, 0.3);
    Data d{Matrix(n, 2), {}};
    std::size_t i = 0;
    while (i < n) {
        const int label = static_cast<int>(i % 2);
        const double a = noise(gen), b = noise(gen);
        const double s = label == 1 ? 1.0 : -1.0;
        // Project onto the separator (1, 1)/sqrt2 and enforce the margin.
        const double along = s * (margin / 2 + std::fabs(a));
        d.x(i, 0) = along / std::sqrt(2.0) + b;
        d.x(i, 1) = along / std::sqrt(2.0) - b;
        d.y.push_back(label);
        ++i;
    }
    return d;
}

Data xor_data(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    Data d{Matrix(n, 2), {}};
    for (std::size_t i = 0; i < n; ++i) {
        double a, b;
        do {
            a = u(gen);
            b = u(gen);
        } while (std::fabs(a) < 0.1 || std::fabs(b) < 0.1);
        d.x(i, 0) = a;
        d.x(i, 1) = b;
        d.y.push_back((a > 0) != (b > 0) ? 1 : 0);
    }
    return d;
}

Data noise_data(std::size_t n, std::size_t cols, std::mt19937_64& gen, double sparsity = 0.0) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u;
    Data d{Matrix(n, cols), {}};
    for (auto& v : d.x.data) v = u(gen) < sparsity ? 0.0 : g(gen);
    for (std::size_t i = 0; i < n; ++i) d.y.push_back(i % 3 == 0 ? 1 : 0);
    return d;
}

double oracle_norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return s;
}

template <typename M>
double accuracy(const M& m, const Data& d) {
    const Classifier c = m;
    std::size_t ok = 0;
    for (std::size_t i = 0; i < d.x.rows; ++i) {
        ok += (classify(c, d.x.row(i)) ? 1 : 0) == d.y[i] ? 1 : 0;
    }
    return static_cast<double>(ok) / static_cast<double>(d.x.rows);
}

} // namespace

TEST(Logreg, SeparableBlobs) {
    const auto d = blobs(200, 1);
    const auto m = train_logreg(d.x, d.y, LogregConfig{});
    EXPECT_GE(accuracy(m, d), 0.99);
}

TEST(Logreg, LossNonIncreasingAtDefaultRate) {
    for (std::uint64_t seed : {1, 2, 3}) {
        const auto d = blobs(300, seed, 0.2);
        const auto m = train_logreg(d.x, d.y, LogregConfig{});
        ASSERT_EQ(m.loss_history.size(), static_cast<std::size_t>(LogregConfig{}.epochs) + 1);
        for (std::size_t e = 1; e < m.loss_history.size(); ++e) {
            ASSERT_LE(m.loss_history[e], m.loss_history[e - 1] + 1e-15) << "epoch " << e;
        }
    }
}

TEST(Logreg, HeavyRegularizationGivesPrior) {
    const auto d = blobs(300, 4);
    LogregConfig cfg;
    cfg.l2 = 1e4;
    cfg.lr = 1e-4;
    cfg.epochs = 20000;
    const auto m = train_logreg(d.x, d.y, cfg);
    for (double w : m.weights) EXPECT_LT(std::fabs(w), 1e-4);
    // Balanced classes: prior 0.5.
    EXPECT_NEAR(sigmoid(m.bias), 0.5, 1e-3);
}

TEST(Logreg, Deterministic) {
    const auto d = blobs(100, 5);
    EXPECT_EQ(train_logreg(d.x, d.y, LogregConfig{}), train_logreg(d.x, d.y, LogregConfig{}));
}

TEST(Logreg, SingleClassIsAnError) {
    Matrix x(3, 2);
    const std::vector<int> y = {1, 1, 1};
    EXPECT_THROW(train_logreg(x, y, LogregConfig{}), DataError);
    EXPECT_THROW(train_mlp(x, y, MlpConfig{}), DataError);
}

TEST(Logreg, GradientMatchesFiniteDifferences) {
    std::mt19937_64 gen(10);
    std::normal_distribution<double> g;
    for (int point = 0; point < 100; ++point) {
        const auto d = noise_data(12, 5, gen, point % 2 == 0 ? 0.5 : 0.0);
        LinearModel m;
        m.weights.resize(5);
        for (auto& w : m.weights) w = g(gen);
        m.bias = g(gen);
        const double l2 = 0.01 * (point % 4);
        auto params = m.weights;
        params.push_back(m.bias);
        const auto f = [&](const std::vector<double>& p) {
            LinearModel q;
            q.weights.assign(p.begin(), p.end() - 1);
            q.bias = p.back();
            return logreg_objective(q, d.x, d.y, l2);
        };
        const auto analytic = logreg_gradient(m, d.x, d.y, l2);
        ASSERT_LT(oracle::max_relative_error(analytic, oracle::numeric_gradient(f, params)), 1e-4);
    }
}

TEST(Mlp, GradientMatchesFiniteDifferences) {
    std::mt19937_64 gen(20);
    for (int point = 0; point < 100; ++point) {
        const auto d = noise_data(10, 4, gen, point % 2 == 0 ? 0.4 : 0.0);
        MlpConfig cfg;
        cfg.hidden = 3 + point % 4;
        cfg.seed = static_cast<std::uint64_t>(point);
        MlpModel m = init_mlp(4, cfg);
        std::normal_distribution<double> g(0.0, 0.3);
        for (auto& b : m.b1) b = g(gen);
        m.b2 = g(gen);
        const double l2 = 0.01 * (point % 3);
        const auto f = [&](const std::vector<double>& p) {
            MlpModel q = m;
            set_mlp_parameters(q, p);
            return mlp_objective(q, d.x, d.y, l2);
        };
        const auto analytic = mlp_gradient(m, d.x, d.y, l2);
        ASSERT_LT(
            oracle::max_relative_error(analytic, oracle::numeric_gradient(f, mlp_parameters(m))),
            1e-3)
            << "point " << point;
    }
}

TEST(Mlp, XorWithEightHidden) {
    const auto d = xor_data(400, 2);
    MlpConfig cfg;
    cfg.hidden = 8;
    cfg.lr = 0.5;
    cfg.epochs = 3000;
    cfg.seed = 3;
    EXPECT_GE(accuracy(train_mlp(d.x, d.y, cfg), d), 0.95);
}

TEST(Mlp, XorDefeatsLogisticRegression) {
    const auto d = xor_data(400, 2);
    EXPECT_LT(accuracy(train_logreg(d.x, d.y, LogregConfig{}), d), 0.8);
}

TEST(Mlp, SingleHiddenUnitOnBlobs) {
    const auto d = blobs(200, 6);
    MlpConfig cfg;
    cfg.hidden = 1;
    cfg.lr = 0.5;
    cfg.seed = 1;
    EXPECT_GE(accuracy(train_mlp(d.x, d.y, cfg), d), 0.99);
}

TEST(Mlp, DeterministicGivenSeed) {
    const auto d = xor_data(100, 9);
    MlpConfig cfg;
    cfg.hidden = 5;
    cfg.epochs = 50;
    cfg.seed = 42;
    EXPECT_EQ(train_mlp(d.x, d.y, cfg), train_mlp(d.x, d.y, cfg));
    auto other = cfg;
    other.seed = 43;
    EXPECT_NE(train_mlp(d.x, d.y, cfg).w1, train_mlp(d.x, d.y, other).w1);
}

TEST(Mlp, GlorotRange) {
    MlpConfig cfg;
    cfg.hidden = 16;
    cfg.seed = 7;
    const auto m = init_mlp(48, cfg);
    const double r1 = std::sqrt(6.0 / (48 + 16)), r2 = std::sqrt(6.0 / 17);
    for (double w : m.w1) EXPECT_LE(std::fabs(w), r1);
    for (double w : m.w2) EXPECT_LE(std::fabs(w), r2);
    for (double b : m.b1) EXPECT_EQ(b, 0.0);
    cfg.hidden = 0;
    EXPECT_THROW(init_mlp(3, cfg), UsageError);
}

TEST(Predict, ZeroModelIsHalfAndBoundaryIsPositive) {
    LinearModel m;
    m.weights = {0.0, 0.0};
    const Classifier c = m;
    const std::vector<double> x = {3.0, -1.0};
    EXPECT_EQ(predict_proba(c, x), 0.5);
    EXPECT_TRUE(classify(c, x));
    EXPECT_FALSE(classify(c, x, 0.5000001));
}

TEST(Predict, LargeBiasSaturates) {
    LinearModel m;
    m.weights = {0.0};
    m.bias = 800.0;
    EXPECT_EQ(predict_proba(Classifier{m}, std::vector<double>{1.0}), 1.0);
    m.bias = -800.0;
    EXPECT_EQ(predict_proba(Classifier{m}, std::vector<double>{1.0}), 0.0);
}

TEST(Predict, DimensionMismatch) {
    LinearModel m;
    m.weights = {0.0, 0.0};
    EXPECT_THROW(predict_proba(Classifier{m}, std::vector<double>{1.0}), DataError);
    MlpConfig cfg;
    cfg.hidden = 2;
    EXPECT_THROW(predict_proba(Classifier{init_mlp(3, cfg)}, std::vector<double>{1.0}), DataError);
}

TEST(Predict, SparseAndDenseForwardAgree) {
    std::mt19937_64 gen(31);
    const auto d = noise_data(30, 6, gen, 0.6);
    MlpConfig cfg;
    cfg.hidden = 4;
    cfg.epochs = 30;
    const auto m = train_mlp(d.x, d.y, cfg);
    // Dense forward pass over every column, against the sparse training loop.
    double dense = 0.0;
    for (std::size_t i = 0; i < d.x.rows; ++i) dense += logit_loss(logit(m, d.x.row(i)), d.y[i]);
    dense = dense / static_cast<double>(d.x.rows) +
            0.5 * cfg.l2 * (oracle_norm2(m.w1) + oracle_norm2(m.w2));
    EXPECT_NEAR(m.loss_history.back(), dense, 1e-14);
}
