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

#ifndef SOCIALCORR_ARTIFACT_HPP
#define SOCIALCORR_ARTIFACT_HPP

#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "socialcorr/error.hpp"
#include "socialcorr/features.hpp"
#include "socialcorr/models.hpp"

namespace socialcorr {

inline constexpr const char* kModelFormat = "socialcorr-model";
inline constexpr int kModelFormatVersion = 1;

/// A trained classifier with the feature manifest it expects.
struct ModelArtifact {
    FeatureManifest manifest;
    Classifier model;
    std::uint64_t seed = 0;
    /// Digest of the run configuration that produced the model ("" if none).
    std::string config_digest;
};

/// Shortest decimal form that parses back to the same double.
inline std::string format_real(double v) {
    char buf[32];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) {
            break;
        }
    }
    return buf;
}

inline double parse_real(const std::string& s) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    // Underflow to a subnormal is fine; overflow is not.
    if (s.empty() || end != s.c_str() + s.size() || (errno == ERANGE && std::isinf(v))) {
        throw DataError("model artifact: malformed real \"" + s + "\"");
    }
    return v;
}

namespace detail {

inline nlohmann::ordered_json reals_to_json(const std::vector<double>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (double x : v) {
        arr.push_back(format_real(x));
    }
    return arr;
}

inline std::vector<double> reals_from_json(const nlohmann::json& arr, const char* what) {
    if (!arr.is_array()) {
        throw DataError(std::string("model artifact: ") + what + " must be an array");
    }
    std::vector<double> v;
    v.reserve(arr.size());
    for (const auto& x : arr) {
        if (!x.is_string()) {
            throw DataError(std::string("model artifact: ") + what + " entries must be strings");
        }
        v.push_back(parse_real(x.get<std::string>()));
    }
    return v;
}

inline const nlohmann::json& field(const nlohmann::json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw DataError(std::string("model artifact: missing field \"") + key + "\"");
    }
    return *it;
}

} // namespace detail

inline nlohmann::ordered_json to_json(const FeatureManifest& m) {
    nlohmann::ordered_json j;
    j["task"] = m.task;
    j["positive_class"] = m.positive_class;
    j["dense_names"] = m.dense_names;
    std::vector<int> pass;
    for (bool b : m.passthrough) {
        pass.push_back(b ? 1 : 0);
    }
    j["passthrough"] = pass;
    j["means"] = detail::reals_to_json(m.means);
    j["sds"] = detail::reals_to_json(m.sds);
    j["text_dim"] = m.text_dim;
    j["text_blocks"] = m.text_blocks;
    j["ngram_orders"] = m.ngram_orders;
    return j;
}

inline FeatureManifest manifest_from_json(const nlohmann::json& j) {
    using detail::field;
    try {
        FeatureManifest m;
        m.task = field(j, "task").get<std::string>();
        m.positive_class = field(j, "positive_class").get<std::string>();
        m.dense_names = field(j, "dense_names").get<std::vector<std::string>>();
        for (int b : field(j, "passthrough").get<std::vector<int>>()) {
            m.passthrough.push_back(b != 0);
        }
        m.means = detail::reals_from_json(field(j, "means"), "means");
        m.sds = detail::reals_from_json(field(j, "sds"), "sds");
        m.text_dim = field(j, "text_dim").get<std::size_t>();
        m.text_blocks = field(j, "text_blocks").get<std::size_t>();
        m.ngram_orders = field(j, "ngram_orders").get<std::vector<int>>();
        if (m.passthrough.size() != m.dense_names.size() ||
            m.means.size() != m.sds.size() ||
            (!m.means.empty() && m.means.size() != m.dense_names.size())) {
            throw DataError("model artifact: manifest arrays have inconsistent lengths");
        }
        validate_hashing(m.text_dim, m.ngram_orders);
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("model artifact: bad manifest: ") + e.what());
    } catch (const UsageError& e) {
        throw DataError(std::string("model artifact: ") + e.what());
    }
}

inline nlohmann::ordered_json to_json(const ModelArtifact& a) {
    nlohmann::ordered_json j;
    j["format"] = kModelFormat;
    j["version"] = kModelFormatVersion;
    j["seed"] = a.seed;
    j["config_digest"] = a.config_digest;
    j["manifest"] = to_json(a.manifest);
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            nlohmann::ordered_json cfg;
            nlohmann::ordered_json w;
            if constexpr (std::is_same_v<T, LinearModel>) {
                j["kind"] = "logreg";
                cfg["lr"] = format_real(m.config.lr);
                cfg["epochs"] = m.config.epochs;
                cfg["l2"] = format_real(m.config.l2);
                cfg["seed"] = m.config.seed;
                w["weights"] = detail::reals_to_json(m.weights);
                w["bias"] = format_real(m.bias);
            } else {
                j["kind"] = "mlp";
                cfg["hidden"] = m.config.hidden;
                cfg["lr"] = format_real(m.config.lr);
                cfg["epochs"] = m.config.epochs;
                cfg["l2"] = format_real(m.config.l2);
                cfg["seed"] = m.config.seed;
                w["inputs"] = m.inputs;
                w["hidden"] = m.hidden;
                w["w1"] = detail::reals_to_json(m.w1);
                w["b1"] = detail::reals_to_json(m.b1);
                w["w2"] = detail::reals_to_json(m.w2);
                w["b2"] = format_real(m.b2);
            }
            j["config"] = cfg;
            j["final_loss"] =
                m.loss_history.empty() ? std::string() : format_real(m.loss_history.back());
            j["parameters"] = w;
        },
        a.model);
    return j;
}

inline ModelArtifact artifact_from_json(const nlohmann::json& j) {
    using detail::field;
    try {
        if (field(j, "format").get<std::string>() != kModelFormat) {
            throw DataError("model artifact: unknown format");
        }
        if (field(j, "version").get<int>() != kModelFormatVersion) {
            throw DataError("model artifact: unsupported version");
        }
        ModelArtifact a;
        a.seed = field(j, "seed").get<std::uint64_t>();
        a.config_digest = field(j, "config_digest").get<std::string>();
        a.manifest = manifest_from_json(field(j, "manifest"));
        const auto kind = field(j, "kind").get<std::string>();
        const auto& cfg = field(j, "config");
        const auto& w = field(j, "parameters");
        if (kind == "logreg") {
            LinearModel m;
            m.config.lr = parse_real(field(cfg, "lr").get<std::string>());
            m.config.epochs = field(cfg, "epochs").get<int>();
            m.config.l2 = parse_real(field(cfg, "l2").get<std::string>());
            m.config.seed = field(cfg, "seed").get<std::uint64_t>();
            m.weights = detail::reals_from_json(field(w, "weights"), "weights");
            m.bias = parse_real(field(w, "bias").get<std::string>());
            a.model = std::move(m);
        } else if (kind == "mlp") {
            MlpModel m;
            m.config.hidden = field(cfg, "hidden").get<std::size_t>();
            m.config.lr = parse_real(field(cfg, "lr").get<std::string>());
            m.config.epochs = field(cfg, "epochs").get<int>();
            m.config.l2 = parse_real(field(cfg, "l2").get<std::string>());
            m.config.seed = field(cfg, "seed").get<std::uint64_t>();
            m.inputs = field(w, "inputs").get<std::size_t>();
            m.hidden = field(w, "hidden").get<std::size_t>();
            m.w1 = detail::reals_from_json(field(w, "w1"), "w1");
            m.b1 = detail::reals_from_json(field(w, "b1"), "b1");
            m.w2 = detail::reals_from_json(field(w, "w2"), "w2");
            m.b2 = parse_real(field(w, "b2").get<std::string>());
            if (m.hidden < 1 || m.w1.size() != m.hidden * m.inputs || m.b1.size() != m.hidden ||
                m.w2.size() != m.hidden) {
                throw DataError("model artifact: network shapes are inconsistent");
            }
            a.model = std::move(m);
        } else {
            throw DataError("model artifact: unknown kind \"" + kind + "\"");
        }
        if (input_size(a.model) != a.manifest.length()) {
            throw DataError("model artifact: weight count does not match the manifest");
        }
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("model artifact: ") + e.what());
    }
}

inline void save_artifact(const std::string& path, const ModelArtifact& a) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write " + path);
    }
    out << to_json(a).dump(1) << '\n';
    if (!out) {
        throw DataError("failed writing " + path);
    }
}

inline ModelArtifact load_artifact(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot read model artifact " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError("model artifact " + path + ": " + e.what());
    }
    return artifact_from_json(j);
}

} // namespace socialcorr

#endif
