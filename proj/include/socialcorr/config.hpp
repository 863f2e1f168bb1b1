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

#ifndef SOCIALCORR_CONFIG_HPP
#define SOCIALCORR_CONFIG_HPP

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "socialcorr/artifact.hpp"
#include "socialcorr/error.hpp"
#include "socialcorr/hashing.hpp"
#include "socialcorr/models.hpp"
#include "socialcorr/strata.hpp"
#include "socialcorr/synth.hpp"

#ifndef SOCIALCORR_DATA_DIR
#define SOCIALCORR_DATA_DIR "data"
#endif

namespace socialcorr {

/// Every setting of a pipeline run. `out` and `workers` never affect results
/// and are excluded from the digest.
struct RunConfig {
    std::string corpus;
    std::string valence_lexicon = std::string(SOCIALCORR_DATA_DIR) + "/lexicons/vader_valence.tsv";
    std::string category_lexicon =
        std::string(SOCIALCORR_DATA_DIR) + "/lexicons/categories_demo.txt";
    std::string pair_annotations;
    std::string pair_model;
    std::string misinfo_annotations;
    std::string misinfo_model;
    std::string significant_attributes;
    std::string model;

    std::int64_t min_replies = 3;
    double top_fraction = 0.02;
    std::vector<StratumSpec> strata = default_strata();
    double alpha = 0.001;

    std::size_t text_dim = 256;
    std::vector<int> ngram_orders = {1, 2};
    LogregConfig logreg;
    MlpConfig mlp;
    LogregConfig text_logreg{4.0, 500, 1e-4, 0};
    std::size_t text_classifier_dim = kTextClassifierDim;
    std::size_t folds = 10;
    double threshold = 0.5;

    std::size_t inequality_sample = 10000;
    std::size_t inequality_bins = 10;

    std::string task = "rq1";
    SynthConfig synth;
    std::string synth_preset = "planted";

    std::uint64_t seed = 0;
    std::string out = ".";
    std::size_t workers = 1;
};

namespace config_detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& v) {
    T out{};
    if constexpr (std::is_floating_point_v<T>) {
        char* end = nullptr;
        out = std::strtod(v.c_str(), &end);
        if (v.empty() || end != v.c_str() + v.size()) {
            throw UsageError("config: " + key + " expects a number, got \"" + v + "\"");
        }
    } else {
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc() || p != v.data() + v.size()) {
            throw UsageError("config: " + key + " expects an integer, got \"" + v + "\"");
        }
    }
    return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        cur = trim(cur);
        if (!cur.empty()) {
            parts.push_back(cur);
        }
    }
    return parts;
}

inline std::vector<StratumSpec> parse_strata(const std::string& v) {
    std::vector<StratumSpec> specs;
    for (const auto& part : split(v, ',')) {
        const auto dash = part.find('-');
        if (dash == std::string::npos) {
            throw UsageError("config: strata entries look like 3-5, got \"" + part + "\"");
        }
        specs.push_back({parse_number<std::int64_t>("strata", trim(part.substr(0, dash))),
                         parse_number<std::int64_t>("strata", trim(part.substr(dash + 1)))});
    }
    validate_strata(specs);
    return specs;
}

} // namespace config_detail

/// Applies one `key = value` setting. Relative paths are resolved against `base`.
inline void apply_setting(RunConfig& c, const std::string& key, const std::string& value,
                          const std::filesystem::path& base = {}) {
    using config_detail::parse_number;
    auto path = [&](std::string& field) {
        std::filesystem::path p(value);
        field = (p.is_relative() && !base.empty()) ? (base / p).lexically_normal().string() : value;
    };
    if (key == "corpus") path(c.corpus);
    else if (key == "valence_lexicon") path(c.valence_lexicon);
    else if (key == "category_lexicon") path(c.category_lexicon);
    else if (key == "pair_annotations") path(c.pair_annotations);
    else if (key == "pair_model") path(c.pair_model);
    else if (key == "misinfo_annotations") path(c.misinfo_annotations);
    else if (key == "misinfo_model") path(c.misinfo_model);
    else if (key == "significant_attributes") path(c.significant_attributes);
    else if (key == "model") path(c.model);
    else if (key == "out") path(c.out);
    else if (key == "min_replies") c.min_replies = parse_number<std::int64_t>(key, value);
    else if (key == "top_fraction") c.top_fraction = parse_number<double>(key, value);
    else if (key == "strata") c.strata = config_detail::parse_strata(value);
    else if (key == "alpha") c.alpha = parse_number<double>(key, value);
    else if (key == "text_dim") c.text_dim = parse_number<std::size_t>(key, value);
    else if (key == "ngram_orders") {
        c.ngram_orders.clear();
        for (const auto& p : config_detail::split(value, ',')) {
            c.ngram_orders.push_back(parse_number<int>(key, p));
        }
    }
    else if (key == "logreg.lr") c.logreg.lr = parse_number<double>(key, value);
    else if (key == "logreg.epochs") c.logreg.epochs = parse_number<int>(key, value);
    else if (key == "logreg.l2") c.logreg.l2 = parse_number<double>(key, value);
    else if (key == "mlp.hidden") c.mlp.hidden = parse_number<std::size_t>(key, value);
    else if (key == "mlp.lr") c.mlp.lr = parse_number<double>(key, value);
    else if (key == "mlp.epochs") c.mlp.epochs = parse_number<int>(key, value);
    else if (key == "mlp.l2") c.mlp.l2 = parse_number<double>(key, value);
    else if (key == "text.lr") c.text_logreg.lr = parse_number<double>(key, value);
    else if (key == "text.epochs") c.text_logreg.epochs = parse_number<int>(key, value);
    else if (key == "text.l2") c.text_logreg.l2 = parse_number<double>(key, value);
    else if (key == "text.dim") c.text_classifier_dim = parse_number<std::size_t>(key, value);
    else if (key == "folds") c.folds = parse_number<std::size_t>(key, value);
    else if (key == "threshold") c.threshold = parse_number<double>(key, value);
    else if (key == "inequality.sample_size")
        c.inequality_sample = parse_number<std::size_t>(key, value);
    else if (key == "inequality.bins") c.inequality_bins = parse_number<std::size_t>(key, value);
    else if (key == "task") c.task = value;
    else if (key == "seed") c.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "workers") c.workers = parse_number<std::size_t>(key, value);
    else if (key == "synth.preset") {
        const auto n = c.synth.n_tweets;
        c.synth = synth_preset(value);
        c.synth.n_tweets = n;
        c.synth_preset = value;
    }
    else if (key == "synth.n_tweets") c.synth.n_tweets = parse_number<std::size_t>(key, value);
    else if (key == "synth.rq1_signal") c.synth.rq1_signal = parse_number<double>(key, value);
    else if (key == "synth.rq2_signal") c.synth.rq2_signal = parse_number<double>(key, value);
    else if (key == "synth.countered_intercept")
        c.synth.countered_intercept = parse_number<double>(key, value);
    else if (key == "synth.ari_slope") c.synth.ari_slope = parse_number<double>(key, value);
    else if (key == "synth.unlabeled_fraction")
        c.synth.unlabeled_fraction = parse_number<double>(key, value);
    else if (key == "synth.history_posts")
        c.synth.history_posts = parse_number<std::size_t>(key, value);
    else throw UsageError("config: unknown key \"" + key + "\"");
}

/// Reads a `key = value` file; '#' starts a comment.
inline void apply_config_file(RunConfig& c, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read config file " + path);
    }
    const auto base = std::filesystem::path(path).parent_path();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = config_detail::trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config " + path + " line " + std::to_string(lineno) +
                             ": expected key = value");
        }
        apply_setting(c, config_detail::trim(line.substr(0, eq)),
                      config_detail::trim(line.substr(eq + 1)), base);
    }
}

inline void validate_config(const RunConfig& c) {
    validate_hashing(c.text_dim, c.ngram_orders);
    validate_hashing(c.text_classifier_dim, c.ngram_orders);
    validate_strata(c.strata);
    if (c.task != "rq1" && c.task != "rq2") {
        throw UsageError("task must be rq1 or rq2, got \"" + c.task + "\"");
    }
    if (c.folds < 2) {
        throw UsageError("folds must be >= 2");
    }
    if (c.mlp.hidden < 1) {
        throw UsageError("mlp.hidden must be >= 1");
    }
    if (!(c.alpha > 0.0 && c.alpha < 1.0)) {
        throw UsageError("alpha must lie in (0, 1)");
    }
    if (c.inequality_bins < 2) {
        throw UsageError("inequality.bins must be >= 2");
    }
    if (c.workers < 1) {
        throw UsageError("workers must be >= 1");
    }
}

/// Canonical text of every result-affecting setting.
inline std::string canonical_config(const RunConfig& c) {
    std::map<std::string, std::string> kv;
    kv["corpus"] = c.corpus;
    kv["valence_lexicon"] = c.valence_lexicon;
    kv["category_lexicon"] = c.category_lexicon;
    kv["pair_annotations"] = c.pair_annotations;
    kv["pair_model"] = c.pair_model;
    kv["misinfo_annotations"] = c.misinfo_annotations;
    kv["misinfo_model"] = c.misinfo_model;
    kv["significant_attributes"] = c.significant_attributes;
    kv["model"] = c.model;
    kv["min_replies"] = std::to_string(c.min_replies);
    kv["top_fraction"] = format_real(c.top_fraction);
    std::string strata;
    for (const auto& s : c.strata) {
        strata +=
            (strata.empty() ? "" : ",") + std::to_string(s.lower) + "-" + std::to_string(s.upper);
    }
    kv["strata"] = strata;
    kv["alpha"] = format_real(c.alpha);
    kv["text_dim"] = std::to_string(c.text_dim);
    std::string orders;
    for (int n : c.ngram_orders) {
        orders += (orders.empty() ? "" : ",") + std::to_string(n);
    }
    kv["ngram_orders"] = orders;
    kv["logreg.lr"] = format_real(c.logreg.lr);
    kv["logreg.epochs"] = std::to_string(c.logreg.epochs);
    kv["logreg.l2"] = format_real(c.logreg.l2);
    kv["mlp.hidden"] = std::to_string(c.mlp.hidden);
    kv["mlp.lr"] = format_real(c.mlp.lr);
    kv["mlp.epochs"] = std::to_string(c.mlp.epochs);
    kv["mlp.l2"] = format_real(c.mlp.l2);
    kv["text.lr"] = format_real(c.text_logreg.lr);
    kv["text.epochs"] = std::to_string(c.text_logreg.epochs);
    kv["text.l2"] = format_real(c.text_logreg.l2);
    kv["text.dim"] = std::to_string(c.text_classifier_dim);
    kv["folds"] = std::to_string(c.folds);
    kv["threshold"] = format_real(c.threshold);
    kv["inequality.sample_size"] = std::to_string(c.inequality_sample);
    kv["inequality.bins"] = std::to_string(c.inequality_bins);
    kv["task"] = c.task;
    kv["synth.preset"] = c.synth_preset;
    kv["synth.n_tweets"] = std::to_string(c.synth.n_tweets);
    kv["synth.rq1_signal"] = format_real(c.synth.rq1_signal);
    kv["synth.rq2_signal"] = format_real(c.synth.rq2_signal);
    kv["synth.countered_intercept"] = format_real(c.synth.countered_intercept);
    kv["synth.ari_slope"] = format_real(c.synth.ari_slope);
    kv["synth.unlabeled_fraction"] = format_real(c.synth.unlabeled_fraction);
    kv["synth.history_posts"] = std::to_string(c.synth.history_posts);
    kv["seed"] = std::to_string(c.seed);
    std::string text;
    for (const auto& [k, v] : kv) {
        text += k + "=" + v + "\n";
    }
    return text;
}

inline std::string config_digest(const RunConfig& c) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_config(c))));
    return buf;
}

} // namespace socialcorr

#endif
