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

#ifndef SOCIALCORR_PIPELINE_HPP
#define SOCIALCORR_PIPELINE_HPP

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "socialcorr/annotations.hpp"
#include "socialcorr/artifact.hpp"
#include "socialcorr/attributes.hpp"
#include "socialcorr/classifiers.hpp"
#include "socialcorr/config.hpp"
#include "socialcorr/corpus.hpp"
#include "socialcorr/cv.hpp"
#include "socialcorr/datasets.hpp"
#include "socialcorr/lexicon.hpp"
#include "socialcorr/parallel.hpp"
#include "socialcorr/rng.hpp"
#include "socialcorr/stats.hpp"
#include "socialcorr/strata.hpp"
#include "socialcorr/synth.hpp"

namespace socialcorr {

// ---------------------------------------------------------------------------
// Output helpers

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

inline std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : "NA"; }

inline std::string output_header(const std::string& command, const RunConfig& c) {
    return "# socialcorr " + command + " seed=" + std::to_string(c.seed) +
           " config_digest=" + config_digest(c) + "\n";
}

/// Collects a file's text and writes it in one go.
class OutputFile {
public:
    OutputFile(const RunConfig& c, const std::string& name, const std::string& command,
               bool header = true)
        : path_((std::filesystem::path(c.out) / name).string()) {
        if (header) {
            buf_ << output_header(command, c);
        }
    }
    std::ostringstream& stream() { return buf_; }
    template <typename T>
    OutputFile& operator<<(const T& v) {
        buf_ << v;
        return *this;
    }
    std::string write() {
        std::ofstream out(path_, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw DataError("cannot write " + path_);
        }
        out << buf_.str();
        if (!out) {
            throw DataError("failed writing " + path_);
        }
        return path_;
    }

private:
    std::string path_;
    std::ostringstream buf_;
};

inline void prepare_output_dir(const RunConfig& c) {
    std::error_code ec;
    std::filesystem::create_directories(c.out, ec);
    if (ec || !std::filesystem::is_directory(c.out)) {
        throw UsageError("cannot create output directory " + c.out);
    }
}

inline void require_file(const std::string& path, const std::string& what) {
    if (path.empty()) {
        throw UsageError(what + " path is not set");
    }
    if (!std::filesystem::is_regular_file(path)) {
        throw UsageError(what + " not found: " + path);
    }
}

/// Input files named by the config must exist when a command starts.
inline void check_inputs(const RunConfig& c, bool need_corpus) {
    if (need_corpus) {
        require_file(c.corpus, "corpus");
    }
    for (const auto* p : {&c.pair_annotations, &c.pair_model, &c.misinfo_annotations,
                          &c.misinfo_model, &c.significant_attributes, &c.model}) {
        if (!p->empty()) {
            require_file(*p, "input file");
        }
    }
}

inline Corpus load_corpus_checked(const RunConfig& c, Warnings* warnings) {
    auto loaded = load_corpus(c.corpus);
    for (const auto& d : loaded.diagnostics) {
        warn(warnings, c.corpus + " line " + std::to_string(d.line) + ": " + d.message);
    }
    return std::move(loaded.corpus);
}

/// Lexicons and misinformation predictor shared by the tweet-level commands.
struct Resources {
    ValenceLexicon valence;
    CategoryLexicon categories;
    std::optional<TextClassifier> misinfo;

    AttributeContext context() const {
        AttributeContext ctx;
        ctx.valence = &valence;
        ctx.categories = &categories;
        if (misinfo) {
            ctx.misinfo_predictor = as_predictor(*misinfo);
        }
        return ctx;
    }
};

inline TextClassifier load_text_classifier(const std::string& path, std::size_t blocks) {
    auto a = load_artifact(path);
    if (!std::holds_alternative<LinearModel>(a.model) || a.manifest.text_blocks != blocks ||
        a.manifest.dense_size() != 0) {
        throw DataError(path + " is not a " + (blocks == 2 ? "pair" : "text") + " classifier");
    }
    return TextClassifier{a.manifest, std::get<LinearModel>(a.model)};
}

inline Resources load_resources(const RunConfig& c, Warnings* warnings) {
    Resources r{ValenceLexicon::load(c.valence_lexicon), CategoryLexicon::load(c.category_lexicon),
                std::nullopt};
    if (!c.misinfo_model.empty()) {
        r.misinfo = load_text_classifier(c.misinfo_model, 1);
    } else if (!c.misinfo_annotations.empty()) {
        auto cfg = c.text_logreg;
        cfg.seed = c.seed;
        r.misinfo = train_text_classifier(load_text_annotations(c.misinfo_annotations), cfg,
                                          "misinfo", c.text_classifier_dim, c.ngram_orders);
    } else {
        warn(warnings, "no misinformation annotations or model; misinfo_proportion_7d is missing");
    }
    return r;
}

/// Filtered corpus restricted to tweets whose replies are all labeled.
inline Corpus analysis_corpus(const Corpus& corpus, const RunConfig& c, Warnings* warnings) {
    Corpus filtered = filter_for_analysis(corpus, c.min_replies, c.top_fraction, warnings);
    const auto before = filtered.tweets.size();
    std::erase_if(filtered.tweets, [](const TweetRecord& t) { return !t.fully_labeled(); });
    if (filtered.tweets.size() != before) {
        warn(warnings, std::to_string(before - filtered.tweets.size()) +
                           " tweets with unlabeled replies excluded; run `label` first");
    }
    return filtered;
}

// ---------------------------------------------------------------------------
// label

struct LabelResult {
    bool trained = false;
    std::size_t filled = 0;
    std::optional<CvReport> cv;
    Corpus corpus;
};

inline CvReport cross_validate_text(const LabeledDataset& d, const RunConfig& c,
                                    const LogregConfig& cfg) {
    std::size_t pos = 0;
    for (int y : d.labels) {
        pos += y != 0 ? 1 : 0;
    }
    const std::size_t minority = std::min(pos, d.labels.size() - pos);
    const std::size_t k = std::min(c.folds, minority);
    return kfold_cv(d, k, logreg_trainer(cfg), c.seed, c.workers);
}

inline void write_cv_table(OutputFile& f, const std::string& model, const CvReport& r) {
    for (std::size_t i = 0; i < r.folds.size(); ++i) {
        f << model << '\t' << i << '\t' << fmt(r.folds[i].precision) << '\t'
          << fmt(r.folds[i].recall) << '\t' << fmt(r.folds[i].f1) << '\n';
    }
    f << model << "\tmean\t" << fmt(r.mean.precision) << '\t' << fmt(r.mean.recall) << '\t'
      << fmt(r.mean.f1) << '\n';
}

/// Fills missing reply labels with the pair classifier (loaded, or trained
/// from seed annotations) and writes labeled_corpus.jsonl.
inline LabelResult cmd_label(const RunConfig& c, Warnings* warnings = nullptr) {
    validate_config(c);
    check_inputs(c, true);
    prepare_output_dir(c);
    LabelResult res;
    const Corpus corpus = load_corpus_checked(c, warnings);
    const std::size_t unlabeled = unlabeled_reply_count(corpus);
    if (unlabeled == 0) {
        res.corpus = corpus;
    } else {
        TextClassifier model;
        if (!c.pair_model.empty()) {
            model = load_text_classifier(c.pair_model, 2);
        } else if (!c.pair_annotations.empty()) {
            const auto pairs = load_pair_annotations(c.pair_annotations);
            auto cfg = c.text_logreg;
            cfg.seed = c.seed;
            const auto data =
                pair_dataset(pairs, pair_manifest(c.text_classifier_dim, c.ngram_orders));
            res.cv = cross_validate_text(data, c, cfg);
            model = train_on_dataset(data, cfg);
            res.trained = true;
            save_artifact((std::filesystem::path(c.out) / "pair_model.json").string(),
                          ModelArtifact{model.manifest, model.model, c.seed, config_digest(c)});
            OutputFile f(c, "pair_classifier_cv.tsv", "label");
            f << "model\tfold\tprecision\trecall\tf1\n";
            write_cv_table(f, "pair_logreg", *res.cv);
            f.write();
        } else {
            throw UsageError("corpus has " + std::to_string(unlabeled) +
                             " unlabeled replies; set pair_annotations or pair_model");
        }
        res.corpus = label_replies(corpus, model, &res.filled);
    }
    nlohmann::ordered_json meta;
    meta["command"] = "label";
    meta["seed"] = c.seed;
    meta["config_digest"] = config_digest(c);
    meta["labels_filled"] = res.filled;
    OutputFile f(c, "labeled_corpus.jsonl", "label", false);
    write_corpus(f.stream(), res.corpus, &meta);
    f.write();
    return res;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalysisResult {
    Corpus corpus; // filtered, fully labeled
    AttributeTable table;
    StrataAssignment strata;
    std::vector<StratumGroups> groups;
    std::vector<AttributeComparison> comparisons;
    std::vector<std::string> significant;
};

inline std::size_t expected_attribute_count(const CategoryLexicon& categories) {
    return length_sentiment_attributes().size() + politeness_attributes().size() +
           categories.names().size() + engagement_attributes().size() +
           poster_attributes().size();
}

/// Filter, strata, quartile groups and every attribute comparison, in memory.
inline AnalysisResult run_analysis(const Corpus& corpus, const Resources& res, const RunConfig& c,
                                   Warnings* warnings) {
    AnalysisResult a;
    a.corpus = analysis_corpus(corpus, c, warnings);
    a.table = compute_attribute_table(a.corpus, res.context(), c.workers);
    if (a.table.names.size() != expected_attribute_count(res.categories)) {
        throw std::logic_error("attribute coverage does not match the attribute list");
    }
    a.strata = assign_strata(a.corpus, c.strata);
    a.groups = group_all_strata(a.corpus, a.strata, warnings);
    if (a.groups.empty()) {
        warn(warnings, "no stratum has enough tweets for a comparison");
    }
    a.comparisons.resize(a.table.names.size());
    parallel_for(a.table.names.size(), c.workers, [&](std::size_t col) {
        const auto& table = a.table;
        a.comparisons[col] = compare_attribute(
            table.names[col], [&](std::size_t i) { return table.rows[i][col]; }, a.groups);
    });
    a.significant = significant_attributes(a.comparisons, c.alpha);
    return a;
}

inline std::string stratum_label(const StratumSpec& s) {
    return std::to_string(s.lower) + "-" + std::to_string(s.upper);
}

/// Writes the comparison report, the significance list and one data table per figure.
inline AnalysisResult cmd_analyze(const RunConfig& c, Warnings* warnings = nullptr) {
    validate_config(c);
    check_inputs(c, true);
    prepare_output_dir(c);
    const Corpus corpus = load_corpus_checked(c, warnings);
    const Resources res = load_resources(c, warnings);
    AnalysisResult a = run_analysis(corpus, res, c, warnings);

    {
        OutputFile f(c, "analysis_report.tsv", "analyze");
        f << "attribute\tstratum\tn_high\tn_low\tmean_high\tmean_low\tt\tdf\tp\tcohen_d\n";
        for (const auto& cmp : a.comparisons) {
            for (const auto& s : cmp.strata) {
                f << cmp.attribute << '\t' << stratum_label(s.spec) << '\t' << s.n_high << '\t'
                  << s.n_low << '\t' << fmt(s.high ? std::optional(s.high->mean) : std::nullopt)
                  << '\t' << fmt(s.low ? std::optional(s.low->mean) : std::nullopt) << '\t';
                if (s.computed) {
                    f << fmt(s.welch.t) << '\t' << fmt(s.welch.df) << '\t' << fmt(s.welch.p)
                      << '\t' << fmt(s.cohen_d) << '\n';
                } else {
                    f << "NA\tNA\tNA\tNA\n";
                }
            }
            f << cmp.attribute << "\tpooled\t\t\t\t\t";
            if (cmp.pooled) {
                f << fmt(cmp.pooled->t) << '\t' << fmt(cmp.pooled->df) << '\t'
                  << fmt(cmp.pooled->p);
            } else {
                f << "NA\tNA\tNA";
            }
            f << '\t' << fmt(cmp.average_cohen_d) << '\n';
        }
        if (a.groups.empty()) {
            f << "# note: every stratum was empty or too small to compare\n";
        }
        f.write();
    }
    {
        OutputFile f(c, "significant_attributes.txt", "analyze");
        f << "# alpha=" << fmt(c.alpha) << '\n';
        for (const auto& n : a.significant) {
            f << n << '\n';
        }
        f.write();
    }
    {
        // Replies and counter-replies per tweet over the loaded corpus.
        std::map<std::int64_t, std::pair<std::size_t, std::size_t>> dist;
        for (const auto& t : corpus.tweets) {
            ++dist[t.reply_count()].first;
            if (t.fully_labeled()) {
                std::int64_t k = 0;
                for (const auto& r : t.replies) {
                    k += *r.counter_label ? 1 : 0;
                }
                ++dist[k].second;
            }
        }
        OutputFile f(c, "fig2_reply_distribution.tsv", "analyze");
        f << "count\ttweets_with_reply_count\ttweets_with_counter_reply_count\n";
        for (const auto& [k, v] : dist) {
            f << k << '\t' << v.first << '\t' << v.second << '\n';
        }
        f.write();
    }
    {
        OutputFile f(c, "fig3_counter_proportion_by_stratum.tsv", "analyze");
        f << "stratum\tn\tmin\tq1\tmedian\tq3\tmax\n";
        for (const auto& s : a.strata.strata) {
            std::vector<double> p;
            for (std::size_t i : s.tweets) {
                p.push_back(counter_proportion(a.corpus.tweets[i]));
            }
            f << stratum_label(s.spec) << '\t' << p.size();
            if (p.empty()) {
                f << "\tNA\tNA\tNA\tNA\tNA\n";
                continue;
            }
            std::sort(p.begin(), p.end());
            for (double q : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                f << '\t' << fmt(stats::quantile_sorted(p, q));
            }
            f << '\n';
        }
        f.write();
    }
    {
        OutputFile f(c, "fig4_group_sizes.tsv", "analyze");
        f << "stratum\tlow_countered\thighly_countered\tmiddle\tq1\tq3\n";
        for (const auto& g : a.groups) {
            f << stratum_label(g.spec) << '\t' << g.low.size() << '\t' << g.high.size() << '\t'
              << g.middle.size() << '\t' << fmt(g.cut.q1) << '\t' << fmt(g.cut.q3) << '\n';
        }
        f.write();
    }
    {
        OutputFile f(c, "fig5_stratum_means.tsv", "analyze");
        f << "attribute\tstratum\tgroup\tn\tmean\tci_lo\tci_hi\n";
        for (const auto& cmp : a.comparisons) {
            for (const auto& s : cmp.strata) {
                for (const auto& [name, ci, n] :
                     {std::tuple{"low_countered", s.low, s.n_low},
                      std::tuple{"highly_countered", s.high, s.n_high}}) {
                    f << cmp.attribute << '\t' << stratum_label(s.spec) << '\t' << name << '\t'
                      << n << '\t';
                    if (ci) {
                        f << fmt(ci->mean) << '\t' << fmt(ci->lo) << '\t' << fmt(ci->hi) << '\n';
                    } else {
                        f << "NA\tNA\tNA\n";
                    }
                }
            }
        }
        f.write();
    }
    return a;
}

// ---------------------------------------------------------------------------
// inequality

inline InequalityReport cmd_inequality(const RunConfig& c, Warnings* warnings = nullptr) {
    validate_config(c);
    check_inputs(c, true);
    prepare_output_dir(c);
    const Corpus corpus = load_corpus_checked(c, warnings);

    std::map<std::string, bool> countered;
    for (const auto& t : corpus.tweets) {
        if (t.reply_count() == 0 || !t.fully_labeled()) {
            continue;
        }
        auto& flag = countered[t.author_id];
        flag = flag || label_countered(t);
    }
    std::vector<std::string> ids;
    bool any_history = false;
    for (const auto& [id, flag] : countered) {
        auto it = corpus.posters.find(id);
        if (it != corpus.posters.end()) {
            ids.push_back(id);
            any_history = any_history || !it->second.history.empty();
        }
    }
    if (!any_history) {
        throw DataError("inequality: no poster histories in the corpus");
    }
    if (c.inequality_sample > ids.size()) {
        warn(warnings, "inequality: sample size " + std::to_string(c.inequality_sample) +
                           " exceeds the " + std::to_string(ids.size()) +
                           " eligible users; using all of them");
    } else {
        Rng rng(c.seed);
        rng.shuffle(ids);
        ids.resize(c.inequality_sample);
        std::sort(ids.begin(), ids.end());
    }
    std::vector<UserPoint> users(ids.size());
    parallel_for(ids.size(), c.workers, [&](std::size_t k) {
        users[k] = UserPoint{user_ari(corpus.posters.at(ids[k])), countered.at(ids[k])};
    });
    const auto report = inequality_trend(users, c.inequality_bins);

    OutputFile f(c, "inequality_report.tsv", "inequality");
    f << "# users=" << report.n_users << " fitted_bins=" << report.fitted_bins
      << " ari_p5=" << fmt(report.range_lo) << " ari_p95=" << fmt(report.range_hi) << '\n';
    f << "# slope=" << fmt(report.slope) << " intercept=" << fmt(report.intercept) << '\n';
    f << "bin\tari_lo\tari_hi\tn_users\tcountered_fraction\n";
    for (std::size_t b = 0; b < report.bins.size(); ++b) {
        const auto& bin = report.bins[b];
        f << b << '\t' << fmt(bin.ari_lo) << '\t' << fmt(bin.ari_hi) << '\t' << bin.n_users << '\t'
          << fmt(bin.countered_fraction) << '\n';
    }
    f.write();
    return report;
}

// ---------------------------------------------------------------------------
// train / evaluate / predict

struct TrainResult {
    LabeledDataset dataset;
    std::vector<std::string> significant;
    CvReport logreg;
    CvReport mlp;
};

inline std::vector<std::string> read_name_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot read " + path);
    }
    std::vector<std::string> names;
    std::string line;
    while (std::getline(in, line)) {
        line = config_detail::trim(line);
        if (!line.empty() && line[0] != '#') {
            names.push_back(line);
        }
    }
    return names;
}

inline LabeledDataset build_task_dataset(const Corpus& corpus, const AttributeTable& table,
                                         const FeatureManifest& manifest, const std::string& task,
                                         Warnings* warnings) {
    return task == "rq1" ? build_rq1_dataset(corpus, table, manifest)
                         : build_rq2_dataset(corpus, table, manifest, warnings);
}

inline std::vector<std::size_t> task_rows(const Corpus& corpus, const std::string& task) {
    return task == "rq1" ? rq1_rows(corpus) : rq2_rows(corpus).first;
}

inline ModelArtifact fit_final(const LabeledDataset& d, const Trainer& trainer, std::uint64_t seed,
                               const std::string& digest) {
    std::vector<std::size_t> all(d.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    FeatureManifest m = d.manifest;
    fit_standardization(d.raw, all, m);
    const Matrix x = standardized_rows(d.raw, all, m);
    return ModelArtifact{m, trainer(x, d.labels), seed, digest};
}

/// Builds the task dataset from the significant attributes, cross-validates
/// logistic regression and the network, and saves both models fitted on all rows.
inline TrainResult cmd_train(const RunConfig& c, Warnings* warnings = nullptr) {
    validate_config(c);
    check_inputs(c, true);
    prepare_output_dir(c);
    const Corpus corpus = load_corpus_checked(c, warnings);
    const Resources res = load_resources(c, warnings);

    TrainResult r;
    Corpus filtered;
    AttributeTable table;
    if (!c.significant_attributes.empty()) {
        r.significant = read_name_list(c.significant_attributes);
        filtered = analysis_corpus(corpus, c, warnings);
        table = compute_attribute_table(filtered, res.context(), c.workers);
    } else {
        auto a = run_analysis(corpus, res, c, warnings);
        r.significant = std::move(a.significant);
        filtered = std::move(a.corpus);
        table = std::move(a.table);
    }
    const auto rows = task_rows(filtered, c.task);
    const auto inputs = model_attributes(r.significant, table, rows, warnings);
    const auto manifest = make_manifest(c.task, "", inputs, c.text_dim, c.ngram_orders);
    r.dataset = build_task_dataset(filtered, table, manifest, c.task, warnings);
    if (r.dataset.size() == 0) {
        throw DataError(c.task + ": dataset is empty");
    }

    LogregConfig lcfg = c.logreg;
    lcfg.seed = c.seed;
    MlpConfig mcfg = c.mlp;
    mcfg.seed = c.seed;
    r.logreg = kfold_cv(r.dataset, c.folds, logreg_trainer(lcfg), c.seed, c.workers);
    r.mlp = kfold_cv(r.dataset, c.folds, mlp_trainer(mcfg), c.seed, c.workers);

    const auto digest = config_digest(c);
    const auto dir = std::filesystem::path(c.out);
    save_artifact((dir / ("model_" + c.task + "_logreg.json")).string(),
                  fit_final(r.dataset, logreg_trainer(lcfg), c.seed, digest));
    save_artifact((dir / ("model_" + c.task + "_mlp.json")).string(),
                  fit_final(r.dataset, mlp_trainer(mcfg), c.seed, digest));

    std::size_t positives = 0;
    for (int y : r.dataset.labels) {
        positives += y != 0 ? 1 : 0;
    }
    {
        OutputFile f(c, "metrics_" + c.task + ".tsv", "train");
        f << "# task=" << c.task << " positive_class=" << r.dataset.manifest.positive_class
          << " rows=" << r.dataset.size() << " positives=" << positives
          << " folds=" << c.folds << " dense_features=" << manifest.dense_size()
          << " text_dim=" << c.text_dim << '\n';
        f << "model\tprecision\trecall\tf1\n";
        for (const auto& [name, rep] : {std::pair{"logistic_regression", &r.logreg},
                                        std::pair{"neural_network", &r.mlp}}) {
            f << name << '\t' << fmt(rep->mean.precision) << '\t' << fmt(rep->mean.recall) << '\t'
              << fmt(rep->mean.f1) << '\n';
        }
        f.write();
    }
    {
        OutputFile f(c, "cv_folds_" + c.task + ".tsv", "train");
        f << "model\tfold\tprecision\trecall\tf1\n";
        write_cv_table(f, "logistic_regression", r.logreg);
        write_cv_table(f, "neural_network", r.mlp);
        f.write();
    }
    {
        OutputFile f(c, "features_" + c.task + ".txt", "train");
        for (const auto& n : manifest.dense_names) {
            f << n << '\n';
        }
        f.write();
    }
    return r;
}

inline ModelArtifact load_tweet_model(const RunConfig& c) {
    if (c.model.empty()) {
        throw UsageError("--model is required");
    }
    require_file(c.model, "model artifact");
    auto a = load_artifact(c.model);
    if (a.manifest.task != "rq1" && a.manifest.task != "rq2") {
        throw DataError(c.model + " is not a tweet-level model");
    }
    if (!a.manifest.fitted()) {
        throw DataError(c.model + " has no standardization statistics");
    }
    return a;
}

/// Metrics of a saved model on the labeled corpus of its task.
inline Metrics cmd_evaluate(const RunConfig& c, Warnings* warnings = nullptr) {
    validate_config(c);
    check_inputs(c, true);
    prepare_output_dir(c);
    const auto artifact = load_tweet_model(c);
    const Corpus corpus = load_corpus_checked(c, warnings);
    const Resources res = load_resources(c, warnings);
    const Corpus filtered = analysis_corpus(corpus, c, warnings);
    const auto table = compute_attribute_table(filtered, res.context(), c.workers);
    FeatureManifest unfitted = artifact.manifest;
    const auto d = build_task_dataset(filtered, table, unfitted, artifact.manifest.task, warnings);
    if (d.size() == 0) {
        throw DataError("evaluate: dataset is empty");
    }
    std::vector<int> pred(d.size());
    parallel_for(d.size(), c.workers, [&](std::size_t i) {
        std::vector<double> row(d.raw.row(i).begin(), d.raw.row(i).end());
        standardize_in_place(row, artifact.manifest);
        pred[i] = classify(artifact.model, row, c.threshold) ? 1 : 0;
    });
    const auto m = metrics(pred, d.labels);
    OutputFile f(c, "evaluate_" + artifact.manifest.task + ".tsv", "evaluate");
    f << "# model=" << std::filesystem::path(c.model).filename().string()
      << " rows=" << d.size() << " threshold=" << fmt(c.threshold) << '\n';
    f << "precision\trecall\tf1\n"
      << fmt(m.precision) << '\t' << fmt(m.recall) << '\t' << fmt(m.f1) << '\n';
    f.write();
    return m;
}

struct Prediction {
    std::string id;
    double probability = 0.0;
    bool label = false;
};

/// Scores every tweet of the corpus: id, probability, label at the threshold.
inline std::vector<Prediction> cmd_predict(const RunConfig& c, Warnings* warnings = nullptr) {
    validate_config(c);
    check_inputs(c, true);
    prepare_output_dir(c);
    const auto artifact = load_tweet_model(c);
    const Corpus corpus = load_corpus_checked(c, warnings);
    const Resources res = load_resources(c, warnings);
    const auto table = compute_attribute_table(corpus, res.context(), c.workers);
    std::vector<Prediction> out(corpus.tweets.size());
    parallel_for(corpus.tweets.size(), c.workers, [&](std::size_t i) {
        const auto& t = corpus.tweets[i];
        auto fv = raw_feature_vector(t.text, table.names, table.rows[i], artifact.manifest);
        standardize_in_place(fv.values, artifact.manifest);
        const double p = predict_proba(artifact.model, fv.values);
        out[i] = Prediction{t.id, p, p >= c.threshold};
    });
    OutputFile f(c, "predictions.tsv", "predict");
    f << "id\tprobability\tlabel\n";
    for (const auto& p : out) {
        f << p.id << '\t' << fmt(p.probability) << '\t' << (p.label ? 1 : 0) << '\n';
    }
    f.write();
    return out;
}

// ---------------------------------------------------------------------------
// generate

/// Writes a synthetic corpus and its seed annotations.
inline SynthOutput cmd_generate(const RunConfig& c) {
    validate_config(c);
    prepare_output_dir(c);
    SynthConfig s = c.synth;
    s.seed = c.seed;
    auto g = generate_synthetic(s);
    nlohmann::ordered_json meta;
    meta["command"] = "generate";
    meta["seed"] = c.seed;
    meta["config_digest"] = config_digest(c);
    meta["preset"] = c.synth_preset;
    {
        OutputFile f(c, "corpus.jsonl", "generate", false);
        write_corpus(f.stream(), g.corpus, &meta);
        f.write();
    }
    {
        OutputFile f(c, "pair_annotations.jsonl", "generate", false);
        write_pair_annotations(f.stream(), g.pairs, &meta);
        f.write();
    }
    {
        OutputFile f(c, "misinfo_annotations.jsonl", "generate", false);
        write_text_annotations(f.stream(), g.misinfo, &meta);
        f.write();
    }
    return g;
}

} // namespace socialcorr

#endif
