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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "socialcorr/socialcorr.hpp"

namespace {

using namespace socialcorr;

struct Overrides {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::size_t> workers;
    std::optional<std::string> task;
    std::optional<std::string> model;
    std::optional<std::string> corpus;
    std::optional<std::string> preset;
};

RunConfig resolve(const Overrides& o) {
    RunConfig c;
    if (!o.config.empty()) {
        apply_config_file(c, o.config);
    }
    if (o.preset) apply_setting(c, "synth.preset", *o.preset);
    if (o.corpus) c.corpus = *o.corpus;
    if (o.model) c.model = *o.model;
    if (o.out) c.out = *o.out;
    if (o.task) c.task = *o.task;
    if (o.seed) c.seed = *o.seed;
    if (o.workers) c.workers = *o.workers;
    return c;
}

void print_warnings(const Warnings& w) {
    for (const auto& m : w) {
        std::cerr << "warning: " << m << '\n';
    }
}

void print_cv(const char* name, const CvReport& r) {
    std::cout << name << ": precision=" << fmt(r.mean.precision) << " recall=" << fmt(r.mean.recall)
              << " f1=" << fmt(r.mean.f1) << '\n';
}

int run(const std::string& command, const RunConfig& c) {
    Warnings warnings;
    if (command == "label") {
        const auto r = cmd_label(c, &warnings);
        std::cout << "labels filled: " << r.filled << '\n';
        if (r.cv) {
            print_cv("pair classifier", *r.cv);
        }
    } else if (command == "analyze") {
        const auto a = cmd_analyze(c, &warnings);
        std::cout << "tweets analyzed: " << a.corpus.tweets.size()
                  << ", significant attributes: " << a.significant.size() << '\n';
    } else if (command == "inequality") {
        const auto r = cmd_inequality(c, &warnings);
        std::cout << "users: " << r.n_users << ", slope: " << fmt(r.slope) << '\n';
    } else if (command == "train") {
        const auto r = cmd_train(c, &warnings);
        std::cout << c.task << " rows: " << r.dataset.size() << '\n';
        print_cv("logistic regression", r.logreg);
        print_cv("neural network", r.mlp);
    } else if (command == "evaluate") {
        const auto m = cmd_evaluate(c, &warnings);
        std::cout << "precision=" << fmt(m.precision) << " recall=" << fmt(m.recall)
                  << " f1=" << fmt(m.f1) << '\n';
    } else if (command == "predict") {
        const auto p = cmd_predict(c, &warnings);
        std::cout << "tweets scored: " << p.size() << '\n';
    } else if (command == "generate") {
        const auto g = cmd_generate(c);
        std::cout << "tweets generated: " << g.corpus.tweets.size() << '\n';
    }
    print_warnings(warnings);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Social-correction analysis pipeline for misinformation replies"};
    app.require_subcommand(1, 1);
    Overrides o;

    const std::pair<const char*, const char*> commands[] = {
        {"label", "Fill missing counter-reply labels with the pair classifier"},
        {"analyze", "Stratified Highly vs Low Countered attribute comparison"},
        {"inequality", "Countering rate against poster readability"},
        {"train", "Cross-validate and train the rq1/rq2 classifiers"},
        {"evaluate", "Score a saved model on a labeled corpus"},
        {"predict", "Per-tweet probabilities from a saved model"},
        {"generate", "Write a synthetic corpus with seed annotations"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--config", o.config, "Key = value configuration file")
            ->check(CLI::ExistingFile);
        sub->add_option("--seed", o.seed, "Random seed");
        sub->add_option("--out", o.out, "Output directory");
        sub->add_option("--workers", o.workers, "Worker threads (results do not depend on it)");
        sub->add_option("--task", o.task, "Prediction task")->check(CLI::IsMember({"rq1", "rq2"}));
        sub->add_option("--corpus", o.corpus, "Corpus file (JSON Lines)");
        if (std::string(name) == "evaluate" || std::string(name) == "predict") {
            sub->add_option("--model", o.model, "Model artifact");
        }
        if (std::string(name) == "generate") {
            sub->add_option("--preset", o.preset, "planted, inequality or flat");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const RunConfig c = resolve(o);
        return run(app.get_subcommands().front()->get_name(), c);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
