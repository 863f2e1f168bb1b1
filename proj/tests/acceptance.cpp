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

// Acceptance checks: one PASS/FAIL line per criterion. argv[1] is the CLI.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace socialcorr;
namespace fs = std::filesystem;

namespace {

// Tolerances and limits, pinned.
constexpr double kStatsTol = 1e-6;
constexpr double kStatsSeconds = 10.0;
constexpr int kStatsPairs = 1000;
constexpr double kWorkedExampleTol = 1e-4; // t and df printed to 4 decimals
constexpr double kAriTol = 1e-9;
constexpr double kVaderTol = 1e-9;
constexpr int kTokenLists = 10000;
constexpr double kPlantedAlpha = 0.001;
constexpr double kPlantedMinD = 0.2;
constexpr double kRq1MinF1 = 0.9;
constexpr double kTrainSeconds = 120.0;
constexpr double kLogregGradTol = 1e-4;
constexpr double kMlpGradTol = 1e-3;
constexpr int kGradientPoints = 100;
constexpr int kInequalitySeeds = 10;
constexpr std::size_t kInequalityTweets = 20000;
constexpr double kFlatRatio = 10.0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

using Seconds = std::chrono::duration<double>;

double since(std::chrono::steady_clock::time_point t0) {
    return Seconds(std::chrono::steady_clock::now() - t0).count();
}

std::string num(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

// ---------------------------------------------------------------------------

Outcome statistics() {
    Outcome o;
    std::mt19937_64 gen(20260101);
    std::uniform_int_distribution<int> size(2, 60);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> shift(-3, 3), scale(0.05, 20);
    double worst = 0.0;
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 0; k < kStatsPairs; ++k) {
        std::vector<double> a(static_cast<std::size_t>(size(gen)));
        std::vector<double> b(static_cast<std::size_t>(size(gen)));
        const double sa = scale(gen), sb = scale(gen), mu = shift(gen);
        for (auto& x : a) x = sa * g(gen);
        for (auto& x : b) x = mu + sb * g(gen);
        const auto r = stats::welch_t(a, b);
        const auto ref = oracle::welch(a, b);
        const double d = stats::cohen_d(a, b);
        const double dref = static_cast<double>(oracle::cohen_d(a, b));
        for (double err : {std::fabs(r.t - static_cast<double>(ref.t)),
                           std::fabs(r.df - static_cast<double>(ref.df)),
                           std::fabs(r.p - static_cast<double>(ref.p)), std::fabs(d - dref)}) {
            worst = std::max(worst, err);
        }
    }
    const double secs = since(t0);
    if (worst > kStatsTol) o.fail("max deviation " + num(worst));
    if (secs > kStatsSeconds) o.fail("took " + num(secs) + " s");

    const auto w = stats::welch_t(std::vector<double>{1, 2, 3}, std::vector<double>{4, 5, 6});
    const double d = stats::cohen_d(std::vector<double>{1, 2, 3}, std::vector<double>{4, 5, 6});
    if (std::fabs(w.t + 3.6742) > kWorkedExampleTol || std::fabs(w.df - 4.0) > kWorkedExampleTol ||
        d != -3.0) {
        o.fail("worked example t=" + num(w.t) + " df=" + num(w.df) + " d=" + num(d));
    }
    if (o.pass) {
        o.detail = std::to_string(kStatsPairs) + " pairs, max deviation " + num(worst) + ", " +
                   num(secs) + " s";
    }
    return o;
}

Outcome featurization() {
    Outcome o;
    const double a = ari("The cat sat.");
    if (std::fabs(a + 5.80) > kAriTol) o.fail("ARI " + num(a));

    const ValenceLexicon lex({{"x", 1.9}});
    const double single = vader_scores("x", lex).compound;
    const double negated = vader_scores("not x", lex).compound;
    const double want_single = 1.9 / std::sqrt(1.9 * 1.9 + 15.0);
    const double s = -0.74 * 1.9;
    const double want_negated = s / std::sqrt(s * s + 15.0);
    if (std::fabs(single - want_single) > kVaderTol) o.fail("single-token compound " + num(single));
    if (std::fabs(negated - want_negated) > kVaderTol) o.fail("negated compound " + num(negated));

    // Random token lists mixing lexicon words, stems with suffixes and noise.
    const auto& cats = fixture::categories();
    const auto spec = cats.categories();
    std::vector<std::string> vocab;
    for (const auto& [name, patterns] : spec) {
        for (const auto& p : patterns) {
            if (p.back() == '*') {
                const auto stem = p.substr(0, p.size() - 1);
                vocab.push_back(stem);
                vocab.push_back(stem + "ing");
                if (stem.size() > 1) vocab.push_back(stem.substr(0, stem.size() - 1));
            } else {
                vocab.push_back(p);
                vocab.push_back(p + "s");
            }
        }
    }
    std::mt19937 gen(77);
    std::uniform_int_distribution<int> len(0, 25), pick(0, static_cast<int>(vocab.size()) - 1),
        coin(0, 9), letter(0, 25);
    int mismatches = 0;
    for (int k = 0; k < kTokenLists; ++k) {
        std::vector<std::string> tokens(static_cast<std::size_t>(len(gen)));
        for (auto& t : tokens) {
            if (coin(gen) < 7) {
                t = vocab[static_cast<std::size_t>(pick(gen))];
                if (coin(gen) == 0) std::transform(t.begin(), t.end(), t.begin(), ::toupper);
            } else {
                for (int c = 0; c < 1 + coin(gen); ++c)
                    t.push_back(static_cast<char>('a' + letter(gen)));
            }
        }
        mismatches +=
            category_counts(tokens, cats) == oracle::category_counts(tokens, spec) ? 0 : 1;
    }
    if (mismatches > 0) o.fail(std::to_string(mismatches) + " category-count mismatches");
    if (o.pass) {
        o.detail = "ARI " + num(a) + ", compound " + num(single) + " / " + num(negated) + ", " +
                   std::to_string(kTokenLists) + " token lists agree";
    }
    return o;
}

// Corpus whose tweets have distinct counter proportions within every stratum.
Corpus distinct_proportion_corpus(std::mt19937& gen) {
    Corpus c;
    int id = 0;
    for (const auto& spec : default_strata()) {
        std::vector<std::pair<std::int64_t, std::int64_t>> fractions; // (k, n), reduced
        std::set<std::pair<std::int64_t, std::int64_t>> seen;
        for (std::int64_t n = spec.lower; n <= spec.upper; ++n) {
            for (std::int64_t k = 0; k <= n; ++k) {
                const auto g = std::gcd(k, n);
                if (seen.insert({k / g, n / g}).second) fractions.push_back({k, n});
            }
        }
        std::shuffle(fractions.begin(), fractions.end(), gen);
        const std::size_t take =
            std::min<std::size_t>(fractions.size(), 4 + gen() % 60);
        for (std::size_t i = 0; i < take; ++i) {
            const auto [k, n] = fractions[i];
            c.tweets.push_back(fixture::tweet("d" + std::to_string(100000 + id++),
                                              static_cast<int>(n), static_cast<int>(k)));
        }
    }
    // A tail above the last band so the top-2% cut has something to remove.
    for (int i = 0; i < 20; ++i) {
        c.tweets.push_back(fixture::tweet("z" + std::to_string(100000 + id++), 60 + i, i));
    }
    std::shuffle(c.tweets.begin(), c.tweets.end(), gen);
    return c;
}

using Grouping = std::map<std::string, std::pair<std::int64_t, CounterGroup>>;

Grouping grouping_by_id(const Corpus& c) {
    Grouping out;
    const auto assignment = assign_strata(c);
    for (const auto& g : group_all_strata(c, assignment)) {
        for (auto [list, group] : {std::pair{&g.high, CounterGroup::HighlyCountered},
                                   std::pair{&g.low, CounterGroup::LowCountered},
                                   std::pair{&g.middle, CounterGroup::Middle}}) {
            for (std::size_t i : *list) out[c.tweets[i].id] = {g.spec.lower, group};
        }
    }
    return out;
}

Outcome stratification() {
    Outcome o;
    std::mt19937 gen(5);
    std::size_t strata_checked = 0, tweets_checked = 0;
    for (int round = 0; round < 20; ++round) {
        Corpus raw;
        if (round % 2 == 0) {
            raw = distinct_proportion_corpus(gen);
        } else {
            SynthConfig s;
            s.n_tweets = 1500;
            s.seed = static_cast<std::uint64_t>(round);
            raw = generate_synthetic(s).corpus;
        }
        const Corpus c = filter_for_analysis(raw);
        const auto a = assign_strata(c);
        // Partition of [3, 50].
        std::map<std::size_t, int> hits;
        for (const auto& s : a.strata) {
            for (std::size_t i : s.tweets) {
                ++hits[i];
                if (!s.spec.contains(c.tweets[i].reply_count())) o.fail("tweet in the wrong band");
            }
        }
        for (std::size_t i = 0; i < c.tweets.size(); ++i) {
            const auto n = c.tweets[i].reply_count();
            const int want = (n >= 3 && n <= 50) ? 1 : 0;
            if (hits[i] != want) o.fail("reply count " + std::to_string(n) + " not partitioned");
            ++tweets_checked;
        }
        // Quartile group sizes.
        for (const auto& g : group_all_strata(c, a)) {
            const auto n = g.high.size() + g.low.size() + g.middle.size();
            std::vector<double> p;
            for (auto* list : {&g.high, &g.low, &g.middle}) {
                for (std::size_t i : *list) p.push_back(counter_proportion(c.tweets[i]));
            }
            std::sort(p.begin(), p.end());
            const bool distinct = std::adjacent_find(p.begin(), p.end()) == p.end();
            const auto quarter = static_cast<long>((n + 3) / 4);
            if (distinct) {
                for (std::size_t size : {g.high.size(), g.low.size()}) {
                    if (std::labs(static_cast<long>(size) - quarter) > 1) {
                        o.fail("stratum " + std::to_string(g.spec.lower) + " group of " +
                               std::to_string(size) + " for n=" + std::to_string(n));
                    }
                }
                ++strata_checked;
            }
            for (std::size_t i : g.high) {
                if (counter_proportion(c.tweets[i]) < g.cut.q3) o.fail("high member below Q3");
            }
            for (std::size_t i : g.low) {
                if (counter_proportion(c.tweets[i]) > g.cut.q1) o.fail("low member above Q1");
            }
        }
        // Permutation invariance.
        const auto base = grouping_by_id(c);
        Corpus shuffled = c;
        std::shuffle(shuffled.tweets.begin(), shuffled.tweets.end(), gen);
        if (grouping_by_id(shuffled) != base) o.fail("assignment changed under permutation");
    }
    if (o.pass) {
        o.detail = std::to_string(tweets_checked) + " tweets partitioned, " +
                   std::to_string(strata_checked) + " distinct-p strata sized within 1";
    }
    return o;
}

// Planted workspace shared by the end-to-end and ordering checks.
struct Planted {
    RunConfig config;
    AnalysisResult analysis;
    TrainResult rq1;
    TrainResult rq2;
    double rq1_seconds = 0.0;
};

Planted run_planted() {
    const auto dir = fixture::scratch("acceptance_planted");
    RunConfig g;
    g.out = dir.string();
    g.seed = 1;
    cmd_generate(g);
    Planted p;
    p.config = g;
    p.config.corpus = (dir / "corpus.jsonl").string();
    p.config.misinfo_annotations = (dir / "misinfo_annotations.jsonl").string();
    p.config.out = (dir / "analysis").string();
    p.analysis = cmd_analyze(p.config);
    RunConfig t = p.config;
    t.out = (dir / "train").string();
    t.task = "rq1";
    const auto t0 = std::chrono::steady_clock::now();
    p.rq1 = cmd_train(t);
    p.rq1_seconds = since(t0);
    t.task = "rq2";
    p.rq2 = cmd_train(t);
    return p;
}

Outcome planted_end_to_end(const Planted& p) {
    Outcome o;
    std::string detail;
    for (const char* name : {"liwc_anger", "following_count"}) {
        const auto it =
            std::find_if(p.analysis.comparisons.begin(), p.analysis.comparisons.end(),
                         [&](const AttributeComparison& c) { return c.attribute == name; });
        if (it == p.analysis.comparisons.end() || !it->pooled || !it->average_cohen_d) {
            o.fail(std::string(name) + " not compared");
            continue;
        }
        const double pv = it->pooled->p, d = *it->average_cohen_d;
        if (!(pv < kPlantedAlpha)) o.fail(std::string(name) + " pooled p " + num(pv));
        if (!(d > kPlantedMinD)) o.fail(std::string(name) + " average d " + num(d));
        detail += std::string(name) + " p=" + num(pv) + " d=" + num(d) + ", ";
    }
    const double f1 = p.rq1.logreg.mean.f1;
    if (f1 < kRq1MinF1) o.fail("rq1 logistic F1 " + num(f1));
    if (p.rq1_seconds > kTrainSeconds) o.fail("train took " + num(p.rq1_seconds) + " s");
    if (o.pass) o.detail = detail + "rq1 F1 " + num(f1) + " in " + num(p.rq1_seconds) + " s";
    return o;
}

Outcome rq2_below_rq1(const Planted& p) {
    Outcome o;
    const double l1 = p.rq1.logreg.mean.f1, l2 = p.rq2.logreg.mean.f1;
    const double m1 = p.rq1.mlp.mean.f1, m2 = p.rq2.mlp.mean.f1;
    if (!(l2 < l1)) o.fail("logistic rq2 " + num(l2) + " >= rq1 " + num(l1));
    if (!(m2 < m1)) o.fail("network rq2 " + num(m2) + " >= rq1 " + num(m1));
    if (o.pass) {
        o.detail =
            "logistic " + num(l2) + " < " + num(l1) + ", network " + num(m2) + " < " + num(m1);
    }
    return o;
}

Outcome gradients() {
    Outcome o;
    std::mt19937_64 gen(99);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u;
    double worst_lr = 0.0, worst_mlp = 0.0;
    for (int point = 0; point < kGradientPoints; ++point) {
        const std::size_t n = 8 + point % 9, d = 3 + point % 5;
        Matrix x(n, d);
        for (auto& v : x.data) v = u(gen) < 0.3 ? 0.0 : g(gen);
        std::vector<int> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = (i % 2 == 0) ? 1 : 0;
        const double l2 = 0.02 * (point % 3);

        LinearModel lm;
        lm.weights.resize(d);
        for (auto& w : lm.weights) w = g(gen);
        lm.bias = g(gen);
        auto params = lm.weights;
        params.push_back(lm.bias);
        const auto f = [&](const std::vector<double>& p) {
            LinearModel q;
            q.weights.assign(p.begin(), p.end() - 1);
            q.bias = p.back();
            return logreg_objective(q, x, y, l2);
        };
        worst_lr =
            std::max(worst_lr, oracle::max_relative_error(logreg_gradient(lm, x, y, l2),
                                                          oracle::numeric_gradient(f, params)));

        MlpConfig cfg;
        cfg.hidden = 2 + point % 6;
        cfg.seed = static_cast<std::uint64_t>(1000 + point);
        MlpModel mm = init_mlp(d, cfg);
        for (auto& b : mm.b1) b = 0.3 * g(gen);
        mm.b2 = 0.3 * g(gen);
        const auto fm = [&](const std::vector<double>& p) {
            MlpModel q = mm;
            set_mlp_parameters(q, p);
            return mlp_objective(q, x, y, l2);
        };
        worst_mlp =
            std::max(worst_mlp,
                     oracle::max_relative_error(mlp_gradient(mm, x, y, l2),
                                                oracle::numeric_gradient(fm, mlp_parameters(mm))));
    }
    if (!(worst_lr < kLogregGradTol)) o.fail("logistic max relative error " + num(worst_lr));
    if (!(worst_mlp < kMlpGradTol)) o.fail("network max relative error " + num(worst_mlp));
    if (o.pass) {
        o.detail = std::to_string(kGradientPoints) + " points, logistic " + num(worst_lr) +
                   ", network " + num(worst_mlp);
    }
    return o;
}

double inequality_slope(const std::string& preset, std::uint64_t seed) {
    const auto dir = fixture::scratch("acceptance_inequality");
    RunConfig c;
    apply_setting(c, "synth.preset", preset);
    c.synth.n_tweets = kInequalityTweets;
    c.inequality_sample = kInequalityTweets;
    c.seed = seed;
    c.out = dir.string();
    cmd_generate(c);
    c.corpus = (dir / "corpus.jsonl").string();
    return cmd_inequality(c).slope;
}

Outcome inequality() {
    Outcome o;
    double max_planted = -1e9, max_flat_ratio = 0.0;
    for (std::uint64_t seed = 1; seed <= kInequalitySeeds; ++seed) {
        const double planted = inequality_slope("inequality", seed);
        const double flat = inequality_slope("flat", seed);
        max_planted = std::max(max_planted, planted);
        if (!(planted < 0.0)) o.fail("seed " + std::to_string(seed) + " slope " + num(planted));
        const double ratio = std::fabs(flat) / std::fabs(planted);
        max_flat_ratio = std::max(max_flat_ratio, ratio);
        if (!(std::fabs(flat) * kFlatRatio < std::fabs(planted))) {
            o.fail("seed " + std::to_string(seed) + " flat " + num(flat) + " vs planted " +
                   num(planted));
        }
    }
    if (o.pass) {
        o.detail = std::to_string(kInequalitySeeds) +
                   " seeds, planted slopes <= " + num(max_planted) + ", largest |flat|/|planted| " +
                   num(max_flat_ratio);
    }
    return o;
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
        if (e.is_regular_file()) {
            files[fs::relative(e.path(), dir).string()] = fixture::slurp(e.path());
        }
    }
    return files;
}

int run(const std::string& cmd) {
    const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome determinism(const std::string& cli) {
    Outcome o;
    const auto root = fixture::scratch("acceptance_determinism");
    std::ofstream(root / "run.conf") << "synth.n_tweets = 400\n"
                                        "synth.unlabeled_fraction = 0.1\n"
                                        "pair_annotations = ws/gen/pair_annotations.jsonl\n"
                                        "misinfo_annotations = ws/gen/misinfo_annotations.jsonl\n";
    const std::string conf = " --config " + (root / "run.conf").string() + " --seed 11";
    const std::string ws = (root / "ws").string();
    const std::string labeled =
        " --corpus " + ws + "/out/labeled_corpus.jsonl --out " + ws + "/out";
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"generate", " --out " + ws + "/gen"},
        {"label", " --corpus " + ws + "/gen/corpus.jsonl --out " + ws + "/out"},
        {"analyze", labeled},
        {"inequality", labeled},
        {"train", labeled},
        {"evaluate", labeled + " --model " + ws + "/out/model_rq1_logreg.json"},
        {"predict", labeled + " --model " + ws + "/out/model_rq1_mlp.json"},
    };
    std::vector<std::map<std::string, std::string>> runs;
    for (int r = 0; r < 2; ++r) {
        fs::remove_all(ws);
        for (const auto& [name, args] : commands) {
            const int rc = run(cli + " " + name + conf + args);
            if (rc != 0) o.fail(name + " exited " + std::to_string(rc));
        }
        runs.push_back(snapshot(ws));
    }
    std::size_t differing = 0;
    for (const auto& [name, text] : runs[0]) {
        const auto it = runs[1].find(name);
        if (it == runs[1].end() || it->second != text) {
            ++differing;
            o.fail(name + " differs between runs");
        }
    }
    if (runs[0].size() != runs[1].size()) o.fail("different file sets");
    if (o.pass) {
        o.detail = std::to_string(commands.size()) + " commands, " +
                   std::to_string(runs[0].size()) + " output files byte-identical";
    }
    return o;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path to socialcorr CLI>\n";
        return 2;
    }
    const std::string cli = argv[1];
    int failures = 0;
    auto report = [&](const std::string& name, const std::function<Outcome()>& check) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " ["
                  << num(since(t0)) << " s]" << std::endl;
    };

    report("statistics oracle equivalence", statistics);
    report("featurization oracles", featurization);
    report("stratification invariants", stratification);
    // Shared by two criteria; run once, on first use.
    std::optional<Planted> planted;
    std::string planted_error;
    bool planted_tried = false;
    auto with_planted = [&](Outcome (*check)(const Planted&)) {
        return [&, check]() {
            if (!planted_tried) {
                planted_tried = true;
                try {
                    planted = run_planted();
                } catch (const std::exception& e) {
                    planted_error = e.what();
                }
            }
            if (!planted) {
                Outcome o;
                o.fail("planted run failed: " + planted_error);
                return o;
            }
            return check(*planted);
        };
    };
    report("planted-signal end-to-end", with_planted(planted_end_to_end));
    report("gradient checks", gradients);
    report("inequality trend", inequality);
    report("determinism", [&] { return determinism(cli); });
    report("rq2 below rq1", with_planted(rq2_below_rq1));

    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
