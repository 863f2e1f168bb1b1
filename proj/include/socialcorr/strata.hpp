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

#ifndef SOCIALCORR_STRATA_HPP
#define SOCIALCORR_STRATA_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "socialcorr/corpus.hpp"
#include "socialcorr/error.hpp"
#include "socialcorr/stats.hpp"

namespace socialcorr {

/// Inclusive reply-count band.
struct StratumSpec {
    std::int64_t lower = 0;
    std::int64_t upper = 0;

    bool contains(std::int64_t n) const { return n >= lower && n <= upper; }
    auto operator<=>(const StratumSpec&) const = default;
};

/// [3, 5], [6, 10], [11, 15], ..., [46, 50].
inline std::vector<StratumSpec> default_strata() {
    std::vector<StratumSpec> specs = {{3, 5}};
    for (std::int64_t lo = 6; lo <= 46; lo += 5) {
        specs.push_back({lo, lo + 4});
    }
    return specs;
}

inline void validate_strata(std::span<const StratumSpec> specs) {
    if (specs.empty()) {
        throw UsageError("strata: at least one stratum is required");
    }
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (specs[i].lower > specs[i].upper) {
            throw UsageError("strata: lower bound exceeds upper bound");
        }
        if (i > 0 && specs[i].lower <= specs[i - 1].upper) {
            throw UsageError("strata: bands must be ordered and disjoint");
        }
    }
}

struct Stratum {
    StratumSpec spec;
    std::vector<std::size_t> tweets; // indices into Corpus::tweets
};

struct StrataAssignment {
    std::vector<Stratum> strata;
    std::size_t excluded_above = 0; // reply count above the last band
    std::size_t excluded_other = 0; // below the first band or in a gap
};

inline StrataAssignment assign_strata(const Corpus& corpus,
                                      std::span<const StratumSpec> specs) {
    validate_strata(specs);
    StrataAssignment out;
    for (const auto& s : specs) {
        out.strata.push_back({s, {}});
    }
    for (std::size_t i = 0; i < corpus.tweets.size(); ++i) {
        const auto n = corpus.tweets[i].reply_count();
        auto it = std::find_if(out.strata.begin(), out.strata.end(),
                               [&](const Stratum& s) { return s.spec.contains(n); });
        if (it != out.strata.end()) {
            it->tweets.push_back(i);
        } else if (n > specs.back().upper) {
            ++out.excluded_above;
        } else {
            ++out.excluded_other;
        }
    }
    return out;
}

inline StrataAssignment assign_strata(const Corpus& corpus) {
    const auto specs = default_strata();
    return assign_strata(corpus, specs);
}

enum class CounterGroup { HighlyCountered, LowCountered, Middle };

struct QuartileCut {
    double q1 = 0.0;
    double q3 = 0.0;
};

/// Groups values by their quartile position: <= Q1 is Low, >= Q3 is High.
/// A value satisfying both (Q1 == Q3) is Middle.
inline std::vector<CounterGroup> classify_quartiles(std::span<const double> p,
                                                    QuartileCut* cut = nullptr) {
    std::vector<double> sorted(p.begin(), p.end());
    std::sort(sorted.begin(), sorted.end());
    const QuartileCut c{stats::quantile_sorted(sorted, 0.25), stats::quantile_sorted(sorted, 0.75)};
    if (cut != nullptr) {
        *cut = c;
    }
    std::vector<CounterGroup> groups;
    groups.reserve(p.size());
    for (double v : p) {
        const bool low = v <= c.q1;
        const bool high = v >= c.q3;
        if (low && high) {
            groups.push_back(CounterGroup::Middle);
        } else if (low) {
            groups.push_back(CounterGroup::LowCountered);
        } else if (high) {
            groups.push_back(CounterGroup::HighlyCountered);
        } else {
            groups.push_back(CounterGroup::Middle);
        }
    }
    return groups;
}

struct GroupAssignment {
    std::string tweet_id;
    StratumSpec stratum;
    CounterGroup group = CounterGroup::Middle;
};

struct StratumGroups {
    StratumSpec spec;
    QuartileCut cut;
    std::vector<std::size_t> high;
    std::vector<std::size_t> low;
    std::vector<std::size_t> middle;
};

inline constexpr std::size_t kMinStratumSize = 4;

/// Quartile grouping of one stratum's tweets by p(m).
inline std::vector<GroupAssignment> group_quartiles(const Corpus& corpus, const Stratum& stratum,
                                                    Warnings* warnings = nullptr,
                                                    StratumGroups* groups_out = nullptr) {
    if (stratum.tweets.size() < kMinStratumSize) {
        warn(warnings, "stratum [" + std::to_string(stratum.spec.lower) + ", " +
                           std::to_string(stratum.spec.upper) + "] skipped: fewer than 4 tweets");
        return {};
    }
    std::vector<double> p;
    p.reserve(stratum.tweets.size());
    for (std::size_t i : stratum.tweets) {
        p.push_back(counter_proportion(corpus.tweets[i]));
    }
    QuartileCut cut;
    const auto groups = classify_quartiles(p, &cut);
    if (cut.q1 == cut.q3) {
        warn(warnings, "stratum [" + std::to_string(stratum.spec.lower) + ", " +
                           std::to_string(stratum.spec.upper) +
                           "]: Q1 equals Q3; tied tweets assigned to Middle");
    }
    std::vector<GroupAssignment> out;
    StratumGroups sg{stratum.spec, cut, {}, {}, {}};
    for (std::size_t k = 0; k < stratum.tweets.size(); ++k) {
        const std::size_t i = stratum.tweets[k];
        out.push_back({corpus.tweets[i].id, stratum.spec, groups[k]});
        switch (groups[k]) {
        case CounterGroup::HighlyCountered:
            sg.high.push_back(i);
            break;
        case CounterGroup::LowCountered:
            sg.low.push_back(i);
            break;
        case CounterGroup::Middle:
            sg.middle.push_back(i);
            break;
        }
    }
    if (groups_out != nullptr) {
        *groups_out = std::move(sg);
    }
    return out;
}

/// Quartile groups for every stratum with at least four tweets.
inline std::vector<StratumGroups> group_all_strata(const Corpus& corpus,
                                                   const StrataAssignment& strata,
                                                   Warnings* warnings = nullptr) {
    std::vector<StratumGroups> out;
    for (const auto& s : strata.strata) {
        StratumGroups g;
        if (!group_quartiles(corpus, s, warnings, &g).empty()) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

struct StratumComparison {
    StratumSpec spec;
    std::size_t n_high = 0;
    std::size_t n_low = 0;
    std::optional<stats::MeanCi> high;
    std::optional<stats::MeanCi> low;
    bool computed = false;
    stats::WelchResult welch;
    double cohen_d = 0.0;
};

struct AttributeComparison {
    std::string attribute;
    std::vector<StratumComparison> strata;
    std::optional<double> average_cohen_d;
    std::optional<stats::WelchResult> pooled;

    std::optional<double> pooled_p() const {
        return pooled ? std::optional<double>(pooled->p) : std::nullopt;
    }
};

/// Attribute value of the tweet at a corpus index; nullopt when missing.
using AttributeExtractor = std::function<std::optional<double>(std::size_t)>;

/// Highly vs Low Countered comparison per stratum, plus the pooled
/// upper-vs-lower quartile test over all strata.
inline AttributeComparison compare_attribute(std::string attribute,
                                             const AttributeExtractor& extractor,
                                             std::span<const StratumGroups> groups) {
    AttributeComparison out;
    out.attribute = std::move(attribute);
    std::vector<double> all_high;
    std::vector<double> all_low;
    double d_sum = 0.0;
    std::size_t d_n = 0;

    auto collect = [&](const std::vector<std::size_t>& idx) {
        std::vector<double> v;
        for (std::size_t i : idx) {
            if (auto x = extractor(i)) {
                v.push_back(*x);
            }
        }
        return v;
    };

    for (const auto& g : groups) {
        StratumComparison sc;
        sc.spec = g.spec;
        const auto high = collect(g.high);
        const auto low = collect(g.low);
        sc.n_high = high.size();
        sc.n_low = low.size();
        if (high.size() >= 2) {
            sc.high = stats::mean_ci95(high);
        }
        if (low.size() >= 2) {
            sc.low = stats::mean_ci95(low);
        }
        try {
            sc.welch = stats::welch_t(high, low);
            sc.cohen_d = stats::cohen_d(high, low);
            sc.computed = true;
            d_sum += sc.cohen_d;
            ++d_n;
        } catch (const DataError&) {
            sc.computed = false;
        }
        all_high.insert(all_high.end(), high.begin(), high.end());
        all_low.insert(all_low.end(), low.begin(), low.end());
        out.strata.push_back(std::move(sc));
    }
    if (d_n > 0) {
        out.average_cohen_d = d_sum / static_cast<double>(d_n);
    }
    try {
        out.pooled = stats::welch_t(all_high, all_low);
    } catch (const DataError&) {
        out.pooled.reset();
    }
    return out;
}

/// Names with pooled p strictly below alpha, sorted.
inline std::vector<std::string>
significant_attributes(std::span<const AttributeComparison> comparisons, double alpha = 0.001) {
    std::vector<std::string> names;
    for (const auto& c : comparisons) {
        if (auto p = c.pooled_p(); p && *p < alpha) {
            names.push_back(c.attribute);
        }
    }
    std::sort(names.begin(), names.end());
    return names;
}

// ---------------------------------------------------------------------------
// Readability inequality

struct UserPoint {
    std::optional<double> ari;
    bool countered = false;
};

struct InequalityBin {
    double ari_lo = 0.0;
    double ari_hi = 0.0;
    std::size_t n_users = 0;
    double countered_fraction = 0.0;
};

struct InequalityReport {
    std::vector<InequalityBin> bins;
    double range_lo = 0.0; // 5th percentile of user ARI
    double range_hi = 0.0; // 95th percentile of user ARI
    std::size_t n_users = 0;
    std::size_t fitted_bins = 0;
    double slope = 0.0;
    double intercept = 0.0;
};

inline constexpr std::size_t kMinUsersPerFittedBin = 5;

/// Countered fraction per equal-width ARI bin over [p5, p95] (users outside
/// are clamped into the end bins) and the OLS slope of fraction on bin
/// midpoint, fitted over bins with at least five users.
inline InequalityReport inequality_trend(std::span<const UserPoint> users, std::size_t n_bins) {
    if (n_bins < 2) {
        throw UsageError("inequality_trend: need at least 2 bins");
    }
    std::vector<double> aris;
    for (const auto& u : users) {
        if (u.ari) {
            aris.push_back(*u.ari);
        }
    }
    if (aris.empty()) {
        throw DataError("inequality_trend: no user has a defined ARI");
    }
    if (aris.size() < 2) {
        throw DataError("inequality_trend: need at least 2 users with a defined ARI");
    }
    std::sort(aris.begin(), aris.end());

    InequalityReport r;
    r.range_lo = stats::quantile_sorted(aris, 0.05);
    r.range_hi = stats::quantile_sorted(aris, 0.95);
    if (!(r.range_hi > r.range_lo)) {
        throw DataError("inequality_trend: ARI range is degenerate");
    }
    const double width = (r.range_hi - r.range_lo) / static_cast<double>(n_bins);
    std::vector<std::size_t> n(n_bins, 0);
    std::vector<std::size_t> countered(n_bins, 0);
    for (const auto& u : users) {
        if (!u.ari) {
            continue;
        }
        const double pos = std::floor((*u.ari - r.range_lo) / width);
        const auto b =
            static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(n_bins - 1)));
        ++n[b];
        countered[b] += u.countered ? 1 : 0;
        ++r.n_users;
    }

    std::vector<double> mids;
    std::vector<double> fracs;
    for (std::size_t b = 0; b < n_bins; ++b) {
        InequalityBin bin;
        bin.ari_lo = r.range_lo + width * static_cast<double>(b);
        bin.ari_hi = b + 1 == n_bins ? r.range_hi : r.range_lo + width * static_cast<double>(b + 1);
        bin.n_users = n[b];
        bin.countered_fraction =
            n[b] > 0 ? static_cast<double>(countered[b]) / static_cast<double>(n[b]) : 0.0;
        if (n[b] >= kMinUsersPerFittedBin) {
            mids.push_back(0.5 * (bin.ari_lo + bin.ari_hi));
            fracs.push_back(bin.countered_fraction);
        }
        r.bins.push_back(bin);
    }
    r.fitted_bins = mids.size();
    if (mids.size() < 2) {
        throw DataError("inequality_trend: fewer than 2 bins with enough users; slope undefined");
    }
    const auto fit = stats::ols(mids, fracs);
    r.slope = fit.slope;
    r.intercept = fit.intercept;
    return r;
}

} // namespace socialcorr

#endif
