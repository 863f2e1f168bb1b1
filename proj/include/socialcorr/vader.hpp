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

#ifndef SOCIALCORR_VADER_HPP
#define SOCIALCORR_VADER_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "socialcorr/lexicon.hpp"
#include "socialcorr/text.hpp"

namespace socialcorr {

// Rule-based valence scoring after Hutto & Gilbert (ICWSM 2014).
//
// Implemented rules: lexicon lookup, ALL-CAPS emphasis, booster/dampener
// words within three preceding tokens (damped 1, 0.95, 0.9 by distance),
// negation within three preceding tokens, and '!' amplification. Not
// implemented: idiom tables, "least"/"but" rules, question-mark emphasis,
// emoji and emoticon handling.

struct SentimentScores {
    double positive = 0.0;
    double negative = 0.0;
    double neutral = 0.0;
    double compound = 0.0;

    bool operator==(const SentimentScores&) const = default;
};

namespace vader {

inline constexpr double kBoosterIncrement = 0.293;
inline constexpr double kCapsIncrement = 0.733;
inline constexpr double kNegationScalar = -0.74;
inline constexpr double kExclamationIncrement = 0.292;
inline constexpr int kMaxExclamations = 3;
inline constexpr double kNormalizationAlpha = 15.0;

inline const std::unordered_set<std::string>& negations() {
    static const std::unordered_set<std::string> words = {
        "aint",    "arent",    "cannot",   "cant",     "couldnt",  "darent",   "didnt",
        "doesnt",  "ain't",    "aren't",   "can't",    "couldn't", "daren't",  "didn't",
        "doesn't", "dont",     "hadnt",    "hasnt",    "havent",   "isnt",     "mightnt",
        "mustnt",  "neither",  "don't",    "hadn't",   "hasn't",   "haven't",  "isn't",
        "mightn't", "mustn't", "neednt",   "needn't",  "never",    "none",     "nope",
        "nor",     "not",      "nothing",  "nowhere",  "oughtnt",  "shant",    "shouldnt",
        "uhuh",    "wasnt",    "werent",   "oughtn't", "shan't",   "shouldn't", "uh-uh",
        "wasn't",  "weren't",  "without",  "wont",     "wouldnt",  "won't",    "wouldn't",
        "rarely",  "seldom",   "despite"};
    return words;
}

inline const std::unordered_map<std::string, double>& boosters() {
    static const std::unordered_map<std::string, double> words = [] {
        std::unordered_map<std::string, double> m;
        for (const char* w :
             {"absolutely", "amazingly", "awfully", "completely", "considerable", "considerably",
              "decidedly", "deeply", "effing", "enormous", "enormously", "entirely", "especially",
              "exceptional", "exceptionally", "extreme", "extremely", "fabulously", "flipping",
              "flippin", "frackin", "fracking", "fricking", "frickin", "frigging", "friggin",
              "fully", "fuckin", "fucking", "fuggin", "fugging", "greatly", "hella", "highly",
              "hugely", "incredible", "incredibly", "intensely", "major", "majorly", "more", "most",
              "particularly", "purely", "quite", "really", "remarkably", "so", "substantially",
              "thoroughly", "total", "totally", "tremendous", "tremendously", "uber",
              "unbelievably", "unusually", "utter", "utterly", "very"}) {
            m.emplace(w, kBoosterIncrement);
        }
        for (const char* w :
             {"almost", "barely", "hardly", "kinda", "kindof", "kind-of", "less", "little",
              "marginal", "marginally", "occasional", "occasionally", "partly", "scarce",
              "scarcely", "slight", "slightly", "somewhat", "sorta", "sortof", "sort-of"}) {
            m.emplace(w, -kBoosterIncrement);
        }
        return m;
    }();
    return words;
}

inline bool is_negation(const std::string& lower) {
    return negations().contains(lower) || lower.find("n't") != std::string::npos;
}

/// score / sqrt(score^2 + alpha), clamped to [-1, 1].
inline double normalize(double score) {
    const double v = score / std::sqrt(score * score + kNormalizationAlpha);
    return std::clamp(v, -1.0, 1.0);
}

inline double booster_shift(const std::string& word, const std::string& lower, double valence,
                            bool cap_differential) {
    auto it = boosters().find(lower);
    if (it == boosters().end()) {
        return 0.0;
    }
    double scalar = valence < 0 ? -it->second : it->second;
    if (cap_differential && is_all_caps(word)) {
        scalar += valence > 0 ? kCapsIncrement : -kCapsIncrement;
    }
    return scalar;
}

} // namespace vader

/// Per-token valences after modifier rules; exposed for testing.
inline std::vector<double> vader_token_valences(const std::vector<std::string>& words,
                                                const ValenceLexicon& lexicon) {
    std::vector<std::string> lower;
    lower.reserve(words.size());
    std::size_t caps = 0;
    for (const auto& w : words) {
        lower.push_back(ascii_lower(w));
        caps += is_all_caps(w) ? 1 : 0;
    }
    const bool cap_differential = caps > 0 && caps < words.size();

    std::vector<double> valences;
    valences.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (vader::boosters().contains(lower[i]) ||
            (lower[i] == "kind" && i + 1 < words.size() && lower[i + 1] == "of")) {
            valences.push_back(0.0);
            continue;
        }
        const double* base = lexicon.find(lower[i]);
        if (base == nullptr) {
            valences.push_back(0.0);
            continue;
        }
        double valence = *base;
        if (cap_differential && is_all_caps(words[i])) {
            valence += valence > 0 ? vader::kCapsIncrement : -vader::kCapsIncrement;
        }
        for (std::size_t dist = 0; dist < 3 && dist < i; ++dist) {
            const std::size_t j = i - dist - 1;
            if (lexicon.contains(lower[j])) {
                continue;
            }
            double shift = vader::booster_shift(words[j], lower[j], valence, cap_differential);
            if (dist == 1) {
                shift *= 0.95;
            } else if (dist == 2) {
                shift *= 0.9;
            }
            valence += shift;
            if (vader::is_negation(lower[j])) {
                valence *= vader::kNegationScalar;
            }
        }
        valences.push_back(valence);
    }
    return valences;
}

inline SentimentScores vader_scores(std::string_view text, const ValenceLexicon& lexicon) {
    const auto words = word_tokens(text);
    if (words.empty()) {
        return {};
    }
    const auto valences = vader_token_valences(words, lexicon);

    const auto bangs = std::count(text.begin(), text.end(), '!');
    const double amplifier =
        static_cast<double>(std::min<long>(bangs, vader::kMaxExclamations)) *
        vader::kExclamationIncrement;

    double sum = 0.0;
    double pos_sum = 0.0;
    double neg_sum = 0.0;
    double neutral = 0.0;
    for (double v : valences) {
        sum += v;
        if (v > 0) {
            pos_sum += v + 1.0;
        } else if (v < 0) {
            neg_sum += v - 1.0;
        } else {
            neutral += 1.0;
        }
    }
    if (sum > 0) {
        sum += amplifier;
    } else if (sum < 0) {
        sum -= amplifier;
    }
    if (pos_sum > std::fabs(neg_sum)) {
        pos_sum += amplifier;
    } else if (pos_sum < std::fabs(neg_sum)) {
        neg_sum -= amplifier;
    }

    SentimentScores scores;
    scores.compound = vader::normalize(sum);
    const double total = pos_sum + std::fabs(neg_sum) + neutral;
    if (total > 0) {
        scores.positive = std::fabs(pos_sum / total);
        scores.negative = std::fabs(neg_sum / total);
        scores.neutral = std::fabs(neutral / total);
    }
    return scores;
}

} // namespace socialcorr

#endif
