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

#ifndef SOCIALCORR_POLITENESS_HPP
#define SOCIALCORR_POLITENESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "socialcorr/text.hpp"

namespace socialcorr {

// Surface-pattern detection of the request politeness strategies of
// Danescu-Niculescu-Mizil et al. (ACL 2013). Strategies that need a
// dependency parse are approximated by token positions within a sentence.

struct PolitenessProfile {
    std::map<std::string, std::int64_t> strategy_counts;
    std::int64_t politeness_score = 0;
    std::int64_t impoliteness_score = 0;

    bool operator==(const PolitenessProfile&) const = default;
};

namespace politeness {

inline const std::vector<std::string>& positive_strategies() {
    static const std::vector<std::string> names = {
        "apologizing", "deference",   "first_person_plural", "gratitude", "greeting",
        "hedges",      "indirect",    "please",              "positive_lexicon"};
    return names;
}

inline const std::vector<std::string>& negative_strategies() {
    static const std::vector<std::string> names = {
        "direct_question", "direct_start",  "factuality",         "negative_lexicon",
        "please_start",    "second_person", "second_person_start"};
    return names;
}

using WordSet = std::unordered_set<std::string>;

inline const WordSet& gratitude_words() {
    static const WordSet w = {"thank", "thanks", "thankful", "appreciate", "appreciated"};
    return w;
}

inline const WordSet& deference_starts() {
    static const WordSet w = {"great", "good", "nice", "interesting", "cool", "excellent",
                              "awesome"};
    return w;
}

inline const WordSet& greetings() {
    static const WordSet w = {"hi", "hello", "hey"};
    return w;
}

inline const WordSet& hedge_words() {
    static const WordSet w = {"think",     "thought",  "believe",    "suggest",  "suggested",
                              "guess",     "maybe",    "perhaps",    "possibly", "probably",
                              "apparently", "seem",    "seems",      "seemed",   "somewhat",
                              "suppose",   "presumably", "likely",   "unlikely", "assume",
                              "might"};
    return w;
}

inline const WordSet& apology_words() {
    static const WordSet w = {"sorry", "oops", "whoops", "woops", "apologies"};
    return w;
}

inline const WordSet& first_plural() {
    static const WordSet w = {"we", "our", "us", "ours", "ourselves"};
    return w;
}

inline const WordSet& second_person() {
    static const WordSet w = {"you", "your", "yours", "yourself", "yourselves"};
    return w;
}

inline const WordSet& question_starts() {
    static const WordSet w = {"what", "why", "who", "how"};
    return w;
}

inline const WordSet& direct_starts() {
    static const WordSet w = {"so", "then", "and", "but", "or"};
    return w;
}

inline const WordSet& positive_words() {
    static const WordSet w = {
        "accurate",  "admire",     "amazing",   "appreciative", "awesome",  "beautiful",
        "benefit",   "best",       "brilliant", "calm",         "careful",  "clear",
        "comfort",   "confident",  "correct",   "delight",      "earnest",  "easy",
        "effective", "encourage",  "enjoy",     "excellent",    "fair",     "fantastic",
        "favorable", "fine",       "fortunate", "friendly",     "generous", "glad",
        "good",      "grateful",   "great",     "happy",        "helpful",  "honest",
        "hope",      "ideal",      "important", "impressive",   "kind",     "love",
        "lucky",     "nice",       "perfect",   "pleasant",     "pleased",  "positive",
        "precious",  "protect",    "reasonable", "reliable",    "right",    "safe",
        "smart",     "strong",     "success",   "support",      "true",     "trust",
        "valuable",  "welcome",    "well",      "wise",         "wonderful", "worth"};
    return w;
}

inline const WordSet& negative_words() {
    static const WordSet w = {
        "absurd",    "afraid",    "angry",     "annoying",  "awful",    "bad",
        "blame",     "broken",    "corrupt",   "crap",      "crazy",    "dangerous",
        "dead",      "deadly",    "disaster",  "disgusting", "dumb",    "evil",
        "fail",      "failed",    "fake",      "false",     "fear",     "fool",
        "fraud",     "garbage",   "harm",      "harmful",   "hate",     "hoax",
        "horrible",  "idiot",     "idiots",    "ignorant",  "kill",     "killing",
        "liar",      "liars",     "lie",       "lies",      "lying",    "mad",
        "nonsense",  "pathetic",  "poison",    "poisoned",  "ridiculous", "sad",
        "scam",      "scary",     "shame",     "sick",      "stupid",   "terrible",
        "threat",    "toxic",     "ugly",      "useless",   "worse",    "worst",
        "wrong"};
    return w;
}

} // namespace politeness

inline PolitenessProfile politeness_profile(std::string_view text) {
    using namespace politeness;
    PolitenessProfile profile;
    for (const auto& name : positive_strategies()) {
        profile.strategy_counts[name] = 0;
    }
    for (const auto& name : negative_strategies()) {
        profile.strategy_counts[name] = 0;
    }
    auto& counts = profile.strategy_counts;

    const auto tokens = tokenize_detailed(text);
    for (const auto& [first, last] : sentence_spans(tokens)) {
        std::vector<std::string> w;
        for (std::size_t i = first; i < last; ++i) {
            if (tokens[i].is_word()) {
                w.push_back(ascii_lower(tokens[i].text));
            }
        }
        const std::size_t n = w.size();
        // Second-person tokens consumed by "thank you" / "could you".
        std::vector<bool> consumed(n, false);

        for (std::size_t i = 0; i < n; ++i) {
            const std::string& t = w[i];
            const std::string* prev = i > 0 ? &w[i - 1] : nullptr;
            const std::string* next = i + 1 < n ? &w[i + 1] : nullptr;

            if (gratitude_words().contains(t)) {
                ++counts["gratitude"];
                if (next != nullptr && (*next == "you" || *next == "u")) {
                    consumed[i + 1] = true;
                }
            }
            if (t == "please" || t == "pls" || t == "plz") {
                ++counts[i == 0 ? "please_start" : "please"];
            }
            if ((t == "could" || t == "would") && next != nullptr && *next == "you") {
                ++counts["indirect"];
                consumed[i + 1] = true;
            }
            if (hedge_words().contains(t)) {
                ++counts["hedges"];
            }
            if (apology_words().contains(t) ||
                ((t == "apologize" || t == "apologise") && prev != nullptr && *prev == "i")) {
                ++counts["apologizing"];
            }
            if (first_plural().contains(t)) {
                ++counts["first_person_plural"];
            }
            if (positive_words().contains(t)) {
                ++counts["positive_lexicon"];
            }
            if (negative_words().contains(t)) {
                ++counts["negative_lexicon"];
            }
            if (t == "actually" || (t == "fact" && prev != nullptr && *prev == "in") ||
                (t == "is" && prev != nullptr && (*prev == "truth" || *prev == "reality") &&
                 i >= 2 && w[i - 2] == "the")) {
                ++counts["factuality"];
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!consumed[i] && second_person().contains(w[i])) {
                ++counts[i == 0 ? "second_person_start" : "second_person"];
            }
        }
        if (n > 0) {
            const std::string& head = w[0];
            if (deference_starts().contains(head)) {
                ++counts["deference"];
            }
            if (greetings().contains(head)) {
                ++counts["greeting"];
            }
            if (question_starts().contains(head)) {
                ++counts["direct_question"];
            }
            if (direct_starts().contains(head)) {
                ++counts["direct_start"];
            }
        }
    }

    for (const auto& name : positive_strategies()) {
        profile.politeness_score += counts[name];
    }
    for (const auto& name : negative_strategies()) {
        profile.impoliteness_score += counts[name];
    }
    return profile;
}

} // namespace socialcorr

#endif
