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

#ifndef SOCIALCORR_TEXTFEAT_HPP
#define SOCIALCORR_TEXTFEAT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "socialcorr/error.hpp"
#include "socialcorr/lexicon.hpp"
#include "socialcorr/politeness.hpp"
#include "socialcorr/text.hpp"
#include "socialcorr/vader.hpp"

namespace socialcorr {

/// Automated Readability Index:
///   4.71 * (alphanumeric code points / words) + 0.5 * (words / sentences) - 21.43
/// Punctuation-only tokens are not words. Throws UndefinedInput when the text
/// has no words.
inline double ari(std::string_view text) {
    const auto tokens = tokenize_detailed(text);
    std::size_t words = 0;
    std::size_t chars = 0;
    for (const auto& t : tokens) {
        if (t.is_word()) {
            ++words;
            chars += count_alnum(t.text);
        }
    }
    const std::size_t sentences = sentence_spans(tokens).size();
    if (words == 0 || sentences == 0) {
        throw UndefinedInput("ari: text has no words");
    }
    const double w = static_cast<double>(words);
    return 4.71 * (static_cast<double>(chars) / w) + 0.5 * (w / static_cast<double>(sentences)) -
           21.43;
}

inline std::optional<double> try_ari(std::string_view text) {
    try {
        return ari(text);
    } catch (const UndefinedInput&) {
        return std::nullopt;
    }
}

/// The tweet-level linguistic attribute family.
struct LinguisticFeatures {
    std::int64_t word_count = 0;
    SentimentScores sentiment;
    PolitenessProfile politeness;
    std::map<std::string, std::int64_t> category_counts;
    std::optional<double> ari;

    bool operator==(const LinguisticFeatures&) const = default;
};

inline LinguisticFeatures linguistic_features(std::string_view text,
                                              const ValenceLexicon& valence,
                                              const CategoryLexicon& categories) {
    LinguisticFeatures f;
    const auto words = word_tokens(text);
    f.word_count = static_cast<std::int64_t>(words.size());
    f.sentiment = vader_scores(text, valence);
    f.politeness = politeness_profile(text);
    f.category_counts = category_counts(words, categories);
    f.ari = try_ari(text);
    return f;
}

} // namespace socialcorr

#endif
