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

#ifndef SOCIALCORR_LEXICON_HPP
#define SOCIALCORR_LEXICON_HPP

#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "socialcorr/error.hpp"
#include "socialcorr/text.hpp"

namespace socialcorr {

/// Lower-case token -> valence in [-4, 4].
class ValenceLexicon {
public:
    ValenceLexicon() = default;

    explicit ValenceLexicon(std::unordered_map<std::string, double> entries)
        : entries_(std::move(entries)) {}

    /// "token<TAB>valence" per line. Extra tab-separated columns are ignored.
    static ValenceLexicon parse(std::istream& in) {
        std::unordered_map<std::string, double> entries;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.empty() || line[0] == '#') {
                continue;
            }
            const auto tab = line.find('\t');
            if (tab == std::string::npos || tab == 0) {
                throw DataError("valence lexicon line " + std::to_string(lineno) +
                                ": expected token<TAB>valence");
            }
            const auto end = line.find('\t', tab + 1);
            const std::string value =
                line.substr(tab + 1, end == std::string::npos ? end : end - tab - 1);
            double v = 0.0;
            try {
                std::size_t used = 0;
                v = std::stod(value, &used);
                if (used != value.size()) {
                    throw std::invalid_argument(value);
                }
            } catch (const std::exception&) {
                throw DataError("valence lexicon line " + std::to_string(lineno) +
                                ": bad valence '" + value + "'");
            }
            if (v < -4.0 || v > 4.0) {
                throw DataError("valence lexicon line " + std::to_string(lineno) +
                                ": valence outside [-4, 4]");
            }
            entries[ascii_lower(line.substr(0, tab))] = v;
        }
        return ValenceLexicon(std::move(entries));
    }

    static ValenceLexicon load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw DataError("cannot read valence lexicon: " + path);
        }
        return parse(in);
    }

    /// Looks up an already lower-cased token.
    const double* find(const std::string& lower_token) const {
        auto it = entries_.find(lower_token);
        return it == entries_.end() ? nullptr : &it->second;
    }

    bool contains(const std::string& lower_token) const { return entries_.contains(lower_token); }

    std::size_t size() const { return entries_.size(); }

private:
    std::unordered_map<std::string, double> entries_;
};

/// Named word categories. A pattern is a literal token or a prefix ending in '*'.
class CategoryLexicon {
public:
    CategoryLexicon() = default;

    explicit CategoryLexicon(std::map<std::string, std::vector<std::string>> categories)
        : categories_(std::move(categories)) {
        build_index();
    }

    /// "[category]" headers followed by one pattern per line; '#' comments.
    static CategoryLexicon parse(std::istream& in) {
        std::map<std::string, std::vector<std::string>> categories;
        std::string current;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos || line[b] == '#') {
                continue;
            }
            const auto e = line.find_last_not_of(" \t\r");
            const std::string entry = line.substr(b, e - b + 1);
            if (entry.front() == '[') {
                if (entry.back() != ']' || entry.size() < 3) {
                    throw DataError("category lexicon line " + std::to_string(lineno) +
                                    ": malformed header");
                }
                current = entry.substr(1, entry.size() - 2);
                if (categories.contains(current)) {
                    throw DataError("category lexicon: duplicate category '" + current + "'");
                }
                categories[current];
                continue;
            }
            if (current.empty()) {
                throw DataError("category lexicon line " + std::to_string(lineno) +
                                ": pattern before any [category] header");
            }
            categories[current].push_back(ascii_lower(entry));
        }
        return CategoryLexicon(std::move(categories));
    }

    static CategoryLexicon load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw DataError("cannot read category lexicon: " + path);
        }
        return parse(in);
    }

    const std::map<std::string, std::vector<std::string>>& categories() const {
        return categories_;
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& [name, patterns] : categories_) {
            out.push_back(name);
        }
        return out;
    }

    /// Indices (into names()) of the categories a lower-cased token belongs to.
    std::vector<std::size_t> match(std::string_view lower_token) const {
        std::set<std::size_t> hits;
        if (auto it = literal_.find(std::string(lower_token)); it != literal_.end()) {
            hits.insert(it->second.begin(), it->second.end());
        }
        for (std::size_t len = 0; len <= lower_token.size() && len <= max_prefix_; ++len) {
            if (auto it = prefix_.find(std::string(lower_token.substr(0, len)));
                it != prefix_.end()) {
                hits.insert(it->second.begin(), it->second.end());
            }
        }
        return {hits.begin(), hits.end()};
    }

private:
    void build_index() {
        std::size_t index = 0;
        for (const auto& [name, patterns] : categories_) {
            if (name.empty()) {
                throw DataError("category lexicon: empty category name");
            }
            for (const auto& p : patterns) {
                if (p.empty() || p == "*") {
                    throw DataError("category lexicon: empty pattern in '" + name + "'");
                }
                const auto star = p.find('*');
                if (star != std::string::npos && star != p.size() - 1) {
                    throw DataError("category lexicon: '*' must be the final character in '" +
                                    p + "'");
                }
                if (star == std::string::npos) {
                    literal_[p].push_back(index);
                } else {
                    const std::string stem = p.substr(0, star);
                    prefix_[stem].push_back(index);
                    max_prefix_ = std::max(max_prefix_, stem.size());
                }
            }
            ++index;
        }
    }

    std::map<std::string, std::vector<std::string>> categories_;
    std::unordered_map<std::string, std::vector<std::size_t>> literal_;
    std::unordered_map<std::string, std::vector<std::size_t>> prefix_;
    std::size_t max_prefix_ = 0;
};

/// Per-category count of tokens (case-folded here) that match the category.
/// A token counts at most once per category and may count in several.
inline std::map<std::string, std::int64_t> category_counts(std::span<const std::string> tokens,
                                                           const CategoryLexicon& lexicon) {
    const auto names = lexicon.names();
    std::vector<std::int64_t> counts(names.size(), 0);
    for (const auto& token : tokens) {
        for (std::size_t c : lexicon.match(ascii_lower(token))) {
            ++counts[c];
        }
    }
    std::map<std::string, std::int64_t> out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        out.emplace(names[i], counts[i]);
    }
    return out;
}

} // namespace socialcorr

#endif
