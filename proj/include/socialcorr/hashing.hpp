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

#ifndef SOCIALCORR_HASHING_HPP
#define SOCIALCORR_HASHING_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socialcorr/error.hpp"
#include "socialcorr/text.hpp"

namespace socialcorr {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline void validate_hashing(std::size_t dim, std::span<const int> ngram_orders) {
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw UsageError("text dimension must be a power of two >= 2, got " + std::to_string(dim));
    }
    if (ngram_orders.empty()) {
        throw UsageError("at least one n-gram order is required");
    }
    for (int n : ngram_orders) {
        if (n != 1 && n != 2) {
            throw UsageError("n-gram orders must be 1 or 2, got " + std::to_string(n));
        }
    }
}

/// Adds the signed-hash features of `text` into `out` (size = dim) and
/// L2-normalizes that block. Empty text leaves the block zero.
inline void hash_text_into(std::string_view text, std::span<double> out,
                           std::span<const int> ngram_orders) {
    std::vector<std::string> tokens;
    for (auto& t : word_tokens(text)) {
        tokens.push_back(ascii_lower(t));
    }
    const std::uint64_t mask = out.size() - 1;
    auto add = [&](const std::string& gram) {
        const std::uint64_t h = fnv1a64(gram);
        const double sign = (splitmix64(h) & 1ULL) != 0 ? 1.0 : -1.0;
        out[h & mask] += sign;
    };
    for (int order : ngram_orders) {
        if (order == 1) {
            for (const auto& t : tokens) {
                add(t);
            }
        } else {
            for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
                add(tokens[i] + ' ' + tokens[i + 1]);
            }
        }
    }
    double norm = 0.0;
    for (double v : out) {
        norm += v * v;
    }
    if (norm > 0.0) {
        norm = std::sqrt(norm);
        for (double& v : out) {
            v /= norm;
        }
    }
}

/// Signed feature hashing of case-folded word n-grams, L2-normalized.
inline std::vector<double> hashed_text_vector(std::string_view text, std::size_t dim,
                                              std::span<const int> ngram_orders) {
    validate_hashing(dim, ngram_orders);
    std::vector<double> v(dim, 0.0);
    hash_text_into(text, v, ngram_orders);
    return v;
}

} // namespace socialcorr

#endif
