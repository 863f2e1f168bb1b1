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

#ifndef SOCIALCORR_ANNOTATIONS_HPP
#define SOCIALCORR_ANNOTATIONS_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "socialcorr/classifiers.hpp"
#include "socialcorr/error.hpp"

namespace socialcorr {

// Annotation files are JSON Lines:
//   pairs:   {"tweet_text": ..., "reply_text": ..., "counter_label": true|false}
//   misinfo: {"text": ..., "misinfo": true|false}
// Blank lines and {"kind": "meta"} records are ignored; any malformed line is
// a data error.

namespace detail {

template <typename Parse>
auto read_jsonl(std::istream& in, const std::string& what, Parse parse) {
    std::vector<decltype(parse(nlohmann::json{}))> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        try {
            const auto j = nlohmann::json::parse(line);
            if (j.is_object() && j.value("kind", "") == "meta") {
                continue;
            }
            out.push_back(parse(j));
        } catch (const nlohmann::json::exception& e) {
            throw DataError(what + " line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot read " + path);
    }
    return in;
}

} // namespace detail

inline std::vector<PairExample> parse_pair_annotations(std::istream& in) {
    return detail::read_jsonl(in, "pair annotations", [](const nlohmann::json& j) {
        return PairExample{j.at("tweet_text").get<std::string>(),
                           j.at("reply_text").get<std::string>(),
                           j.at("counter_label").get<bool>()};
    });
}

inline std::vector<TextExample> parse_text_annotations(std::istream& in) {
    return detail::read_jsonl(in, "misinfo annotations", [](const nlohmann::json& j) {
        return TextExample{j.at("text").get<std::string>(), j.at("misinfo").get<bool>()};
    });
}

inline std::vector<PairExample> load_pair_annotations(const std::string& path) {
    auto in = detail::open_input(path);
    return parse_pair_annotations(in);
}

inline std::vector<TextExample> load_text_annotations(const std::string& path) {
    auto in = detail::open_input(path);
    return parse_text_annotations(in);
}

inline void write_meta(std::ostream& out, const nlohmann::ordered_json* meta) {
    if (meta != nullptr) {
        nlohmann::ordered_json m;
        m["kind"] = "meta";
        for (const auto& [k, v] : meta->items()) {
            m[k] = v;
        }
        out << m.dump() << '\n';
    }
}

inline void write_pair_annotations(std::ostream& out, const std::vector<PairExample>& pairs,
                                   const nlohmann::ordered_json* meta = nullptr) {
    write_meta(out, meta);
    for (const auto& p : pairs) {
        nlohmann::ordered_json j;
        j["tweet_text"] = p.tweet_text;
        j["reply_text"] = p.reply_text;
        j["counter_label"] = p.counter;
        out << j.dump() << '\n';
    }
}

inline void write_text_annotations(std::ostream& out, const std::vector<TextExample>& examples,
                                   const nlohmann::ordered_json* meta = nullptr) {
    write_meta(out, meta);
    for (const auto& e : examples) {
        nlohmann::ordered_json j;
        j["text"] = e.text;
        j["misinfo"] = e.positive;
        out << j.dump() << '\n';
    }
}

} // namespace socialcorr

#endif
