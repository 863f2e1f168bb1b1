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

#ifndef SOCIALCORR_TESTS_FIXTURES_HPP
#define SOCIALCORR_TESTS_FIXTURES_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "socialcorr/socialcorr.hpp"

namespace fixture {

using namespace socialcorr;

inline TweetRecord tweet(const std::string& id, int replies, int counter,
                         ReplySetting setting = ReplySetting::everyone) {
    TweetRecord t;
    t.id = id;
    t.text = "tweet " + id;
    t.author_id = "u-" + id;
    t.created_at = 1609459200;
    t.reply_setting = setting;
    for (int r = 0; r < replies; ++r) {
        ReplyRecord reply;
        reply.id = id + "-r" + std::to_string(r);
        reply.text = "reply";
        reply.parent_id = id;
        reply.counter_label = r < counter;
        t.replies.push_back(reply);
    }
    return t;
}

inline const ValenceLexicon& valence() {
    static const ValenceLexicon v =
        ValenceLexicon::load(std::string(SOCIALCORR_DATA_DIR) + "/lexicons/vader_valence.tsv");
    return v;
}

inline const CategoryLexicon& categories() {
    static const CategoryLexicon c =
        CategoryLexicon::load(std::string(SOCIALCORR_DATA_DIR) + "/lexicons/categories_demo.txt");
    return c;
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("socialcorr_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace fixture

#endif
