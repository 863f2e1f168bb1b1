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

#ifndef SOCIALCORR_TEXT_HPP
#define SOCIALCORR_TEXT_HPP

#include <cstddef>
#include <cstdint>
#include <locale>
#include <string>
#include <string_view>
#include <vector>

namespace socialcorr {

inline std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) {
        if (c >= 'A' && c <= 'Z') {
            c = static_cast<char>(c - 'A' + 'a');
        }
    }
    return out;
}

enum class TokenKind { word, punct, url, mention };

struct Token {
    std::string text;
    std::size_t offset = 0; // byte offset into the source text
    TokenKind kind = TokenKind::word;

    bool is_word() const { return kind != TokenKind::punct; }
};

namespace detail {

inline bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline bool is_ascii_punct(char c) {
    const auto u = static_cast<unsigned char>(c);
    return (u >= 33 && u <= 47) || (u >= 58 && u <= 64) || (u >= 91 && u <= 96) ||
           (u >= 123 && u <= 126);
}

inline bool starts_with_ci(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) {
        return false;
    }
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        char c = s[i];
        if (c >= 'A' && c <= 'Z') {
            c = static_cast<char>(c - 'A' + 'a');
        }
        if (c != prefix[i]) {
            return false;
        }
    }
    return true;
}

inline bool is_url(std::string_view chunk) {
    return starts_with_ci(chunk, "http://") || starts_with_ci(chunk, "https://") ||
           starts_with_ci(chunk, "www.");
}

inline bool is_url_trailer(char c) {
    return c == '.' || c == ',' || c == '!' || c == '?' || c == ';' || c == ':' || c == '"' ||
           c == '\'' || c == ')';
}

inline void tokenize_chunk(std::string_view chunk, std::size_t base, std::vector<Token>& out) {
    if (is_url(chunk)) {
        std::size_t end = chunk.size();
        while (end > 0 && is_url_trailer(chunk[end - 1])) {
            --end;
        }
        out.push_back({std::string(chunk.substr(0, end)), base, TokenKind::url});
        for (std::size_t i = end; i < chunk.size(); ++i) {
            out.push_back({std::string(1, chunk[i]), base + i, TokenKind::punct});
        }
        return;
    }

    std::size_t begin = 0;
    bool mention = false;
    while (begin < chunk.size() && is_ascii_punct(chunk[begin])) {
        if (chunk[begin] == '@' && begin + 1 < chunk.size() && !is_ascii_punct(chunk[begin + 1])) {
            mention = true;
            break;
        }
        out.push_back({std::string(1, chunk[begin]), base + begin, TokenKind::punct});
        ++begin;
    }
    std::size_t end = chunk.size();
    while (end > begin && is_ascii_punct(chunk[end - 1])) {
        --end;
    }
    if (end > begin) {
        out.push_back({std::string(chunk.substr(begin, end - begin)), base + begin,
                       mention ? TokenKind::mention : TokenKind::word});
    }
    for (std::size_t i = end; i < chunk.size(); ++i) {
        out.push_back({std::string(1, chunk[i]), base + i, TokenKind::punct});
    }
}

} // namespace detail

/// Whitespace tokenizer. Leading and trailing ASCII punctuation is split off
/// one character per token; URLs and @mentions are kept whole. Case is kept.
inline std::vector<Token> tokenize_detailed(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && detail::is_ascii_space(text[i])) {
            ++i;
        }
        std::size_t j = i;
        while (j < text.size() && !detail::is_ascii_space(text[j])) {
            ++j;
        }
        if (j > i) {
            detail::tokenize_chunk(text.substr(i, j - i), i, tokens);
        }
        i = j;
    }
    return tokens;
}

inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    for (auto& t : tokenize_detailed(text)) {
        out.push_back(std::move(t.text));
    }
    return out;
}

/// Non-punctuation tokens only.
inline std::vector<std::string> word_tokens(std::string_view text) {
    std::vector<std::string> out;
    for (auto& t : tokenize_detailed(text)) {
        if (t.is_word()) {
            out.push_back(std::move(t.text));
        }
    }
    return out;
}

inline bool is_sentence_terminator(const Token& t) {
    return t.kind == TokenKind::punct && (t.text == "." || t.text == "!" || t.text == "?");
}

/// Token ranges [first, last) of each sentence, terminators excluded. Runs
/// of '.', '!' and '?' close a sentence; segments without a word are dropped.
inline std::vector<std::pair<std::size_t, std::size_t>> sentence_spans(
    const std::vector<Token>& tokens) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    std::size_t start = 0;
    bool has_word = false;
    for (std::size_t i = 0; i <= tokens.size(); ++i) {
        const bool boundary = i == tokens.size() || is_sentence_terminator(tokens[i]);
        if (boundary) {
            if (has_word) {
                spans.emplace_back(start, i);
            }
            start = i + 1;
            has_word = false;
        } else if (tokens[i].is_word()) {
            has_word = true;
        }
    }
    return spans;
}

inline std::vector<std::string> sentence_split(std::string_view text) {
    const auto tokens = tokenize_detailed(text);
    std::vector<std::string> sentences;
    for (const auto& [first, last] : sentence_spans(tokens)) {
        const std::size_t b = tokens[first].offset;
        const std::size_t e = tokens[last - 1].offset + tokens[last - 1].text.size();
        sentences.emplace_back(text.substr(b, e - b));
    }
    return sentences;
}

/// Decodes UTF-8; invalid bytes decode to U+FFFD.
inline std::u32string utf8_decode(std::string_view s) {
    std::u32string out;
    std::size_t i = 0;
    while (i < s.size()) {
        const auto c = static_cast<unsigned char>(s[i]);
        int len = 0;
        char32_t cp = 0;
        if (c < 0x80) {
            cp = c;
            len = 1;
        } else if ((c >> 5) == 0x6) {
            cp = c & 0x1F;
            len = 2;
        } else if ((c >> 4) == 0xE) {
            cp = c & 0x0F;
            len = 3;
        } else if ((c >> 3) == 0x1E) {
            cp = c & 0x07;
            len = 4;
        } else {
            out.push_back(0xFFFD);
            ++i;
            continue;
        }
        if (i + static_cast<std::size_t>(len) > s.size()) {
            out.push_back(0xFFFD);
            break;
        }
        bool ok = true;
        for (int k = 1; k < len; ++k) {
            const auto cc = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
            if ((cc >> 6) != 0x2) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (!ok) {
            out.push_back(0xFFFD);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += static_cast<std::size_t>(len);
    }
    return out;
}

namespace detail {

inline const std::locale& unicode_locale() {
    static const std::locale loc = [] {
        for (const char* name : {"C.UTF-8", "C.utf8", "en_US.UTF-8"}) {
            try {
                return std::locale(name);
            } catch (const std::runtime_error&) {
            }
        }
        return std::locale::classic();
    }();
    return loc;
}

} // namespace detail

/// Unicode alphanumeric test. Non-ASCII classification uses the system's
/// UTF-8 locale tables when available.
inline bool is_alnum_codepoint(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
    }
    if (cp == 0xFFFD || cp > 0x10FFFF) {
        return false;
    }
    return std::isalnum(static_cast<wchar_t>(cp), detail::unicode_locale());
}

inline std::size_t count_alnum(std::string_view s) {
    std::size_t n = 0;
    for (char32_t cp : utf8_decode(s)) {
        n += is_alnum_codepoint(cp) ? 1 : 0;
    }
    return n;
}

/// True iff the token has at least one cased letter and no lower-case ASCII letter.
inline bool is_all_caps(std::string_view token) {
    bool has_upper = false;
    for (char c : token) {
        if (c >= 'a' && c <= 'z') {
            return false;
        }
        has_upper = has_upper || (c >= 'A' && c <= 'Z');
    }
    return has_upper;
}

} // namespace socialcorr

#endif
