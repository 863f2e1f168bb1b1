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

#ifndef SOCIALCORR_TIMEUTIL_HPP
#define SOCIALCORR_TIMEUTIL_HPP

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace socialcorr {

/// Seconds since the Unix epoch, UTC.
using EpochSeconds = std::int64_t;

inline constexpr EpochSeconds kSecondsPerDay = 86400;

namespace detail {

inline bool parse_int(std::string_view s, int& out) {
    if (s.empty()) {
        return false;
    }
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

} // namespace detail

/// Parses "YYYY-MM-DDTHH:MM:SS[.fff](Z|+00:00)". A space may replace the 'T'.
/// Fractional seconds are truncated. Non-UTC offsets are applied.
inline std::optional<EpochSeconds> parse_iso8601(std::string_view s) {
    if (s.size() < 19 || s[4] != '-' || s[7] != '-' || (s[10] != 'T' && s[10] != ' ') ||
        s[13] != ':' || s[16] != ':') {
        return std::nullopt;
    }
    int year, month, day, hour, minute, second;
    if (!detail::parse_int(s.substr(0, 4), year) || !detail::parse_int(s.substr(5, 2), month) ||
        !detail::parse_int(s.substr(8, 2), day) || !detail::parse_int(s.substr(11, 2), hour) ||
        !detail::parse_int(s.substr(14, 2), minute) ||
        !detail::parse_int(s.substr(17, 2), second)) {
        return std::nullopt;
    }
    if (hour > 23 || minute > 59 || second > 60) {
        return std::nullopt;
    }
    const std::chrono::year_month_day ymd{std::chrono::year{year},
                                          std::chrono::month{static_cast<unsigned>(month)},
                                          std::chrono::day{static_cast<unsigned>(day)}};
    if (!ymd.ok()) {
        return std::nullopt;
    }

    std::string_view rest = s.substr(19);
    if (!rest.empty() && rest.front() == '.') {
        std::size_t i = 1;
        while (i < rest.size() && rest[i] >= '0' && rest[i] <= '9') {
            ++i;
        }
        if (i == 1) {
            return std::nullopt;
        }
        rest.remove_prefix(i);
    }
    EpochSeconds offset = 0;
    if (rest == "Z" || rest.empty()) {
        offset = 0;
    } else if (rest.size() == 6 && (rest[0] == '+' || rest[0] == '-') && rest[3] == ':') {
        int oh, om;
        if (!detail::parse_int(rest.substr(1, 2), oh) ||
            !detail::parse_int(rest.substr(4, 2), om)) {
            return std::nullopt;
        }
        offset = (rest[0] == '+' ? 1 : -1) * (oh * 3600 + om * 60);
    } else {
        return std::nullopt;
    }

    const auto days = std::chrono::sys_days{ymd}.time_since_epoch().count();
    return static_cast<EpochSeconds>(days) * kSecondsPerDay + hour * 3600 + minute * 60 +
           second - offset;
}

/// Formats as "YYYY-MM-DDTHH:MM:SSZ".
inline std::string format_iso8601(EpochSeconds t) {
    EpochSeconds days = t / kSecondsPerDay;
    EpochSeconds secs = t % kSecondsPerDay;
    if (secs < 0) {
        secs += kSecondsPerDay;
        --days;
    }
    const std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{days}}};
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                  static_cast<int>(secs / 3600), static_cast<int>((secs % 3600) / 60),
                  static_cast<int>(secs % 60));
    return buf;
}

} // namespace socialcorr

#endif
