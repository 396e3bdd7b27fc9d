#pragma once

#include <compare>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "netlab/text.hpp"

namespace netlab {

/// Calendar date, ISO-8601 rendered. Only validity and the year matter to the
/// pipeline; no timezone or settlement logic.
struct Date {
    int year = 0;
    int month = 1;
    int day = 1;

    friend auto operator<=>(const Date&, const Date&) = default;

    static bool is_leap(int y) {
        return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    }

    static int days_in_month(int y, int m) {
        static constexpr int table[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
        if (m == 2 && is_leap(y)) return 29;
        return table[m - 1];
    }

    static int days_in_year(int y) { return is_leap(y) ? 366 : 365; }

    bool valid() const {
        return year >= 1 && month >= 1 && month <= 12 && day >= 1 &&
               day <= days_in_month(year, month);
    }

    static std::optional<Date> try_parse(std::string_view s) {
        if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
        auto y = parse_int<int>(s.substr(0, 4));
        auto m = parse_int<int>(s.substr(5, 2));
        auto d = parse_int<int>(s.substr(8, 2));
        if (!y || !m || !d) return std::nullopt;
        Date date{*y, *m, *d};
        if (!date.valid()) return std::nullopt;
        return date;
    }

    std::string str() const {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
        return std::string(buf);
    }

    /// Date at zero-based day offset within a year (0 = Jan 1).
    static Date from_day_of_year(int y, int day_index) {
        Date d{y, 1, 1};
        int remaining = day_index;
        while (remaining >= days_in_month(y, d.month)) {
            remaining -= days_in_month(y, d.month);
            ++d.month;
        }
        d.day = 1 + remaining;
        return d;
    }
};

/// Time of day "HH:MM:SS"; optional everywhere (yearly aggregation never uses it).
struct TimeOfDay {
    int hour = 0;
    int minute = 0;
    int second = 0;

    friend auto operator<=>(const TimeOfDay&, const TimeOfDay&) = default;

    bool valid() const {
        return hour >= 0 && hour < 24 && minute >= 0 && minute < 60 && second >= 0 &&
               second < 60;
    }

    static std::optional<TimeOfDay> try_parse(std::string_view s) {
        if (s.size() != 8 || s[2] != ':' || s[5] != ':') return std::nullopt;
        auto h = parse_int<int>(s.substr(0, 2));
        auto m = parse_int<int>(s.substr(3, 2));
        auto sec = parse_int<int>(s.substr(6, 2));
        if (!h || !m || !sec) return std::nullopt;
        TimeOfDay t{*h, *m, *sec};
        if (!t.valid()) return std::nullopt;
        return t;
    }

    std::string str() const {
        char buf[12];
        std::snprintf(buf, sizeof buf, "%02d:%02d:%02d", hour, minute, second);
        return std::string(buf);
    }
};

}  // namespace netlab
