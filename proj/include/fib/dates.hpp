#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fib {

// ISO-8601 calendar date backed by std::chrono::sys_days. All arithmetic
// is in calendar days: time targets count days on the calendar, not bars.
class Date {
public:
    Date() : days_(std::chrono::sys_days{}) {}
    static Date parse(std::string_view iso); // strict YYYY-MM-DD, validated
    static Date from_ymd(int year, unsigned month, unsigned day);

    std::string str() const; // YYYY-MM-DD
    Date plus_days(std::int64_t n) const;
    std::int64_t operator-(const Date& o) const; // signed calendar days

    auto operator<=>(const Date&) const = default;

private:
    explicit Date(std::chrono::sys_days d) : days_(d) {}
    std::chrono::sys_days days_;
};

} // namespace fib
