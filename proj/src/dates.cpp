#include "fib/dates.hpp"

#include <cstdio>

#include "fib/error.hpp"

namespace fib {

namespace {

bool all_digits(std::string_view s) {
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return !s.empty();
}

int to_int(std::string_view s) {
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

} // namespace

Date Date::parse(std::string_view iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-' ||
        !all_digits(iso.substr(0, 4)) || !all_digits(iso.substr(5, 2)) ||
        !all_digits(iso.substr(8, 2)))
        throw DomainError("malformed date (want YYYY-MM-DD): '" + std::string(iso) + "'");
    return from_ymd(to_int(iso.substr(0, 4)), to_int(iso.substr(5, 2)),
                    to_int(iso.substr(8, 2)));
}

Date Date::from_ymd(int year, unsigned month, unsigned day) {
    std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                    std::chrono::day{day}};
    if (!ymd.ok() || year < 1 || year > 9999)
        throw DomainError("invalid calendar date: " + std::to_string(year) + "-" +
                          std::to_string(month) + "-" + std::to_string(day));
    return Date(std::chrono::sys_days{ymd});
}

std::string Date::str() const {
    std::chrono::year_month_day ymd{days_};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()));
    return buf;
}

Date Date::plus_days(std::int64_t n) const {
    if (n > 4000000 || n < -4000000) // already far outside years 1..9999
        throw DomainError("day offset out of range: " + std::to_string(n));
    std::chrono::sys_days d = days_ + std::chrono::days{n};
    std::chrono::year_month_day ymd{d};
    int year = int(ymd.year());
    if (!ymd.ok() || year < 1 || year > 9999)
        throw DomainError("date arithmetic leaves the supported calendar (years 1..9999)");
    return Date(d);
}

std::int64_t Date::operator-(const Date& o) const {
    return (days_ - o.days_).count();
}

} // namespace fib
