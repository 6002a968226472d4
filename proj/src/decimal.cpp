#include "fib/decimal.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

#include "fib/error.hpp"

namespace fib {

namespace {

using i128 = __int128;

constexpr std::int64_t kInt64Max = INT64_MAX;

std::int64_t pow10_i64(int e) {
    static const std::array<std::int64_t, 19> table = [] {
        std::array<std::int64_t, 19> t{};
        t[0] = 1;
        for (int i = 1; i < 19; ++i) t[i] = t[i - 1] * 10;
        return t;
    }();
    return table[e];
}

std::int64_t narrow(i128 v, const char* what) {
    if (v > i128(kInt64Max) || v < -i128(kInt64Max))
        throw DomainError(std::string("decimal overflow in ") + what);
    return static_cast<std::int64_t>(v);
}

// floor((2n + d) / (2d)) for n, d > 0 is round-half-up of n/d; callers
// strip signs first so ties go away from zero.
std::int64_t div_half_up_mag(i128 n, i128 d, const char* what) {
    return narrow((2 * n + d) / (2 * d), what);
}

} // namespace

Decimal::Decimal(std::int64_t units, int scale) : units_(units), scale_(scale) {
    if (scale < 0 || scale > kMaxScale)
        throw DomainError("decimal scale out of range (0..18): " + std::to_string(scale));
    if (units == INT64_MIN) // keep unary minus total
        throw DomainError("decimal units out of range");
}

Decimal Decimal::parse(std::string_view text) {
    const auto fail = [&] {
        throw DomainError("malformed decimal: '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && text[i] == '-') { neg = true; ++i; }
    if (i >= text.size() || text[i] < '0' || text[i] > '9') fail();

    i128 units = 0;
    int scale = 0;
    bool seen_point = false, frac_digit = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_point) fail();
            seen_point = true;
            continue;
        }
        if (c < '0' || c > '9') fail();
        if (seen_point) {
            ++scale;
            frac_digit = true;
            if (scale > kMaxScale) fail();
        }
        units = units * 10 + (c - '0');
        if (units > i128(kInt64Max)) fail();
    }
    if (seen_point && !frac_digit) fail();
    std::int64_t u = static_cast<std::int64_t>(units);
    return Decimal(neg ? -u : u, scale);
}

Decimal Decimal::operator+(const Decimal& o) const {
    int s = std::max(scale_, o.scale_);
    i128 a = i128(units_) * pow10_i64(s - scale_);
    i128 b = i128(o.units_) * pow10_i64(s - o.scale_);
    return Decimal(narrow(a + b, "addition"), s);
}

Decimal Decimal::operator-(const Decimal& o) const { return *this + (-o); }

Decimal Decimal::operator*(const Decimal& o) const {
    int s = scale_ + o.scale_;
    if (s > kMaxScale)
        throw DomainError("decimal scale overflow in multiplication");
    return Decimal(narrow(i128(units_) * i128(o.units_), "multiplication"), s);
}

Decimal Decimal::div(const Decimal& divisor, int digits) const {
    if (divisor.units_ == 0) throw DomainError("decimal division by zero");
    if (digits < 0 || digits > kMaxScale)
        throw DomainError("decimal division digits out of range (0..18)");
    // value = (n_u / d_u) * 10^(d_s - n_s); requested units are that
    // value scaled by 10^digits, computed exactly then rounded half-up.
    i128 n = units_ < 0 ? -i128(units_) : i128(units_);
    i128 d = divisor.units_ < 0 ? -i128(divisor.units_) : i128(divisor.units_);
    int e = digits + divisor.scale_ - scale_;
    if (e >= 0) {
        if (e > 38) throw DomainError("decimal division exponent overflow");
        for (int i = 0; i < e; ++i) n *= 10;
    } else {
        if (-e > 38) throw DomainError("decimal division exponent overflow");
        for (int i = 0; i < -e; ++i) d *= 10;
    }
    std::int64_t q = div_half_up_mag(n, d, "division");
    bool neg = (units_ < 0) != (divisor.units_ < 0);
    return Decimal(neg ? -q : q, digits);
}

Decimal Decimal::round_half_up(int digits) const {
    if (digits < 0 || digits > kMaxScale)
        throw DomainError("decimal rounding digits out of range (0..18)");
    if (digits >= scale_)
        return Decimal(narrow(i128(units_) * pow10_i64(digits - scale_), "rescale"), digits);
    i128 d = pow10_i64(scale_ - digits);
    i128 mag = units_ < 0 ? -i128(units_) : i128(units_);
    std::int64_t q = div_half_up_mag(mag, d, "rounding");
    return Decimal(units_ < 0 ? -q : q, digits);
}

std::int64_t Decimal::trunc() const {
    return units_ / pow10_i64(scale_); // C++ integer division truncates toward zero
}

double Decimal::to_double() const {
    return static_cast<double>(units_) / std::pow(10.0, scale_);
}

std::string Decimal::str() const {
    std::uint64_t mag = units_ < 0 ? -static_cast<std::uint64_t>(units_)
                                   : static_cast<std::uint64_t>(units_);
    std::string digits = std::to_string(mag);
    if (static_cast<int>(digits.size()) <= scale_)
        digits.insert(0, scale_ - digits.size() + 1, '0');
    std::string out;
    if (units_ < 0) out += '-';
    out.append(digits, 0, digits.size() - scale_);
    if (scale_ > 0) {
        out += '.';
        out.append(digits, digits.size() - scale_, scale_);
    }
    return out;
}

std::string Decimal::str_fixed(int digits) const {
    return round_half_up(digits).str();
}

int Decimal::compare(const Decimal& o) const {
    int s = std::max(scale_, o.scale_);
    i128 a = i128(units_) * pow10_i64(s - scale_);
    i128 b = i128(o.units_) * pow10_i64(s - o.scale_);
    return a < b ? -1 : (a > b ? 1 : 0);
}

} // namespace fib
