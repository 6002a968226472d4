#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace fib {

// Exact scaled-decimal arithmetic for prices, ratios and day counts.
//
// A value is units * 10^-scale with int64 units; intermediates widen to
// __int128. Binary doubles cannot represent most decimal prices, and the
// resulting one-ulp drift flips commercial rounding at exact-half
// boundaries: 2.346 + 0.5 * 1.453 = 3.0725 must display as 3.073 at three
// decimals, but the double sum lands just under the half and shows 3.072.
// All rounding here is half-up, meaning ties away from zero.
class Decimal {
public:
    static constexpr int kMaxScale = 18;

    Decimal() : units_(0), scale_(0) {}
    Decimal(std::int64_t units, int scale); // value = units * 10^-scale
    static Decimal from_int(std::int64_t v) { return Decimal(v, 0); }
    static Decimal parse(std::string_view text); // strict [-]digits[.digits]

    std::int64_t units() const { return units_; }
    int scale() const { return scale_; }
    bool is_zero() const { return units_ == 0; }
    bool negative() const { return units_ < 0; }
    Decimal abs() const { return units_ < 0 ? Decimal(-units_, scale_) : *this; }

    Decimal operator-() const { return Decimal(-units_, scale_); }
    Decimal operator+(const Decimal& o) const;
    Decimal operator-(const Decimal& o) const;
    Decimal operator*(const Decimal& o) const; // exact, scales add

    // Exact quotient rounded half-up to `digits` fractional digits.
    Decimal div(const Decimal& divisor, int digits) const;

    // Rescale with half-up rounding; widening (digits >= scale) is exact.
    Decimal round_half_up(int digits) const;

    // Integer part, truncated toward zero: 59.866 -> 59, -1.9 -> -1.
    std::int64_t trunc() const;

    double to_double() const;
    std::string str() const;                 // all stored digits, no padding games
    std::string str_fixed(int digits) const; // round, then exactly `digits` decimals

    int compare(const Decimal& o) const; // -1 / 0 / +1 on numeric value
    bool operator==(const Decimal& o) const { return compare(o) == 0; }
    bool operator!=(const Decimal& o) const { return compare(o) != 0; }
    bool operator<(const Decimal& o) const { return compare(o) < 0; }
    bool operator<=(const Decimal& o) const { return compare(o) <= 0; }
    bool operator>(const Decimal& o) const { return compare(o) > 0; }
    bool operator>=(const Decimal& o) const { return compare(o) >= 0; }

private:
    std::int64_t units_;
    std::int32_t scale_;
};

} // namespace fib
