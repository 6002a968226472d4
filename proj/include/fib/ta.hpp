#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fib/dates.hpp"
#include "fib/decimal.hpp"
#include "fib/series.hpp"

namespace fib::ta {

// Fibonacci technical-analysis calculators over price/time swings.
// All price math runs on exact decimals; display rounding (half-up,
// 3 decimals for prices) is the caller's job via Decimal::str_fixed.
// Time arithmetic is in calendar days, never bar counts.

// A dated market quote.
struct PricePoint {
    Date date;
    Decimal price; // > 0
};

// Directed move between two dated quotes: DT = calendar-day span,
// DP = signed price change end - start (negative for a fall).
class Swing {
public:
    Swing(PricePoint start, PricePoint end); // needs start.date < end.date
    const PricePoint& start() const { return start_; }
    const PricePoint& end() const { return end_; }
    std::int64_t duration_days() const { return end_.date - start_.date; }
    Decimal price_change() const { return end_.price - start_.price; }

private:
    PricePoint start_, end_;
};

// Ratio grids: retrace ratios are ascending fractions of the price move,
// extend ratios stretch the move's duration (and Elliott wave lengths).
struct RatioSet {
    std::vector<Decimal> retrace;
    std::vector<Decimal> extend;
    static RatioSet defaults(); // {0.236,0.382,0.5,0.618,1.0} / {1.618,2.618,4.236}
};

struct LevelEntry {
    Decimal ratio;
    Decimal price; // exact, unrounded
};

// level(r) = end.price - DP*r, so r=0 pins the end and r=1 recovers the
// start. Values stay exact, which makes the midpoint reflection
// level(r) + level(1-r) == start + end an identity, not an approximation.
std::vector<LevelEntry> retracement_levels(const Swing& s, const RatioSet& r);

// Caller-measured wave lengths and base/top levels; each rule consumes
// the fields it names. Automatic wave counting is out of scope.
struct WaveInputs {
    std::optional<Decimal> impulse_len; // rule 1: the known unextended impulse wave
    std::optional<Decimal> wave1_len;   // rule 2
    std::optional<Decimal> wave2_base;  // rule 2
    std::optional<Decimal> wave1_base;  // rule 3
    std::optional<Decimal> wave1_top;   // rule 3
    std::optional<Decimal> wave3_top;   // rule 4
    std::optional<Decimal> wave4_base;  // rule 4
    std::optional<Decimal> wave_a_len;  // rules 5, 6, 7
    std::optional<Decimal> wave_a_base; // rule 6
    std::optional<Decimal> prev_len;    // rule 8: preceding triangle wave
    std::optional<Decimal> factor;      // rule 8 ratio override, default 0.618
};

struct ElliottTarget {
    int rule;
    std::string description;
    Decimal low, high; // equal unless is_range
    bool is_range;
};

// Elliott price/length targets, rules 1..8:
//   1  the two unextended impulse waves tend to equality -> impulse_len
//   2  wave-2 base + 1.618 * wave-1 length
//   3  wave-1 base and top each + 3.236 * wave-1 length, as (min, max)
//   4  wave-4 base + 1.618 * (wave-3 top - wave-1 base)
//   5  wave C equals wave A -> wave_a_len
//   6  wave-A base - 0.618 * wave-A length
//   7  extended wave C: 1.618 * wave-A length
//   8  triangle leg: factor * preceding leg (factor defaults to 0.618)
// Every consumed input must be present and positive.
ElliottTarget elliott_target(int rule, const WaveInputs& w);

struct TimeZoneEntry {
    std::int64_t offset; // Fibonacci day count
    Date date;
};

// Vertical time lines at pivot + k for the first `count` Fibonacci day
// offsets {1, 2, 3, 5, 8, 13, 21, ...}. Some published tabulations skip
// the 8; skip_eight reproduces that variant.
std::vector<TimeZoneEntry> time_zones(Date pivot, int count, bool skip_eight = false);

struct TimeTarget {
    Decimal multiple;    // 1.0, then the extend ratios
    std::int64_t offset; // trunc(DT * multiple), calendar days
    Date date;
};

struct Line {
    Date from_date;
    Decimal from_price;
    Date to_date;
    Decimal to_price;
};

// Price/time grid spanned by a swing. Time targets T_k land at
// end date + trunc(DT * m_k) for m in {1.0} + extend ratios — fractional
// day products truncate toward zero. Price targets are the retracement
// levels. The diagonals run from the swing's top point to the box corner
// (T4, bottom price) and from its bottom point to (T4, top price).
struct FibBox {
    Swing swing;
    std::int64_t duration_days; // DT
    Decimal price_change;       // DP
    std::vector<TimeTarget> time_targets;  // T1..T4 under the default set
    std::vector<LevelEntry> price_targets; // P1..P5 under the default set
    Line from_top, from_bottom;
};

FibBox fib_box(const Swing& s, const RatioSet& r);

// One corrective reaction measured against the move it retraces.
struct AlternationEntry {
    Decimal move, reaction;       // magnitudes of the price changes
    Decimal ratio;                // reaction/move, half-up to 3 decimals
    std::optional<Decimal> label; // 0.382 or 0.618 when within 0.05
};

struct AlternationReport {
    std::vector<AlternationEntry> entries;
    // Two or more entries, all classified, consecutive labels differ:
    // reactions swing between the deep 0.618 and shallow 0.382 camps.
    bool alternating;
};

// Pairs are (preceding move, reaction); the move must be nonzero.
AlternationReport alternation_analysis(const std::vector<std::pair<Decimal, Decimal>>& pairs);
AlternationReport alternation_analysis(const std::vector<std::pair<Swing, Swing>>& swings);

// One duration relation between a zigzag's W leg and the following X, Y.
struct ZigzagRelation {
    int id;           // 1-based position in the documented order below
    std::string name; // e.g. "0.618*W = X+Y"
    Decimal lhs, rhs;
    Decimal residual; // |lhs - rhs|, days
    Decimal relative; // residual / max(lhs, rhs), 6 digits
};

struct ZigzagResult {
    std::array<ZigzagRelation, 4> relations;
    int best; // index; ties resolve to the earlier-listed relation
};

// Evaluates, always in this order:
//   1  W = X+Y
//   2  0.618*W = X+Y
//   3  W+X = Y
//   4  0.618*(W+X) = Y
// and picks the smallest relative residual. Durations must be positive;
// fractional days are allowed.
ZigzagResult zigzag_time_relation(const Decimal& w, const Decimal& x, const Decimal& y);

enum class PivotKind { top, bottom };

struct Pivot {
    Date date;
    Decimal price; // the deciding extreme: high / low, or close when close-only
    PivotKind kind;
};

// Strict window extremum: a bar is a top when its high strictly exceeds
// every other high in the 2k+1-bar window centered on it (bottoms
// symmetric on lows); close-only series scan the close for both. Output
// is chronological; an outside bar that is both lists its top first.
std::vector<Pivot> detect_pivots(const Series& series, int k); // k >= 1, size >= 2k+1

} // namespace fib::ta
