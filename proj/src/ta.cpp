#include "fib/ta.hpp"

#include <algorithm>

#include "fib/error.hpp"

namespace fib::ta {

namespace {

const Decimal kZero;
const Decimal kGolden(618, 3);       // 0.618
const Decimal kGoldenExt(1618, 3);   // 1.618
const Decimal kDoubleExt(3236, 3);   // 3.236 = 2 * 1.618
const Decimal kShallow(382, 3);      // 0.382
const Decimal kClassTol(50, 3);      // 0.05 classification band

void check_point(const PricePoint& p, const char* which) {
    if (p.price <= kZero)
        throw DomainError(std::string(which) + " price must be positive");
}

const Decimal& need(const std::optional<Decimal>& v, const char* what, int rule) {
    if (!v)
        throw DomainError("rule " + std::to_string(rule) + " needs " + what);
    if (*v <= kZero)
        throw DomainError(std::string(what) + " must be positive");
    return *v;
}

ElliottTarget single(int rule, std::string description, Decimal value) {
    return {rule, std::move(description), value, value, false};
}

} // namespace

Swing::Swing(PricePoint start, PricePoint end) : start_(start), end_(end) {
    check_point(start_, "swing start");
    check_point(end_, "swing end");
    if (!(start_.date < end_.date))
        throw DomainError("swing start date must precede end date");
}

RatioSet RatioSet::defaults() {
    return {{Decimal(236, 3), Decimal(382, 3), Decimal(500, 3), Decimal(618, 3),
             Decimal(1000, 3)},
            {Decimal(1618, 3), Decimal(2618, 3), Decimal(4236, 3)}};
}

std::vector<LevelEntry> retracement_levels(const Swing& s, const RatioSet& r) {
    for (std::size_t i = 0; i < r.retrace.size(); ++i) {
        if (r.retrace[i] <= kZero)
            throw DomainError("retrace ratios must be positive");
        if (i > 0 && !(r.retrace[i - 1] < r.retrace[i]))
            throw DomainError("retrace ratios must be strictly ascending");
    }
    const Decimal dp = s.price_change();
    std::vector<LevelEntry> out;
    out.reserve(r.retrace.size());
    for (const Decimal& ratio : r.retrace)
        out.push_back({ratio, s.end().price - dp * ratio});
    return out;
}

ElliottTarget elliott_target(int rule, const WaveInputs& w) {
    switch (rule) {
    case 1: {
        const Decimal& len = need(w.impulse_len, "impulse_len", 1);
        return single(1, "unextended impulse waves tend to equality", len);
    }
    case 2: {
        const Decimal& len = need(w.wave1_len, "wave1_len", 2);
        const Decimal& base = need(w.wave2_base, "wave2_base", 2);
        return single(2, "wave-2 base + 1.618 * wave-1 length", base + kGoldenExt * len);
    }
    case 3: {
        const Decimal& base = need(w.wave1_base, "wave1_base", 3);
        const Decimal& top = need(w.wave1_top, "wave1_top", 3);
        if (top <= base)
            throw DomainError("wave 1 top must exceed its base");
        const Decimal len = top - base;
        Decimal lo = base + kDoubleExt * len;
        Decimal hi = top + kDoubleExt * len;
        return {3, "wave-1 base and top each + 3.236 * wave-1 length", lo, hi, true};
    }
    case 4: {
        const Decimal& base = need(w.wave4_base, "wave4_base", 4);
        const Decimal& w3 = need(w.wave3_top, "wave3_top", 4);
        const Decimal& w1 = need(w.wave1_base, "wave1_base", 4);
        if (w3 <= w1)
            throw DomainError("wave 3 top must exceed wave 1 base");
        return single(4, "wave-4 base + 1.618 * (wave-3 top - wave-1 base)",
                      base + kGoldenExt * (w3 - w1));
    }
    case 5: {
        const Decimal& len = need(w.wave_a_len, "wave_a_len", 5);
        return single(5, "wave C equals wave A", len);
    }
    case 6: {
        const Decimal& len = need(w.wave_a_len, "wave_a_len", 6);
        const Decimal& base = need(w.wave_a_base, "wave_a_base", 6);
        return single(6, "wave-A base - 0.618 * wave-A length", base - kGolden * len);
    }
    case 7: {
        const Decimal& len = need(w.wave_a_len, "wave_a_len", 7);
        return single(7, "extended wave C: 1.618 * wave-A length", kGoldenExt * len);
    }
    case 8: {
        const Decimal& len = need(w.prev_len, "prev_len", 8);
        Decimal factor = kGolden;
        if (w.factor) factor = need(w.factor, "factor", 8);
        return single(8, "triangle leg: " + factor.str() + " * preceding leg",
                      factor * len);
    }
    default:
        throw DomainError("elliott rule out of range (1..8): " + std::to_string(rule));
    }
}

std::vector<TimeZoneEntry> time_zones(Date pivot, int count, bool skip_eight) {
    if (count < 1) throw DomainError("time zone count must be >= 1");
    std::vector<TimeZoneEntry> out;
    out.reserve(count);
    // distinct Fibonacci values from 1: 1, 2, 3, 5, 8, ...
    std::int64_t a = 1, b = 2;
    while (static_cast<int>(out.size()) < count) {
        if (!(skip_eight && a == 8))
            out.push_back({a, pivot.plus_days(a)}); // throws once off the calendar
        std::int64_t next = a + b;
        a = b;
        b = next;
    }
    return out;
}

FibBox fib_box(const Swing& s, const RatioSet& r) {
    const std::int64_t dt = s.duration_days();
    const Decimal dp = s.price_change();
    const Decimal dt_dec = Decimal::from_int(dt);

    std::vector<Decimal> multiples;
    multiples.reserve(r.extend.size() + 1);
    multiples.push_back(Decimal(1, 0));
    for (const Decimal& m : r.extend) {
        if (m <= kZero) throw DomainError("extend ratios must be positive");
        multiples.push_back(m);
    }

    std::vector<TimeTarget> times;
    times.reserve(multiples.size());
    for (const Decimal& m : multiples) {
        std::int64_t offset = (dt_dec * m).trunc();
        times.push_back({m, offset, s.end().date.plus_days(offset)});
    }

    const PricePoint& top = s.start().price >= s.end().price ? s.start() : s.end();
    const PricePoint& bottom = s.start().price >= s.end().price ? s.end() : s.start();
    const Date far_edge = times.back().date;

    return {s,
            dt,
            dp,
            std::move(times),
            retracement_levels(s, r),
            {top.date, top.price, far_edge, bottom.price},
            {bottom.date, bottom.price, far_edge, top.price}};
}

AlternationReport alternation_analysis(const std::vector<std::pair<Decimal, Decimal>>& pairs) {
    AlternationReport report;
    report.entries.reserve(pairs.size());
    for (const auto& [move, reaction] : pairs) {
        Decimal m = move.abs(), x = reaction.abs();
        if (m.is_zero()) throw DomainError("zero-length preceding move");
        Decimal ratio = x.div(m, 3);
        std::optional<Decimal> label;
        Decimal d_shallow = (ratio - kShallow).abs();
        Decimal d_golden = (ratio - kGolden).abs();
        const Decimal& dist = d_shallow <= d_golden ? d_shallow : d_golden;
        if (dist <= kClassTol)
            label = d_shallow <= d_golden ? kShallow : kGolden;
        report.entries.push_back({m, x, ratio, label});
    }
    bool alt = report.entries.size() >= 2;
    for (std::size_t i = 0; alt && i < report.entries.size(); ++i) {
        if (!report.entries[i].label) alt = false;
        else if (i > 0 && *report.entries[i].label == *report.entries[i - 1].label)
            alt = false;
    }
    report.alternating = alt;
    return report;
}

AlternationReport alternation_analysis(const std::vector<std::pair<Swing, Swing>>& swings) {
    std::vector<std::pair<Decimal, Decimal>> pairs;
    pairs.reserve(swings.size());
    for (const auto& [move, reaction] : swings)
        pairs.emplace_back(move.price_change(), reaction.price_change());
    return alternation_analysis(pairs);
}

ZigzagResult zigzag_time_relation(const Decimal& w, const Decimal& x, const Decimal& y) {
    if (w <= kZero || x <= kZero || y <= kZero)
        throw DomainError("zigzag durations must be positive");
    const Decimal xy = x + y;
    const Decimal wx = w + x;
    const auto make = [](int id, const char* name, Decimal lhs, Decimal rhs) {
        Decimal residual = (lhs - rhs).abs();
        Decimal denom = lhs >= rhs ? lhs : rhs;
        return ZigzagRelation{id, name, lhs, rhs, residual, residual.div(denom, 6)};
    };
    ZigzagResult result{{make(1, "W = X+Y", w, xy),
                         make(2, "0.618*W = X+Y", kGolden * w, xy),
                         make(3, "W+X = Y", wx, y),
                         make(4, "0.618*(W+X) = Y", kGolden * wx, y)},
                        0};
    for (int i = 1; i < 4; ++i)
        if (result.relations[i].relative < result.relations[result.best].relative)
            result.best = i;
    return result;
}

std::vector<Pivot> detect_pivots(const Series& series, int k) {
    if (k < 1) throw DomainError("pivot window must be >= 1");
    const std::size_t n = series.size();
    if (n < 2 * static_cast<std::size_t>(k) + 1)
        throw DomainError("series too short for window: need " +
                          std::to_string(2 * k + 1) + " bars, have " + std::to_string(n));
    const bool closes = series.close_only();
    const auto hi = [&](std::size_t i) { return closes ? series[i].close : series[i].high; };
    const auto lo = [&](std::size_t i) { return closes ? series[i].close : series[i].low; };

    std::vector<Pivot> out;
    for (std::size_t i = k; i + k < n; ++i) {
        bool is_top = true, is_bottom = true;
        for (std::size_t j = i - k; j <= i + k && (is_top || is_bottom); ++j) {
            if (j == i) continue;
            if (!(hi(i) > hi(j))) is_top = false;
            if (!(lo(i) < lo(j))) is_bottom = false;
        }
        if (is_top) out.push_back({series[i].date, hi(i), PivotKind::top});
        if (is_bottom) out.push_back({series[i].date, lo(i), PivotKind::bottom});
    }
    return out;
}

} // namespace fib::ta
