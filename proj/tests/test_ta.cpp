#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fib/error.hpp"
#include "fib/series.hpp"
#include "fib/ta.hpp"

using fib::Date;
using fib::Decimal;
using fib::DomainError;
namespace ta = fib::ta;

namespace {

Decimal dec(const char* s) { return Decimal::parse(s); }
Date day(const char* s) { return Date::parse(s); }

ta::Swing swing(const char* d1, const char* p1, const char* d2, const char* p2) {
    return ta::Swing({day(d1), dec(p1)}, {day(d2), dec(p2)});
}

// The worked falling swing used throughout: 37 calendar days, -1.453.
ta::Swing fall2000() { return swing("2000-01-17", "3.799", "2000-02-23", "2.346"); }

// Random OHLC walk in scale-3 units with irregular (but increasing) dates.
std::vector<ta::Bar> walk_bars(std::uint32_t seed, int n) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::int64_t> step(-400, 400);
    std::uniform_int_distribution<std::int64_t> pad(1, 150);
    std::uniform_int_distribution<int> gap(1, 3);
    std::vector<ta::Bar> bars;
    bars.reserve(n);
    Date d = day("1999-01-04");
    std::int64_t close = 50000;
    for (int i = 0; i < n; ++i) {
        close = std::max<std::int64_t>(1000, close + step(rng));
        std::int64_t open = std::max<std::int64_t>(1000, close + step(rng) / 2);
        std::int64_t hi = std::max(open, close) + pad(rng);
        std::int64_t lo = std::max<std::int64_t>(1, std::min(open, close) - pad(rng));
        bars.push_back({d, Decimal(open, 3), Decimal(hi, 3), Decimal(lo, 3),
                        Decimal(close, 3)});
        d = d.plus_days(gap(rng));
    }
    return bars;
}

// Predicate restated per index, independent of the library's scan loop.
bool window_top(const ta::Series& s, std::size_t i, std::size_t k) {
    const auto px = [&](std::size_t j) { return s.close_only() ? s[j].close : s[j].high; };
    for (std::size_t j = i - k; j <= i + k; ++j)
        if (j != i && !(px(i) > px(j))) return false;
    return true;
}

bool window_bottom(const ta::Series& s, std::size_t i, std::size_t k) {
    const auto px = [&](std::size_t j) { return s.close_only() ? s[j].close : s[j].low; };
    for (std::size_t j = i - k; j <= i + k; ++j)
        if (j != i && !(px(i) < px(j))) return false;
    return true;
}

bool same_pivot(const ta::Pivot& a, const ta::Pivot& b) {
    return a.date == b.date && a.price == b.price && a.kind == b.kind;
}

} // namespace

TEST_SUITE("ta") {

TEST_CASE("swing measures and validation") {
    ta::Swing s = fall2000();
    CHECK(s.duration_days() == 37);
    CHECK(s.price_change() == dec("-1.453"));
    CHECK(s.start().price == dec("3.799"));
    CHECK(s.end().date.str() == "2000-02-23");

    CHECK_THROWS_AS(swing("2000-02-23", "1", "2000-02-23", "2"), DomainError);
    CHECK_THROWS_AS(swing("2000-02-24", "1", "2000-02-23", "2"), DomainError);
    CHECK_THROWS_AS(ta::Swing({day("2000-01-01"), dec("0")},
                              {day("2000-01-02"), dec("1")}),
                    DomainError);
    CHECK_THROWS_AS(ta::Swing({day("2000-01-01"), dec("1")},
                              {day("2000-01-02"), -dec("2.5")}),
                    DomainError);
}

TEST_CASE("retracement grid of the worked falling swing") {
    auto lv = ta::retracement_levels(fall2000(), ta::RatioSet::defaults());
    REQUIRE(lv.size() == 5);
    const char* want[] = {"2.689", "2.901", "3.073", "3.244", "3.799"};
    for (int i = 0; i < 5; ++i) CHECK(lv[i].price.str_fixed(3) == want[i]);
    // the 0.5 level is the half-up boundary case: exact 3.0725 -> 3.073
    CHECK(lv[2].price == dec("3.0725"));
    // r = 1 recovers the start exactly, not merely to display precision
    CHECK(lv[4].price == dec("3.799"));
    // ascending for a falling swing
    for (int i = 1; i < 5; ++i) CHECK(lv[i - 1].price < lv[i].price);
}

TEST_CASE("retracement of a zero-move swing collapses to the end price") {
    auto lv = ta::retracement_levels(swing("2000-01-03", "5.25", "2000-01-10", "5.25"),
                                     ta::RatioSet::defaults());
    for (const auto& e : lv) CHECK(e.price == dec("5.25"));
}

TEST_CASE("retracement ratio set validation") {
    ta::Swing s = fall2000();
    ta::RatioSet bad = ta::RatioSet::defaults();
    bad.retrace = {dec("0.5"), dec("0.3")};
    CHECK_THROWS_AS(ta::retracement_levels(s, bad), DomainError);
    bad.retrace = {dec("0"), dec("0.3")};
    CHECK_THROWS_AS(ta::retracement_levels(s, bad), DomainError);
}

TEST_CASE("reflection identity: level(r) + level(1-r) = start + end (property)") {
    std::mt19937 rng(8250236);
    std::uniform_int_distribution<std::int64_t> price(1, 9999999);
    std::uniform_int_distribution<std::int64_t> ratio(1, 999);
    for (int t = 0; t < 500; ++t) {
        Decimal p1(price(rng), 3), p2(price(rng), 3);
        ta::Swing s({day("2001-03-01"), p1}, {day("2001-05-19"), p2});
        std::int64_t r = ratio(rng);
        ta::RatioSet rs;
        rs.retrace = r == 500
                         ? std::vector<Decimal>{Decimal(500, 3)}
                         : std::vector<Decimal>{Decimal(std::min(r, 1000 - r), 3),
                                                Decimal(std::max(r, 1000 - r), 3)};
        auto lv = ta::retracement_levels(s, rs);
        CHECK(lv.front().price + lv.back().price == p1 + p2);
    }
}

TEST_CASE("elliott single-value rules") {
    ta::WaveInputs w;
    w.impulse_len = dec("2.5");
    auto t1 = ta::elliott_target(1, w);
    CHECK_FALSE(t1.is_range);
    CHECK(t1.low == dec("2.5"));

    w = {};
    w.wave1_len = dec("1.0");
    w.wave2_base = dec("10.0");
    CHECK(ta::elliott_target(2, w).low == dec("11.618"));

    w = {};
    w.wave4_base = dec("20");
    w.wave3_top = dec("15");
    w.wave1_base = dec("5");
    CHECK(ta::elliott_target(4, w).low == dec("36.18"));

    w = {};
    w.wave_a_len = dec("0.7");
    CHECK(ta::elliott_target(5, w).low == dec("0.7"));
    CHECK(ta::elliott_target(7, w).low == dec("1.1326")); // 1.618 * 0.7

    w.wave_a_base = dec("10");
    w.wave_a_len = dec("2");
    CHECK(ta::elliott_target(6, w).low == dec("8.764")); // 10 - 0.618*2

    w = {};
    w.prev_len = dec("100");
    auto t8 = ta::elliott_target(8, w);
    CHECK(t8.low == dec("61.8"));
    CHECK(t8.description == "triangle leg: 0.618 * preceding leg");
    w.factor = dec("0.5");
    CHECK(ta::elliott_target(8, w).low == dec("50"));
}

TEST_CASE("elliott range rule 3") {
    ta::WaveInputs w;
    w.wave1_base = dec("10.0");
    w.wave1_top = dec("11.0");
    auto t = ta::elliott_target(3, w);
    CHECK(t.is_range);
    CHECK(t.low == dec("13.236"));
    CHECK(t.high == dec("14.236"));
}

TEST_CASE("elliott input validation") {
    ta::WaveInputs w;
    CHECK_THROWS_AS(ta::elliott_target(2, w), DomainError); // both missing
    w.wave1_len = dec("1");
    CHECK_THROWS_AS(ta::elliott_target(2, w), DomainError); // base missing
    w.wave2_base = dec("0");
    CHECK_THROWS_AS(ta::elliott_target(2, w), DomainError); // non-positive

    ta::WaveInputs v;
    v.wave1_base = dec("11");
    v.wave1_top = dec("10");
    CHECK_THROWS_AS(ta::elliott_target(3, v), DomainError); // inverted wave

    v = {};
    v.wave4_base = dec("20");
    v.wave3_top = dec("5");
    v.wave1_base = dec("5");
    CHECK_THROWS_AS(ta::elliott_target(4, v), DomainError); // zero distance

    CHECK_THROWS_AS(ta::elliott_target(0, {}), DomainError);
    CHECK_THROWS_AS(ta::elliott_target(9, {}), DomainError);
}

TEST_CASE("time zones from the 2001-02-22 pivot") {
    auto zones = ta::time_zones(day("2001-02-22"), 3);
    REQUIRE(zones.size() == 3);
    CHECK(zones[0].date.str() == "2001-02-23");
    CHECK(zones[1].date.str() == "2001-02-24");
    CHECK(zones[2].date.str() == "2001-02-25");

    auto twelve = ta::time_zones(day("2001-02-22"), 12);
    const std::int64_t offsets[] = {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
    REQUIRE(twelve.size() == 12);
    for (int i = 0; i < 12; ++i) CHECK(twelve[i].offset == offsets[i]);
    CHECK(twelve[8].date.str() == "2001-04-18"); // pivot + 55

    auto single = ta::time_zones(day("2001-02-22"), 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].offset == 1);
}

TEST_CASE("time zone variant without the 8") {
    auto zones = ta::time_zones(day("2001-02-22"), 5, true);
    const std::int64_t offsets[] = {1, 2, 3, 5, 13};
    REQUIRE(zones.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(zones[i].offset == offsets[i]);
}

TEST_CASE("time zone domain errors") {
    CHECK_THROWS_AS(ta::time_zones(day("2001-02-22"), 0), DomainError);
    // offset 32 is the Fibonacci day count 3524578 ~ 9650 years out
    CHECK_THROWS_AS(ta::time_zones(day("2001-02-22"), 32), DomainError);
    auto deep = ta::time_zones(day("2001-02-22"), 31);
    CHECK(deep.back().offset == 2178309);
}

TEST_CASE("box reproduces the worked table") {
    auto box = ta::fib_box(fall2000(), ta::RatioSet::defaults());
    CHECK(box.duration_days == 37);
    CHECK(box.price_change == dec("-1.453"));

    REQUIRE(box.time_targets.size() == 4);
    const char* dates[] = {"2000-03-31", "2000-04-22", "2000-05-29", "2000-07-28"};
    const std::int64_t offsets[] = {37, 59, 96, 156}; // 37, 59.866, 96.866, 156.732
    for (int i = 0; i < 4; ++i) {
        CHECK(box.time_targets[i].date.str() == dates[i]);
        CHECK(box.time_targets[i].offset == offsets[i]);
    }
    for (int i = 1; i < 4; ++i)
        CHECK(box.time_targets[i - 1].date < box.time_targets[i].date);

    REQUIRE(box.price_targets.size() == 5);
    const char* prices[] = {"2.689", "2.901", "3.073", "3.244", "3.799"};
    for (int i = 0; i < 5; ++i)
        CHECK(box.price_targets[i].price.str_fixed(3) == prices[i]);

    // grid must be the retracement levels, not a reimplementation
    auto lv = ta::retracement_levels(fall2000(), ta::RatioSet::defaults());
    for (int i = 0; i < 5; ++i) {
        CHECK(box.price_targets[i].ratio == lv[i].ratio);
        CHECK(box.price_targets[i].price == lv[i].price);
    }

    CHECK(box.from_top.from_date.str() == "2000-01-17");
    CHECK(box.from_top.from_price == dec("3.799"));
    CHECK(box.from_top.to_date.str() == "2000-07-28");
    CHECK(box.from_top.to_price == dec("2.346"));
    CHECK(box.from_bottom.from_date.str() == "2000-02-23");
    CHECK(box.from_bottom.from_price == dec("2.346"));
    CHECK(box.from_bottom.to_date.str() == "2000-07-28");
    CHECK(box.from_bottom.to_price == dec("3.799"));
}

TEST_CASE("box truncation floor on a one-day swing") {
    auto box = ta::fib_box(swing("2000-01-01", "2", "2000-01-02", "1"),
                           ta::RatioSet::defaults());
    CHECK(box.time_targets[0].offset == 1); // 1.0   -> 1
    CHECK(box.time_targets[1].offset == 1); // 1.618 -> 1
    CHECK(box.time_targets[2].offset == 2); // 2.618 -> 2
    CHECK(box.time_targets[3].offset == 4); // 4.236 -> 4
    CHECK(box.time_targets[0].date == box.time_targets[1].date);
}

TEST_CASE("box diagonals on a rising swing") {
    auto box = ta::fib_box(swing("2000-01-01", "1.5", "2000-01-11", "2.5"),
                           ta::RatioSet::defaults());
    // top point is now the swing end
    CHECK(box.from_top.from_date.str() == "2000-01-11");
    CHECK(box.from_top.from_price == dec("2.5"));
    CHECK(box.from_top.to_price == dec("1.5"));
    CHECK(box.from_bottom.from_date.str() == "2000-01-01");
    // falling swing grid ascends; rising swing grid descends
    for (std::size_t i = 1; i < box.price_targets.size(); ++i)
        CHECK(box.price_targets[i - 1].price > box.price_targets[i].price);
}

TEST_CASE("alternation report for the four 2000-2001 reactions") {
    std::vector<std::pair<Decimal, Decimal>> pairs = {
        {dec("1.453"), dec("0.857")},
        {dec("1.664"), dec("0.663")},
        {dec("1.158"), dec("0.700")},
        {dec("1.034"), dec("0.366")},
    };
    auto rep = ta::alternation_analysis(pairs);
    REQUIRE(rep.entries.size() == 4);
    const char* ratios[] = {"0.590", "0.398", "0.604", "0.354"};
    const char* labels[] = {"0.618", "0.382", "0.618", "0.382"};
    for (int i = 0; i < 4; ++i) {
        CHECK(rep.entries[i].ratio.str() == ratios[i]);
        REQUIRE(rep.entries[i].label.has_value());
        CHECK(rep.entries[i].label->str() == labels[i]);
    }
    CHECK(rep.alternating);
}

TEST_CASE("alternation classification band") {
    // 0.5 sits 0.118 from both anchors: unclassified
    auto rep = ta::alternation_analysis({{dec("2"), dec("1")}});
    CHECK(rep.entries[0].ratio == dec("0.5"));
    CHECK_FALSE(rep.entries[0].label.has_value());
    CHECK_FALSE(rep.alternating); // single entry is no pattern either way

    // band edges: 0.332 and 0.432 classify, 0.331 and 0.433 do not
    CHECK(ta::alternation_analysis({{dec("1000"), dec("332")}})
              .entries[0].label.value() == dec("0.382"));
    CHECK(ta::alternation_analysis({{dec("1000"), dec("432")}})
              .entries[0].label.value() == dec("0.382"));
    CHECK_FALSE(ta::alternation_analysis({{dec("1000"), dec("331")}})
                    .entries[0].label.has_value());
    CHECK_FALSE(ta::alternation_analysis({{dec("1000"), dec("433")}})
                    .entries[0].label.has_value());

    // repeated deep reactions are classified but not alternating
    auto rep2 = ta::alternation_analysis({{dec("1"), dec("0.618")},
                                          {dec("1"), dec("0.618")}});
    CHECK(rep2.entries[0].label.has_value());
    CHECK_FALSE(rep2.alternating);

    CHECK_THROWS_AS(ta::alternation_analysis({{dec("0"), dec("1")}}), DomainError);
}

TEST_CASE("alternation over swings matches magnitudes") {
    std::vector<std::pair<ta::Swing, ta::Swing>> swings = {
        {fall2000(), swing("2000-02-23", "2.346", "2000-03-20", "3.203")},
    };
    auto rep = ta::alternation_analysis(swings);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].move == dec("1.453"));
    CHECK(rep.entries[0].reaction == dec("0.857"));
    CHECK(rep.entries[0].ratio.str() == "0.590");
    CHECK(rep.entries[0].label.value() == dec("0.618"));
}

TEST_CASE("alternation is scale invariant (property)") {
    std::mt19937 rng(4150415);
    std::uniform_int_distribution<std::int64_t> mv(1, 2000000);
    std::uniform_int_distribution<std::int64_t> fac(1, 99999);
    for (int t = 0; t < 300; ++t) {
        Decimal move(mv(rng), 3), reaction(mv(rng), 3), k(fac(rng), 2);
        auto base = ta::alternation_analysis({{move, reaction}});
        auto scaled = ta::alternation_analysis({{move * k, reaction * k}});
        CHECK(base.entries[0].ratio == scaled.entries[0].ratio);
        REQUIRE(base.entries[0].label.has_value() == scaled.entries[0].label.has_value());
        if (base.entries[0].label)
            CHECK(*base.entries[0].label == *scaled.entries[0].label);
    }
}

TEST_CASE("zigzag relation for the 246-day W leg") {
    auto res = ta::zigzag_time_relation(dec("246"), dec("69"), dec("83"));
    const auto& best = res.relations[res.best];
    CHECK(best.id == 2);
    CHECK(best.name == "0.618*W = X+Y");
    CHECK(best.lhs == dec("152.028"));
    CHECK(best.rhs == dec("152"));
    CHECK(best.residual == dec("0.028"));
    CHECK(best.residual <= dec("0.1"));
}

TEST_CASE("zigzag candidates keep the documented order") {
    auto res = ta::zigzag_time_relation(dec("10"), dec("4"), dec("6"));
    const char* names[] = {"W = X+Y", "0.618*W = X+Y", "W+X = Y", "0.618*(W+X) = Y"};
    for (int i = 0; i < 4; ++i) {
        CHECK(res.relations[i].id == i + 1);
        CHECK(res.relations[i].name == names[i]);
    }
    CHECK(res.best == 0); // exact W = X + Y
    CHECK(res.relations[0].residual == dec("0"));

    auto other = ta::zigzag_time_relation(dec("5"), dec("3"), dec("13"));
    CHECK(other.relations[other.best].id == 3); // |8-13|/13 beats the rest
}

TEST_CASE("zigzag tie resolves to the earlier relation") {
    // relations 1 and 4 are both exact here: 1.618 = 0.382 + 1.236 and
    // 0.618 * (1.618 + 0.382) = 1.236
    auto res = ta::zigzag_time_relation(dec("1.618"), dec("0.382"), dec("1.236"));
    CHECK(res.relations[0].residual == dec("0"));
    CHECK(res.relations[3].residual == dec("0"));
    CHECK(res.relations[res.best].id == 1);
}

TEST_CASE("zigzag validation") {
    CHECK_THROWS_AS(ta::zigzag_time_relation(dec("0"), dec("1"), dec("1")), DomainError);
    CHECK_THROWS_AS(ta::zigzag_time_relation(dec("1"), -dec("2"), dec("1")), DomainError);
}

TEST_CASE("series validation") {
    std::vector<ta::Bar> bars = {
        {day("2000-01-03"), dec("1"), dec("2"), dec("1"), dec("1.5")},
        {day("2000-01-03"), dec("1"), dec("2"), dec("1"), dec("1.5")},
    };
    CHECK_THROWS_WITH_AS(ta::Series(bars, false),
                         "dates not strictly increasing at 2000-01-03", DomainError);
    bars[1].date = day("2000-01-04");
    bars[1].low = dec("0");
    CHECK_THROWS_WITH_AS(ta::Series(bars, false),
                         "non-positive price at 2000-01-04", DomainError);
    bars[1].low = dec("1");
    CHECK_NOTHROW(ta::Series(bars, false));

    auto closes = ta::Series::from_closes({{day("2000-01-03"), dec("4")},
                                           {day("2000-01-04"), dec("5")}});
    CHECK(closes.close_only());
    CHECK(closes[1].high == dec("5"));
}

TEST_CASE("pivots: planted V and monotone series") {
    auto v = ta::Series::from_closes({{day("2000-01-03"), dec("10")},
                                      {day("2000-01-04"), dec("9")},
                                      {day("2000-01-05"), dec("8")},
                                      {day("2000-01-06"), dec("9")},
                                      {day("2000-01-07"), dec("10")}});
    auto pivots = ta::detect_pivots(v, 2);
    REQUIRE(pivots.size() == 1);
    CHECK(pivots[0].kind == ta::PivotKind::bottom);
    CHECK(pivots[0].date.str() == "2000-01-05");
    CHECK(pivots[0].price == dec("8"));

    auto up = ta::Series::from_closes({{day("2000-01-03"), dec("1")},
                                       {day("2000-01-04"), dec("2")},
                                       {day("2000-01-05"), dec("3")},
                                       {day("2000-01-06"), dec("4")},
                                       {day("2000-01-07"), dec("5")}});
    CHECK(ta::detect_pivots(up, 2).empty());
}

TEST_CASE("pivots use highs and lows on OHLC bars") {
    std::vector<ta::Bar> bars = {
        {day("2000-01-03"), dec("4.5"), dec("5"), dec("4"), dec("4.5")},
        {day("2000-01-04"), dec("6.5"), dec("7"), dec("6"), dec("6.5")},
        {day("2000-01-05"), dec("5.5"), dec("6"), dec("5"), dec("5.5")},
    };
    auto pivots = ta::detect_pivots(ta::Series(bars, false), 1);
    REQUIRE(pivots.size() == 1);
    CHECK(pivots[0].kind == ta::PivotKind::top);
    CHECK(pivots[0].price == dec("7")); // the high, not the close
}

TEST_CASE("pivot strictness: plateaus never qualify") {
    auto flat = ta::Series::from_closes({{day("2000-01-03"), dec("10")},
                                         {day("2000-01-04"), dec("8")},
                                         {day("2000-01-05"), dec("8")},
                                         {day("2000-01-06"), dec("10")},
                                         {day("2000-01-07"), dec("12")}});
    CHECK(ta::detect_pivots(flat, 1).empty());
}

TEST_CASE("outside bar reports top before bottom") {
    std::vector<ta::Bar> bars = {
        {day("2000-01-03"), dec("4.5"), dec("5"), dec("4"), dec("4.5")},
        {day("2000-01-04"), dec("6"), dec("7"), dec("3"), dec("6")},
        {day("2000-01-05"), dec("5"), dec("6"), dec("4.5"), dec("5")},
    };
    auto pivots = ta::detect_pivots(ta::Series(bars, false), 1);
    REQUIRE(pivots.size() == 2);
    CHECK(pivots[0].kind == ta::PivotKind::top);
    CHECK(pivots[0].price == dec("7"));
    CHECK(pivots[1].kind == ta::PivotKind::bottom);
    CHECK(pivots[1].price == dec("3"));
    CHECK(pivots[0].date == pivots[1].date);
}

TEST_CASE("pivot window errors") {
    auto v = ta::Series::from_closes({{day("2000-01-03"), dec("10")},
                                      {day("2000-01-04"), dec("9")},
                                      {day("2000-01-05"), dec("8")},
                                      {day("2000-01-06"), dec("9")}});
    CHECK_THROWS_AS(ta::detect_pivots(v, 2), DomainError); // needs 5 bars
    CHECK_THROWS_AS(ta::detect_pivots(v, 0), DomainError);
}

TEST_CASE("pivot predicate re-check on 500-bar walks (property)") {
    for (std::uint32_t seed : {112358u, 132134u, 558914u}) {
        auto bars = walk_bars(seed, 500);
        for (bool close_only : {false, true}) {
            ta::Series s(bars, close_only);
            const std::size_t k = 5;
            auto pivots = ta::detect_pivots(s, int(k));
            CHECK(!pivots.empty()); // a 500-bar walk without any swing is broken
            // soundness: every reported pivot satisfies the predicate
            std::size_t tops = 0, bottoms = 0;
            for (const auto& p : pivots) {
                std::size_t i = 0;
                while (s[i].date != p.date) ++i;
                if (p.kind == ta::PivotKind::top) {
                    CHECK(window_top(s, i, k));
                    CHECK(p.price == (close_only ? s[i].close : s[i].high));
                    ++tops;
                } else {
                    CHECK(window_bottom(s, i, k));
                    CHECK(p.price == (close_only ? s[i].close : s[i].low));
                    ++bottoms;
                }
            }
            CHECK(tops + bottoms == pivots.size());
            // completeness: every qualifying index was reported
            std::size_t expect = 0;
            for (std::size_t i = k; i + k < s.size(); ++i) {
                if (window_top(s, i, k)) ++expect;
                if (window_bottom(s, i, k)) ++expect;
            }
            CHECK(expect == pivots.size());
        }
    }
}

TEST_CASE("pivots invariant under appended bars (property)") {
    const int k = 5;
    for (std::uint32_t seed : {20260819u, 46368u}) {
        auto bars = walk_bars(seed, 160);
        std::vector<ta::Bar> head(bars.begin(), bars.begin() + 120);
        auto full = ta::detect_pivots(ta::Series(bars, false), k);
        auto part = ta::detect_pivots(ta::Series(head, false), k);
        // the shorter run must be exactly a prefix of the longer one
        REQUIRE(part.size() <= full.size());
        for (std::size_t i = 0; i < part.size(); ++i)
            CHECK(same_pivot(part[i], full[i]));
        // and everything new sits past the shorter run's window horizon
        const Date horizon = head[120 - 1 - k].date;
        for (std::size_t i = part.size(); i < full.size(); ++i)
            CHECK(full[i].date > horizon);
    }
}

} // TEST_SUITE
