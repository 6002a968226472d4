#include "fib/plot.hpp"

namespace fib::io {

namespace {

void hline(std::string& out, const Date& a, const Date& b, const Decimal& price) {
    out += a.str();
    out += '\t';
    out += b.str();
    out += '\t';
    out += price.str();
    out += '\n';
}

void vline(std::string& out, const Date& d, const Decimal& lo, const Decimal& hi) {
    out += d.str();
    out += '\t';
    out += lo.str();
    out += '\t';
    out += hi.str();
    out += '\n';
}

void point(std::string& out, const Date& d, const Decimal& price) {
    out += d.str();
    out += '\t';
    out += price.str();
    out += '\n';
}

} // namespace

std::string plot_retracement(const ta::Swing& s, const std::vector<ta::LevelEntry>& levels) {
    std::string out = "# hline\n";
    for (const auto& lv : levels) hline(out, s.start().date, s.end().date, lv.price);
    return out;
}

std::string plot_time_zones(const std::vector<ta::TimeZoneEntry>& zones) {
    std::string out = "# vline\n";
    const Decimal zero(0, 0), one(1, 0);
    for (const auto& z : zones) vline(out, z.date, zero, one);
    return out;
}

std::string plot_box(const ta::FibBox& box) {
    const Decimal& top = box.from_top.from_price;
    const Decimal& bottom = box.from_bottom.from_price;
    const Date& left = box.swing.end().date;
    const Date& right = box.time_targets.back().date;

    std::string out = "# hline\n";
    for (const auto& p : box.price_targets) hline(out, left, right, p.price);
    out += "# vline\n";
    for (const auto& t : box.time_targets) vline(out, t.date, bottom, top);
    out += "# diag\n";
    for (const ta::Line* d : {&box.from_top, &box.from_bottom}) {
        out += d->from_date.str();
        out += '\t';
        out += d->from_price.str();
        out += '\t';
        out += d->to_date.str();
        out += '\t';
        out += d->to_price.str();
        out += '\n';
    }
    return out;
}

std::string plot_series(const ta::Series& series) {
    std::string out = "# point\n";
    for (const ta::Bar& b : series.bars()) point(out, b.date, b.close);
    return out;
}

std::string plot_pivots(const ta::Series& series, const std::vector<ta::Pivot>& pivots) {
    std::string out = "# vline\n";
    std::size_t i = 0;
    const bool closes = series.close_only();
    for (std::size_t p = 0; p < pivots.size(); ++p) {
        if (p > 0 && pivots[p].date == pivots[p - 1].date) continue; // outside bar
        while (series[i].date != pivots[p].date) ++i; // both are chronological
        vline(out, series[i].date, closes ? series[i].close : series[i].low,
              closes ? series[i].close : series[i].high);
    }
    out += "# point\n";
    for (const ta::Bar& b : series.bars()) point(out, b.date, b.close);
    return out;
}

} // namespace fib::io
