#pragma once

#include <string>
#include <vector>

#include "fib/series.hpp"
#include "fib/ta.hpp"

namespace fib::io {

// Renderer-agnostic TSV plot data: one section header per line family,
// sections always in the order "# hline", "# vline", "# diag", "# point"
// (absent families are omitted), rows tab-separated:
//   hline  date_start  date_end  price
//   vline  date  price_min  price_max
//   diag   date1  price1  date2  price2
//   point  date  price
// Prices keep their exact stored digits, so output is a pure function
// of the input record and reruns are byte-identical.

// Horizontal level lines spanning the swing's date range.
std::string plot_retracement(const ta::Swing& s, const std::vector<ta::LevelEntry>& levels);

// Vertical lines; with no price series in sight the span is the unit
// interval 0..1. An empty list yields just the section header.
std::string plot_time_zones(const std::vector<ta::TimeZoneEntry>& zones);

// The full grid: 5 horizontal levels across the box, 4 vertical time
// targets spanning the box height, and the 2 diagonals.
std::string plot_box(const ta::FibBox& box);

// Close prices as points.
std::string plot_series(const ta::Series& series);

// Pivot markers: a vertical line through each pivot bar's range (close
// only: a degenerate line at the close), then the series closes.
std::string plot_pivots(const ta::Series& series, const std::vector<ta::Pivot>& pivots);

} // namespace fib::io
