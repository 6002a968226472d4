#pragma once

#include <iosfwd>
#include <string>

#include "fib/series.hpp"

namespace fib::io {

// CSV layout: header "date,open,high,low,close[,volume]" or "date,close";
// ISO-8601 dates, '.' decimal point, rows strictly increasing in date,
// positive prices. Errors name the physical row, counting the header as
// row 1. A volume column is validated as a nonnegative number but not
// stored. Lines may end in CRLF; a header-only file parses as an empty
// series, a file with no header at all is an error.
ta::Series parse_ohlc_csv(std::istream& in);
ta::Series parse_ohlc_csv_text(const std::string& text);
ta::Series load_csv(const std::string& path);

// Canonical form: the matching header plus one row per bar keeping each
// price's stored digits, so serialize-then-parse is the identity (and
// parse-then-serialize returns canonical input byte for byte).
std::string serialize_csv(const ta::Series& s);

} // namespace fib::io
