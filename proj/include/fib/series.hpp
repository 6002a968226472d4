#pragma once

#include <cstddef>
#include <vector>

#include "fib/dates.hpp"
#include "fib/decimal.hpp"

namespace fib::ta {

// One price bar. Close-only feeds store the close in all four fields.
struct Bar {
    Date date;
    Decimal open, high, low, close;
};

// Ordered bar list: strictly increasing dates, positive prices. The
// close_only flag records that the source had no intraday range, so
// extremum scans must use the close rather than high/low.
class Series {
public:
    Series(std::vector<Bar> bars, bool close_only);
    static Series from_closes(std::vector<std::pair<Date, Decimal>> rows);

    const std::vector<Bar>& bars() const { return bars_; }
    bool close_only() const { return close_only_; }
    std::size_t size() const { return bars_.size(); }
    const Bar& operator[](std::size_t i) const { return bars_[i]; }

private:
    std::vector<Bar> bars_;
    bool close_only_;
};

} // namespace fib::ta
