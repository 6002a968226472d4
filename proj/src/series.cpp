#include "fib/series.hpp"

#include <utility>

#include "fib/error.hpp"

namespace fib::ta {

namespace {

void validate(const std::vector<Bar>& bars) {
    const Decimal zero;
    for (std::size_t i = 0; i < bars.size(); ++i) {
        const Bar& b = bars[i];
        if (b.open <= zero || b.high <= zero || b.low <= zero || b.close <= zero)
            throw DomainError("non-positive price at " + b.date.str());
        if (i > 0 && !(bars[i - 1].date < b.date))
            throw DomainError("dates not strictly increasing at " + b.date.str());
    }
}

} // namespace

Series::Series(std::vector<Bar> bars, bool close_only)
    : bars_(std::move(bars)), close_only_(close_only) {
    validate(bars_);
}

Series Series::from_closes(std::vector<std::pair<Date, Decimal>> rows) {
    std::vector<Bar> bars;
    bars.reserve(rows.size());
    for (auto& [date, close] : rows) bars.push_back({date, close, close, close, close});
    return Series(std::move(bars), true);
}

} // namespace fib::ta
