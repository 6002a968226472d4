#include "fib/csv.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <utility>
#include <vector>

#include "fib/error.hpp"

namespace fib::io {

namespace {

constexpr const char* kOhlcHeader = "date,open,high,low,close";
constexpr const char* kOhlcVolumeHeader = "date,open,high,low,close,volume";
constexpr const char* kCloseHeader = "date,close";

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

std::string row_tag(int row) { return "row " + std::to_string(row) + ": "; }

Date date_field(const std::string& text, int row) {
    try {
        return Date::parse(text);
    } catch (const DomainError&) {
        throw DomainError(row_tag(row) + "malformed date '" + text + "'");
    }
}

Decimal price_field(const std::string& text, int row, const char* column) {
    Decimal p;
    try {
        p = Decimal::parse(text);
    } catch (const DomainError&) {
        throw DomainError(row_tag(row) + "malformed " + column + " '" + text + "'");
    }
    if (p <= Decimal())
        throw DomainError(row_tag(row) + "non-positive " + column + " '" + text + "'");
    return p;
}

void volume_field(const std::string& text, int row) {
    Decimal v;
    try {
        v = Decimal::parse(text);
    } catch (const DomainError&) {
        throw DomainError(row_tag(row) + "malformed volume '" + text + "'");
    }
    if (v.negative()) throw DomainError(row_tag(row) + "negative volume '" + text + "'");
}

} // namespace

ta::Series parse_ohlc_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw DomainError("empty CSV: missing header row");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    bool close_only = false, has_volume = false;
    if (line == kOhlcHeader) {
    } else if (line == kOhlcVolumeHeader) {
        has_volume = true;
    } else if (line == kCloseHeader) {
        close_only = true;
    } else {
        throw DomainError("row 1: unrecognized header '" + line + "'");
    }
    const std::size_t want = close_only ? 2 : (has_volume ? 6 : 5);

    std::vector<ta::Bar> bars;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) throw DomainError(row_tag(row) + "empty line");
        auto fields = split_fields(line);
        if (fields.size() != want)
            throw DomainError(row_tag(row) + "expected " + std::to_string(want) +
                              " fields, got " + std::to_string(fields.size()));
        Date date = date_field(fields[0], row);
        if (!bars.empty() && !(bars.back().date < date))
            throw DomainError(row_tag(row) + "dates not strictly increasing");
        if (close_only) {
            Decimal close = price_field(fields[1], row, "close");
            bars.push_back({date, close, close, close, close});
        } else {
            Decimal open = price_field(fields[1], row, "open");
            Decimal high = price_field(fields[2], row, "high");
            Decimal low = price_field(fields[3], row, "low");
            Decimal close = price_field(fields[4], row, "close");
            if (has_volume) volume_field(fields[5], row);
            bars.push_back({date, open, high, low, close});
        }
    }
    return ta::Series(std::move(bars), close_only);
}

ta::Series parse_ohlc_csv_text(const std::string& text) {
    std::istringstream in(text);
    return parse_ohlc_csv(in);
}

ta::Series load_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open CSV file: " + path);
    return parse_ohlc_csv(in);
}

std::string serialize_csv(const ta::Series& s) {
    std::string out;
    if (s.close_only()) {
        out += kCloseHeader;
        out += '\n';
        for (const ta::Bar& b : s.bars()) {
            out += b.date.str();
            out += ',';
            out += b.close.str();
            out += '\n';
        }
    } else {
        out += kOhlcHeader;
        out += '\n';
        for (const ta::Bar& b : s.bars()) {
            out += b.date.str();
            out += ',';
            out += b.open.str();
            out += ',';
            out += b.high.str();
            out += ',';
            out += b.low.str();
            out += ',';
            out += b.close.str();
            out += '\n';
        }
    }
    return out;
}

} // namespace fib::io
