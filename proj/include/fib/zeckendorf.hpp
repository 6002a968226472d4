#pragma once

#include <string>
#include <vector>

#include "fib/bigint.hpp"

namespace fib::zeck {

// Zeckendorf decomposition: every N >= 1 is a unique sum of
// non-consecutive Fibonacci terms u_k with k >= 2 (1-based indexing,
// so u_2 = 1 is the smallest usable term and u_1 never appears).

std::vector<int> zeck_encode(const BigInt& n); // n >= 1; ascending indices

// Inverse; rejects indices < 2, duplicates and consecutive pairs.
// Order of the input does not matter.
BigInt zeck_decode(const std::vector<int>& indices);

// "u4 + u7 + u9 = 3 + 13 + 34" for indices {4, 7, 9}.
std::string render_sum(const std::vector<int>& indices);

// Fibonacci coding: data bit j is set iff index j+2 is in the
// decomposition, then a final '1' creates the unique "11" terminator.
std::string fib_code(const BigInt& n); // n >= 1
BigInt fib_code_decode(const std::string& bits);

} // namespace fib::zeck
