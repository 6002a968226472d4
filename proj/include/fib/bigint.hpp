#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fib {

// Arbitrary-precision integer used everywhere exactness matters.
// cpp_int is header-only and value-semantic; fib(10^4) has ~2090 digits.
using BigInt = boost::multiprecision::cpp_int;

} // namespace fib
