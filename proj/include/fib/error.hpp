#pragma once

#include <stdexcept>
#include <string>

namespace fib {

// Thrown when a mathematical precondition is violated: bad index range,
// malformed input, degenerate geometry, broken invariants. The CLI maps
// this to exit code 1; usage errors are the parser's business (exit 2).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fib
