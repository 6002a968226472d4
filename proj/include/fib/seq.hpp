#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fib/bigint.hpp"
#include "fib/decimal.hpp"

namespace fib {

// Core Fibonacci sequences in exact integer arithmetic. Canonical
// indexing is 0-based: fib(0)=0, fib(1)=1, fib(2)=1, ... so the familiar
// 1-based u_k (u_1 = u_2 = 1) is just fib(k) for k >= 1.

BigInt fib(long n);      // iterative, O(n) bigint additions
BigInt fib_fast(long n); // fast doubling, O(log n) multiplications
std::vector<BigInt> fib_upto(long n); // fib(0..n) in one pass

// Nearest-integer Binet form: round(phi^n / sqrt5). The floating-point
// error must stay below one half for the rounding to be exact, which
// holds for 1 <= n <= 70; anything outside that range is rejected.
std::int64_t binet_nearest(int n);

// Generalized sequence: b_1 = alpha, b_2 = beta, b_n = b_{n-1} + b_{n-2}.
struct GeneralizedSpec {
    BigInt alpha;
    BigInt beta;
};

BigInt generalized_term(const GeneralizedSpec& seeds, long n);
// b_1 + ... + b_n = alpha*fib(n) + beta*(fib(n+1) - 1), closed form.
BigInt generalized_sum(const GeneralizedSpec& seeds, long n);
// u_1 + ... + u_n = fib(n+2) - 1.
BigInt sum_first(long n);

// Order-3 analogue: t_n = t_{n-1} + t_{n-2} + t_{n-3} from three seeds.
struct TribonacciSeeds {
    BigInt t1, t2, t3;
};

BigInt tribonacci(const TribonacciSeeds& seeds, long n);

// One row of the successive-ratio table u_n / u_{n-1}. The quotient is
// kept half-up at 9 decimals so convergence tests see past the 6-decimal
// display grid; display() rounds to the printed 6-decimal form.
struct RatioSample {
    int n;
    Decimal ratio; // scale 9
    Decimal display() const { return ratio.round_half_up(6); }
};

std::vector<RatioSample> ratio_table(int n_max); // rows n = 2..n_max

// Classical identities, verified by computing both sides independently
// and reporting the exact residual (lhs - rhs). Growth is an inequality:
// its residual u_{5n+2} - 10^n must be positive rather than zero.
enum class IdentityId {
    Cassini,    // u_{n-1}*u_{n+1} - u_n^2 = (-1)^n
    Addition,   // u_{m+n} = u_{m-1}*u_n + u_m*u_{n+1}
    SquareDiff, // u_{n+2}^2 - u_n^2 = u_{2n+2}
    SumFirst,   // u_1 + ... + u_n = u_{n+2} - 1
    Growth,     // u_{5n+2} > 10^n
    ElevenB7,   // b_1 + ... + b_10 = 11*b_7
};

IdentityId identity_from_name(const std::string& name); // rejects unknown ids
std::string identity_name(IdentityId id);

struct IdentityParams {
    std::optional<long> n;
    std::optional<long> m;                 // Addition only
    std::optional<GeneralizedSpec> seeds;  // ElevenB7 only
};

struct IdentityReport {
    IdentityId id;
    BigInt lhs, rhs, residual;
    bool holds;
};

BigInt cassini_residual(long n);            // n >= 1
BigInt addition_residual(long m, long n);   // m >= 2, n >= 1
BigInt square_diff_residual(long n);        // n >= 1
BigInt sum_first_residual(long n);          // n >= 1
BigInt growth_residual(long n);             // n >= 1
BigInt eleven_b7_residual(const GeneralizedSpec& seeds);

// Dispatcher used by the CLI; enforces exact parameter arity per identity.
IdentityReport verify_identity(IdentityId id, const IdentityParams& params);

} // namespace fib
