#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "fib/bigint.hpp"

namespace fib::nt {

// gcd over Fibonacci indices: (u_m, u_n) = u_{(m,n)}.
struct FibGcd {
    long d;       // gcd(m, n)
    BigInt value; // fib(d), equal to gcd(fib(m), fib(n))
};

FibGcd fib_gcd(long m, long n); // m, n >= 1

// gcd(u_n, u_{n+1}) computed directly on the values; always 1.
bool consecutive_coprime(long n); // n >= 1

// u_m | u_n <=> m | n for n >= m >= 3. Both sides are returned so the
// equivalence is visible instead of assumed.
struct DividesCheck {
    bool value_divides;
    bool index_divides;
};

DividesCheck divides_iff(long m, long n);

// One division step a = q*b + r of Euclid's algorithm.
struct EuclidStep {
    BigInt dividend, divisor, quotient, remainder;
};

struct EuclidTrace {
    std::vector<EuclidStep> steps; // final step has remainder 0
    BigInt gcd;
    int count() const { return static_cast<int>(steps.size()); }
};

EuclidTrace euclid_trace(const BigInt& a, const BigInt& b); // a >= b >= 1

// Lame worst case: gcd(u_{n+2}, u_{n+1}) takes exactly n division steps.
struct LamePair {
    long n;
    BigInt a, b; // u_{n+2}, u_{n+1}
    int steps;
};

LamePair lame_pair(long n); // n >= 1

// For prime p > 5, p divides exactly one of u_{p-1}, u_{p+1}.
struct Theorem6Witness {
    long p;
    long index;      // the divisible side, p-1 or p+1
    BigInt value;    // u_index
    BigInt quotient; // u_index / p, exact
};

Theorem6Witness theorem6_witness(long p);

// For prime p >= 7 with p = 2 or 4 (mod 5) and 2p-1 prime: (2p-1) | u_p.
struct Theorem7Check {
    long p;
    long modulus; // 2p-1
    bool holds;
    BigInt quotient; // u_p / (2p-1) when holds
};

Theorem7Check theorem7_check(long p);

struct FactorPower {
    BigInt prime;
    unsigned exponent;
};

struct Factorization {
    long n;
    BigInt value;                     // fib(n)
    std::vector<FactorPower> factors; // strictly increasing primes; empty for value < 2
};

Factorization factorize_fib(long n); // 1 <= n <= 100

// Primes dividing u_n but none of u_1..u_{n-1}. Within 1..50 this is
// empty exactly for n = 1, 2, 6, 12 (Carmichael).
std::set<std::uint64_t> primitive_divisors(long n); // 1 <= n <= 50

// Superscript rendering of an exponent, e.g. 12 -> "¹²".
std::string superscript(unsigned e);

// Factor-table line in the classic style: "19 : 4181 = 37 x 113",
// "12 : 144 = 2⁴ x 3²". Values below 2 and bare primes get no factor
// list, exponent 1 is left implicit.
std::string render_factor_line(const Factorization& f);

// Deterministic Miller-Rabin over the first twelve prime witnesses,
// exact for n < 3.3e24 -- far beyond fib(100) ~ 3.5e20.
bool is_prime(const BigInt& n);

// Trial division by primes below 10^6, then Brent's rho on survivors.
// Exactness guarantees track is_prime, so keep arguments <= fib(100).
std::vector<FactorPower> factorize(const BigInt& n); // n >= 1

} // namespace fib::nt
