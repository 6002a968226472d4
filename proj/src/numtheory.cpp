#include "fib/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fib/error.hpp"
#include "fib/seq.hpp"

namespace fib::nt {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::powm;

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

const std::vector<std::uint32_t>& small_primes() {
    // Sieve of Eratosthenes below 10^6, built once. fib(100) has no
    // composite survivor with three factors above this bound, so trial
    // division plus one or two rho splits always finishes.
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1000000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t p = 2; p <= limit; ++p) {
            if (composite[p]) continue;
            out.push_back(p);
            for (std::uint64_t q = std::uint64_t(p) * p; q <= limit; q += p)
                composite[q] = true;
        }
        return out;
    }();
    return primes;
}

// Brent's cycle variant of Pollard rho with batched gcds. Returns a
// nontrivial factor or n itself (caller retries with the next c).
BigInt brent_rho(const BigInt& n, const BigInt& c) {
    const auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    BigInt x = 2, y = 2, ys = 2, d = 1, q = 1;
    unsigned long r = 1;
    constexpr unsigned long batch = 128;
    while (d == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        for (unsigned long k = 0; k < r && d == 1; k += batch) {
            ys = y;
            for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
                y = f(y);
                q = q * abs(x - y) % n;
            }
            d = gcd(q, n);
        }
        r *= 2;
    }
    if (d == n) { // backtrack one step at a time
        d = 1;
        while (d == 1) {
            ys = f(ys);
            d = gcd(abs(x - ys), n);
        }
    }
    return d;
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& acc) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++acc[n];
        return;
    }
    BigInt d = n;
    for (BigInt c = 1; d == n; ++c) d = brent_rho(n, c);
    factor_into(d, acc);
    factor_into(n / d, acc);
}

} // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    static const int witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int w : witnesses) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    BigInt d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (int w : witnesses) {
        BigInt x = powm(BigInt(w), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<FactorPower> factorize(const BigInt& n) {
    require(n >= 1, "factorize: argument must be >= 1");
    std::map<BigInt, unsigned> acc;
    BigInt m = n;
    BigInt root = sqrt(m); // refreshed only when m shrinks
    for (std::uint32_t p : small_primes()) {
        if (root < p) break;
        if (m % p == 0) {
            do {
                m /= p;
                ++acc[BigInt(p)];
            } while (m % p == 0);
            root = sqrt(m);
        }
    }
    factor_into(m, acc);
    std::vector<FactorPower> out;
    out.reserve(acc.size());
    for (const auto& [prime, exp] : acc) out.push_back({prime, exp});
    return out; // std::map keeps primes increasing
}

FibGcd fib_gcd(long m, long n) {
    require(m >= 1 && n >= 1, "fib_gcd: indices must be >= 1");
    long d = std::gcd(m, n);
    return {d, fib_fast(d)};
}

bool consecutive_coprime(long n) {
    require(n >= 1, "consecutive_coprime: index must be >= 1");
    return gcd(fib_fast(n), fib_fast(n + 1)) == 1;
}

DividesCheck divides_iff(long m, long n) {
    require(m >= 3, "divides_iff: m must be >= 3 (u_1, u_2 divide everything): " +
                        std::to_string(m));
    require(n >= m, "divides_iff: need n >= m");
    return {fib_fast(n) % fib_fast(m) == 0, n % m == 0};
}

EuclidTrace euclid_trace(const BigInt& a, const BigInt& b) {
    require(b >= 1, "euclid_trace: divisor must be >= 1 (b = 0 rejected)");
    require(a >= b, "euclid_trace: need a >= b");
    EuclidTrace trace;
    BigInt x = a, y = b;
    while (y != 0) {
        BigInt q = x / y, r = x % y;
        trace.steps.push_back({x, y, q, r});
        x = y;
        y = r;
    }
    trace.gcd = x;
    return trace;
}

LamePair lame_pair(long n) {
    require(n >= 1, "lame_pair: index must be >= 1");
    BigInt a = fib_fast(n + 2), b = fib_fast(n + 1);
    EuclidTrace trace = euclid_trace(a, b);
    return {n, a, b, trace.count()};
}

Theorem6Witness theorem6_witness(long p) {
    require(p > 5 && is_prime(BigInt(p)),
            "theorem6: need a prime p > 5, got " + std::to_string(p));
    BigInt minus = fib_fast(p - 1), plus = fib_fast(p + 1);
    bool div_minus = minus % p == 0, div_plus = plus % p == 0;
    require(div_minus != div_plus, "theorem6: exactly-one-side invariant broken at p = " +
                                       std::to_string(p)); // unreachable for prime p > 5
    long index = div_minus ? p - 1 : p + 1;
    BigInt value = div_minus ? minus : plus;
    return {p, index, value, value / p};
}

Theorem7Check theorem7_check(long p) {
    require(p >= 7 && is_prime(BigInt(p)),
            "theorem7: need a prime p >= 7, got " + std::to_string(p));
    long r = p % 5;
    require(r == 2 || r == 4, "theorem7: residue precondition failed, p = " +
                                  std::to_string(p) + " is " + std::to_string(r) +
                                  " (mod 5), want 2 or 4");
    long q = 2 * p - 1;
    require(is_prime(BigInt(q)), "theorem7: modulus precondition failed, 2p-1 = " +
                                     std::to_string(q) + " is composite");
    BigInt value = fib_fast(p);
    bool holds = value % q == 0;
    return {p, q, holds, holds ? value / q : BigInt(0)};
}

Factorization factorize_fib(long n) {
    require(n >= 1 && n <= 100,
            "factorize_fib: index outside supported range 1..100: " + std::to_string(n));
    BigInt value = fib_fast(n);
    Factorization out{n, value, {}};
    if (value >= 2) out.factors = factorize(value);
    return out;
}

std::string superscript(unsigned e) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴",
                                   "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string plain = std::to_string(e), out;
    for (char c : plain) out += digits[c - '0'];
    return out;
}

std::string render_factor_line(const Factorization& f) {
    std::string line = std::to_string(f.n) + " : " + f.value.str();
    bool bare_prime = f.factors.size() == 1 && f.factors[0].exponent == 1 &&
                      f.factors[0].prime == f.value;
    if (f.factors.empty() || bare_prime) return line;
    line += " =";
    bool first = true;
    for (const auto& [prime, exp] : f.factors) {
        line += first ? " " : " x ";
        first = false;
        line += prime.str();
        if (exp > 1) line += superscript(exp);
    }
    return line;
}

std::set<std::uint64_t> primitive_divisors(long n) {
    require(n >= 1 && n <= 50,
            "primitive_divisors: index outside supported range 1..50: " + std::to_string(n));
    std::set<std::uint64_t> seen;
    for (long k = 1; k < n; ++k)
        for (const auto& f : factorize_fib(k).factors)
            seen.insert(f.prime.convert_to<std::uint64_t>());
    std::set<std::uint64_t> fresh;
    for (const auto& f : factorize_fib(n).factors) {
        std::uint64_t p = f.prime.convert_to<std::uint64_t>();
        if (!seen.count(p)) fresh.insert(p);
    }
    return fresh;
}

} // namespace fib::nt
