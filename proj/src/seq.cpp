#include "fib/seq.hpp"

#include <cmath>

#include "fib/error.hpp"

namespace fib {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

BigInt pow10_big(long n) {
    return boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(n));
}

} // namespace

BigInt fib(long n) {
    require(n >= 0, "fib: negative index rejected: " + std::to_string(n));
    BigInt a = 0, b = 1; // fib(k), fib(k+1)
    for (long k = 0; k < n; ++k) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

BigInt fib_fast(long n) {
    require(n >= 0, "fib_fast: negative index rejected: " + std::to_string(n));
    if (n == 0) return 0;
    // Fast doubling top-down over the bits of n:
    //   F(2k)   = F(k) * (2 F(k+1) - F(k))
    //   F(2k+1) = F(k)^2 + F(k+1)^2
    BigInt a = 0, b = 1; // F(k), F(k+1), k starts at 0
    int hi = 63;
    while (hi > 0 && !((static_cast<unsigned long>(n) >> hi) & 1)) --hi;
    for (int i = hi; i >= 0; --i) {
        BigInt c = a * (2 * b - a);
        BigInt d = a * a + b * b;
        if ((static_cast<unsigned long>(n) >> i) & 1) {
            a = d;
            b = c + d;
        } else {
            a = c;
            b = d;
        }
    }
    return a;
}

std::vector<BigInt> fib_upto(long n) {
    require(n >= 0, "fib_upto: negative index rejected: " + std::to_string(n));
    std::vector<BigInt> out;
    out.reserve(n + 1);
    out.push_back(0);
    if (n >= 1) out.push_back(1);
    for (long k = 2; k <= n; ++k) out.push_back(out[k - 1] + out[k - 2]);
    return out;
}

std::int64_t binet_nearest(int n) {
    require(n >= 1 && n <= 70,
            "binet_nearest: index outside exact range 1..70: " + std::to_string(n));
    const double sqrt5 = std::sqrt(5.0);
    const double phi = (1.0 + sqrt5) / 2.0;
    // One pow call keeps the relative error near one ulp; iterated
    // multiplication would drift past the rounding threshold before n=70.
    return static_cast<std::int64_t>(std::floor(std::pow(phi, n) / sqrt5 + 0.5));
}

BigInt generalized_term(const GeneralizedSpec& seeds, long n) {
    require(n >= 1, "generalized_term: index must be >= 1: " + std::to_string(n));
    if (n == 1) return seeds.alpha;
    if (n == 2) return seeds.beta;
    return seeds.alpha * fib_fast(n - 2) + seeds.beta * fib_fast(n - 1);
}

BigInt generalized_sum(const GeneralizedSpec& seeds, long n) {
    require(n >= 1, "generalized_sum: index must be >= 1: " + std::to_string(n));
    return seeds.alpha * fib_fast(n) + seeds.beta * (fib_fast(n + 1) - 1);
}

BigInt sum_first(long n) {
    require(n >= 1, "sum_first: index must be >= 1: " + std::to_string(n));
    return fib_fast(n + 2) - 1;
}

BigInt tribonacci(const TribonacciSeeds& seeds, long n) {
    require(n >= 1, "tribonacci: index must be >= 1: " + std::to_string(n));
    if (n == 1) return seeds.t1;
    if (n == 2) return seeds.t2;
    if (n == 3) return seeds.t3;
    BigInt a = seeds.t1, b = seeds.t2, c = seeds.t3;
    for (long k = 4; k <= n; ++k) {
        BigInt d = a + b + c;
        a = b;
        b = c;
        c = d;
    }
    return c;
}

std::vector<RatioSample> ratio_table(int n_max) {
    require(n_max >= 2, "ratio_table: need n_max >= 2: " + std::to_string(n_max));
    std::vector<BigInt> u = fib_upto(n_max);
    std::vector<RatioSample> rows;
    rows.reserve(n_max - 1);
    for (int n = 2; n <= n_max; ++n) {
        // Half-up quotient at 9 decimals: floor((2*u_n*10^9 + u_{n-1}) / (2*u_{n-1})).
        BigInt q = (2 * u[n] * 1000000000 + u[n - 1]) / (2 * u[n - 1]);
        rows.push_back({n, Decimal(q.convert_to<std::int64_t>(), 9)});
    }
    return rows;
}

IdentityId identity_from_name(const std::string& name) {
    if (name == "cassini") return IdentityId::Cassini;
    if (name == "addition") return IdentityId::Addition;
    if (name == "square-diff") return IdentityId::SquareDiff;
    if (name == "sum-first") return IdentityId::SumFirst;
    if (name == "growth") return IdentityId::Growth;
    if (name == "eleven-b7") return IdentityId::ElevenB7;
    throw DomainError("unknown identity: '" + name + "'");
}

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::Cassini: return "cassini";
        case IdentityId::Addition: return "addition";
        case IdentityId::SquareDiff: return "square-diff";
        case IdentityId::SumFirst: return "sum-first";
        case IdentityId::Growth: return "growth";
        case IdentityId::ElevenB7: return "eleven-b7";
    }
    throw DomainError("unknown identity id");
}

namespace {

struct Sides {
    BigInt lhs, rhs;
};

Sides cassini_sides(long n) {
    require(n >= 1, "cassini: index must be >= 1: " + std::to_string(n));
    std::vector<BigInt> u = fib_upto(n + 1);
    BigInt lhs = u[n - 1] * u[n + 1] - u[n] * u[n];
    BigInt rhs = (n % 2 == 0) ? 1 : -1;
    return {lhs, rhs};
}

Sides addition_sides(long m, long n) {
    require(m >= 2, "addition: need m >= 2: " + std::to_string(m));
    require(n >= 1, "addition: need n >= 1: " + std::to_string(n));
    return {fib_fast(m + n), fib_fast(m - 1) * fib_fast(n) + fib_fast(m) * fib_fast(n + 1)};
}

Sides square_diff_sides(long n) {
    require(n >= 1, "square-diff: index must be >= 1: " + std::to_string(n));
    BigInt a = fib_fast(n + 2), b = fib_fast(n);
    return {a * a - b * b, fib_fast(2 * n + 2)};
}

Sides sum_first_sides(long n) {
    require(n >= 1, "sum-first: index must be >= 1: " + std::to_string(n));
    // The left side sums term by term so it stays independent of the
    // closed form it is checked against.
    std::vector<BigInt> u = fib_upto(n);
    BigInt lhs = 0;
    for (long k = 1; k <= n; ++k) lhs += u[k];
    return {lhs, fib_fast(n + 2) - 1};
}

Sides growth_sides(long n) {
    require(n >= 1, "growth: index must be >= 1: " + std::to_string(n));
    return {fib_fast(5 * n + 2), pow10_big(n)};
}

Sides eleven_b7_sides(const GeneralizedSpec& seeds) {
    BigInt lhs = 0;
    for (long k = 1; k <= 10; ++k) lhs += generalized_term(seeds, k);
    return {lhs, 11 * generalized_term(seeds, 7)};
}

} // namespace

BigInt cassini_residual(long n) {
    Sides s = cassini_sides(n);
    return s.lhs - s.rhs;
}

BigInt addition_residual(long m, long n) {
    Sides s = addition_sides(m, n);
    return s.lhs - s.rhs;
}

BigInt square_diff_residual(long n) {
    Sides s = square_diff_sides(n);
    return s.lhs - s.rhs;
}

BigInt sum_first_residual(long n) {
    Sides s = sum_first_sides(n);
    return s.lhs - s.rhs;
}

BigInt growth_residual(long n) {
    Sides s = growth_sides(n);
    return s.lhs - s.rhs;
}

BigInt eleven_b7_residual(const GeneralizedSpec& seeds) {
    Sides s = eleven_b7_sides(seeds);
    return s.lhs - s.rhs;
}

IdentityReport verify_identity(IdentityId id, const IdentityParams& params) {
    const auto arity = [&](bool want_n, bool want_m, bool want_seeds) {
        const std::string who = identity_name(id);
        if (want_n != params.n.has_value())
            throw DomainError("identity " + who + (want_n ? ": missing parameter n"
                                                          : ": unexpected parameter n"));
        if (want_m != params.m.has_value())
            throw DomainError("identity " + who + (want_m ? ": missing parameter m"
                                                          : ": unexpected parameter m"));
        if (want_seeds != params.seeds.has_value())
            throw DomainError("identity " + who + (want_seeds ? ": missing seeds alpha,beta"
                                                              : ": unexpected seeds"));
    };

    Sides s;
    switch (id) {
        case IdentityId::Cassini:
            arity(true, false, false);
            s = cassini_sides(*params.n);
            break;
        case IdentityId::Addition:
            arity(true, true, false);
            s = addition_sides(*params.m, *params.n);
            break;
        case IdentityId::SquareDiff:
            arity(true, false, false);
            s = square_diff_sides(*params.n);
            break;
        case IdentityId::SumFirst:
            arity(true, false, false);
            s = sum_first_sides(*params.n);
            break;
        case IdentityId::Growth:
            arity(true, false, false);
            s = growth_sides(*params.n);
            break;
        case IdentityId::ElevenB7:
            arity(false, false, true);
            s = eleven_b7_sides(*params.seeds);
            break;
    }
    BigInt residual = s.lhs - s.rhs;
    bool holds = (id == IdentityId::Growth) ? residual > 0 : residual == 0;
    return {id, s.lhs, s.rhs, residual, holds};
}

} // namespace fib
