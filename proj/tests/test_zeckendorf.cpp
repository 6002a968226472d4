#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "fib/error.hpp"
#include "fib/seq.hpp"
#include "fib/zeckendorf.hpp"

using fib::BigInt;
namespace zk = fib::zeck;

namespace {

// Oracle: enumerate every admissible index set (indices >= 2, no two
// consecutive) whose sum stays within `limit`, counting sets per sum.
// Uniqueness means every count is exactly 1.
void enumerate(const std::vector<long>& u, int next, long sum, long limit,
               std::map<long, int>& counts) {
    for (int k = next; k < static_cast<int>(u.size()); ++k) {
        long s = sum + u[k];
        if (s > limit) break;
        counts[s] += 1;
        enumerate(u, k + 2, s, limit, counts);
    }
}

} // namespace

TEST_SUITE("zeckendorf") {

TEST_CASE("frozen decompositions") {
    CHECK(zk::zeck_encode(50) == std::vector<int>{4, 7, 9});    // 3 + 13 + 34
    CHECK(zk::zeck_encode(100) == std::vector<int>{4, 6, 11});  // 3 + 8 + 89
    CHECK(zk::zeck_encode(1) == std::vector<int>{2});
    CHECK(zk::zeck_encode(2) == std::vector<int>{3});
    CHECK(zk::zeck_encode(3) == std::vector<int>{4});
    CHECK(zk::zeck_encode(4) == std::vector<int>{2, 4});
    CHECK(zk::zeck_encode(BigInt("12586269025")) == std::vector<int>{50}); // u_50 itself
}

TEST_CASE("render_sum prints the worked form") {
    CHECK(zk::render_sum({4, 7, 9}) == "u4 + u7 + u9 = 3 + 13 + 34");
    CHECK(zk::render_sum({2}) == "u2 = 1");
    CHECK(zk::render_sum({9, 4, 7}) == "u4 + u7 + u9 = 3 + 13 + 34"); // order-free
}

TEST_CASE("encode output is always admissible and decodes back") {
    for (long n = 1; n <= 100000; ++n) {
        std::vector<int> idx = zk::zeck_encode(n);
        REQUIRE(!idx.empty());
        CHECK(idx.front() >= 2);
        for (std::size_t i = 1; i < idx.size(); ++i)
            CHECK(idx[i] >= idx[i - 1] + 2); // ascending and non-consecutive
        CHECK(zk::zeck_decode(idx) == n);
    }
}

TEST_CASE("uniqueness against the exhaustive enumeration oracle") {
    std::vector<long> u;
    for (long k = 0;; ++k) {
        long v = fib::fib(k).convert_to<long>();
        u.push_back(v);
        if (v > 10000) break;
    }
    std::map<long, int> counts;
    enumerate(u, 2, 0, 10000, counts);
    REQUIRE(counts.size() == 10000); // every N in 1..10^4 is reachable
    for (const auto& [n, count] : counts) {
        CHECK(count == 1); // and reachable exactly one way
        CHECK(zk::zeck_decode(zk::zeck_encode(n)) == n);
    }
}

TEST_CASE("decode rejects inadmissible sets") {
    CHECK_THROWS_AS(zk::zeck_decode({}), fib::DomainError);
    CHECK_THROWS_AS(zk::zeck_decode({1}), fib::DomainError);
    CHECK_THROWS_AS(zk::zeck_decode({0, 4}), fib::DomainError);
    CHECK_THROWS_AS(zk::zeck_decode({4, 4}), fib::DomainError);
    CHECK_THROWS_AS(zk::zeck_decode({4, 5}), fib::DomainError);
    CHECK_THROWS_AS(zk::zeck_decode({2, 9, 10}), fib::DomainError);
    CHECK(zk::zeck_decode({9, 4, 7}) == 50); // unordered but admissible
}

TEST_CASE("encode rejects zero and negatives") {
    CHECK_THROWS_AS(zk::zeck_encode(0), fib::DomainError);
    CHECK_THROWS_AS(zk::zeck_encode(-5), fib::DomainError);
    CHECK_THROWS_AS(zk::fib_code(0), fib::DomainError);
}

TEST_CASE("fibonacci coding golden values") {
    CHECK(zk::fib_code(1) == "11");
    CHECK(zk::fib_code(2) == "011");
    CHECK(zk::fib_code(3) == "0011");
    CHECK(zk::fib_code(4) == "1011");
    CHECK(zk::fib_code(50) == "001001011");
}

TEST_CASE("codec round-trips and never hides an interior terminator") {
    for (long n = 1; n <= 10000; ++n) {
        std::string code = zk::fib_code(n);
        CHECK(code.size() >= 2);
        CHECK(code.substr(code.size() - 2) == "11");
        CHECK(code.substr(0, code.size() - 1).find("11") == std::string::npos);
        CHECK(zk::fib_code_decode(code) == n);
    }
}

TEST_CASE("codes are prefix-free over a dense sample") {
    std::vector<std::string> codes;
    for (long n = 1; n <= 500; ++n) codes.push_back(zk::fib_code(n));
    for (std::size_t i = 0; i < codes.size(); ++i)
        for (std::size_t j = 0; j < codes.size(); ++j)
            if (i != j) CHECK(codes[j].rfind(codes[i], 0) != 0); // codes[i] not a prefix
}

TEST_CASE("decoder rejects malformed bitstrings") {
    for (const char* bits : {"", "1", "0", "10", "01", "111", "1111", "11011",
                             "1101", "00110", "2", "1x11", "011011"}) {
        CHECK_THROWS_AS(zk::fib_code_decode(bits), fib::DomainError);
    }
    CHECK(zk::fib_code_decode("011") == 2);
    CHECK(zk::fib_code_decode("101011") == 12); // 1 + 3 + 8
}

} // TEST_SUITE
