#include "fib/zeckendorf.hpp"

#include <algorithm>

#include "fib/error.hpp"
#include "fib/seq.hpp"

namespace fib::zeck {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

// Fibonacci terms u_2, u_3, ... up to the first term >= n.
std::vector<BigInt> terms_reaching(const BigInt& n) {
    std::vector<BigInt> u{0, 1, 1}; // u_0..u_2
    while (u.back() < n) u.push_back(u[u.size() - 1] + u[u.size() - 2]);
    return u;
}

std::vector<int> validated(std::vector<int> indices) {
    require(!indices.empty(), "zeck_decode: empty index set (zero has no decomposition)");
    std::sort(indices.begin(), indices.end());
    require(indices.front() >= 2, "zeck_decode: index below 2: " +
                                      std::to_string(indices.front()));
    for (std::size_t i = 1; i < indices.size(); ++i) {
        require(indices[i] != indices[i - 1],
                "zeck_decode: duplicate index " + std::to_string(indices[i]));
        require(indices[i] != indices[i - 1] + 1,
                "zeck_decode: consecutive indices " + std::to_string(indices[i - 1]) +
                    "," + std::to_string(indices[i]));
    }
    return indices;
}

} // namespace

std::vector<int> zeck_encode(const BigInt& n) {
    require(n >= 1, "zeck_encode: need n >= 1 (zero has no decomposition)");
    std::vector<BigInt> u = terms_reaching(n);
    std::vector<int> indices;
    BigInt rest = n;
    // Greedy from the top term downward; taking u_k leaves rest < u_{k-1},
    // which is what makes consecutive picks impossible.
    for (int k = static_cast<int>(u.size()) - 1; k >= 2 && rest > 0; --k) {
        if (u[k] <= rest) {
            indices.push_back(k);
            rest -= u[k];
        }
    }
    std::reverse(indices.begin(), indices.end());
    return indices;
}

BigInt zeck_decode(const std::vector<int>& indices) {
    std::vector<int> sorted = validated(indices);
    std::vector<BigInt> u = fib::fib_upto(sorted.back());
    BigInt sum = 0;
    for (int k : sorted) sum += u[k];
    return sum;
}

std::string render_sum(const std::vector<int>& indices) {
    std::vector<int> sorted = validated(indices);
    std::vector<BigInt> u = fib::fib_upto(sorted.back());
    std::string lhs, rhs;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) {
            lhs += " + ";
            rhs += " + ";
        }
        lhs += "u" + std::to_string(sorted[i]);
        rhs += u[sorted[i]].str();
    }
    return lhs + " = " + rhs;
}

std::string fib_code(const BigInt& n) {
    std::vector<int> indices = zeck_encode(n);
    std::string bits(indices.back() - 1, '0');
    for (int k : indices) bits[k - 2] = '1';
    bits += '1'; // terminator: top data bit is always set, so this makes "11"
    return bits;
}

BigInt fib_code_decode(const std::string& bits) {
    require(bits.size() >= 2, "fib_code_decode: too short for the \"11\" terminator");
    for (char c : bits)
        require(c == '0' || c == '1', "fib_code_decode: non-binary character");
    require(bits[bits.size() - 1] == '1' && bits[bits.size() - 2] == '1',
            "fib_code_decode: missing \"11\" terminator");
    std::string data = bits.substr(0, bits.size() - 1);
    require(data.find("11") == std::string::npos,
            "fib_code_decode: interior \"11\" before the terminator");
    std::vector<int> indices;
    for (std::size_t j = 0; j < data.size(); ++j)
        if (data[j] == '1') indices.push_back(static_cast<int>(j) + 2);
    return zeck_decode(indices);
}

} // namespace fib::zeck
