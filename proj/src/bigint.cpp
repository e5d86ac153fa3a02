// SPDX-License-Identifier: MIT

#include "gamme/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace gamme {

BigInt pow3_big(std::uint64_t k) {
    if (k > std::numeric_limits<unsigned>::max())
        throw std::overflow_error("pow3_big: exponent too large");
    return boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(k));
}

std::int64_t bit_length(const BigInt& x) {
    if (x <= 0) throw std::domain_error("bit_length: argument must be positive");
    return static_cast<std::int64_t>(boost::multiprecision::msb(x)) + 1;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: the running product of i consecutive integers
    }
    return r;
}

BigInt pow10_big(std::uint32_t k) {
    return boost::multiprecision::pow(BigInt(10), k);
}

std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace gamme
