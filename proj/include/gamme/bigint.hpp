// SPDX-License-Identifier: MIT
// Arbitrary-precision integer helpers shared across the library.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace gamme {

using BigInt = boost::multiprecision::cpp_int;

// 3^k for k >= 0.
BigInt pow3_big(std::uint64_t k);

// Number of binary digits of x; requires x > 0.
std::int64_t bit_length(const BigInt& x);

// binomial(n, k), exact; 0 for k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

// 10^k for k >= 0.
BigInt pow10_big(std::uint32_t k);

std::string to_string(const BigInt& x);

}  // namespace gamme
