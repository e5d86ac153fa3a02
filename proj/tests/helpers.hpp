// SPDX-License-Identifier: MIT
// Small conversion helpers shared by the unit and acceptance suites.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gamme/pitch.hpp"
#include "gamme/scales.hpp"
#include "oracles.hpp"

namespace helpers {

inline std::vector<gamme::Step> steps_of(std::string_view word) {
    std::vector<gamme::Step> out;
    for (char c : word) {
        if (c == 'T')
            out.push_back(gamme::Step::tone);
        else if (c == 'S')
            out.push_back(gamme::Step::semitone);
        else
            throw std::invalid_argument("bad step word");
    }
    return out;
}

inline std::string word_of(const std::vector<gamme::Step>& steps) {
    std::string out;
    for (gamme::Step s : steps) out += s == gamme::Step::tone ? 'T' : 'S';
    return out;
}

inline gamme::ScaleStructure structure(int family_k, std::string_view word) {
    return {family_k, steps_of(word)};
}

// Exact numerator/denominator of 3^pow3 / 2^pow2, computed with the oracle's
// big-integer helpers rather than the library's.
inline void fraction_of(gamme::PitchRatio v, oracle::Big& num,
                        oracle::Big& den) {
    auto pos = [](std::int64_t x) {
        return static_cast<std::uint64_t>(x > 0 ? x : 0);
    };
    auto neg = [](std::int64_t x) {
        return static_cast<std::uint64_t>(x < 0 ? -x : 0);
    };
    num = oracle::big_pow(3, pos(v.pow3)) * oracle::big_pow(2, neg(v.pow2));
    den = oracle::big_pow(3, neg(v.pow3)) * oracle::big_pow(2, pos(v.pow2));
}

// True when the engine's decimal expansion agrees with a printed value up to
// one unit in the last printed digit (the reference tables round and truncate
// inconsistently at that digit).
inline bool printed_decimal_matches(gamme::PitchRatio v,
                                    std::string_view printed) {
    std::size_t dot = printed.find('.');
    if (dot == std::string_view::npos)
        return gamme::decimal(v, 1) == std::string(printed) + ".0";
    int places = static_cast<int>(printed.size() - dot - 1);
    std::string engine = gamme::decimal(v, places);
    auto digits = [](std::string_view s) {
        long long x = 0;
        for (char c : s)
            if (c != '.') x = x * 10 + (c - '0');
        return x;
    };
    long long a = digits(printed), b = digits(engine);
    return a - b <= 1 && b - a <= 1;
}

}  // namespace helpers
