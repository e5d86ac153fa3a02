// SPDX-License-Identifier: MIT

#include "gamme/pitch.hpp"

#include <limits>
#include <stdexcept>

#include "gamme/bigint.hpp"

namespace gamme {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("pitch exponent overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("pitch exponent overflow");
    return r;
}

// Splits v = 3^pow3 / 2^pow2 into coprime numerator and denominator.
void to_fraction(PitchRatio v, BigInt& num, BigInt& den) {
    num = 1;
    den = 1;
    if (v.pow3 >= 0)
        num *= pow3_big(static_cast<std::uint64_t>(v.pow3));
    else
        den *= pow3_big(static_cast<std::uint64_t>(-v.pow3));
    if (v.pow2 >= 0)
        den <<= v.pow2;
    else
        num <<= -v.pow2;
}

}  // namespace

PitchRatio multiply(PitchRatio a, PitchRatio b) {
    return {checked_add(a.pow3, b.pow3), checked_add(a.pow2, b.pow2)};
}

PitchRatio divide(PitchRatio a, PitchRatio b) {
    return {checked_add(a.pow3, -b.pow3), checked_add(a.pow2, -b.pow2)};
}

std::int64_t ell(std::int64_t k) {
    if (k == 0) return 0;
    if (k > 0) return bit_length(pow3_big(static_cast<std::uint64_t>(k))) - 1;
    // floor(-x) = -floor(x) - 1 for irrational x, and k*log2(3) is irrational.
    return -ell(-k) - 1;
}

PitchRatio xi(std::int64_t k) { return {k, ell(k)}; }

ReducedPitch octave_reduce(PitchRatio v) {
    // v = 3^a / 2^b = xi(a) * 2^(ell(a) - b).
    std::int64_t octaves = checked_add(ell(v.pow3), -v.pow2);
    return {xi(v.pow3), octaves};
}

std::strong_ordering compare(PitchRatio a, PitchRatio b) {
    std::int64_t d3 = checked_add(a.pow3, -b.pow3);
    std::int64_t d2 = checked_add(a.pow2, -b.pow2);
    // a <=> b reduces to 3^d3 <=> 2^d2; move negative exponents across.
    BigInt lhs = 1, rhs = 1;
    if (d3 >= 0)
        lhs = pow3_big(static_cast<std::uint64_t>(d3));
    else
        rhs = pow3_big(static_cast<std::uint64_t>(-d3));
    if (d2 >= 0)
        rhs <<= d2;
    else
        lhs <<= -d2;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t cents(PitchRatio v) {
    if (v.pow3 == 0) return checked_mul(-1200, v.pow2);
    // 2400 * log2 v = F + frac with F = ell(2400 pow3) - 2400 pow2 and
    // frac in (0, 1) irrational, so rounding 1200 * log2 v to the nearest
    // integer never meets a tie and only needs the parity of F.
    std::int64_t F = checked_add(ell(checked_mul(2400, v.pow3)),
                                 -checked_mul(2400, v.pow2));
    if (F % 2 == 0) return F / 2;
    return (F + 1) / 2;  // exact: F odd makes F + 1 even
}

std::string decimal(PitchRatio v, int places) {
    if (places < 1) throw std::invalid_argument("decimal: places must be >= 1");
    BigInt num, den;
    to_fraction(v, num, den);
    // Round half up: q = floor((2 * num * 10^places + den) / (2 * den)).
    BigInt q = (2 * num * pow10_big(static_cast<std::uint32_t>(places)) + den) /
               (2 * den);
    BigInt scale = pow10_big(static_cast<std::uint32_t>(places));
    std::string frac = to_string(q % scale);
    frac.insert(frac.begin(), static_cast<std::size_t>(places) - frac.size(), '0');
    return to_string(q / scale) + "." + frac;
}

PitchRatio absolute(Pitch p) {
    PitchRatio r = xi(p.note.k);
    return {r.pow3, checked_add(r.pow2, -p.octave)};
}

}  // namespace gamme
