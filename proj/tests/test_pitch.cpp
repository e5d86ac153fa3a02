// SPDX-License-Identifier: MIT

#include <doctest.h>

#include "gamme/bigint.hpp"
#include "gamme/pitch.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

using namespace gamme;

TEST_CASE("octave exponent satisfies its defining inequality") {
    for (std::int64_t k = -60; k <= 60; ++k) {
        CAPTURE(k);
        CHECK(oracle::octave_exponent_ok(k, ell(k)));
    }
    CHECK(ell(0) == 0);
    CHECK(ell(1) == 1);
    CHECK(ell(2) == 3);
    CHECK(ell(5) == 7);
    CHECK(ell(12) == 19);
    CHECK(ell(-1) == -2);
    CHECK(ell(-12) == -20);
}

TEST_CASE("xi lands inside the reference octave") {
    for (std::int64_t k = -60; k <= 60; ++k) {
        PitchRatio v = xi(k);
        CAPTURE(k);
        CHECK(v.pow3 == k);
        CHECK(compare(v, unison) >= 0);
        CHECK(compare(v, PitchRatio{0, -1}) < 0);  // < 2
    }
}

TEST_CASE("multiply, divide and octave_reduce are exact") {
    for (std::int64_t a = -20; a <= 20; a += 3) {
        for (std::int64_t b = -20; b <= 20; b += 7) {
            PitchRatio v{a, b};
            CHECK(divide(multiply(v, PitchRatio{5, 9}), PitchRatio{5, 9}) == v);
            ReducedPitch r = octave_reduce(v);
            CHECK(r.ratio == xi(a));
            CHECK(multiply(r.ratio, PitchRatio{0, -r.octaves}) == v);
        }
    }
}

TEST_CASE("compare agrees with big-integer cross multiplication") {
    const PitchRatio samples[] = {{0, 0},   {1, 1},   {-1, -2}, {12, 19},
                                  {-12, -20}, {5, 8},  {41, 65}, {-41, -65},
                                  {2, 3},   {-53, -84}};
    for (PitchRatio a : samples) {
        for (PitchRatio b : samples) {
            int expected = oracle::compare_ratios(a.pow3, a.pow2, b.pow3, b.pow2);
            auto got = compare(a, b);
            CAPTURE(a.pow3);
            CAPTURE(b.pow3);
            CHECK((got < 0 ? -1 : got > 0 ? 1 : 0) == expected);
        }
    }
    // Hairline cases around unison.
    CHECK(compare(PitchRatio{12, 19}, unison) > 0);    // comma above
    CHECK(compare(PitchRatio{-53, -84}, unison) < 0);  // 2^84 / 3^53 < 1
    CHECK(compare(PitchRatio{53, 84}, unison) > 0);
}

TEST_CASE("cents match the reference note table") {
    for (const ref::NoteRow& row : ref::note_rows) {
        CAPTURE(row.k);
        CHECK(cents(xi(row.k)) == row.cents);
    }
}

TEST_CASE("cents match a guarded floating-point oracle") {
    for (std::int64_t k = -40; k <= 40; ++k) {
        PitchRatio v = xi(k);
        oracle::FloatCents fc = oracle::float_cents(v.pow3, v.pow2);
        if (!fc.reliable) continue;
        CAPTURE(k);
        CHECK(cents(v) == fc.value);
    }
    CHECK(cents(PitchRatio{0, -2}) == 2400);  // exact powers of two
    CHECK(cents(PitchRatio{0, 3}) == -3600);
    CHECK(cents(PitchRatio{1, 1}) == 702);
}

TEST_CASE("decimal rounds half up and matches the printed table") {
    for (const ref::NoteRow& row : ref::note_rows) {
        PitchRatio v = xi(row.k);
        CAPTURE(row.k);
        CHECK(helpers::printed_decimal_matches(v, row.decimal));
        oracle::Big num, den;
        helpers::fraction_of(v, num, den);
        CHECK(oracle::decimal_half_up_ok(num, den, decimal(v, 6)));
    }
    // The one exact tie in the table: 3^5/2^7 = 1.8984375 rounds up.
    CHECK(decimal(PitchRatio{5, 7}, 6) == "1.898438");
    CHECK(decimal(PitchRatio{5, 7}, 7) == "1.8984375");
    CHECK(decimal(PitchRatio{1, 1}, 1) == "1.5");
    CHECK(decimal(unison, 3) == "1.000");
    CHECK_THROWS_AS(decimal(unison, 0), std::invalid_argument);
}

TEST_CASE("absolute applies the octave to the reduced ratio") {
    CHECK(absolute(Pitch{{2}, 1}) == PitchRatio{2, 2});   // 9/4
    CHECK(absolute(Pitch{{0}, 2}) == PitchRatio{0, -2});  // 4
    CHECK(absolute(Pitch{{-2}, 0}) == PitchRatio{-2, -4});
    CHECK(absolute(Pitch{{0}, 0}) == unison);
}

TEST_CASE("big-integer helpers") {
    CHECK(to_string(pow3_big(0)) == "1");
    CHECK(to_string(pow3_big(5)) == "243");
    CHECK(bit_length(BigInt(1)) == 1);
    CHECK(bit_length(BigInt(8)) == 4);
    CHECK_THROWS_AS(bit_length(BigInt(0)), std::domain_error);
    CHECK(binomial(7, 5) == 21);
    CHECK(binomial(12, 5) == 792);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    for (std::int64_t n = 0; n <= 22; ++n)
        for (std::int64_t k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(binomial(n, k) ==
                  oracle::pascal_binomial(static_cast<std::uint64_t>(n),
                                          static_cast<std::uint64_t>(k)));
        }
    CHECK(to_string(binomial(94, 53)) == ref::family10_scale_count);
}
