// SPDX-License-Identifier: MIT
// Exact arithmetic on pitch ratios of the form 3^a / 2^b.

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace gamme {

// A positive rational whose only prime factors are 2 and 3, stored as the
// exponent pair of 3^pow3 / 2^pow2. By unique factorization the pair is
// unique for a given value, so equality is plain member comparison and no
// gcd reduction is ever needed.
struct PitchRatio {
    std::int64_t pow3 = 0;
    std::int64_t pow2 = 0;

    friend bool operator==(const PitchRatio&, const PitchRatio&) = default;
};

inline constexpr PitchRatio unison{0, 0};

PitchRatio multiply(PitchRatio a, PitchRatio b);
PitchRatio divide(PitchRatio a, PitchRatio b);

// floor(k * log2 3), the octave exponent of 3^k: 2^ell(k) <= 3^k < 2^(ell(k)+1).
// For k > 0 this is the bit length of 3^k minus one; for k < 0 it follows from
// floor(-x) = -floor(x) - 1, valid because k * log2 3 is never an integer.
// No floating-point logarithm is involved.
std::int64_t ell(std::int64_t k);

// xi(k) = 3^k / 2^ell(k), the representative of the k-th fifth inside [1, 2).
PitchRatio xi(std::int64_t k);

struct ReducedPitch {
    PitchRatio ratio;      // in [1, 2)
    std::int64_t octaves;  // original value = ratio * 2^octaves
};

// Splits a pitch ratio into its octave-reduced part and an octave count.
ReducedPitch octave_reduce(PitchRatio v);

// Exact order comparison: 3^d3 against 2^d2 as big integers, negative
// exponents moved across the inequality. Never floating point.
std::strong_ordering compare(PitchRatio a, PitchRatio b);

// Nearest integer to 1200 * log2 v, ties rounded away from zero. Computed
// exactly: 2400 * log2 v = F + frac with F = ell(2400 * pow3) - 2400 * pow2
// and frac in (0, 1), irrational whenever pow3 != 0, so a true tie can only
// arise at exact powers of two where the result is a whole multiple of 1200.
std::int64_t cents(PitchRatio v);

// Decimal expansion of v rounded to `places` digits after the point;
// requires places >= 1. The scaled value v * 10^places has denominator
// 2^(pow2 - places) (when positive), so exact half-way cases do occur —
// precisely when pow2 == places + 1 — and are rounded up.
std::string decimal(PitchRatio v, int places);

// Position on the line of fifths; the note k sounds at xi(k) once reduced
// into the reference octave.
struct NoteIndex {
    std::int64_t k = 0;

    friend bool operator==(const NoteIndex&, const NoteIndex&) = default;
};

// A note placed in a definite octave: the sounding ratio is xi(k) * 2^octave.
struct Pitch {
    NoteIndex note;
    std::int64_t octave = 0;

    friend bool operator==(const Pitch&, const Pitch&) = default;
};

PitchRatio absolute(Pitch p);

}  // namespace gamme
