// SPDX-License-Identifier: MIT
// The tone-breaking recursion that generates the nested scale families.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gamme/bigint.hpp"
#include "gamme/pitch.hpp"

namespace gamme {

// Family k divides the octave into p steps: T tones (value theta) and D
// semitones (value delta), with 1 < delta < theta and theta^T * delta^D = 2
// holding exactly. Successive families split every tone of the previous one.
struct Family {
    int k = 1;
    std::int64_t p = 2;          // notes per octave (p = tones + semitones)
    std::int64_t tones = 1;      // T
    std::int64_t semitones = 1;  // D
    PitchRatio theta;            // tone step
    PitchRatio delta;            // semitone step
    int epsilon = +1;            // sign carried by the recursion; flips when
                                 // the ordering branch swaps the step roles
    BigInt scale_count;          // binomial(p, T): scales on a fixed tonality
};

// k = 1: two notes, theta = 3/2, delta = 4/3.
Family family_base();

// One step of the recursion. The tone is broken into the old semitone and
// the quotient theta/delta; whichever of the two is larger becomes the new
// tone (the branch test theta < delta^2 is decided exactly).
Family family_next(const Family& f);

// Family k; throws std::domain_error for k < 1 (there is no family whose
// single step is the octave itself) and std::overflow_error when exponents
// would leave the int64 range.
Family family(int k);

// (epsilon*D, -epsilon*T): theta = xi of the first index, delta = xi of the
// second. Consequence of the recursion, verified by check_steps_are_reduced_powers.
std::pair<std::int64_t, std::int64_t> family_xi_indices(const Family& f);

// The unconditional variant of the step rule: theta' = delta, delta' =
// theta/delta, with no ordering test. It is kept separate because its output
// may be degenerate (semitone above the tone, or a step below unison);
// callers must inspect the predicates instead of assuming a valid family.
struct LinearFamily {
    std::int64_t p = 2;
    std::int64_t tones = 1;
    std::int64_t semitones = 1;
    PitchRatio theta;
    PitchRatio delta;

    bool theta_above_unison() const;
    bool delta_above_unison() const;
    bool tone_exceeds_semitone() const;
};

LinearFamily linear_view(const Family& f);
LinearFamily linear_family_next(const LinearFamily& f);

// First n convergents of log2(3/2): 1/1, 1/2, 3/5, 7/12, 24/41, 31/53,
// 179/306, ... Every continued-fraction digit is found by comparing 3^X with
// 2^Y as big integers; no floating point. The depth is capped because digit
// 14 of the expansion equals 55, which pushes a single comparison past
// 10^7-bit powers.
inline constexpr int max_convergents = 13;
std::vector<std::pair<BigInt, BigInt>> convergents(int n);

}  // namespace gamme
