// SPDX-License-Identifier: MIT

#include "gamme/family.hpp"

#include <stdexcept>

namespace gamme {

Family family_base() {
    Family f;
    f.k = 1;
    f.p = 2;
    f.tones = 1;
    f.semitones = 1;
    f.theta = {1, 1};    // 3/2
    f.delta = {-1, -2};  // 4/3
    f.epsilon = +1;
    f.scale_count = 2;
    return f;
}

Family family_next(const Family& f) {
    Family g;
    g.k = f.k + 1;
    g.p = f.p + f.tones;  // every tone splits into two steps
    PitchRatio quotient = divide(f.theta, f.delta);
    if (compare(f.theta, multiply(f.delta, f.delta)) < 0) {
        // theta < delta^2: the old semitone is the larger piece.
        g.theta = f.delta;
        g.delta = quotient;
        g.tones = f.tones + f.semitones;
        g.semitones = f.tones;
        g.epsilon = -f.epsilon;
    } else {
        g.theta = quotient;
        g.delta = f.delta;
        g.tones = f.tones;
        g.semitones = f.tones + f.semitones;
        g.epsilon = f.epsilon;
    }
    g.scale_count = binomial(g.p, g.tones);
    return g;
}

Family family(int k) {
    if (k < 1) throw std::domain_error("family: index must be >= 1");
    Family f = family_base();
    for (int i = 1; i < k; ++i) f = family_next(f);
    return f;
}

std::pair<std::int64_t, std::int64_t> family_xi_indices(const Family& f) {
    return {f.epsilon * f.semitones, -f.epsilon * f.tones};
}

bool LinearFamily::theta_above_unison() const {
    return compare(theta, unison) > 0;
}

bool LinearFamily::delta_above_unison() const {
    return compare(delta, unison) > 0;
}

bool LinearFamily::tone_exceeds_semitone() const {
    return compare(theta, delta) > 0;
}

LinearFamily linear_view(const Family& f) {
    return {f.p, f.tones, f.semitones, f.theta, f.delta};
}

LinearFamily linear_family_next(const LinearFamily& f) {
    // Unchecked rule: always hand the tone role to the old semitone.
    LinearFamily g;
    g.p = f.p + f.tones;
    g.tones = f.tones + f.semitones;
    g.semitones = f.tones;
    g.theta = f.delta;
    g.delta = divide(f.theta, f.delta);
    return g;
}

std::vector<std::pair<BigInt, BigInt>> convergents(int n) {
    if (n < 0) throw std::domain_error("convergents: count must be >= 0");
    if (n > max_convergents)
        throw std::domain_error("convergents: depth capped at " +
                                std::to_string(max_convergents));
    std::vector<std::pair<BigInt, BigInt>> out;
    out.reserve(static_cast<std::size_t>(n));
    // Continued fraction of x = log2(3/2) in (0, 1): with the state value
    // log_base(arg) > 1, each digit is the largest m with base^m <= arg, and
    // the state steps to (arg / base^m, base). Start at 1/x = log_{3/2}(2).
    // Both state components stay products of powers of 2 and 3, so every
    // digit test is one exact big-integer comparison.
    PitchRatio base{1, 1};   // 3/2
    PitchRatio arg{0, -1};   // 2
    BigInt p_prev = 1, q_prev = 0;  // convergent h(-1)/k(-1) after a0 = 0
    BigInt p_cur = 0, q_cur = 1;    // convergent h(0)/k(0)
    for (int i = 0; i < n; ++i) {
        std::int64_t digit = 1;
        PitchRatio acc = base;
        while (compare(multiply(acc, base), arg) < 0) {
            acc = multiply(acc, base);
            ++digit;
        }
        BigInt p_next = digit * p_cur + p_prev;
        BigInt q_next = digit * q_cur + q_prev;
        out.emplace_back(p_next, q_next);
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        PitchRatio new_base = divide(arg, acc);
        arg = base;
        base = new_base;
    }
    return out;
}

}  // namespace gamme
