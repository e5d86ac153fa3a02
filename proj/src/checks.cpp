// SPDX-License-Identifier: MIT

#include "gamme/checks.hpp"

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gamme/names.hpp"
#include "gamme/pitch.hpp"
#include "gamme/scales.hpp"

namespace gamme {

namespace {

std::string pair_string(std::int64_t a, std::int64_t b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

CheckReport check_step_coprimality(int k_max) {
    CheckReport r{"step counts are coprime: gcd(T, D) = gcd(T, p) = 1", 1,
                  k_max, true, {}};
    for (int k = 1; k <= k_max; ++k) {
        Family f = family(k);
        if (std::gcd(f.tones, f.semitones) != 1 ||
            std::gcd(f.tones, f.p) != 1) {
            r.passed = false;
            r.witnesses.push_back("k=" + std::to_string(k) + ": T=" +
                                  std::to_string(f.tones) + ", D=" +
                                  std::to_string(f.semitones) + ", p=" +
                                  std::to_string(f.p));
        }
    }
    return r;
}

CheckReport check_type_count_divisibility(int k_max) {
    CheckReport r{"p divides binomial(p, T); quotient counts rotation classes",
                  1, k_max, true, {}};
    for (int k = 1; k <= k_max; ++k) {
        Family f = family(k);
        BigInt c = binomial(f.p, f.tones);
        if (c % f.p != 0) {
            r.passed = false;
            r.witnesses.push_back("k=" + std::to_string(k) +
                                  ": binomial(p, T) not divisible by p");
            continue;
        }
        if (k <= 6) {
            // Small enough to compare against a brute-force class count.
            BigInt brute = static_cast<std::int64_t>(list_types(k).size());
            if (brute != c / f.p) {
                r.passed = false;
                r.witnesses.push_back(
                    "k=" + std::to_string(k) + ": quotient " +
                    to_string(c / f.p) + " but enumeration found " +
                    to_string(brute) + " classes");
            }
        }
    }
    return r;
}

CheckReport check_steps_are_reduced_powers(int k_max) {
    CheckReport r{
        "steps are octave-reduced powers: theta = xi(eps*D), delta = "
        "xi(-eps*T), and ell(eps*D) - ell(-eps*T) = ell(eps*p)",
        1, k_max, true, {}};
    for (int k = 1; k <= k_max; ++k) {
        Family f = family(k);
        auto [a, b] = family_xi_indices(f);
        if (xi(a) != f.theta || xi(b) != f.delta) {
            r.passed = false;
            r.witnesses.push_back("k=" + std::to_string(k) +
                                  ": xi indices " + pair_string(a, b) +
                                  " do not reproduce the steps");
        }
        std::int64_t lhs = ell(a) - ell(b);
        std::int64_t rhs = ell(f.epsilon * f.p);
        if (lhs != rhs) {
            r.passed = false;
            r.witnesses.push_back("k=" + std::to_string(k) +
                                  ": ell identity fails: " +
                                  std::to_string(lhs) + " != " +
                                  std::to_string(rhs));
        }
        // Equivalent statement: the tone/semitone quotient is itself reduced.
        if (divide(f.theta, f.delta) != xi(f.epsilon * f.p)) {
            r.passed = false;
            r.witnesses.push_back("k=" + std::to_string(k) +
                                  ": theta/delta is not xi(eps*p)");
        }
    }
    return r;
}

CheckReport check_reference_step_table() {
    CheckReport r{
        "derived step indices match the reference table except its two "
        "known misprints (rows 3 and 6)",
        1, 10, true, {}};
    // The table as printed. Row 3 swapped the tone and semitone columns and
    // row 6 dropped the minus sign of the tone index.
    const std::pair<std::int64_t, std::int64_t> printed[] = {
        {1, -1},   {-1, 2},   {2, -3},  {2, -5},   {7, -5},
        {5, 12},   {-17, 12}, {-29, 12}, {12, -41}, {-41, 53},
    };
    const std::set<int> expected_errata = {3, 6};
    std::set<int> mismatches;
    for (int k = 1; k <= 10; ++k) {
        auto [a, b] = family_xi_indices(family(k));
        auto [pa, pb] = printed[k - 1];
        if (a != pa || b != pb) {
            mismatches.insert(k);
            r.witnesses.push_back("row " + std::to_string(k) + ": printed " +
                                  pair_string(pa, pb) + ", derived " +
                                  pair_string(a, b));
        }
    }
    r.passed = mismatches == expected_errata;
    if (r.passed) {
        r.witnesses.push_back(
            "row 3: columns swapped (derived (-3, 2))");
        r.witnesses.push_back(
            "row 6: sign dropped on the tone index (derived (-5, 12))");
    }
    return r;
}

CheckReport check_eight_note_counterexample() {
    CheckReport r{
        "the unchecked step rule fails at eight notes: its semitone drops "
        "below unison and the realized sequence descends",
        1, 1, true, {}};
    auto fail = [&](const std::string& msg) {
        r.passed = false;
        r.witnesses.push_back(msg);
    };

    // Iterating the unchecked rule from the base doubles nothing and adds
    // Fibonacci-style: 2, 3, 5, 8, 13 notes.
    {
        LinearFamily lf = linear_view(family_base());
        std::string counts = std::to_string(lf.p);
        for (int i = 0; i < 4; ++i) {
            lf = linear_family_next(lf);
            counts += ", " + std::to_string(lf.p);
        }
        if (counts != "2, 3, 5, 8, 13")
            fail("note counts " + counts + " instead of 2, 3, 5, 8, 13");
        else
            r.witnesses.push_back("note counts without the ordering test: " +
                                  counts);
    }

    // Two unchecked steps from the three-note family reach the premise
    // (5 notes, theta = 9/8, delta = 32/27); one more breaks down.
    LinearFamily premise = linear_family_next(linear_view(family(2)));
    if (premise.p != 5 || premise.tones != 3 || premise.semitones != 2 ||
        premise.theta != PitchRatio{2, 3} ||
        premise.delta != PitchRatio{-3, -5})
        fail("premise is not (p=5, T=3, D=2, 9/8, 32/27)");

    LinearFamily star = linear_family_next(premise);
    if (star.p != 8 || star.theta != PitchRatio{-3, -5} ||
        star.delta != PitchRatio{5, 8})
        fail("eight-note step values are not (32/27, 243/256)");
    if (star.delta_above_unison())
        fail("the eight-note semitone should sit below unison");
    else
        r.witnesses.push_back(
            "new semitone 243/256 = 3^5/2^8 < 1: a 'step' that descends");

    // Realize T S T S T T S T from do by exact ratio products. Tones shift
    // the fifth index by -3 (32/27 = xi(-3)), semitones by +5 (243/256 =
    // 3^5/2^8, the fifth index +5 an octave too low).
    const std::string word = "TSTSTTST";
    const std::int64_t expected_k[] = {0, -3, 2, -1, 4, 1, -2, 3};
    std::vector<Pitch> seq;
    seq.push_back({{0}, 0});
    PitchRatio abs = unison;
    std::int64_t k = 0;
    for (char c : word) {
        abs = multiply(abs, c == 'T' ? star.theta : star.delta);
        k += c == 'T' ? -3 : +5;
        seq.push_back({{k}, ell(k) - abs.pow2});
    }
    for (int i = 0; i < 8; ++i)
        if (seq[static_cast<std::size_t>(i)].note.k != expected_k[i] ||
            seq[static_cast<std::size_t>(i)].octave != 0)
            fail("realized note " + std::to_string(i) + " is wrong");
    if (seq.back().note.k != 0 || seq.back().octave != 1)
        fail("the sequence does not close on the octave");

    std::vector<int> descents;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (compare(absolute(seq[i + 1]), absolute(seq[i])) < 0)
            descents.push_back(static_cast<int>(i));
    if (descents != std::vector<int>{1, 3, 6}) {
        fail("descents are not exactly at the semitone steps 1, 3, 6");
    } else {
        std::string names;
        for (const Pitch& p : seq)
            names += (names.empty() ? "" : ", ") + pitch_string(p);
        r.witnesses.push_back("realized sequence: " + names);
        r.witnesses.push_back(
            "descends exactly at the semitone steps (first: mi♭ above ré)");
    }
    return r;
}

std::vector<CheckReport> run_all_checks(int k_max) {
    return {check_step_coprimality(k_max), check_type_count_divisibility(k_max),
            check_steps_are_reduced_powers(k_max), check_reference_step_table(),
            check_eight_note_counterexample()};
}

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports)
        if (!r.passed) return false;
    return true;
}

}  // namespace gamme
