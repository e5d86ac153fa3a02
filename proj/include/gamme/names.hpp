// SPDX-License-Identifier: MIT
// Solfege names on the line of fifths: fa do sol ré la mi si plus alterations.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gamme/pitch.hpp"

namespace gamme {

// Every fifth index decomposes uniquely as k = fifth + 7 * alteration with
// fifth in [-1, 5]. The fifth selects the plain syllable (fa do sol ré la mi
// si, in fifths order); the alteration counts sharps (> 0) or flats (< 0).
struct NoteName {
    int fifth = 0;
    std::int64_t alteration = 0;

    friend bool operator==(const NoteName&, const NoteName&) = default;
};

NoteName name_of(NoteIndex n);
NoteIndex index_of(NoteName name);

// "ré", "fa♯♯", "si♭"; with ascii set: "re", "fa##", "sib".
std::string note_string(NoteName name, bool ascii = false);
std::string note_string(NoteIndex n, bool ascii = false);

// Note name with octave stars: "do*", "ré**". Octaves below the reference
// octave (never produced by scale construction) render as "name[o]".
std::string pitch_string(Pitch p, bool ascii = false);

// Parses a base syllable followed by sharps ("#" or "♯") or flats ("b" or
// "♭"), case-insensitive; "re" is accepted for "ré". Mixed alteration marks
// are rejected. Throws std::invalid_argument on malformed input.
NoteName parse_note(std::string_view text);

// All note indices k in [lo, hi], sorted by ascending octave-reduced pitch.
std::vector<NoteIndex> sort_by_pitch(std::int64_t lo, std::int64_t hi);

}  // namespace gamme
