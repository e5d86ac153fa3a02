// SPDX-License-Identifier: MIT

#include "gamme/names.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gamme {

namespace {

// Syllables indexed by fifth + 1, i.e. in fifths order from fa.
constexpr std::array<const char*, 7> syllables = {"fa", "do", "sol", "ré",
                                                  "la", "mi", "si"};
constexpr std::array<const char*, 7> syllables_ascii = {"fa", "do", "sol", "re",
                                                        "la", "mi", "si"};

std::string repeat(const char* token, std::int64_t n) {
    std::string out;
    for (std::int64_t i = 0; i < n; ++i) out += token;
    return out;
}

}  // namespace

NoteName name_of(NoteIndex n) {
    int fifth = static_cast<int>(((n.k % 7) + 8) % 7) - 1;  // in [-1, 5]
    return {fifth, (n.k - fifth) / 7};
}

NoteIndex index_of(NoteName name) {
    if (name.fifth < -1 || name.fifth > 5)
        throw std::invalid_argument("index_of: fifth must lie in [-1, 5]");
    return {name.fifth + 7 * name.alteration};
}

std::string note_string(NoteName name, bool ascii) {
    if (name.fifth < -1 || name.fifth > 5)
        throw std::invalid_argument("note_string: fifth must lie in [-1, 5]");
    const auto& table = ascii ? syllables_ascii : syllables;
    std::string out = table[static_cast<std::size_t>(name.fifth + 1)];
    if (name.alteration > 0)
        out += repeat(ascii ? "#" : "♯", name.alteration);
    else if (name.alteration < 0)
        out += repeat(ascii ? "b" : "♭", -name.alteration);
    return out;
}

std::string note_string(NoteIndex n, bool ascii) {
    return note_string(name_of(n), ascii);
}

std::string pitch_string(Pitch p, bool ascii) {
    std::string out = note_string(p.note, ascii);
    if (p.octave >= 0) return out + repeat("*", p.octave);
    return out + "[" + std::to_string(p.octave) + "]";
}

NoteName parse_note(std::string_view text) {
    // ASCII-lowercase, and fold the two-byte uppercase E-acute to lowercase.
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == 0xC3 && i + 1 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0x89) {
            s += "\xC3\xA9";  // É -> é
            ++i;
        } else if (c >= 'A' && c <= 'Z') {
            s += static_cast<char>(c - 'A' + 'a');
        } else {
            s += static_cast<char>(c);
        }
    }

    struct Base {
        const char* text;
        int fifth;
    };
    // Longest first so "sol" wins over nothing and "ré" over "re".
    static constexpr Base bases[] = {{"sol", 1}, {"ré", 2}, {"re", 2}, {"do", 0},
                                     {"fa", -1}, {"la", 3}, {"mi", 4}, {"si", 5}};
    int fifth = 0;
    std::size_t used = 0;
    bool found = false;
    for (const Base& b : bases) {
        std::string_view bt{b.text};
        if (s.size() >= bt.size() && std::string_view{s}.substr(0, bt.size()) == bt) {
            fifth = b.fifth;
            used = bt.size();
            found = true;
            break;
        }
    }
    if (!found) throw std::invalid_argument("parse_note: unknown syllable");

    std::int64_t sharps = 0, flats = 0;
    std::string_view rest = std::string_view{s}.substr(used);
    while (!rest.empty()) {
        if (rest.starts_with("#")) {
            ++sharps;
            rest.remove_prefix(1);
        } else if (rest.starts_with("♯")) {
            ++sharps;
            rest.remove_prefix(3);
        } else if (rest.starts_with("b")) {
            ++flats;
            rest.remove_prefix(1);
        } else if (rest.starts_with("♭")) {
            ++flats;
            rest.remove_prefix(3);
        } else {
            throw std::invalid_argument("parse_note: bad alteration mark");
        }
    }
    if (sharps > 0 && flats > 0)
        throw std::invalid_argument("parse_note: mixed sharps and flats");
    return {fifth, sharps - flats};
}

std::vector<NoteIndex> sort_by_pitch(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("sort_by_pitch: empty range");
    std::vector<NoteIndex> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t k = lo; k <= hi; ++k) out.push_back({k});
    std::stable_sort(out.begin(), out.end(), [](NoteIndex a, NoteIndex b) {
        return compare(xi(a.k), xi(b.k)) < 0;
    });
    return out;
}

}  // namespace gamme
