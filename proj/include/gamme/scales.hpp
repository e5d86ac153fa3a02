// SPDX-License-Identifier: MIT
// Scales assembled from a family's steps: enumeration, rotation types,
// modes, transposition, and the named catalog.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gamme/bigint.hpp"
#include "gamme/family.hpp"
#include "gamme/names.hpp"
#include "gamme/pitch.hpp"

namespace gamme {

enum class Step : unsigned char { tone = 0, semitone = 1 };

// A word of p steps containing exactly T tones and D semitones.
struct ScaleStructure {
    int family_k = 1;
    std::vector<Step> steps;

    friend bool operator==(const ScaleStructure&, const ScaleStructure&) = default;
};

// p + 1 ascending pitches; the last is the tonality one octave up.
struct Scale {
    int family_k = 1;
    Pitch tonality;
    std::vector<Pitch> pitches;
};

// Exact pitch-sequence equality.
bool scale_equal(const Scale& a, const Scale& b);

// All binomial(p, T) tone placements, in lexicographic order with tone
// ordered before semitone. Materializing is refused above family 6 (family 7
// already has ~5.2e7 structures); use for_each_structure to stream them.
std::vector<ScaleStructure> enumerate_structures(int family_k);
void for_each_structure(int family_k,
                        const std::function<void(const ScaleStructure&)>& fn);

// Realizes a structure starting at the tonality. Each tone advances the
// fifth index by epsilon*D, each semitone by -epsilon*T; octaves follow from
// the exact ratio product. Throws std::invalid_argument if the step counts
// do not match the family.
Scale build_scale(const ScaleStructure& s, Pitch tonality);

// Recovers the step word from consecutive pitch quotients; throws
// std::invalid_argument if some quotient is neither theta nor delta.
ScaleStructure structure_of(const Scale& sc);

// Rotation equivalence class of a structure. All p rotations are distinct
// (T is coprime to p), so each class has exactly p members.
struct TypeClass {
    int family_k = 1;
    ScaleStructure canonical;       // lexicographically least rotation
    ScaleStructure representative;  // catalog representative when labeled,
                                    // otherwise the canonical rotation
    std::vector<ScaleStructure> rotations;  // representative rotated by 0..p-1
    std::optional<std::string> label;       // "t1", "t2", ... when cataloged
};

TypeClass classify_type(const ScaleStructure& s);

// Types of a family in catalog order (labeled representatives first families
// 1-4; otherwise sorted canonical words). Enumeration-backed: family <= 6.
std::vector<TypeClass> list_types(int family_k);

// Looks up "t1", "t2", ... in list_types order; throws std::domain_error.
TypeClass type_by_label(int family_k, std::string_view label);

// binomial(p, T) / p, exact for every family (p always divides the count).
BigInt count_types(int family_k);

struct ModeDescriptor {
    int index = 0;          // rotation offset from the representative
    NoteName mode_note;     // note the mode starts on in the fundamental
                            // scale of the representative built on do
    std::optional<std::string> traditional_name;
    ScaleStructure structure;
};

std::vector<ModeDescriptor> modes_of(const TypeClass& t);

// Scale of mode `mode_index` of type t, built at the given tonality.
Scale mode_scale(const TypeClass& t, int mode_index, Pitch tonality);

// Same structure, new tonality.
Scale transpose(const Scale& sc, Pitch tonality);

struct CatalogEntry {
    std::string label;    // stable id: "G4_15", "H2", "zhi"
    std::string display;  // pretty form: "G⁴₁₅", "H2", "zhi diaoshi"
    std::string type_label;
    int mode_index = 0;
    std::vector<std::string> nicknames;  // "ionien", "majeur", "arabe", ...
    Scale scale;
};

// The named scales of families 1-4 plus the five-note scales of Helmholtz
// and the five Chinese diaoshi. Built once from embedded pitch data and
// self-checked against build_scale and classify_type on first use.
const std::vector<CatalogEntry>& named_catalog();

// nullptr when the label is unknown. Accepts the stable id, case-insensitive,
// and "gong diaoshi" style long forms.
const CatalogEntry* find_catalog_entry(std::string_view label);

}  // namespace gamme
