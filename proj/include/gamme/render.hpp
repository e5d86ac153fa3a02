// SPDX-License-Identifier: MIT
// Text, JSON, CSV and .scl rendering of notes, families, scales and checks.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gamme/bigint.hpp"
#include "gamme/checks.hpp"
#include "gamme/family.hpp"
#include "gamme/names.hpp"
#include "gamme/scales.hpp"

namespace gamme {

enum class Format { text, json, csv, scl };

struct RenderOptions {
    Format format = Format::text;
    bool ascii = false;
};

// Power form with the positive exponents on top: "3⁷/2¹¹", "2⁵/3³". When
// either side has exponent 0 or 1 the fraction is written with plain
// integers ("1", "3/2", "4/3"). ascii: "3^7/2^11".
std::string ratio_string(PitchRatio v, bool ascii = false);

// Fully multiplied out: "531441/524288".
std::string ratio_fraction_string(PitchRatio v);

// Step word: "θθδθθθδ", or "TTSTTTS" in ascii.
std::string structure_string(const ScaleStructure& s, bool ascii = false);

// "ξ₁₂" / "ξ₋₄₁"; ascii: "xi(12)" / "xi(-41)".
std::string xi_string(std::int64_t k, bool ascii = false);

// Note table for k in [lo, hi]: index, name, exact ratio, 6-place decimal,
// cents. With sorted_chain the ascending pitch order is appended.
std::string render_notes(std::int64_t lo, std::int64_t hi,
                         const RenderOptions& opt, bool sorted_chain = false);

// Families 1..k_max: k, p, T, D, theta and delta (exact, xi index, decimal),
// scale count; footer lists the first convergents of log2(3/2).
std::string render_families(int k_max, const RenderOptions& opt);

// Streams every structure of the family with its rotation-class id. JSON is
// only available while the family is small enough to materialize (k <= 6);
// beyond that text/csv stream and `force` must be set.
void render_enumeration(std::ostream& out, int family_k,
                        const RenderOptions& opt, bool force = false);

// Rotation classes of a family: label, representative, canonical word.
std::string render_types(int family_k, const RenderOptions& opt);

// Mode table of one type: index, mode note, traditional name, scale at the
// given tonality (with the catalog label when the result is a named scale).
std::string render_modes(int family_k, std::string_view type_label,
                         Pitch tonality, const RenderOptions& opt);

std::string render_scale(const Scale& sc, std::optional<std::string> label,
                         const RenderOptions& opt);

std::string render_checks(const std::vector<CheckReport>& reports,
                          const RenderOptions& opt);

// Tuning file: "! <label>.scl", description, pitch count, then one exact
// fraction per pitch relative to the tonality, ending on 2/1. LF endings,
// trailing newline.
std::string export_scl(const Scale& sc, std::string_view label,
                       std::string_view description);

struct SclFile {
    std::string name_line;    // without the leading "! "
    std::string description;
    std::vector<std::pair<BigInt, BigInt>> ratios;  // num/den, exact
};

// Strict parser for the format written by export_scl (also accepts extra
// "!" comment lines and bare integer ratios, as tuning tools emit them).
SclFile parse_scl(std::string_view text);

}  // namespace gamme
