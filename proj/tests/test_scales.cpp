// SPDX-License-Identifier: MIT

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "gamme/scales.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

using namespace gamme;

namespace {

// The reference pitch list of a catalog G row: every index in the base
// octave, closing on the tonality one octave up.
std::vector<Pitch> g_row_pitches(const ref::GEntry& g) {
    std::vector<Pitch> out;
    for (std::int64_t k : g.indices) out.push_back({{k}, 0});
    out.push_back({{g.indices.front()}, 1});
    return out;
}

std::vector<Pitch> pitches_of(const std::vector<ref::PitchRef>& rows) {
    std::vector<Pitch> out;
    for (const ref::PitchRef& r : rows) out.push_back({{r.k}, r.octave});
    return out;
}

// Least rotation of a step word under the library's step order (tone before
// semitone), computed independently by mapping to characters that sort the
// same way.
std::string canonical_word(std::string w) {
    for (char& c : w) c = c == 'T' ? 'A' : 'B';
    std::string m = oracle::min_rotation(w);
    for (char& c : m) c = c == 'A' ? 'T' : 'S';
    return m;
}

}  // namespace

TEST_CASE("enumeration counts and order") {
    CHECK(enumerate_structures(1).size() == 2);
    CHECK(enumerate_structures(2).size() == 3);
    CHECK(enumerate_structures(3).size() == 10);
    CHECK(enumerate_structures(4).size() == 21);
    CHECK(enumerate_structures(5).size() == 792);

    auto list = enumerate_structures(3);
    CHECK(helpers::word_of(list.front().steps) == "TTSSS");
    CHECK(helpers::word_of(list.back().steps) == "SSSTT");
    for (std::size_t i = 1; i < list.size(); ++i)
        CHECK(list[i - 1].steps < list[i].steps);  // strict lexicographic

    // The ten five-note words are exactly the catalog's family-3 words.
    std::set<std::string> words;
    for (const ScaleStructure& s : list) words.insert(helpers::word_of(s.steps));
    std::set<std::string> expected;
    for (const ref::GEntry& g : ref::g_entries)
        if (g.family == 3) expected.insert(g.word);
    CHECK(words == expected);

    CHECK_THROWS_AS(enumerate_structures(7), std::domain_error);

    std::vector<ScaleStructure> streamed;
    for_each_structure(4, [&](const ScaleStructure& s) { streamed.push_back(s); });
    CHECK(streamed == enumerate_structures(4));
}

TEST_CASE("build_scale realizes every cataloged word on do") {
    for (const ref::GEntry& g : ref::g_entries) {
        CAPTURE(g.label);
        Scale sc = build_scale(helpers::structure(g.family, g.word), {{0}, 0});
        CHECK(sc.pitches == g_row_pitches(g));
        // Strictly ascending, confirmed by the big-integer oracle.
        for (std::size_t i = 0; i + 1 < sc.pitches.size(); ++i) {
            PitchRatio a = absolute(sc.pitches[i]);
            PitchRatio b = absolute(sc.pitches[i + 1]);
            CHECK(oracle::compare_ratios(a.pow3, a.pow2, b.pow3, b.pow2) < 0);
        }
    }
}

TEST_CASE("structure_of inverts build_scale across families and tonalities") {
    for (int k = 1; k <= 4; ++k) {
        for (const ScaleStructure& s : enumerate_structures(k)) {
            for (std::int64_t t = -6; t <= 6; ++t) {
                Scale sc = build_scale(s, {{t}, 0});
                CHECK(structure_of(sc) == s);
            }
        }
    }
}

TEST_CASE("build_scale and structure_of validate their input") {
    CHECK_THROWS_AS(build_scale(helpers::structure(3, "TTTSS"), {{0}, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_scale(helpers::structure(4, "TS"), {{0}, 0}),
                    std::invalid_argument);
    Scale sc = build_scale(helpers::structure(3, "TSSST"), {{0}, 0});
    sc.pitches[2].note.k += 7;  // no longer a tone or semitone away
    CHECK_THROWS_AS(structure_of(sc), std::invalid_argument);
    sc.pitches.pop_back();
    CHECK_THROWS_AS(structure_of(sc), std::invalid_argument);
}

TEST_CASE("classify_type finds canonical rotations and labels") {
    for (const ref::GEntry& g : ref::g_entries) {
        CAPTURE(g.label);
        TypeClass t = classify_type(helpers::structure(g.family, g.word));
        REQUIRE(t.label.has_value());
        CHECK(*t.label == g.type_label);
        CHECK(helpers::word_of(t.canonical.steps) == canonical_word(g.word));
        CHECK(t.rotations.size() == static_cast<std::size_t>(family(g.family).p));
        std::set<std::string> distinct;
        for (const ScaleStructure& r : t.rotations)
            distinct.insert(helpers::word_of(r.steps));
        CHECK(distinct.size() == t.rotations.size());
        CHECK(helpers::word_of(t.rotations[static_cast<std::size_t>(g.mode_index)]
                                   .steps) == g.word);
    }
    for (const ref::TypeRef& tr : ref::type_refs) {
        TypeClass t = classify_type(helpers::structure(tr.family, tr.word));
        REQUIRE(t.label.has_value());
        CHECK(*t.label == tr.label);
        CHECK(helpers::word_of(t.representative.steps) == tr.word);
    }
    // Family-5 classes carry no label but still have 12 distinct rotations.
    TypeClass t5 = classify_type(helpers::structure(5, "TTTTTSSSSSSS"));
    CHECK_FALSE(t5.label.has_value());
    CHECK(t5.rotations.size() == 12);
    CHECK_THROWS_AS(classify_type(helpers::structure(5, "TTTTTTSSSSSS")),
                    std::invalid_argument);
}

TEST_CASE("type counts: binomial(p, T) / p") {
    CHECK(count_types(1) == 1);
    CHECK(count_types(2) == 1);
    CHECK(count_types(3) == 2);
    CHECK(count_types(4) == 3);
    CHECK(count_types(5) == 66);
    CHECK(count_types(6) == 364);
    for (int k = 1; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(BigInt(static_cast<std::int64_t>(list_types(k).size())) ==
              count_types(k));
    }
    CHECK_THROWS_AS(list_types(7), std::domain_error);
}

TEST_CASE("type lookup by label, positional beyond the catalog") {
    CHECK(helpers::word_of(type_by_label(4, "t3").representative.steps) ==
          "TTSTTTS");
    CHECK(helpers::word_of(type_by_label(3, "t2").representative.steps) ==
          "STSTS");
    CHECK_THROWS_AS(type_by_label(4, "t4"), std::domain_error);
    CHECK_THROWS_AS(type_by_label(4, "nope"), std::domain_error);
    CHECK_NOTHROW(type_by_label(5, "t66"));
    CHECK_THROWS_AS(type_by_label(5, "t67"), std::domain_error);
}

TEST_CASE("modes carry the right starting notes and traditional names") {
    for (const ref::TypeRef& tr : ref::type_refs) {
        TypeClass t = type_by_label(tr.family, tr.label);
        std::vector<ModeDescriptor> modes = modes_of(t);
        REQUIRE(modes.size() == tr.mode_notes.size());
        for (std::size_t i = 0; i < modes.size(); ++i) {
            CAPTURE(tr.family);
            CAPTURE(tr.label);
            CAPTURE(i);
            CHECK(index_of(modes[i].mode_note).k == tr.mode_notes[i]);
            CHECK(modes[i].structure.steps ==
                  t.rotations[i].steps);
        }
    }
    std::map<std::pair<std::string, int>, std::string> names;
    for (const ref::ModeNameRef& m : ref::mode_names)
        names[{m.type_label, m.mode_index}] = m.name;
    for (const char* lbl : {"t1", "t2", "t3"}) {
        TypeClass t = type_by_label(4, lbl);
        for (const ModeDescriptor& m : modes_of(t)) {
            auto it = names.find({lbl, m.index});
            if (it == names.end()) {
                CHECK_FALSE(m.traditional_name.has_value());
            } else {
                REQUIRE(m.traditional_name.has_value());
                CHECK(*m.traditional_name == it->second);
            }
        }
    }
    // Five-note modes have no traditional names of their own.
    for (const ModeDescriptor& m : modes_of(type_by_label(3, "t2")))
        CHECK_FALSE(m.traditional_name.has_value());
}

TEST_CASE("catalog entries are the modes they claim to be") {
    for (const ref::GEntry& g : ref::g_entries) {
        CAPTURE(g.label);
        const CatalogEntry* e = find_catalog_entry(g.label);
        REQUIRE(e != nullptr);
        CHECK(e->type_label == g.type_label);
        CHECK(e->mode_index == g.mode_index);
        CHECK(e->scale.pitches == g_row_pitches(g));
        TypeClass t = type_by_label(g.family, g.type_label);
        CHECK(scale_equal(mode_scale(t, g.mode_index, {{0}, 0}), e->scale));
    }
}

TEST_CASE("transpositions printed in the reference discussion") {
    for (const ref::TranspositionRef& tr : ref::transposition_refs) {
        CAPTURE(tr.label);
        const CatalogEntry* e = find_catalog_entry(tr.label);
        REQUIRE(e != nullptr);
        Scale moved = transpose(e->scale, {{tr.to_k}, 0});
        CHECK(moved.pitches == pitches_of(tr.pitches));
    }
}

TEST_CASE("Helmholtz scales and the diaoshi are transposed catalog modes") {
    auto check_entries = [](const std::vector<ref::NamedEntry>& entries) {
        for (const ref::NamedEntry& n : entries) {
            CAPTURE(n.label);
            const CatalogEntry* e = find_catalog_entry(n.label);
            REQUIRE(e != nullptr);
            CHECK(e->type_label == n.type_label);
            CHECK(e->mode_index == n.mode_index);
            CHECK(e->scale.pitches == pitches_of(n.pitches));
            const CatalogEntry* base = find_catalog_entry(n.of_label);
            REQUIRE(base != nullptr);
            CHECK(scale_equal(e->scale,
                              transpose(base->scale, {{n.at_k}, 0})));
        }
    };
    check_entries(ref::helmholtz_entries);
    check_entries(ref::diaoshi_entries);
}

TEST_CASE("catalog integrity and lookup") {
    const auto& cat = named_catalog();
    CHECK(cat.size() == 46);
    std::set<std::string> labels;
    for (const CatalogEntry& e : cat) labels.insert(e.label);
    CHECK(labels.size() == cat.size());

    CHECK(find_catalog_entry("g4_15") != nullptr);
    CHECK(find_catalog_entry("GONG") != nullptr);
    CHECK(find_catalog_entry("zhi diaoshi") != nullptr);
    CHECK(find_catalog_entry("Jue Diaoshi") != nullptr);
    CHECK(find_catalog_entry("nope") == nullptr);

    CHECK(find_catalog_entry("G4_15")->display == "G⁴₁₅");
    CHECK(find_catalog_entry("gong")->display == "gong diaoshi");

    auto nick = [&](const char* label) {
        return find_catalog_entry(label)->nicknames;
    };
    CHECK(nick("G4_15") == std::vector<std::string>{"ionien", "majeur"});
    CHECK(nick("G4_20") == std::vector<std::string>{"éolien", "mineur"});
    CHECK(nick("G4_14") ==
          std::vector<std::string>{"mode de Bartok", "Raga Vachaspati"});
    CHECK(nick("G3_1") ==
          std::vector<std::string>{"gamme pentatonique majeure"});
    CHECK(nick("G3_6") ==
          std::vector<std::string>{"gamme pentatonique mineure"});
}

TEST_CASE("mode_scale rejects out-of-range indices") {
    TypeClass t = type_by_label(4, "t3");
    CHECK_THROWS_AS(mode_scale(t, 7, {{0}, 0}), std::out_of_range);
    CHECK_THROWS_AS(mode_scale(t, -1, {{0}, 0}), std::out_of_range);
}
