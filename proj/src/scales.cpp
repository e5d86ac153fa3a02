// SPDX-License-Identifier: MIT

#include "gamme/scales.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace gamme {

namespace {

std::vector<Step> word_to_steps(std::string_view word) {
    std::vector<Step> out;
    out.reserve(word.size());
    for (char c : word) {
        if (c == 'T')
            out.push_back(Step::tone);
        else if (c == 'S')
            out.push_back(Step::semitone);
        else
            throw std::invalid_argument("step word must contain only T and S");
    }
    return out;
}

std::vector<Step> rotate_left(std::vector<Step> w, std::size_t i) {
    std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i % w.size()),
                w.end());
    return w;
}

std::vector<Step> min_rotation(const std::vector<Step>& w) {
    std::vector<Step> best = w;
    for (std::size_t i = 1; i < w.size(); ++i)
        best = std::min(best, rotate_left(w, i));
    return best;
}

struct LabeledType {
    int family;
    const char* label;
    const char* word;  // catalog representative
};

constexpr LabeledType labeled_types[] = {
    {1, "t1", "TS"},      {2, "t1", "TST"},     {3, "t1", "TSSST"},
    {3, "t2", "STSTS"},   {4, "t1", "TTSSTTT"}, {4, "t2", "TTSTSTT"},
    {4, "t3", "TTSTTTS"},
};

struct TraditionalName {
    int family;
    const char* type_label;
    int mode_index;
    const char* name;
};

constexpr TraditionalName traditional_names[] = {
    {4, "t1", 0, "arabe"},
    {4, "t1", 3, "napolitain"},
    {4, "t1", 4, "gamme par tons et sensible"},
    {4, "t1", 5, "hypolydien"},
    {4, "t1", 6, "lydien-phrygien"},
    {4, "t2", 6, "mode de Bartok"},
    {4, "t3", 0, "ionien"},
    {4, "t3", 1, "dorien"},
    {4, "t3", 2, "phrygien"},
    {4, "t3", 3, "lydien"},
    {4, "t3", 4, "mixolydien"},
    {4, "t3", 5, "éolien"},
    {4, "t3", 6, "locrien"},
};

void check_enumerable(int family_k) {
    if (family_k > 6)
        throw std::domain_error(
            "family " + std::to_string(family_k) +
            " has too many structures to materialize; stream them instead");
}

std::string ascii_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        out += static_cast<char>(
            std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string superscript_digits(int n) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴",
                                   "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    for (char c : std::to_string(n))
        out += digits[c - '0'];
    return out;
}

std::string subscript_digits(int n) {
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄",
                                   "₅", "₆", "₇", "₈", "₉"};
    std::string out;
    for (char c : std::to_string(n))
        out += digits[c - '0'];
    return out;
}

}  // namespace

bool scale_equal(const Scale& a, const Scale& b) {
    return a.family_k == b.family_k && a.tonality == b.tonality &&
           a.pitches == b.pitches;
}

std::vector<ScaleStructure> enumerate_structures(int family_k) {
    check_enumerable(family_k);
    std::vector<ScaleStructure> out;
    for_each_structure(family_k,
                       [&](const ScaleStructure& s) { out.push_back(s); });
    return out;
}

void for_each_structure(int family_k,
                        const std::function<void(const ScaleStructure&)>& fn) {
    Family f = family(family_k);
    // Tones first is the lexicographically least word (tone orders before
    // semitone), so next_permutation walks all placements in order.
    std::vector<Step> w(static_cast<std::size_t>(f.p), Step::semitone);
    std::fill(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(f.tones),
              Step::tone);
    ScaleStructure s{family_k, w};
    do {
        s.steps = w;
        fn(s);
    } while (std::next_permutation(w.begin(), w.end()));
}

Scale build_scale(const ScaleStructure& s, Pitch tonality) {
    Family f = family(s.family_k);
    std::int64_t n_tones =
        std::count(s.steps.begin(), s.steps.end(), Step::tone);
    std::int64_t n_semis = static_cast<std::int64_t>(s.steps.size()) - n_tones;
    if (n_tones != f.tones || n_semis != f.semitones)
        throw std::invalid_argument("structure does not fit family " +
                                    std::to_string(s.family_k));
    std::int64_t tone_shift = f.epsilon * f.semitones;
    std::int64_t semitone_shift = -f.epsilon * f.tones;

    Scale sc;
    sc.family_k = s.family_k;
    sc.tonality = tonality;
    sc.pitches.reserve(s.steps.size() + 1);
    sc.pitches.push_back(tonality);
    PitchRatio abs = absolute(tonality);
    std::int64_t k = tonality.note.k;
    for (Step st : s.steps) {
        abs = multiply(abs, st == Step::tone ? f.theta : f.delta);
        k += st == Step::tone ? tone_shift : semitone_shift;
        // abs = xi(k) * 2^octave, so the octave is ell(k) - abs.pow2.
        sc.pitches.push_back({{k}, ell(k) - abs.pow2});
    }
    return sc;
}

ScaleStructure structure_of(const Scale& sc) {
    Family f = family(sc.family_k);
    if (sc.pitches.size() != static_cast<std::size_t>(f.p) + 1)
        throw std::invalid_argument("scale must have p + 1 pitches");
    ScaleStructure s;
    s.family_k = sc.family_k;
    s.steps.reserve(sc.pitches.size() - 1);
    for (std::size_t i = 0; i + 1 < sc.pitches.size(); ++i) {
        PitchRatio q =
            divide(absolute(sc.pitches[i + 1]), absolute(sc.pitches[i]));
        if (q == f.theta)
            s.steps.push_back(Step::tone);
        else if (q == f.delta)
            s.steps.push_back(Step::semitone);
        else
            throw std::invalid_argument(
                "pitch quotient is neither the tone nor the semitone");
    }
    return s;
}

TypeClass classify_type(const ScaleStructure& s) {
    Family f = family(s.family_k);
    std::int64_t n_tones =
        std::count(s.steps.begin(), s.steps.end(), Step::tone);
    if (static_cast<std::int64_t>(s.steps.size()) != f.p ||
        n_tones != f.tones)
        throw std::invalid_argument("structure does not fit family " +
                                    std::to_string(s.family_k));
    TypeClass t;
    t.family_k = s.family_k;
    t.canonical = {s.family_k, min_rotation(s.steps)};

    std::vector<Step> rep = t.canonical.steps;
    for (const LabeledType& lt : labeled_types) {
        if (lt.family != s.family_k) continue;
        std::vector<Step> w = word_to_steps(lt.word);
        if (min_rotation(w) == t.canonical.steps) {
            rep = w;
            t.label = lt.label;
            break;
        }
    }
    t.representative = {s.family_k, rep};
    t.rotations.reserve(rep.size());
    for (std::size_t i = 0; i < rep.size(); ++i)
        t.rotations.push_back({s.family_k, rotate_left(rep, i)});
    return t;
}

std::vector<TypeClass> list_types(int family_k) {
    check_enumerable(family_k);
    std::set<std::vector<Step>> canonicals;
    for_each_structure(family_k, [&](const ScaleStructure& s) {
        canonicals.insert(min_rotation(s.steps));
    });
    std::vector<TypeClass> out;
    out.reserve(canonicals.size());
    for (const auto& c : canonicals)
        out.push_back(classify_type({family_k, c}));
    // Labeled classes first, in label order; the rest keep canonical order.
    std::stable_sort(out.begin(), out.end(),
                     [](const TypeClass& a, const TypeClass& b) {
                         if (a.label.has_value() != b.label.has_value())
                             return a.label.has_value();
                         if (a.label && b.label) return *a.label < *b.label;
                         return false;
                     });
    return out;
}

TypeClass type_by_label(int family_k, std::string_view label) {
    std::vector<TypeClass> types = list_types(family_k);
    for (const TypeClass& t : types)
        if (t.label && *t.label == label) return t;
    // Positional fallback: "t<i>" addresses the i-th class in catalog order,
    // which agrees with the labels where labels exist.
    if (label.size() >= 2 && label.front() == 't') {
        std::size_t idx = 0;
        bool digits = true;
        for (char c : label.substr(1)) {
            if (c < '0' || c > '9') {
                digits = false;
                break;
            }
            idx = idx * 10 + static_cast<std::size_t>(c - '0');
        }
        if (digits && idx >= 1 && idx <= types.size()) return types[idx - 1];
    }
    throw std::domain_error("family " + std::to_string(family_k) +
                            " has no type " + std::string(label));
}

BigInt count_types(int family_k) {
    Family f = family(family_k);
    BigInt c = binomial(f.p, f.tones);
    if (c % f.p != 0)
        throw std::logic_error("rotation class count is not an integer");
    return c / f.p;
}

std::vector<ModeDescriptor> modes_of(const TypeClass& t) {
    Scale rep = build_scale(t.representative, Pitch{{0}, 0});
    std::vector<ModeDescriptor> out;
    out.reserve(t.rotations.size());
    for (std::size_t i = 0; i < t.rotations.size(); ++i) {
        ModeDescriptor m;
        m.index = static_cast<int>(i);
        m.mode_note = name_of(rep.pitches[i].note);
        if (t.label)
            for (const TraditionalName& n : traditional_names)
                if (n.family == t.family_k && *t.label == n.type_label &&
                    n.mode_index == static_cast<int>(i))
                    m.traditional_name = n.name;
        m.structure = t.rotations[i];
        out.push_back(std::move(m));
    }
    return out;
}

Scale mode_scale(const TypeClass& t, int mode_index, Pitch tonality) {
    if (mode_index < 0 ||
        static_cast<std::size_t>(mode_index) >= t.rotations.size())
        throw std::out_of_range("mode index out of range");
    return build_scale(t.rotations[static_cast<std::size_t>(mode_index)],
                       tonality);
}

Scale transpose(const Scale& sc, Pitch tonality) {
    return build_scale(structure_of(sc), tonality);
}

namespace {

struct GRow {
    const char* label;
    int family;
    const char* type_label;
    int mode_index;
    std::vector<std::int64_t> indices;  // p fifth indices, octave 0
    std::vector<std::string> nicknames;
};

struct PitchRow {
    std::int64_t k;
    std::int64_t octave;
};

struct NamedRow {
    const char* label;
    const char* display;
    int family;
    const char* type_label;
    int mode_index;
    std::vector<PitchRow> pitches;  // p + 1 entries
};

Scale scale_from_rows(int family_k, const std::vector<PitchRow>& rows) {
    Scale sc;
    sc.family_k = family_k;
    sc.tonality = {{rows.front().k}, rows.front().octave};
    for (const PitchRow& r : rows) sc.pitches.push_back({{r.k}, r.octave});
    return sc;
}

std::vector<CatalogEntry> build_catalog() {
    const std::vector<GRow> g_rows = {
        {"G1_1", 1, "t1", 0, {0, 1}, {}},
        {"G1_2", 1, "t1", 1, {0, -1}, {}},

        {"G2_1", 2, "t1", 1, {0, 2, 1}, {}},
        {"G2_2", 2, "t1", 0, {0, -1, 1}, {}},
        {"G2_3", 2, "t1", 2, {0, -1, -2}, {}},

        {"G3_1", 3, "t2", 4, {0, 2, 4, 1, 3}, {"gamme pentatonique majeure"}},
        {"G3_2", 3, "t2", 2, {0, 2, -1, 1, 3}, {}},
        {"G3_3", 3, "t2", 0, {0, 2, -1, 1, -2}, {}},
        {"G3_4", 3, "t1", 2, {0, 2, 4, 1, -2}, {}},
        {"G3_5", 3, "t1", 0, {0, -3, -1, 1, 3}, {}},
        {"G3_6", 3, "t2", 3, {0, -3, -1, 1, -2}, {"gamme pentatonique mineure"}},
        {"G3_7", 3, "t1", 3, {0, 2, -1, -4, -2}, {}},
        {"G3_8", 3, "t2", 1, {0, -3, -1, -4, -2}, {}},
        {"G3_9", 3, "t1", 4, {0, -3, -6, -4, -2}, {}},
        {"G3_10", 3, "t1", 1, {0, 2, 4, 6, 3}, {}},

        {"G4_1", 4, "t1", 0, {0, 2, 4, -1, -6, -4, -2}, {"arabe"}},
        {"G4_2", 4, "t1", 1, {0, 2, -3, -8, -6, -4, -2}, {}},
        {"G4_3", 4, "t1", 2, {0, -5, -10, -8, -6, -4, -2}, {}},
        {"G4_4", 4, "t1", 3, {0, -5, -3, -1, 1, 3, 5}, {"napolitain"}},
        {"G4_5", 4, "t1", 4, {0, 2, 4, 6, 8, 10, 5},
         {"gamme par tons et sensible"}},
        {"G4_6", 4, "t1", 5, {0, 2, 4, 6, 8, 3, -2}, {"hypolydien"}},
        {"G4_7", 4, "t1", 6, {0, 2, 4, 6, 1, -4, -2}, {"lydien-phrygien"}},
        {"G4_8", 4, "t2", 0, {0, 2, 4, -1, 1, -4, -2}, {}},
        {"G4_9", 4, "t2", 1, {0, 2, -3, -1, -6, -4, -2}, {}},
        {"G4_10", 4, "t2", 2, {0, -5, -3, -8, -6, -4, -2}, {}},
        {"G4_11", 4, "t2", 3, {0, 2, -3, -1, 1, 3, 5}, {}},
        {"G4_12", 4, "t2", 4, {0, -5, -3, -1, 1, 3, -2}, {}},
        {"G4_13", 4, "t2", 5, {0, 2, 4, 6, 8, 3, 5}, {}},
        {"G4_14", 4, "t2", 6, {0, 2, 4, 6, 1, 3, -2},
         {"mode de Bartok", "Raga Vachaspati"}},
        {"G4_15", 4, "t3", 0, {0, 2, 4, -1, 1, 3, 5}, {"ionien", "majeur"}},
        {"G4_16", 4, "t3", 1, {0, 2, -3, -1, 1, 3, -2}, {"dorien"}},
        {"G4_17", 4, "t3", 2, {0, -5, -3, -1, 1, -4, -2}, {"phrygien"}},
        {"G4_18", 4, "t3", 3, {0, 2, 4, 6, 1, 3, 5}, {"lydien"}},
        {"G4_19", 4, "t3", 4, {0, 2, 4, -1, 1, 3, -2}, {"mixolydien"}},
        {"G4_20", 4, "t3", 5, {0, 2, -3, -1, 1, -4, -2}, {"éolien", "mineur"}},
        {"G4_21", 4, "t3", 6, {0, -5, -3, -1, -6, -4, -2}, {"locrien"}},
    };

    const std::vector<NamedRow> named_rows = {
        {"H1", "H1", 3, "t2", 0,
         {{0, 0}, {2, 0}, {-1, 0}, {1, 0}, {-2, 0}, {0, 1}}},
        {"H2", "H2", 3, "t2", 2,
         {{-1, 0}, {1, 0}, {-2, 0}, {0, 1}, {2, 1}, {-1, 1}}},
        {"H3", "H3", 3, "t2", 3,
         {{1, 0}, {-2, 0}, {0, 1}, {2, 1}, {-1, 1}, {1, 1}}},
        {"H4", "H4", 3, "t2", 4,
         {{-2, 0}, {0, 1}, {2, 1}, {-1, 1}, {1, 1}, {-2, 1}}},
        {"H5", "H5", 3, "t2", 1,
         {{2, 0}, {-1, 0}, {1, 0}, {-2, 0}, {0, 1}, {2, 1}}},

        {"gong", "gong diaoshi", 3, "t2", 4,
         {{0, 0}, {2, 0}, {4, 0}, {1, 0}, {3, 0}, {0, 1}}},
        {"shang", "shang diaoshi", 3, "t2", 0,
         {{2, 0}, {4, 0}, {1, 0}, {3, 0}, {0, 1}, {2, 1}}},
        {"jue", "jue diaoshi", 3, "t2", 1,
         {{4, 0}, {1, 0}, {3, 0}, {0, 1}, {2, 1}, {4, 1}}},
        {"zhi", "zhi diaoshi", 3, "t2", 2,
         {{1, 0}, {3, 0}, {0, 1}, {2, 1}, {4, 1}, {1, 1}}},
        {"yu", "yu diaoshi", 3, "t2", 3,
         {{3, 0}, {0, 1}, {2, 1}, {4, 1}, {1, 1}, {3, 1}}},
    };

    std::vector<CatalogEntry> out;
    out.reserve(g_rows.size() + named_rows.size());

    for (const GRow& g : g_rows) {
        CatalogEntry e;
        e.label = g.label;
        std::string_view lbl{g.label};
        std::size_t underscore = lbl.find('_');
        e.display = "G" + superscript_digits(g.family) +
                    subscript_digits(std::stoi(std::string(
                        lbl.substr(underscore + 1))));
        e.type_label = g.type_label;
        e.mode_index = g.mode_index;
        e.nicknames = g.nicknames;
        std::vector<PitchRow> rows;
        for (std::int64_t k : g.indices) rows.push_back({k, 0});
        rows.push_back({g.indices.front(), 1});
        e.scale = scale_from_rows(g.family, rows);
        out.push_back(std::move(e));
    }
    for (const NamedRow& n : named_rows) {
        CatalogEntry e;
        e.label = n.label;
        e.display = n.display;
        e.type_label = n.type_label;
        e.mode_index = n.mode_index;
        e.scale = scale_from_rows(n.family, n.pitches);
        out.push_back(std::move(e));
    }

    // Every entry must be consistent with the construction machinery.
    for (const CatalogEntry& e : out) {
        ScaleStructure st = structure_of(e.scale);
        if (!scale_equal(build_scale(st, e.scale.tonality), e.scale))
            throw std::logic_error("catalog entry " + e.label +
                                   " does not rebuild from its structure");
        TypeClass tc = classify_type(st);
        if (!tc.label || *tc.label != e.type_label)
            throw std::logic_error("catalog entry " + e.label +
                                   " has the wrong type label");
        if (tc.rotations[static_cast<std::size_t>(e.mode_index)].steps !=
            st.steps)
            throw std::logic_error("catalog entry " + e.label +
                                   " has the wrong mode index");
    }
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& named_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

const CatalogEntry* find_catalog_entry(std::string_view label) {
    std::string key = ascii_lower(label);
    constexpr std::string_view suffix = " diaoshi";
    if (key.size() > suffix.size() &&
        key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0)
        key.erase(key.size() - suffix.size());
    for (const CatalogEntry& e : named_catalog())
        if (ascii_lower(e.label) == key) return &e;
    return nullptr;
}

}  // namespace gamme
