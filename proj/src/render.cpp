// SPDX-License-Identifier: MIT

#include "gamme/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace gamme {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string superscript(std::int64_t n) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴",
                                   "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    for (char c : std::to_string(n))
        out += c == '-' ? "⁻" : digits[c - '0'];
    return out;
}

std::string subscript(std::int64_t n) {
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄",
                                   "₅", "₆", "₇", "₈", "₉"};
    std::string out;
    for (char c : std::to_string(n))
        out += c == '-' ? "₋" : digits[c - '0'];
    return out;
}

void to_fraction(PitchRatio v, BigInt& num, BigInt& den) {
    num = 1;
    den = 1;
    if (v.pow3 >= 0)
        num *= pow3_big(static_cast<std::uint64_t>(v.pow3));
    else
        den *= pow3_big(static_cast<std::uint64_t>(-v.pow3));
    if (v.pow2 >= 0)
        den <<= v.pow2;
    else
        num <<= -v.pow2;
}

// Columns as UTF-8 strings; width counts code points, which is right for the
// accents, flats and superscripts used here.
std::size_t display_width(std::string_view s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

std::string pad_right(std::string s, std::size_t w) {
    std::size_t have = display_width(s);
    if (have < w) s.append(w - have, ' ');
    return s;
}

std::string table_to_text(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], display_width(row[i]));
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += i + 1 == row.size() ? row[i] : pad_right(row[i], widths[i]);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

// Six decimal places with trailing zeros (and a bare point) trimmed, so exact
// values print short: 1, 1.5, 1.125, 1.898438.
std::string decimal_trimmed(PitchRatio v) {
    std::string s = decimal(v, 6);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

ordered_json ratio_json(PitchRatio v) {
    return {{"pow3", v.pow3},
            {"pow2", v.pow2},
            {"decimal", decimal_trimmed(v)},
            {"cents", cents(v)}};
}

ordered_json pitch_json(Pitch p, bool ascii) {
    return {{"k", p.note.k},
            {"octave", p.octave},
            {"name", pitch_string(p, ascii)}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// The catalog label of a scale, when it is one of the named scales.
std::optional<std::string> catalog_label_of(const Scale& sc) {
    for (const CatalogEntry& e : named_catalog())
        if (scale_equal(e.scale, sc)) return e.label;
    return std::nullopt;
}

std::string csv_escape(const std::string& s) {
    // No field produced here contains commas, quotes or newlines; keep the
    // writer honest anyway.
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ",";
        out += csv_escape(fields[i]);
    }
    return out + "\n";
}

std::string type_id(const std::vector<TypeClass>& types,
                    const std::vector<Step>& canonical) {
    for (std::size_t i = 0; i < types.size(); ++i)
        if (types[i].canonical.steps == canonical)
            return types[i].label ? *types[i].label
                                  : "t" + std::to_string(i + 1);
    throw std::logic_error("structure belongs to no enumerated type");
}

}  // namespace

std::string ratio_string(PitchRatio v, bool ascii) {
    std::int64_t a = v.pow3, b = v.pow2;
    if (std::abs(a) <= 1 || std::abs(b) <= 1) {
        BigInt num, den;
        to_fraction(v, num, den);
        if (den == 1) return to_string(num);
        return to_string(num) + "/" + to_string(den);
    }
    auto factor = [&](std::int64_t base, std::int64_t exp) {
        return ascii ? std::to_string(base) + "^" + std::to_string(exp)
                     : std::to_string(base) + superscript(exp);
    };
    const char* join = ascii ? "*" : "·";
    std::string num, den;
    if (a > 0) num = factor(3, a);
    if (b < 0) num += (num.empty() ? "" : join) + factor(2, -b);
    if (a < 0) den = factor(3, -a);
    if (b > 0) den += (den.empty() ? "" : join) + factor(2, b);
    if (num.empty()) num = "1";
    if (den.empty()) return num;
    return num + "/" + den;
}

std::string ratio_fraction_string(PitchRatio v) {
    BigInt num, den;
    to_fraction(v, num, den);
    return to_string(num) + "/" + to_string(den);
}

std::string structure_string(const ScaleStructure& s, bool ascii) {
    std::string out;
    for (Step st : s.steps)
        out += st == Step::tone ? (ascii ? "T" : "θ") : (ascii ? "S" : "δ");
    return out;
}

std::string xi_string(std::int64_t k, bool ascii) {
    if (ascii) return "xi(" + std::to_string(k) + ")";
    return "ξ" + subscript(k);
}

std::string render_notes(std::int64_t lo, std::int64_t hi,
                         const RenderOptions& opt, bool sorted_chain) {
    if (lo > hi) throw std::invalid_argument("render_notes: empty range");

    if (opt.format == Format::json) {
        ordered_json doc;
        doc["notes"] = ordered_json::array();
        for (std::int64_t k = lo; k <= hi; ++k) {
            doc["notes"].push_back({{"k", k},
                                    {"name", note_string(NoteIndex{k}, opt.ascii)},
                                    {"ratio", ratio_json(xi(k))}});
        }
        if (sorted_chain) {
            doc["ascending"] = ordered_json::array();
            for (NoteIndex n : sort_by_pitch(lo, hi))
                doc["ascending"].push_back(
                    {{"k", n.k}, {"name", note_string(n, opt.ascii)}});
        }
        return dump(doc);
    }

    if (opt.format == Format::csv) {
        std::string out = csv_row({"k", "name", "ratio", "decimal", "cents"});
        for (std::int64_t k = lo; k <= hi; ++k) {
            PitchRatio v = xi(k);
            out += csv_row({std::to_string(k), note_string(NoteIndex{k}, opt.ascii),
                            ratio_string(v, true), decimal_trimmed(v),
                            std::to_string(cents(v))});
        }
        return out;
    }

    if (opt.format == Format::scl)
        throw std::invalid_argument("the note table has no tuning-file form");

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"k", "note", "ratio", "decimal", "cents"});
    for (std::int64_t k = lo; k <= hi; ++k) {
        PitchRatio v = xi(k);
        rows.push_back({std::to_string(k), note_string(NoteIndex{k}, opt.ascii),
                        ratio_string(v, opt.ascii), decimal_trimmed(v),
                        std::to_string(cents(v))});
    }
    std::string out = table_to_text(rows);
    if (sorted_chain) {
        out += "\nascending:";
        for (NoteIndex n : sort_by_pitch(lo, hi))
            out += " " + note_string(n, opt.ascii);
        out += "\n";
    }
    return out;
}

std::string render_families(int k_max, const RenderOptions& opt) {
    if (k_max < 1)
        throw std::invalid_argument("render_families: need at least family 1");
    std::vector<Family> fams;
    fams.push_back(family_base());
    while (static_cast<int>(fams.size()) < k_max)
        fams.push_back(family_next(fams.back()));
    auto convs = convergents(std::min(7, max_convergents));

    if (opt.format == Format::json) {
        ordered_json doc;
        doc["families"] = ordered_json::array();
        for (const Family& f : fams) {
            auto [tx, sx] = family_xi_indices(f);
            doc["families"].push_back(
                {{"k", f.k},
                 {"p", f.p},
                 {"tones", f.tones},
                 {"semitones", f.semitones},
                 {"theta", ratio_json(f.theta)},
                 {"theta_xi", tx},
                 {"delta", ratio_json(f.delta)},
                 {"delta_xi", sx},
                 {"epsilon", f.epsilon},
                 {"scales", to_string(f.scale_count)}});
        }
        doc["convergents"] = ordered_json::array();
        for (const auto& [p, q] : convs)
            doc["convergents"].push_back({{"p", to_string(p)}, {"q", to_string(q)}});
        return dump(doc);
    }

    if (opt.format == Format::csv) {
        std::string out = csv_row({"k", "p", "tones", "semitones", "theta",
                                   "theta_xi", "theta_decimal", "delta",
                                   "delta_xi", "delta_decimal", "epsilon",
                                   "scales"});
        for (const Family& f : fams) {
            auto [tx, sx] = family_xi_indices(f);
            out += csv_row({std::to_string(f.k), std::to_string(f.p),
                            std::to_string(f.tones), std::to_string(f.semitones),
                            ratio_string(f.theta, true), std::to_string(tx),
                            decimal_trimmed(f.theta), ratio_string(f.delta, true),
                            std::to_string(sx), decimal_trimmed(f.delta),
                            std::to_string(f.epsilon), to_string(f.scale_count)});
        }
        return out;
    }

    if (opt.format == Format::scl)
        throw std::invalid_argument("the family table has no tuning-file form");

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"k", "p", "T", "D", "theta", "", "", "delta", "", "", "eps",
                    "scales"});
    for (const Family& f : fams) {
        auto [tx, sx] = family_xi_indices(f);
        rows.push_back({std::to_string(f.k), std::to_string(f.p),
                        std::to_string(f.tones), std::to_string(f.semitones),
                        ratio_string(f.theta, opt.ascii), xi_string(tx, opt.ascii),
                        decimal_trimmed(f.theta),
                        ratio_string(f.delta, opt.ascii), xi_string(sx, opt.ascii),
                        decimal_trimmed(f.delta),
                        (f.epsilon > 0 ? "+1" : "-1"),
                        to_string(f.scale_count)});
    }
    std::string out = table_to_text(rows);
    out += "\nlog2(3/2) convergents:";
    for (const auto& [p, q] : convs) out += " " + to_string(p) + "/" + to_string(q);
    out += "\n";
    return out;
}

void render_enumeration(std::ostream& out, int family_k,
                        const RenderOptions& opt, bool force) {
    Family f = family(family_k);
    if (family_k > 6) {
        if (opt.format == Format::json)
            throw std::domain_error(
                "JSON needs the whole list in memory; family " +
                std::to_string(family_k) + " has " + to_string(f.scale_count) +
                " structures");
        if (!force)
            throw std::domain_error("family " + std::to_string(family_k) +
                                    " has " + to_string(f.scale_count) +
                                    " structures; use --force to stream them");
    }
    if (opt.format == Format::scl)
        throw std::invalid_argument("enumerations have no tuning-file form");

    const bool typed = family_k <= 6;
    std::vector<TypeClass> types;
    if (typed) types = list_types(family_k);
    auto id_of = [&](const ScaleStructure& s) {
        return type_id(types, classify_type(s).canonical.steps);
    };

    if (opt.format == Format::json) {
        ordered_json doc;
        doc["family"] = family_k;
        doc["count"] = to_string(f.scale_count);
        doc["structures"] = ordered_json::array();
        for_each_structure(family_k, [&](const ScaleStructure& s) {
            doc["structures"].push_back(
                {{"word", structure_string(s, opt.ascii)}, {"type", id_of(s)}});
        });
        out << dump(doc);
        return;
    }

    if (opt.format == Format::csv) {
        out << (typed ? csv_row({"structure", "type"}) : csv_row({"structure"}));
        for_each_structure(family_k, [&](const ScaleStructure& s) {
            out << (typed ? csv_row({structure_string(s, opt.ascii), id_of(s)})
                          : csv_row({structure_string(s, opt.ascii)}));
        });
        return;
    }

    out << "family " << family_k << ": " << to_string(f.scale_count)
        << " structures (" << f.tones << " tones, " << f.semitones
        << " semitones)\n";
    for_each_structure(family_k, [&](const ScaleStructure& s) {
        out << structure_string(s, opt.ascii);
        if (typed) out << "  " << id_of(s);
        out << "\n";
    });
}

std::string render_types(int family_k, const RenderOptions& opt) {
    std::vector<TypeClass> types = list_types(family_k);
    Family f = family(family_k);

    if (opt.format == Format::json) {
        ordered_json doc;
        doc["family"] = family_k;
        doc["count"] = to_string(count_types(family_k));
        doc["types"] = ordered_json::array();
        for (std::size_t i = 0; i < types.size(); ++i) {
            const TypeClass& t = types[i];
            doc["types"].push_back(
                {{"label", t.label ? *t.label : "t" + std::to_string(i + 1)},
                 {"representative", structure_string(t.representative, opt.ascii)},
                 {"canonical", structure_string(t.canonical, opt.ascii)}});
        }
        return dump(doc);
    }

    if (opt.format == Format::csv) {
        std::string out = csv_row({"label", "representative", "canonical"});
        for (std::size_t i = 0; i < types.size(); ++i) {
            const TypeClass& t = types[i];
            out += csv_row({t.label ? *t.label : "t" + std::to_string(i + 1),
                            structure_string(t.representative, opt.ascii),
                            structure_string(t.canonical, opt.ascii)});
        }
        return out;
    }

    if (opt.format == Format::scl)
        throw std::invalid_argument("type lists have no tuning-file form");

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"label", "representative", "canonical"});
    for (std::size_t i = 0; i < types.size(); ++i) {
        const TypeClass& t = types[i];
        rows.push_back({t.label ? *t.label : "t" + std::to_string(i + 1),
                        structure_string(t.representative, opt.ascii),
                        structure_string(t.canonical, opt.ascii)});
    }
    return "family " + std::to_string(family_k) + ": " +
           to_string(count_types(family_k)) + " types of " +
           std::to_string(f.p) + " modes each\n" + table_to_text(rows);
}

std::string render_modes(int family_k, std::string_view type_label,
                         Pitch tonality, const RenderOptions& opt) {
    TypeClass t = type_by_label(family_k, type_label);
    std::vector<ModeDescriptor> modes = modes_of(t);

    if (opt.format == Format::json) {
        ordered_json doc;
        doc["family"] = family_k;
        doc["type"] = t.label ? *t.label : std::string(type_label);
        doc["tonality"] = pitch_json(tonality, opt.ascii);
        doc["modes"] = ordered_json::array();
        for (const ModeDescriptor& m : modes) {
            Scale sc = mode_scale(t, m.index, tonality);
            ordered_json jm = {
                {"index", m.index},
                {"mode_note", note_string(m.mode_note, opt.ascii)},
                {"structure", structure_string(m.structure, opt.ascii)}};
            if (m.traditional_name) jm["name"] = *m.traditional_name;
            if (auto lbl = catalog_label_of(sc)) jm["catalog"] = *lbl;
            jm["pitches"] = ordered_json::array();
            for (Pitch p : sc.pitches)
                jm["pitches"].push_back(pitch_json(p, opt.ascii));
            doc["modes"].push_back(std::move(jm));
        }
        return dump(doc);
    }

    auto pitch_list = [&](const Scale& sc) {
        std::string out;
        for (Pitch p : sc.pitches)
            out += (out.empty() ? "" : " ") + pitch_string(p, opt.ascii);
        return out;
    };

    if (opt.format == Format::csv) {
        std::string out = csv_row(
            {"index", "mode_note", "structure", "name", "catalog", "pitches"});
        for (const ModeDescriptor& m : modes) {
            Scale sc = mode_scale(t, m.index, tonality);
            out += csv_row({std::to_string(m.index),
                            note_string(m.mode_note, opt.ascii),
                            structure_string(m.structure, opt.ascii),
                            m.traditional_name.value_or(""),
                            catalog_label_of(sc).value_or(""), pitch_list(sc)});
        }
        return out;
    }

    if (opt.format == Format::scl)
        throw std::invalid_argument(
            "mode tables have no tuning-file form; export one scale instead");

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"mode", "on", "structure", "name", "catalog", "pitches"});
    for (const ModeDescriptor& m : modes) {
        Scale sc = mode_scale(t, m.index, tonality);
        rows.push_back({std::to_string(m.index),
                        note_string(m.mode_note, opt.ascii),
                        structure_string(m.structure, opt.ascii),
                        m.traditional_name.value_or("-"),
                        catalog_label_of(sc).value_or("-"), pitch_list(sc)});
    }
    return "modes of family " + std::to_string(family_k) + " type " +
           (t.label ? *t.label : std::string(type_label)) + " on " +
           pitch_string(tonality, opt.ascii) + "\n" + table_to_text(rows);
}

std::string render_scale(const Scale& sc, std::optional<std::string> label,
                         const RenderOptions& opt) {
    ScaleStructure st = structure_of(sc);
    PitchRatio base = absolute(sc.tonality);

    if (opt.format == Format::scl) {
        std::string name = label.value_or("scale");
        return export_scl(sc, name,
                          name + " on " + pitch_string(sc.tonality, true) +
                              " (" + structure_string(st, true) + ")");
    }

    if (opt.format == Format::json) {
        ordered_json doc;
        if (label) doc["label"] = *label;
        doc["family"] = sc.family_k;
        doc["structure"] = structure_string(st, opt.ascii);
        doc["tonality"] = pitch_json(sc.tonality, opt.ascii);
        doc["pitches"] = ordered_json::array();
        for (Pitch p : sc.pitches) {
            ordered_json jp = pitch_json(p, opt.ascii);
            jp["interval"] = ratio_json(divide(absolute(p), base));
            doc["pitches"].push_back(std::move(jp));
        }
        return dump(doc);
    }

    if (opt.format == Format::csv) {
        std::string out =
            csv_row({"name", "k", "octave", "interval", "decimal", "cents"});
        for (Pitch p : sc.pitches) {
            PitchRatio iv = divide(absolute(p), base);
            out += csv_row({pitch_string(p, opt.ascii), std::to_string(p.note.k),
                            std::to_string(p.octave), ratio_string(iv, true),
                            decimal_trimmed(iv), std::to_string(cents(iv))});
        }
        return out;
    }

    std::string out;
    if (label) out += "scale " + *label + "\n";
    out += "family " + std::to_string(sc.family_k) + ", tonality " +
           pitch_string(sc.tonality, opt.ascii) + ", structure " +
           structure_string(st, opt.ascii) + "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"note", "interval", "decimal", "cents"});
    for (Pitch p : sc.pitches) {
        PitchRatio iv = divide(absolute(p), base);
        rows.push_back({pitch_string(p, opt.ascii), ratio_string(iv, opt.ascii),
                        decimal_trimmed(iv), std::to_string(cents(iv))});
    }
    return out + table_to_text(rows);
}

std::string render_checks(const std::vector<CheckReport>& reports,
                          const RenderOptions& opt) {
    if (opt.format == Format::json) {
        ordered_json doc;
        doc["checks"] = ordered_json::array();
        for (const CheckReport& r : reports) {
            doc["checks"].push_back({{"check", r.check},
                                     {"k_lo", r.k_lo},
                                     {"k_hi", r.k_hi},
                                     {"passed", r.passed},
                                     {"witnesses", r.witnesses}});
        }
        doc["all_passed"] = all_passed(reports);
        return dump(doc);
    }

    if (opt.format == Format::csv) {
        std::string out = csv_row({"check", "passed", "k_lo", "k_hi"});
        for (const CheckReport& r : reports)
            out += csv_row({r.check, r.passed ? "true" : "false",
                            std::to_string(r.k_lo), std::to_string(r.k_hi)});
        return out;
    }

    if (opt.format == Format::scl)
        throw std::invalid_argument("check reports have no tuning-file form");

    std::string out;
    for (const CheckReport& r : reports) {
        out += std::string(r.passed ? "[PASS] " : "[FAIL] ") + r.check;
        if (r.k_hi > r.k_lo)
            out += " (k = " + std::to_string(r.k_lo) + ".." +
                   std::to_string(r.k_hi) + ")";
        out += "\n";
        for (const std::string& w : r.witnesses) out += "    - " + w + "\n";
    }
    out += all_passed(reports) ? "all checks passed\n" : "CHECKS FAILED\n";
    return out;
}

std::string export_scl(const Scale& sc, std::string_view label,
                       std::string_view description) {
    std::string name(label);  // the conventional filename line: no spaces
    std::replace(name.begin(), name.end(), ' ', '_');
    std::string out = "! " + name + ".scl\n";
    out += std::string(description) + "\n";
    out += std::to_string(sc.pitches.size() - 1) + "\n";
    PitchRatio base = absolute(sc.tonality);
    for (std::size_t i = 1; i < sc.pitches.size(); ++i)
        out += ratio_fraction_string(divide(absolute(sc.pitches[i]), base)) +
               "\n";
    return out;
}

namespace {

BigInt parse_positive_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("scl: empty integer");
    BigInt v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("scl: malformed integer '" +
                                        std::string(s) + "'");
        v = v * 10 + (c - '0');
    }
    if (v == 0) throw std::invalid_argument("scl: ratio term must be positive");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

SclFile parse_scl(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        std::size_t nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    std::size_t i = 0;
    auto more = [&] { return i < lines.size(); };

    if (!more() || trim(lines[i]).empty() || trim(lines[i]).front() != '!')
        throw std::invalid_argument("scl: missing '!' name line");
    SclFile file;
    std::string_view name = trim(lines[i]).substr(1);
    file.name_line = std::string(trim(name));
    ++i;
    while (more() && !trim(lines[i]).empty() && trim(lines[i]).front() == '!')
        ++i;  // further comments

    if (!more()) throw std::invalid_argument("scl: missing description");
    file.description = std::string(trim(lines[i]));
    ++i;

    while (more() && !trim(lines[i]).empty() && trim(lines[i]).front() == '!')
        ++i;
    if (!more()) throw std::invalid_argument("scl: missing pitch count");
    std::string_view count_sv = trim(lines[i]);
    ++i;
    BigInt count_big = parse_positive_integer(count_sv);
    if (count_big > 1000000) throw std::invalid_argument("scl: count too large");
    std::size_t count = static_cast<std::size_t>(count_big);

    while (file.ratios.size() < count) {
        if (!more()) throw std::invalid_argument("scl: not enough pitch lines");
        std::string_view line = trim(lines[i]);
        ++i;
        if (line.empty() || line.front() == '!') continue;
        // First whitespace-separated token; anything after is a comment.
        std::size_t end = line.find_first_of(" \t");
        std::string_view token =
            end == std::string_view::npos ? line : line.substr(0, end);
        if (token.find('.') != std::string_view::npos)
            throw std::invalid_argument(
                "scl: cents entries are not supported, expected a ratio");
        std::size_t slash = token.find('/');
        if (slash == std::string_view::npos) {
            file.ratios.emplace_back(parse_positive_integer(token), 1);
        } else {
            file.ratios.emplace_back(
                parse_positive_integer(token.substr(0, slash)),
                parse_positive_integer(token.substr(slash + 1)));
        }
    }
    return file;
}

}  // namespace gamme
