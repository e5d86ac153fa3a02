// SPDX-License-Identifier: MIT
// Command-line front end: note tables, family recursion, scale enumeration,
// rotation types, modes, named scales, transposition, tuning-file export and
// the self-verification suite.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gamme/checks.hpp"
#include "gamme/family.hpp"
#include "gamme/names.hpp"
#include "gamme/pitch.hpp"
#include "gamme/render.hpp"
#include "gamme/scales.hpp"

namespace {

struct CommonOpts {
    std::string format = "text";
    bool ascii = false;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_scl = false) {
    cmd->add_option("-f,--format", c.format, "output format")
        ->check(CLI::IsMember(with_scl
                                  ? std::vector<std::string>{"text", "json",
                                                             "csv", "scl"}
                                  : std::vector<std::string>{"text", "json",
                                                             "csv"}))
        ->capture_default_str();
    cmd->add_flag("--ascii", c.ascii, "plain-ascii note names and ratios");
    cmd->add_option("-o,--out", c.out_path, "write the output to a file");
}

gamme::RenderOptions render_options(const CommonOpts& c) {
    gamme::RenderOptions opt;
    if (c.format == "json")
        opt.format = gamme::Format::json;
    else if (c.format == "csv")
        opt.format = gamme::Format::csv;
    else if (c.format == "scl")
        opt.format = gamme::Format::scl;
    opt.ascii = c.ascii;
    return opt;
}

void emit(const CommonOpts& c, const std::string& text) {
    if (c.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + c.out_path);
    f << text;
}

gamme::Pitch parse_tonality(const std::string& text) {
    return {gamme::index_of(gamme::parse_note(text)), 0};
}

const gamme::CatalogEntry& catalog_entry_or_throw(const std::string& name) {
    const gamme::CatalogEntry* e = gamme::find_catalog_entry(name);
    if (!e)
        throw std::invalid_argument(
            "unknown scale '" + name +
            "' (try labels like G4_15, H2 or zhi; see `gamme modes`)");
    return *e;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gamme — exact arithmetic on scales built from powers of 3 folded "
        "into one octave"};
    app.require_subcommand(1);

    // ---- notes ----
    CommonOpts notes_c;
    std::int64_t lo = -15, hi = 19;
    bool sorted_chain = false;
    CLI::App* notes = app.add_subcommand(
        "notes", "table of notes on the line of fifths");
    notes->add_option("--lo", lo, "first fifth index")->capture_default_str();
    notes->add_option("--hi", hi, "last fifth index")->capture_default_str();
    notes->add_flag("--sorted", sorted_chain,
                    "also list the notes in ascending pitch order");
    add_common(notes, notes_c);

    // ---- families ----
    CommonOpts fam_c;
    int fam_max = 10;
    CLI::App* families = app.add_subcommand(
        "families", "the recursive scale families and their steps");
    families->add_option("--max", fam_max, "largest family index")
        ->check(CLI::Range(1, 30))
        ->capture_default_str();
    add_common(families, fam_c);

    // ---- enumerate ----
    CommonOpts enum_c;
    int enum_family = 3;
    bool enum_force = false;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "every structure of a family, with its rotation type");
    enumerate->add_option("--family", enum_family, "family index")
        ->required();
    enumerate->add_flag("--force", enum_force,
                        "stream very large enumerations anyway");
    add_common(enumerate, enum_c);

    // ---- types ----
    CommonOpts types_c;
    int types_family = 4;
    CLI::App* types = app.add_subcommand(
        "types", "rotation-equivalence classes of a family");
    types->add_option("--family", types_family, "family index")->required();
    add_common(types, types_c);

    // ---- modes ----
    CommonOpts modes_c;
    int modes_family = 4;
    std::string modes_type = "t3";
    std::string modes_tonality = "do";
    CLI::App* modes = app.add_subcommand(
        "modes", "the p modes of one type, with their traditional names");
    modes->add_option("--family", modes_family, "family index")->required();
    modes->add_option("--type", modes_type, "type label, e.g. t1")
        ->capture_default_str();
    modes->add_option("--tonality", modes_tonality, "tonality note")
        ->capture_default_str();
    add_common(modes, modes_c);

    // ---- scale ----
    CommonOpts scale_c;
    std::string scale_name;
    int scale_family = 4;
    std::string scale_type = "t3";
    int scale_mode = 0;
    std::string scale_tonality = "do";
    CLI::App* scale =
        app.add_subcommand("scale", "one scale: by catalog name, or by "
                                    "family/type/mode/tonality");
    scale->add_option("--name", scale_name,
                      "catalog label (G4_15, H2, gong, ...)");
    scale->add_option("--family", scale_family, "family index");
    scale->add_option("--type", scale_type, "type label");
    scale->add_option("--mode", scale_mode, "mode index (0-based)");
    scale->add_option("--tonality", scale_tonality, "tonality note");
    add_common(scale, scale_c, /*with_scl=*/true);

    // ---- transpose ----
    CommonOpts trans_c;
    std::string trans_name;
    std::string trans_to = "do";
    CLI::App* transpose = app.add_subcommand(
        "transpose", "a catalog scale moved to a new tonality");
    transpose->add_option("--name", trans_name, "catalog label")->required();
    transpose->add_option("--to", trans_to, "new tonality note")->required();
    add_common(transpose, trans_c, /*with_scl=*/true);

    // ---- export ----
    CommonOpts export_c;
    std::string export_name;
    CLI::App* exporter = app.add_subcommand(
        "export", "write a catalog scale as a .scl tuning file");
    exporter->add_option("--name", export_name, "catalog label")->required();
    exporter->add_option("-o,--out", export_c.out_path,
                         "output file (default: stdout)");

    // ---- verify ----
    CommonOpts verify_c;
    int verify_max = 20;
    CLI::App* verify = app.add_subcommand(
        "verify", "run the structural self-checks (exit 2 on failure)");
    verify->add_option("--max", verify_max, "largest family index to check")
        ->check(CLI::Range(1, 40))
        ->capture_default_str();
    add_common(verify, verify_c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // 1 = usage error
    }

    try {
        if (*notes) {
            emit(notes_c, gamme::render_notes(lo, hi, render_options(notes_c),
                                              sorted_chain));
        } else if (*families) {
            emit(fam_c, gamme::render_families(fam_max, render_options(fam_c)));
        } else if (*enumerate) {
            if (enum_c.out_path.empty()) {
                gamme::render_enumeration(std::cout, enum_family,
                                          render_options(enum_c), enum_force);
            } else {
                std::ofstream f(enum_c.out_path, std::ios::binary);
                if (!f)
                    throw std::runtime_error("cannot open " + enum_c.out_path);
                gamme::render_enumeration(f, enum_family,
                                          render_options(enum_c), enum_force);
            }
        } else if (*types) {
            emit(types_c,
                 gamme::render_types(types_family, render_options(types_c)));
        } else if (*modes) {
            emit(modes_c,
                 gamme::render_modes(modes_family, modes_type,
                                     parse_tonality(modes_tonality),
                                     render_options(modes_c)));
        } else if (*scale) {
            if (!scale_name.empty()) {
                const gamme::CatalogEntry& e = catalog_entry_or_throw(scale_name);
                gamme::Scale sc = e.scale;
                if (scale->count("--tonality"))
                    sc = gamme::transpose(sc, parse_tonality(scale_tonality));
                emit(scale_c,
                     gamme::render_scale(sc, e.label, render_options(scale_c)));
            } else {
                gamme::TypeClass t =
                    gamme::type_by_label(scale_family, scale_type);
                gamme::Scale sc = gamme::mode_scale(
                    t, scale_mode, parse_tonality(scale_tonality));
                emit(scale_c, gamme::render_scale(sc, std::nullopt,
                                                  render_options(scale_c)));
            }
        } else if (*transpose) {
            const gamme::CatalogEntry& e = catalog_entry_or_throw(trans_name);
            gamme::Pitch ton = parse_tonality(trans_to);
            gamme::Scale sc = gamme::transpose(e.scale, ton);
            emit(trans_c,
                 gamme::render_scale(
                     sc, e.label + " at " + gamme::pitch_string(ton, trans_c.ascii),
                     render_options(trans_c)));
        } else if (*exporter) {
            const gamme::CatalogEntry& e = catalog_entry_or_throw(export_name);
            std::string description = e.display;
            for (const std::string& n : e.nicknames) description += ", " + n;
            emit(export_c, gamme::export_scl(e.scale, e.label, description));
        } else if (*verify) {
            std::vector<gamme::CheckReport> reports =
                gamme::run_all_checks(verify_max);
            emit(verify_c,
                 gamme::render_checks(reports, render_options(verify_c)));
            if (!gamme::all_passed(reports)) return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
