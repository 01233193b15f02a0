// hexweave command line: generation, validation, refutation, substitution,
// parity analytics, SVG rendering and the decoration-artifact derivation.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "hexweave/analysis.hpp"
#include "hexweave/artifact.hpp"
#include "hexweave/cht.hpp"
#include "hexweave/derive.hpp"
#include "hexweave/io.hpp"
#include "hexweave/solver.hpp"
#include "hexweave/svg.hpp"

using json = nlohmann::json;
using namespace hexweave;

namespace {

struct Common {
    std::string dec_path;  // empty: env HEXWEAVE_DEC, then embedded
    bool as_json = false;
    int jobs = 1;
};

DecArtifact load_artifact(const Common& common) { return DecArtifact::load(common.dec_path); }

std::optional<TileState> parse_state_arg(const std::string& arg) {
    if (arg.size() != 2 || arg[0] < '0' || arg[0] > '5') return std::nullopt;
    if (arg[1] != 'L' && arg[1] != 'R') return std::nullopt;
    return TileState{arg[0] - '0', arg[1] == 'L' ? Chirality::L : Chirality::R};
}

json report_json(const RuleReport& rep) {
    json j;
    const auto counts = [](const RuleCounts& c) {
        return json{{"pass", c.pass}, {"fail", c.fail}, {"unchecked", c.unchecked}};
    };
    j["r1"] = counts(rep.r1);
    j["r2"] = counts(rep.r2);
    j["r3"] = counts(rep.r3);
    j["edge_sites"] = rep.edge_sites;
    j["vertex_sites"] = rep.vertex_sites;
    j["violations"] = json::array();
    for (const Violation& v : rep.violations)
        j["violations"].push_back({{"rule", std::string(1, v.rule)},
                                   {"site", v.is_vertex ? "vertex" : "edge"},
                                   {"a", v.cell.a},
                                   {"b", v.cell.b},
                                   {"index", v.index}});
    return j;
}

void print_report(const RuleReport& rep, const Common& common, uint64_t digest) {
    if (common.as_json) {
        json j = report_json(rep);
        j["artifact"] = digest;
        std::cout << j.dump() << "\n";
        return;
    }
    const auto line = [](const char* name, const RuleCounts& c) {
        std::cout << name << ": pass " << c.pass << ", fail " << c.fail << ", unchecked "
                  << c.unchecked << "\n";
    };
    line("R1", rep.r1);
    line("R2", rep.r2);
    line("R3", rep.r3);
    for (const Violation& v : rep.violations)
        std::cout << "violation R" << v.rule << " at " << (v.is_vertex ? "vertex" : "edge")
                  << " (" << v.cell.a << "," << v.cell.b << ") index " << v.index << "\n";
    char buf[32];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)digest);
    std::cout << "artifact " << buf << "\n";
}

RuleSet parse_rules(const std::string& arg) {
    RuleSet rules{false, false, false};
    std::istringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "r1")
            rules.r1 = true;
        else if (item == "r2")
            rules.r2 = true;
        else if (item == "r3")
            rules.r3 = true;
        else
            throw CLI::ValidationError("--rules", "unknown rule: " + item);
    }
    return rules;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hexweave: an engine for an aperiodic hexagonal prototile"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--dec", common.dec_path, "decoration artifact path");
    app.add_flag("--json", common.as_json, "machine-readable output");
    app.add_option("--jobs", common.jobs, "worker threads where supported");

    // generate
    auto* gen = app.add_subcommand("generate", "build a rule-consistent patch");
    int radius = 8;
    std::string rhombus, central_arg, out_path = "patch.hexweave";
    int s_choice = 1;
    gen->add_option("--radius", radius, "hexagonal disk radius");
    gen->add_option("--rhombus", rhombus, "MxN rhombus instead of a disk");
    gen->add_option("--s-choice", s_choice, "red-blue spoke vector, 1 or 2")
        ->check(CLI::Range(1, 2));
    gen->add_option("--central", central_arg, "central state, e.g. 0R");
    gen->add_option("--out", out_path, "output patch file");

    // validate
    auto* val = app.add_subcommand("validate", "check matching rules on a patch file");
    std::string val_file, rules_arg = "r1,r2,r3";
    val->add_option("file", val_file, "patch file")->required();
    val->add_option("--rules", rules_arg, "comma list from r1,r2,r3");

    // refute-torus
    auto* ref = app.add_subcommand("refute-torus", "refute periodic tilings up to an index");
    int max_area = 6;
    long budget = 100000000;
    std::string counter_path = "counterexample.hexweave";
    ref->add_option("--max-area", max_area, "largest sublattice index")->required();
    ref->add_option("--budget", budget, "node budget per basis");
    ref->add_option("--counterexample-out", counter_path, "file for any satisfying patch");

    // inflate
    auto* inf = app.add_subcommand("inflate", "inflate a half-hexagon symbol or patch");
    std::string symbol_arg = "A_L", inf_in, inf_out = "halfhex.hexweave";
    int steps = 1;
    inf->add_option("--symbol", symbol_arg, "starting symbol, e.g. A_L or Gb_R");
    inf->add_option("--in", inf_in, "half-hex patch file to inflate instead");
    inf->add_option("--steps", steps, "inflation steps")->check(CLI::Range(1, 12));
    inf->add_option("--out", inf_out, "output half-hex file");

    // compose
    auto* comp = app.add_subcommand("compose", "uniquely compose a half-hex patch");
    std::string comp_in, comp_out = "composed.hexweave";
    comp->add_option("file", comp_in, "half-hex patch file")->required();
    comp->add_option("--out", comp_out, "output half-hex file");

    // to-hexagons
    auto* tohex = app.add_subcommand("to-hexagons",
                                     "map a half-hex patch to decorated tiles");
    std::string tohex_in, tohex_out = "hexagons.hexweave";
    tohex->add_option("file", tohex_in, "half-hex patch file")->required();
    tohex->add_option("--out", tohex_out, "output patch file");

    // parity
    auto* par = app.add_subcommand("parity", "parity bitmap of a patch");
    std::string par_in, par_out;
    par->add_option("file", par_in, "patch file")->required();
    par->add_option("--out", par_out, "output bitmap file (default stdout)");

    // islands
    auto* isl = app.add_subcommand("islands", "parity island census of a patch");
    std::string isl_in;
    isl->add_option("file", isl_in, "patch file")->required();

    // ray
    auto* ray = app.add_subcommand("ray", "parity sequence along a spoke ray");
    int ray_index = 0, ray_length = 64;
    int ray_s_choice = 1;
    ray->add_option("--index", ray_index, "ray 0..11 (angle 30*k degrees)")
        ->check(CLI::Range(0, 11));
    ray->add_option("--length", ray_length, "sequence length")->check(CLI::Range(1, 100000));
    ray->add_option("--s-choice", ray_s_choice, "spoke vector choice")->check(CLI::Range(1, 2));

    // extract-pee
    auto* pee = app.add_subcommand("extract-pee", "one-third sublattice extraction");
    std::string pee_in;
    int sublattice = 1;
    pee->add_option("file", pee_in, "patch file")->required();
    pee->add_option("--sublattice", sublattice, "sublattice 1..3")->check(CLI::Range(1, 3));

    // render
    auto* ren = app.add_subcommand("render", "render a patch to SVG");
    std::string ren_in, ren_out = "patch.svg", layers_arg = "tiles,stripes,diameters";
    ren->add_option("file", ren_in, "patch file")->required();
    ren->add_option("--out", ren_out, "output SVG file");
    ren->add_option("--layers", layers_arg, "comma list: tiles,stripes,diameters,parity,rings");

    // self-derive
    auto* der = app.add_subcommand("self-derive", "derive the decoration artifact by search");
    std::string der_out = "hexweave.dec";
    bool corrupt = false;
    der->add_option("--out", der_out, "artifact output file");
    der->add_flag("--corrupt", corrupt, "control run with one corrupted constraint");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*gen) {
            const DecArtifact art = DecArtifact::load(common.dec_path);
            ChtConfig cfg = default_config(art, s_choice);
            if (!central_arg.empty()) {
                const auto c = parse_state_arg(central_arg);
                if (!c) {
                    std::cerr << "bad --central, expected e.g. 0R\n";
                    return 2;
                }
                cfg = config_with_central(art, s_choice, *c);
            }
            Patch patch;
            if (!rhombus.empty()) {
                int m, n;
                if (sscanf(rhombus.c_str(), "%dx%d", &m, &n) != 2 || m <= 0 || n <= 0) {
                    std::cerr << "bad --rhombus, expected MxN\n";
                    return 2;
                }
                patch = build_rhombus(art, m, n, cfg);
            } else {
                if (radius < 0) {
                    std::cerr << "radius must be nonnegative\n";
                    return 2;
                }
                patch = build_patch(art, radius, cfg);
            }
            save_patch_file(patch, out_path);
            const RuleReport rep = validate(art.table(), patch);
            if (!common.as_json)
                std::cout << "cells " << patch.size() << " -> " << out_path << "\n";
            print_report(rep, common, art.digest);
            return rep.total_failures() == 0 ? 0 : 1;
        }
        if (*val) {
            const DecArtifact art = DecArtifact::load(common.dec_path);
            const Patch patch = load_patch_file(val_file);
            const RuleReport rep = validate(art.table(), patch, parse_rules(rules_arg));
            print_report(rep, common, art.digest);
            return rep.total_failures() == 0 ? 0 : 1;
        }
        if (*ref) {
            const DecArtifact art = DecArtifact::load(common.dec_path);
            const auto reports = refute_torus(art.table(), max_area, budget, common.jobs);
            bool all_unsat = true;
            for (const BasisReport& r : reports) {
                const char* verdict =
                    r.verdict == BasisReport::Verdict::Unsatisfiable  ? "unsat"
                    : r.verdict == BasisReport::Verdict::Satisfiable ? "SATISFIABLE"
                                                                     : "inconclusive";
                if (common.as_json) {
                    std::cout << json{{"basis", {r.basis.c00, r.basis.c01, r.basis.c10,
                                                 r.basis.c11}},
                                      {"index", r.basis.index()},
                                      {"verdict", verdict},
                                      {"nodes", r.nodes},
                                      {"millis", r.millis}}
                                     .dump()
                              << "\n";
                } else {
                    std::cout << "basis [[" << r.basis.c00 << "," << r.basis.c01 << "],[0,"
                              << r.basis.c11 << "]] index " << r.basis.index() << ": "
                              << verdict << " (nodes " << r.nodes << ", "
                              << r.millis << " ms)\n";
                }
                if (r.verdict != BasisReport::Verdict::Unsatisfiable) all_unsat = false;
                if (r.counterexample) {
                    Patch counter = Patch::torus(r.basis);
                    for (const auto& [p, s] : *r.counterexample) counter.set(p, s);
                    save_patch_file(counter, counter_path);
                    std::cout << "counterexample written to " << counter_path << "\n";
                }
            }
            return all_unsat ? 0 : 1;
        }
        if (*inf) {
            HalfHexPatch patch;
            if (!inf_in.empty()) {
                patch = load_halfhex_file(inf_in);
            } else {
                const auto sym = parse_symbol(symbol_arg);
                if (!sym) {
                    std::cerr << "bad --symbol, expected e.g. A_L or Gb_R\n";
                    return 2;
                }
                patch.add({{0, 0}, *sym, 0});
            }
            const HalfHexPatch big = inflate(patch, steps);
            save_halfhex_file(big, inf_out);
            std::cout << "cells " << big.size() << " -> " << inf_out << "\n";
            return 0;
        }
        if (*comp) {
            const HalfHexPatch patch = load_halfhex_file(comp_in);
            const HalfHexPatch coarse = compose_unique(patch);
            save_halfhex_file(coarse, comp_out);
            std::cout << "cells " << coarse.size() << " -> " << comp_out << "\n";
            return 0;
        }
        if (*tohex) {
            const DecArtifact art = DecArtifact::load(common.dec_path);
            const HalfHexPatch patch = load_halfhex_file(tohex_in);
            Patch tiles;
            for (const auto& [p, h] : to_hexagons(patch, art.rot180))
                tiles.set(p, art.hex_state(h.type, h.orient));
            save_patch_file(tiles, tohex_out);
            std::cout << "cells " << tiles.size() << " -> " << tohex_out << "\n";
            return 0;
        }
        if (*par) {
            const Patch patch = load_patch_file(par_in);
            const ParityField field = parity_field(patch);
            const std::string text = save_parity_bitmap(field.bits);
            if (par_out.empty())
                std::cout << text;
            else
                write_file(par_out, text);
            return 0;
        }
        if (*isl) {
            const Patch patch = load_patch_file(isl_in);
            const IslandCensus census = islands(parity_field(patch));
            for (const Island& island : census.islands) {
                if (common.as_json) {
                    std::cout << json{{"size", island.cells.size()},
                                      {"parity", island.parity},
                                      {"interior", island.interior},
                                      {"anchor", {island.cells.front().a,
                                                  island.cells.front().b}}}
                                     .dump()
                              << "\n";
                } else {
                    std::cout << "island size " << island.cells.size() << " parity "
                              << island.parity
                              << (island.interior ? " interior" : " boundary")
                              << " at (" << island.cells.front().a << ","
                              << island.cells.front().b << ")\n";
                }
            }
            return 0;
        }
        if (*ray) {
            const DecArtifact art = DecArtifact::load(common.dec_path);
            const ChtConfig cfg = default_config(art, ray_s_choice);
            const auto bits = spoke_sequence(cfg, ray_index, ray_length);
            std::string s;
            for (uint8_t b : bits) s += char('0' + b);
            static const std::string kPrefix = "110110011100100";
            std::string complement;
            for (char ch : kPrefix) complement += ch == '0' ? '1' : '0';
            const std::string head = s.substr(0, std::min<size_t>(15, s.size()));
            const bool match = head == kPrefix.substr(0, head.size()) ||
                               head == complement.substr(0, head.size());
            if (common.as_json) {
                std::cout << json{{"ray", ray_index},
                                  {"bits", s},
                                  {"paperfolding_prefix", match}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << s << "\n";
                std::cout << "paperfolding prefix: " << (match ? "match" : "MISMATCH")
                          << "\n";
            }
            return match ? 0 : 1;
        }
        if (*pee) {
            const DecArtifact art = DecArtifact::load(common.dec_path);
            const Patch patch = load_patch_file(pee_in);
            const DecTable table = art.table();
            const PeePatch out = extract_pee(table, patch, sublattice);
            long pass = 0, fail = 0, unchecked = 0;
            for (const PeeContinuitySite& site : out.sites) {
                if (site.verdict == CheckResult::Pass) ++pass;
                if (site.verdict == CheckResult::Fail) ++fail;
                if (site.verdict == CheckResult::Unchecked) ++unchecked;
            }
            if (common.as_json) {
                std::cout << json{{"sublattice", sublattice},
                                  {"cells", out.cells.size()},
                                  {"gap_fillers", out.gap_fillers.size()},
                                  {"continuity",
                                   {{"pass", pass}, {"fail", fail}, {"unchecked", unchecked}}}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "sublattice " << sublattice << ": cells " << out.cells.size()
                          << ", gap fillers " << out.gap_fillers.size()
                          << ", continuity pass " << pass << " fail " << fail
                          << " unchecked " << unchecked << "\n";
            }
            return fail == 0 ? 0 : 1;
        }
        if (*ren) {
            const DecArtifact art = DecArtifact::load(common.dec_path);
            const Patch patch = load_patch_file(ren_in);
            std::set<std::string> layers;
            std::istringstream ss(layers_arg);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!is_known_layer(item)) {
                    std::cerr << "unknown layer: " << item << "\n";
                    return 2;
                }
                layers.insert(item);
            }
            write_file(ren_out, render_svg(art.table(), patch, layers));
            std::cout << ren_out << "\n";
            return 0;
        }
        if (*der) {
            DeriveOptions opt;
            opt.corrupt = corrupt;
            const DeriveResult res = self_derive(opt);
            if (!res.ok) {
                std::cerr << "self-derive failed: " << res.message << " (survivors "
                          << res.survivors << ")\n";
                return 1;
            }
            write_file(der_out, res.artifact.to_text());
            char buf[32];
            snprintf(buf, sizeof buf, "%016llx", (unsigned long long)res.artifact.digest);
            if (common.as_json) {
                std::cout << json{{"out", der_out},
                                  {"digest", buf},
                                  {"bases_scanned", res.bases_scanned},
                                  {"candidates", res.candidates_tested},
                                  {"survivors", res.survivors},
                                  {"orbits", res.orbits}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "artifact -> " << der_out << "\ndigest " << buf
                          << "\nsurvivors " << res.survivors << " in " << res.orbits
                          << " orbit(s)\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
