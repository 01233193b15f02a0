#include "hexweave/derive.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <set>

#include "hexweave/cht.hpp"
#include "hexweave/rules.hpp"
#include "hexweave/solver.hpp"

namespace hexweave {

namespace {

int mod6(int k) { return ((k % 6) + 6) % 6; }

// Group multiplication on tile states viewed as dihedral elements
// (R^rot M^chi): compose(x, y) = sym(x) * sym(y).
TileState compose_states(TileState x, TileState y) {
    const bool mx = x.chi == Chirality::L, my = y.chi == Chirality::L;
    const int rot = mod6(x.rot + (mx ? -y.rot : y.rot));
    return {rot, mx != my ? Chirality::L : Chirality::R};
}

TileState inverse_state(TileState x) {
    if (x.chi == Chirality::L) return x;  // reflections are involutions
    return {mod6(-x.rot), Chirality::R};
}

// All base decorations in the declared search space that satisfy the
// structural invariants (one long stripe, two corner arcs hugging their
// corners, one red/one blue/one mixed diameter).
std::vector<Decoration> enumerate_bases(long& scanned) {
    std::vector<std::array<uint8_t, 6>> matchings;
    std::array<uint8_t, 6> chord{};
    const auto rec = [&](auto&& self, uint8_t used) -> void {
        int first = -1;
        for (int k = 0; k < 6; ++k)
            if (!(used & (1 << k))) {
                first = k;
                break;
            }
        if (first < 0) {
            matchings.push_back(chord);
            return;
        }
        for (int p = first + 1; p < 6; ++p) {
            if (used & (1 << p)) continue;
            chord[first] = uint8_t(p);
            chord[p] = uint8_t(first);
            self(self, uint8_t(used | (1 << first) | (1 << p)));
        }
    };
    rec(rec, 0);

    std::vector<Decoration> out;
    for (const auto& m : matchings) {
        for (int bits = 0; bits < 64; ++bits) {
            for (int coloring = 0; coloring < 12; ++coloring) {
                ++scanned;
                Decoration d;
                d.chord_of = m;
                for (int k = 0; k < 6; ++k) {
                    d.edge_bit[k] = uint8_t((bits >> k) & 1);
                    const int span = std::min(mod6(m[k] - k), mod6(k - m[k]));
                    d.kind_of[k] = span == 3 ? ChordKind::LongStripe : ChordKind::CornerArc;
                }
                const int red_axis = coloring % 3;
                const int blue_axis = (red_axis + 1 + (coloring / 3) % 2) % 3;
                const int mixed_flip = coloring / 6;
                for (int axis = 0; axis < 3; ++axis) {
                    Color c0, c3;
                    if (axis == red_axis)
                        c0 = c3 = Color::Red;
                    else if (axis == blue_axis)
                        c0 = c3 = Color::Blue;
                    else {
                        c0 = mixed_flip ? Color::Blue : Color::Red;
                        c3 = flip(c0);
                    }
                    d.vertex_color[axis] = c0;
                    d.vertex_color[axis + 3] = c3;
                }
                if (check_decoration(d).empty()) out.push_back(d);
            }
        }
    }
    return out;
}

// Fills the composition table from the two seed entries using the 60-degree
// rotation symmetry of the tiling minus its spokes: the tile at the rotated
// position is the rotated tile, frames cycle 1 -> 3 -> 2, and both parity
// bits flip.
void fill_comp(TileState (&comp)[3][2][2], TileState t00, TileState t01) {
    const auto walk = [&](int b0, int r0, TileState t) {
        int n = 1, b = b0, r = r0;
        for (int step = 0; step < 6; ++step) {
            comp[n - 1][b][r] = rotate(t, step);
            n = n == 1 ? 3 : n - 1;
            b = 1 - b;
            r = 1 - r;
        }
    };
    walk(0, 0, t00);
    walk(0, 1, t01);
}

struct Candidate {
    Decoration base;
    TileState comp[3][2][2];
    TileState central[2]{};
    uint8_t spoke_bs[2][6]{};
    uint8_t spoke_rb[2][6]{};
};

DecArtifact to_artifact(const Candidate& c) {
    DecArtifact art;
    art.base = c.base;
    for (int n = 0; n < 3; ++n)
        for (int b = 0; b < 2; ++b)
            for (int r = 0; r < 2; ++r) art.comp[n][b][r] = c.comp[n][b][r];
    for (int i = 0; i < 2; ++i) {
        art.central[i] = c.central[i];
        for (int m = 0; m < 6; ++m) {
            art.spoke_bs[i][m] = c.spoke_bs[i][m];
            art.spoke_rb[i][m] = c.spoke_rb[i][m];
        }
    }
    return art;
}

// Relabeling of the 12 states by a rotation (optionally with a global color
// swap): the same tiling described with a different base-state convention.
// Mirror relabelings would flip the parity convention out of the constrained
// space, so they are not part of the declared symmetry. The stored spoke
// completion is renormalized to the rotation-0 central states: rotating a
// completion by one step shifts the ray constants and complements them.
Candidate relabel(const Candidate& c, TileState sigma, bool colorswap) {
    Candidate out = c;
    const DecTable table(c.base);
    out.base = table.of(sigma);
    if (colorswap)
        for (int v = 0; v < 6; ++v) out.base.vertex_color[v] = flip(out.base.vertex_color[v]);
    const TileState inv = inverse_state(sigma);
    for (int n = 0; n < 3; ++n)
        for (int b = 0; b < 2; ++b)
            for (int r = 0; r < 2; ++r)
                out.comp[n][b][r] = compose_states(c.comp[n][b][r], inv);
    for (int i = 0; i < 2; ++i) {
        const TileState relabeled = compose_states(c.central[i], inv);
        const int shift = relabeled.rot;  // rotate the completion to rot 0
        out.central[i] = {0, relabeled.chi};
        for (int m = 0; m < 6; ++m) {
            const int src = ((m + shift) % 6);
            const int comp_bit = ((6 - shift) % 6) & 1;
            out.spoke_bs[i][m] = uint8_t(c.spoke_bs[i][src] ^ comp_bit);
            out.spoke_rb[i][m] = uint8_t(c.spoke_rb[i][src] ^ comp_bit);
        }
    }
    return out;
}

// Validation harness for one candidate through the closed form.
struct Harness {
    const Candidate* cand;
    DecTable table;

    explicit Harness(const Candidate& c) : cand(&c), table(c.base) {}

    TileState off_spoke_state(HexCoord p) const {
        const FrameDecomp f = frame_of(p);
        return cand->comp[f.frame - 1][pbs(f.i, f.j)][prb(f.i, f.j)];
    }

    TileState state_at(HexCoord p, int choice) const {
        if (p.a == 0 && p.b == 0) return cand->central[choice];
        const FrameDecomp f = frame_of(p);
        const SpokeInfo sp = spoke_of(f);
        int v = 0;
        int64_t x = f.i < 0 ? -f.i : f.i;
        while (sp.kind != SpokeInfo::Off && !(x & 1)) {
            x >>= 1;
            ++v;
        }
        const int fold = sp.kind == SpokeInfo::Off ? 0 : int((f.i >> (v + 1)) & 1);
        switch (sp.kind) {
            case SpokeInfo::Off:
                return cand->comp[f.frame - 1][pbs(f.i, f.j)][prb(f.i, f.j)];
            case SpokeInfo::BlackStripe:
                return cand->comp[f.frame - 1][cand->spoke_bs[choice][sp.ray - 1]][fold];
            default:
                return cand->comp[f.frame - 1][fold][cand->spoke_rb[choice][sp.ray - 1]];
        }
    }

    bool clean(const Patch& patch) const {
        return validate(table, patch, {true, true, true}).total_failures() == 0;
    }

    bool window_ok() const {
        Patch patch;
        for (int a = 3; a <= 9; ++a)
            for (int b = 1; b <= 6; ++b) {
                const HexCoord p{a, b};
                if (spoke_of(frame_of(p)).kind != SpokeInfo::Off) continue;
                patch.set(p, off_spoke_state(p));
            }
        return clean(patch);
    }

    Patch disk(int radius, int choice) const {
        Patch patch;
        for (int a = -radius; a <= radius; ++a)
            for (int b = -radius; b <= radius; ++b)
                if (hex_norm({a, b}) <= radius)
                    patch.set({a, b}, state_at({a, b}, choice));
        return patch;
    }

    // Derives central states and spoke constants: pins the off-spoke field
    // on a disk and searches completions of the spokes and center. Exactly
    // two families (one per central parity) must exist.
    bool derive_families(Candidate& cand_out, std::string& err) const {
        int inv_b[kNumStates], inv_r[kNumStates];
        for (int n = 0; n < 3; ++n)
            for (int b = 0; b < 2; ++b)
                for (int r = 0; r < 2; ++r) {
                    inv_b[state_index(cand->comp[n][b][r])] = b;
                    inv_r[state_index(cand->comp[n][b][r])] = r;
                }
        const int radius = 4;
        std::vector<std::pair<HexCoord, TileState>> field;
        for (int a = -radius; a <= radius; ++a)
            for (int b = -radius; b <= radius; ++b) {
                const HexCoord p{a, b};
                if (hex_norm(p) > radius || (a == 0 && b == 0)) continue;
                if (spoke_of(frame_of(p)).kind != SpokeInfo::Off) continue;
                field.push_back({p, off_spoke_state(p)});
            }
        // Every central orientation completes the field with its own spoke
        // fill; the artifact stores the completions whose central states have
        // rotation 0, one per parity.
        for (int family = 0; family < 2; ++family) {
            const TileState central{0, family == 0 ? Chirality::R : Chirality::L};
            Problem prob = Problem::planar_disk(radius);
            prob.rules = {true, true, false};
            prob.pins = field;
            prob.pins.push_back({{0, 0}, central});
            const SearchOutcome out = enumerate(table, prob, 1);
            if (out.solution_count == 0) {
                err = "no completion for the rotation-0 central state";
                return false;
            }
            const auto& sol = out.solutions.front();
            cand_out.central[family] = central;
            for (int m = 1; m <= 6; ++m) {
                // Black-stripe ray at 60m degrees and red-blue ray at
                // 60m + 30 degrees, read at arc distance 1.
                static constexpr HexCoord bs_step[6] = {
                    {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, 0}};
                static constexpr HexCoord rb_step[6] = {
                    {1, 2}, {-1, 1}, {-2, -1}, {-1, -2}, {1, -1}, {2, 1}};
                cand_out.spoke_bs[family][m - 1] =
                    uint8_t(inv_b[state_index(sol.at(bs_step[m - 1]))]);
                cand_out.spoke_rb[family][m - 1] =
                    uint8_t(inv_r[state_index(sol.at(rb_step[m - 1]))]);
            }
        }
        return true;
    }
};

// ---- substitution data -------------------------------------------------

bool derive_rot180(std::array<uint8_t, 28>& rho, std::string& err) {
    std::array<int, 28> map;
    map.fill(-1);
    const auto note = [&](HalfHexSymbol from, HalfHexSymbol to) {
        const int f = symbol_index(from), t = symbol_index(to);
        if (map[f] != -1 && map[f] != t) {
            err = "inconsistent 180-degree identification for " + symbol_name(from);
            return false;
        }
        map[f] = t;
        return true;
    };
    for (int letter = 0; letter < 7; ++letter) {
        for (int barred = 0; barred < 2; ++barred) {
            HalfHexPatch seed;
            seed.add({{0, 0}, {letter, Side::L, barred == 1}, 0});
            seed.add({{0, 0}, {letter, Side::R, barred == 1}, 0});
            const HalfHexPatch big = inflate(seed, 3);
            for (const auto& [key, cell] : big.cells()) {
                if (key.second >= 3) continue;
                const auto mate = big.at(cell.hex, key.second + 3);
                if (!mate || cell.sym.side != mate->sym.side) continue;
                const HalfHexCell& x = cell;
                const HalfHexCell& y = *mate;
                const HalfHexSymbol upright{x.sym.letter,
                                            x.sym.side == Side::L ? Side::R : Side::L,
                                            x.sym.barred};
                if (!note(y.sym, upright)) return false;
                const HalfHexSymbol upright2{y.sym.letter,
                                             y.sym.side == Side::L ? Side::R : Side::L,
                                             y.sym.barred};
                if (!note(x.sym, upright2)) return false;
            }
        }
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < 28; ++i) {
            if (map[i] == -1) continue;
            const HalfHexSymbol a = symbol_from_index(i);
            const HalfHexSymbol b = symbol_from_index(map[i]);
            const int mi = symbol_index(mirror(a)), mt = symbol_index(mirror(b));
            if (map[mi] == -1) {
                map[mi] = mt;
                changed = true;
            } else if (map[mi] != mt) {
                err = "180-degree identification does not commute with mirroring";
                return false;
            }
            if (map[map[i]] == -1) {
                map[map[i]] = i;
                changed = true;
            } else if (map[map[i]] != i) {
                err = "180-degree identification is not an involution";
                return false;
            }
        }
    }
    // The identification is partial: symbols that never sit upside down in a
    // hexagon keep no mate.
    for (int i = 0; i < 28; ++i) rho[i] = map[i] == -1 ? uint8_t(255) : uint8_t(map[i]);
    return true;
}

bool derive_hex_states(const DecTable& table, const std::array<uint8_t, 28>& rho,
                       TileState (&hex_base)[14], std::string& err) {
    HalfHexPatch seed;
    seed.add({{0, 0}, {0, Side::L, false}, 0});
    const HalfHexPatch big = inflate(seed, 4);
    const auto hexes = to_hexagons(big, rho);

    struct Site {
        char rule;
        std::array<const PlacedHex*, 3> part;
        std::array<int, 3> index;
    };
    std::vector<std::vector<Site>> by_letter(7);
    const auto placed = [&](HexCoord p) -> const PlacedHex* {
        const auto it = hexes.find(p);
        return it == hexes.end() ? nullptr : &it->second;
    };
    std::set<EdgeId> es;
    std::set<VertexId> vs;
    for (const auto& [p, h] : hexes)
        for (int k = 0; k < 6; ++k) {
            es.insert(canonical_edge(p, k));
            vs.insert(canonical_vertex(p, k));
        }
    for (const EdgeId& e : es) {
        const PlacedHex* a = placed(e.cell);
        const PlacedHex* b = placed(neighbor(e.cell, e.k));
        if (a && b)
            by_letter[std::max(a->type.letter, b->type.letter)].push_back(
                {'1', {a, b, nullptr}, {e.k, 0, 0}});
        const PlacedHex* wa = placed(neighbor(e.cell, e.k + 1));
        const PlacedHex* wb = placed(neighbor(e.cell, mod6(e.k - 1)));
        if (wa && wb)
            by_letter[std::max(wa->type.letter, wb->type.letter)].push_back(
                {'2', {wa, wb, nullptr}, {e.k, 0, 0}});
    }
    for (const VertexId& v : vs) {
        Site s{'3', {nullptr, nullptr, nullptr}, {0, 0, 0}};
        bool all = true;
        int max_letter = 0, i = 0;
        for (const auto& [cell, corner] : vertex_incidences(v)) {
            s.part[i] = placed(cell);
            s.index[i] = corner;
            if (!s.part[i])
                all = false;
            else
                max_letter = std::max(max_letter, s.part[i]->type.letter);
            ++i;
        }
        if (all) by_letter[max_letter].push_back(s);
    }

    std::array<int, 7> assign;
    assign.fill(-1);
    const auto state_of = [&](const PlacedHex& h) {
        TileState s = state_from_index(assign[h.type.letter]);
        if (h.type.barred) s = transform(s, LatticeSym{3, true});
        return rotate(s, h.orient);
    };
    const auto site_ok = [&](const Site& s) {
        if (s.rule == '1') {
            const TileState a = state_of(*s.part[0]), b = state_of(*s.part[1]);
            return table.edge_bit(a, s.index[0]) != table.edge_bit(b, mod6(s.index[0] + 3));
        }
        if (s.rule == '2') {
            const TileState a = state_of(*s.part[0]), b = state_of(*s.part[1]);
            return table.vertex_color(a, mod6(s.index[0] + 5)) !=
                   table.vertex_color(b, mod6(s.index[0] + 2));
        }
        const Color c0 = table.vertex_color(state_of(*s.part[0]), s.index[0]);
        const Color c1 = table.vertex_color(state_of(*s.part[1]), s.index[1]);
        const Color c2 = table.vertex_color(state_of(*s.part[2]), s.index[2]);
        return !(c0 == c1 && c1 == c2);
    };

    std::vector<std::array<int, 7>> solutions;
    const auto dfs = [&](auto&& self, int letter) -> void {
        if (letter == 7) {
            solutions.push_back(assign);
            return;
        }
        for (int s = 0; s < kNumStates; ++s) {
            assign[letter] = s;
            bool ok = true;
            for (const Site& site : by_letter[letter]) {
                if (!site_ok(site)) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, letter + 1);
        }
        assign[letter] = -1;
    };
    dfs(dfs, 0);

    if (solutions.empty()) {
        err = "no hexagon-state assignment validates";
        return false;
    }
    if (solutions.size() > 1) {
        err = "hexagon-state assignment is not unique (" +
              std::to_string(solutions.size()) + " found)";
        return false;
    }
    for (int l = 0; l < 7; ++l) {
        const TileState s = state_from_index(solutions[0][l]);
        hex_base[l * 2] = s;
        hex_base[l * 2 + 1] = transform(s, LatticeSym{3, true});
    }
    return true;
}

}  // namespace

DeriveResult self_derive(const DeriveOptions& opt) {
    DeriveResult res;

    const std::vector<Decoration> bases = enumerate_bases(res.bases_scanned);

    std::vector<Candidate> survivors;
    for (const Decoration& base : bases) {
        for (int i00 = 0; i00 < kNumStates; ++i00) {
            if (parity_of(state_from_index(i00)) != 0) continue;
            for (int i01 = 0; i01 < kNumStates; ++i01) {
                if (parity_of(state_from_index(i01)) != 1) continue;
                ++res.candidates_tested;
                Candidate cand;
                cand.base = base;
                fill_comp(cand.comp, state_from_index(i00), state_from_index(i01));
                Harness h(cand);
                if (!h.window_ok()) continue;
                if (opt.verbose) fprintf(stderr, "window ok: base#? seeds %d %d\n", i00, i01);
                std::string err;
                if (!h.derive_families(cand, err)) {
                    if (opt.verbose) fprintf(stderr, "  families failed: %s\n", err.c_str());
                    continue;
                }
                if (opt.verbose) fprintf(stderr, "  families ok\n");
                if (opt.corrupt) cand.spoke_bs[0][0] ^= 1;  // control hook
                Harness full(cand);
                if (!full.clean(full.disk(8, 0)) || !full.clean(full.disk(8, 1))) {
                    if (opt.verbose) fprintf(stderr, "  disk8 failed\n");
                    continue;
                }
                survivors.push_back(cand);
            }
        }
    }

    std::vector<Candidate> final_survivors;
    for (const Candidate& cand : survivors) {
        Harness h(cand);
        if (h.clean(h.disk(opt.final_radius, 0)) && h.clean(h.disk(opt.final_radius, 1)))
            final_survivors.push_back(cand);
    }
    res.survivors = long(final_survivors.size());
    if (final_survivors.empty()) {
        res.message = "no decoration candidate survives validation";
        return res;
    }

    // Orbits under the declared symmetry: 6 state-label rotations x global
    // color swap.
    const auto cand_key = [](const Candidate& c) { return to_artifact(c).to_text(); };
    std::set<std::string> all_keys;
    for (const Candidate& c : final_survivors) all_keys.insert(cand_key(c));
    std::set<std::string> orbit_reps;
    std::vector<Candidate> canonicals;
    for (const Candidate& c : final_survivors) {
        std::string best;
        Candidate best_cand = c;
        bool best_preferred = false;
        for (int rot = 0; rot < 6; ++rot) {
            for (int swap = 0; swap < 2; ++swap) {
                const Candidate img = relabel(c, TileState{rot, Chirality::R}, swap == 1);
                const std::string key = cand_key(img);
                if (!all_keys.count(key)) {
                    res.message = "survivor set is not closed under the declared symmetry";
                    return res;
                }
                const bool preferred = img.central[0].rot == 0;
                const bool better = best.empty() || (preferred && !best_preferred) ||
                                    (preferred == best_preferred && key < best);
                if (better) {
                    best = key;
                    best_cand = img;
                    best_preferred = preferred;
                }
            }
        }
        if (orbit_reps.insert(best).second) canonicals.push_back(best_cand);
    }
    res.orbits = int(orbit_reps.size());
    if (res.orbits != 1) {
        res.message = "expected exactly one survivor orbit, found " +
                      std::to_string(res.orbits);
        return res;
    }

    DecArtifact art = to_artifact(canonicals.front());
    std::string err;
    try {
        if (!derive_rot180(art.rot180, err)) {
            res.message = err;
            return res;
        }
        if (!derive_hex_states(DecTable(art.base), art.rot180, art.hex_base, err)) {
            res.message = err;
            return res;
        }
        // End-to-end gate: a five-step inflation mapped through the hexagon
        // states must satisfy all three rules.
        HalfHexPatch seed;
        seed.add({{0, 0}, {0, Side::L, false}, 0});
        const HalfHexPatch big = inflate(seed, 5);
        Patch tiles;
        for (const auto& [p, ph] : to_hexagons(big, art.rot180))
            tiles.set(p, art.hex_state(ph.type, ph.orient));
        if (validate(DecTable(art.base), tiles, {true, true, true}).total_failures() != 0) {
            res.message = "inflated substitution patch violates the rules";
            return res;
        }
    } catch (const std::exception& e) {
        res.message = std::string("substitution derivation failed: ") + e.what();
        return res;
    }
    if (err = art.check(); !err.empty()) {
        res.message = "canonical artifact fails validation: " + err;
        return res;
    }
    // Round-trip to set the digest exactly as the loader computes it.
    res.artifact = DecArtifact::from_text(art.to_text());
    res.ok = true;
    res.message = "ok";
    return res;
}

}  // namespace hexweave
