#include "hexweave/cht.hpp"

#include <bit>
#include <stdexcept>

namespace hexweave {

namespace {

int mod6(int k) { return ((k % 6) + 6) % 6; }

int vtz(int64_t x) {  // 2-adic valuation of |x|, x != 0
    return std::countr_zero(uint64_t(x < 0 ? -x : x));
}

}  // namespace

const int kSpokeS[6] = {0, 1, 1, 0, 1, 0};
const int kSpokeS1[6] = {0, 1, 0, 1, 1, 0};
const int kSpokeS2[6] = {1, 1, 0, 0, 1, 0};

uint64_t q2part(uint64_t n) {
    if (n == 0) throw std::domain_error("Q(0) is a symbolic infinity");
    return n & (~n + 1);
}

Level level_of(HexCoord p) {
    if (p.a == 0 && p.b == 0) return {true, 0};
    const int va = p.a == 0 ? 62 : vtz(p.a);
    const int vb = p.b == 0 ? 62 : vtz(p.b);
    return {false, std::min(va, vb) + 1};
}

FrameDecomp frame_of(HexCoord p) {
    if (p.a == 0 && p.b == 0) throw std::domain_error("the central hexagon has no frame");
    const int64_t a = p.a, b = p.b;
    const int64_t cand[3][2] = {
        {a - b, -b},  // frame 1: p = i e1 + j e3
        {b, a},       // frame 2: p = i e2 + j e1
        {-a, b - a},  // frame 3: p = i e3 + j e2
    };
    for (int n = 0; n < 3; ++n) {
        const int64_t i = cand[n][0], j = cand[n][1];
        if (i != 0 && j != 0 && vtz(i) == vtz(j)) return {n + 1, i, j};
    }
    throw std::logic_error("frame decomposition failed");
}

int pbs(int64_t i, int64_t j) {
    if (i == j) throw std::domain_error("black-stripe parity undefined on its spoke");
    return int((i >> vtz(i - j)) & 1);
}

int prb(int64_t i, int64_t j) {
    if (i == -j) throw std::domain_error("red-blue parity undefined on its spoke");
    return int((i >> vtz(i + j)) & 1);
}

SpokeInfo spoke_of(const FrameDecomp& f) {
    if (f.i == f.j) {
        // Black-stripe spoke: frame n covers the lattice axis -e_{axis(n)}.
        static constexpr int ray_pos[3] = {5, 1, 3};  // i > 0
        static constexpr int ray_neg[3] = {2, 4, 6};  // i < 0
        return {SpokeInfo::BlackStripe,
                f.i > 0 ? ray_pos[f.frame - 1] : ray_neg[f.frame - 1],
                f.i > 0 ? f.i : -f.i};
    }
    if (f.i == -f.j) {
        static constexpr int ray_pos[3] = {6, 2, 4};
        static constexpr int ray_neg[3] = {3, 5, 1};
        return {SpokeInfo::RedBlue,
                f.i > 0 ? ray_pos[f.frame - 1] : ray_neg[f.frame - 1],
                f.i > 0 ? f.i : -f.i};
    }
    return {};
}

ChtConfig default_config(const DecArtifact& art, int s_choice) {
    if (s_choice != 1 && s_choice != 2) throw std::invalid_argument("s choice must be 1 or 2");
    return config_with_central(art, s_choice, art.central[s_choice - 1]);
}

ChtConfig config_with_central(const DecArtifact& art, int s_choice, TileState central) {
    if (s_choice != 1 && s_choice != 2) throw std::invalid_argument("s choice must be 1 or 2");
    if (parity_of(central) != parity_of(art.central[s_choice - 1]))
        throw std::invalid_argument("central state parity disagrees with the spoke choice");
    // The central orientation is free; rotating the whole completion by one
    // step shifts the ray constants and complements them.
    const int k = ((central.rot - art.central[s_choice - 1].rot) % 6 + 6) % 6;
    ChtConfig cfg{s_choice, central};
    for (int m = 0; m < 6; ++m) {
        const int src = ((m - k) % 6 + 6) % 6;
        cfg.spoke_bs[m] = uint8_t(art.spoke_bs[s_choice - 1][src] ^ (k & 1));
        cfg.spoke_rb[m] = uint8_t(art.spoke_rb[s_choice - 1][src] ^ (k & 1));
    }
    return cfg;
}

CellBits cell_bits(HexCoord p, const ChtConfig& cfg) {
    const FrameDecomp f = frame_of(p);
    const SpokeInfo sp = spoke_of(f);
    // On a spoke, the broken term is replaced by the per-ray constant; the
    // surviving term keeps the line's frame coordinate (floor toward -inf),
    // which is the paperfolding term up to complement per ray.
    switch (sp.kind) {
        case SpokeInfo::Off: return {f.frame, pbs(f.i, f.j), prb(f.i, f.j)};
        case SpokeInfo::BlackStripe:
            return {f.frame, cfg.spoke_bs[sp.ray - 1],
                    int((f.i >> (vtz(f.i) + 1)) & 1)};
        default:
            return {f.frame, int((f.i >> (vtz(f.i) + 1)) & 1),
                    cfg.spoke_rb[sp.ray - 1]};
    }
}

int parity_at(HexCoord p, const ChtConfig& cfg) {
    if (p.a == 0 && p.b == 0) return parity_of(cfg.central);
    const CellBits bits = cell_bits(p, cfg);
    return (bits.bs + bits.rb) & 1;
}

TileState cht_state(const DecArtifact& art, HexCoord p, const ChtConfig& cfg) {
    if (p.a == 0 && p.b == 0) return cfg.central;
    const CellBits bits = cell_bits(p, cfg);
    return art.comp_entry(bits.frame, bits.bs, bits.rb);
}

Patch build_patch(const DecArtifact& art, int radius, const ChtConfig& cfg) {
    Patch patch;
    for (int a = -radius; a <= radius; ++a)
        for (int b = -radius; b <= radius; ++b) {
            const HexCoord p{a, b};
            if (hex_norm(p) <= radius) patch.set(p, cht_state(art, p, cfg));
        }
    return patch;
}

Patch build_rhombus(const DecArtifact& art, int m, int n, const ChtConfig& cfg) {
    Patch patch;
    for (int a = -(m / 2); a < m - m / 2; ++a)
        for (int b = -(n / 2); b < n - n / 2; ++b)
            patch.set({a, b}, cht_state(art, {a, b}, cfg));
    return patch;
}

std::map<int, long> level_census(const Patch& patch) {
    std::map<int, long> census;
    for (const auto& [p, s] : patch.cells()) {
        const Level l = level_of(p);
        ++census[l.central ? 0 : l.level];
    }
    return census;
}

std::set<VertexId> small_ring_vertices(const DecTable& dec, const Patch& patch) {
    std::set<VertexId> out;
    for (const VertexId& v : vertex_sites(patch)) {
        bool ring = true;
        for (const auto& [cell, corner] : vertex_incidences(v)) {
            const auto s = patch.at(cell);
            if (!s || !dec.arc_at(*s, corner)) {
                ring = false;
                break;
            }
        }
        if (ring) out.insert(v);
    }
    return out;
}

LoopCensus stripe_loops(const DecTable& dec, const Patch& patch) {
    LoopCensus census;
    std::set<std::pair<HexCoord, int>> visited;  // (cell, edge) chord ends
    for (const auto& [p0, s0] : patch.cells()) {
        for (int k0 = 0; k0 < 6; ++k0) {
            if (visited.count({p0, k0})) continue;
            // Walk the stripe forward from (p0, k0); if it leaves the patch,
            // restart backward from the other end of the starting chord.
            long chords = 0;
            bool closed = false;
            HexCoord p = p0;
            int k = k0;
            while (true) {
                const auto s = patch.at(p);
                const int k2 = dec.of(*s).chord_of[k];
                visited.insert({p, k});
                visited.insert({p, k2});
                ++chords;
                const HexCoord q = patch.canon(neighbor(p, k2));
                if (!patch.contains(q)) break;
                p = q;
                k = mod6(k2 + 3);
                if (p == p0 && k == k0) {
                    closed = true;
                    break;
                }
                if (visited.count({p, k})) break;  // torus wrap joining midway
            }
            if (closed) {
                ++census.closed[chords];
                continue;
            }
            p = p0;
            k = k0;
            while (true) {
                const HexCoord q = patch.canon(neighbor(p, k));
                if (!patch.contains(q)) break;
                p = q;
                k = mod6(k + 3);
                if (visited.count({p, k})) break;
                const int k2 = dec.of(*patch.at(p)).chord_of[k];
                visited.insert({p, k});
                visited.insert({p, k2});
                k = k2;
            }
            ++census.open_chains;
        }
    }
    return census;
}

}  // namespace hexweave
