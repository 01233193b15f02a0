#include "hexweave/decoration.hpp"

namespace hexweave {

namespace {
int mod6(int k) { return ((k % 6) + 6) % 6; }
}  // namespace

Decoration transform(const Decoration& d, LatticeSym g) {
    Decoration out;
    if (g.mirror) {
        // Edge k -> edge -k; local start/end corners swap, so bits complement.
        // Corner v -> corner 1-v; colors swap as part of the reflection.
        Decoration m;
        for (int k = 0; k < 6; ++k) {
            const int mk = mod6(-k);
            m.edge_bit[mk] = 1 - d.edge_bit[k];
            m.chord_of[mk] = uint8_t(mod6(-int(d.chord_of[k])));
            m.kind_of[mk] = d.kind_of[k];
        }
        for (int v = 0; v < 6; ++v) m.vertex_color[mod6(1 - v)] = flip(d.vertex_color[v]);
        out = m;
    } else {
        out = d;
    }
    Decoration r = out;
    for (int k = 0; k < 6; ++k) {
        const int rk = mod6(k + g.rot);
        r.edge_bit[rk] = out.edge_bit[k];
        r.chord_of[rk] = uint8_t(mod6(int(out.chord_of[k]) + g.rot));
        r.kind_of[rk] = out.kind_of[k];
    }
    for (int v = 0; v < 6; ++v) r.vertex_color[mod6(v + g.rot)] = out.vertex_color[v];
    return r;
}

bool arc_at_corner(const Decoration& d, int v) {
    const int e0 = mod6(v - 1), e1 = mod6(v);
    return d.chord_of[e0] == e1 && d.kind_of[e0] == ChordKind::CornerArc &&
           d.edge_bit[e0] == 1 && d.edge_bit[e1] == 0;
}

std::string check_decoration(const Decoration& d) {
    for (int k = 0; k < 6; ++k) {
        const int p = d.chord_of[k];
        if (p < 0 || p > 5 || p == k) return "pairing is not a matching";
        if (d.chord_of[p] != k) return "pairing is not an involution";
        if (d.kind_of[p] != d.kind_of[k]) return "chord kind mismatch";
    }
    int long_chords = 0, arc_chords = 0;
    for (int k = 0; k < 6; ++k) {
        const int p = d.chord_of[k];
        if (p < k) continue;  // visit each chord once
        const int span = std::min(mod6(p - k), mod6(k - p));
        if (d.kind_of[k] == ChordKind::LongStripe) {
            if (span != 3) return "long stripe must join opposite edges";
            if (d.edge_bit[k] == d.edge_bit[p])
                return "long stripe crossings must sit at opposite ends";
            ++long_chords;
        } else {
            if (span != 1) return "corner arc must join adjacent edges";
            const int lo = (mod6(p - k) == 1) ? k : p;  // chord {lo, lo+1}, corner lo+1
            if (d.edge_bit[lo] != 1 || d.edge_bit[mod6(lo + 1)] != 0)
                return "corner arc crossings must hug the shared corner";
            ++arc_chords;
        }
    }
    if (long_chords != 1 || arc_chords != 2) return "need one long stripe and two corner arcs";

    int rr = 0, bb = 0, mixed = 0;
    for (int v = 0; v < 3; ++v) {
        const Color c0 = d.vertex_color[v], c1 = d.vertex_color[v + 3];
        if (c0 != c1)
            ++mixed;
        else if (c0 == Color::Red)
            ++rr;
        else
            ++bb;
    }
    if (rr != 1 || bb != 1 || mixed != 1)
        return "diameters must be one red, one blue, one mixed";
    return {};
}

DecTable::DecTable(const Decoration& base) {
    for (int i = 0; i < kNumStates; ++i) {
        const TileState s = state_from_index(i);
        dec_[i] = transform(base, LatticeSym{s.rot, s.chi == Chirality::L});
        for (int v = 0; v < 6; ++v) arc_corner_[i][v] = arc_at_corner(dec_[i], v);
    }
}

std::string DecTable::check() const {
    for (int i = 0; i < kNumStates; ++i) {
        if (auto err = check_decoration(dec_[i]); !err.empty())
            return "state " + std::to_string(i) + ": " + err;
    }
    return {};
}

}  // namespace hexweave
