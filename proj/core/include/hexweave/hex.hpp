#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>

namespace hexweave {

// Center of a hexagon on the triangular lattice: p = a*e1 + b*e2, where
// e1, e2, e3 are unit vectors at 120 degrees with e1 + e2 + e3 = 0.
// e1 points along +x, e2 at 120 degrees. Lattice constant 1.
struct HexCoord {
    int a = 0;
    int b = 0;

    friend bool operator==(const HexCoord&, const HexCoord&) = default;
    friend auto operator<=>(const HexCoord&, const HexCoord&) = default;

    HexCoord operator+(HexCoord o) const { return {a + o.a, b + o.b}; }
    HexCoord operator-(HexCoord o) const { return {a - o.a, b - o.b}; }
    HexCoord operator-() const { return {-a, -b}; }
    HexCoord operator*(int k) const { return {a * k, b * k}; }
};

// Directions 0..5 at angles 60*k degrees. Direction 0 is +e1.
// 0:+e1  1:-e3(=e1+e2)  2:+e2  3:-e1  4:+e3  5:-e2
inline constexpr std::array<HexCoord, 6> kDir = {{
    {1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1},
}};

inline HexCoord neighbor(HexCoord p, int k) { return p + kDir[((k % 6) + 6) % 6]; }

// Hex distance: neighbors are +-(1,0), +-(0,1), +-(1,1).
inline int hex_distance(HexCoord p, HexCoord q) {
    const int da = p.a - q.a, db = p.b - q.b;
    return (std::abs(da) + std::abs(db) + std::abs(da - db)) / 2;
}
inline int hex_norm(HexCoord p) { return hex_distance(p, {0, 0}); }

// Corners are indexed 0..5 counterclockwise; corner v sits at angle
// 60*v - 30 degrees from the center, circumradius 1/sqrt(3). Edge k joins
// corners k and k+1 and faces neighbor k (edge midpoint at angle 60*k).
//
// Each lattice vertex is shared by three hexagons:
//   corner v of p  ==  corner v+4 of neighbor(p, v)  ==  corner v+2 of neighbor(p, v-1)
// Every vertex is corner 0 or corner 1 of exactly one hexagon, which
// serves as its canonical name.
struct VertexId {
    HexCoord cell;  // owning hexagon
    int corner;     // 0 or 1

    friend bool operator==(const VertexId&, const VertexId&) = default;
    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

inline VertexId canonical_vertex(HexCoord p, int v) {
    v = ((v % 6) + 6) % 6;
    switch (v) {
        case 0:
        case 1: return {p, v};
        case 2: return {neighbor(p, 2), 0};
        case 3: return {neighbor(p, 3), 1};
        case 4: return {neighbor(p, 3), 0};
        default: return {neighbor(p, 4), 1};
    }
}

// The three (cell, local corner) incidences of a canonical vertex.
inline std::array<std::pair<HexCoord, int>, 3> vertex_incidences(VertexId v) {
    if (v.corner == 0) {
        // corner 0 of p = corner 4 of p+e1 = corner 2 of p-e2
        return {{{v.cell, 0}, {neighbor(v.cell, 0), 4}, {neighbor(v.cell, 5), 2}}};
    }
    // corner 1 of p = corner 5 of p+e1+e2 = corner 3 of p+e1
    return {{{v.cell, 1}, {neighbor(v.cell, 1), 5}, {neighbor(v.cell, 0), 3}}};
}

// Edge k of p equals edge k+3 of neighbor(p, k). Canonical form keeps k in 0..2.
struct EdgeId {
    HexCoord cell;
    int k;  // 0..2

    friend bool operator==(const EdgeId&, const EdgeId&) = default;
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

inline EdgeId canonical_edge(HexCoord p, int k) {
    k = ((k % 6) + 6) % 6;
    if (k < 3) return {p, k};
    return {neighbor(p, k), k - 3};
}

// Point symmetries of the lattice: the dihedral group of order 12 acting on
// lattice coordinates. Element g = rot^r (* mirror), mirror = reflection in
// the x axis (angle -> -angle), applied before the rotation.
struct LatticeSym {
    int rot = 0;        // 0..5
    bool mirror = false;
};

inline HexCoord apply_sym(LatticeSym g, HexCoord p) {
    if (g.mirror) {
        // x-axis mirror: e1 -> e1, e2 -> -e1-e2
        p = {p.a - p.b, -p.b};
    }
    for (int i = 0; i < g.rot; ++i) {
        // rot60: e1 -> e1+e2, e2 -> -e1
        p = {p.a - p.b, p.a};
    }
    return p;
}

// Direction index transform matching apply_sym.
inline int apply_sym_dir(LatticeSym g, int k) {
    k = ((k % 6) + 6) % 6;
    if (g.mirror) k = (6 - k) % 6;  // angle 60k -> -60k
    return (k + g.rot) % 6;
}

// Corner index transform matching apply_sym (corner v at angle 60v-30).
inline int apply_sym_corner(LatticeSym g, int v) {
    v = ((v % 6) + 6) % 6;
    if (g.mirror) v = ((1 - v) % 6 + 6) % 6;  // 60v-30 -> -(60v-30) = 60(1-v)-30
    return (v + g.rot) % 6;
}

inline constexpr std::array<LatticeSym, 12> all_syms() {
    std::array<LatticeSym, 12> out{};
    for (int m = 0; m < 2; ++m)
        for (int r = 0; r < 6; ++r) out[m * 6 + r] = LatticeSym{r, m == 1};
    return out;
}

struct HexCoordHash {
    size_t operator()(const HexCoord& p) const {
        return std::hash<int64_t>{}((int64_t(p.a) << 32) ^ uint32_t(p.b));
    }
};

// Cartesian position of a hexagon center (lattice constant 1).
void hex_center_xy(HexCoord p, double& x, double& y);
// Cartesian position of corner v of hexagon p (circumradius 1/sqrt(3)).
void hex_corner_xy(HexCoord p, int v, double& x, double& y);

}  // namespace hexweave
