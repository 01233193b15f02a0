#include <doctest.h>

#include <cmath>
#include <set>

#include "hexweave/artifact.hpp"
#include "hexweave/decoration.hpp"
#include "hexweave/hex.hpp"
#include "hexweave/tile_state.hpp"

using namespace hexweave;

namespace {
uint32_t rng_state = 0x9e3779b9;
int rnd(int n) {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 17;
    rng_state ^= rng_state << 5;
    return int(rng_state % uint32_t(n));
}
}  // namespace

TEST_CASE("neighbor basis and involution") {
    CHECK(neighbor({0, 0}, 0) == HexCoord{1, 0});
    for (int k = 0; k < 6; ++k) CHECK(neighbor(neighbor({0, 0}, k), k + 3) == HexCoord{0, 0});
    for (int i = 0; i < 200; ++i) {
        const HexCoord p{rnd(41) - 20, rnd(41) - 20};
        const int k = rnd(6);
        CHECK(neighbor(neighbor(p, k), k + 3) == p);
        CHECK(hex_distance(p, neighbor(p, k)) == 1);
    }
}

TEST_CASE("direction table against floating-point hexagon geometry") {
    // Two hexagons adjacent across edge k share the corner pair (k, k+1),
    // which appear as corners (k+4, k+3) of the neighbor. Positions must
    // coincide to 1e-9 lattice units.
    for (int i = 0; i < 100; ++i) {
        const HexCoord p{rnd(21) - 10, rnd(21) - 10};
        for (int k = 0; k < 6; ++k) {
            const HexCoord q = neighbor(p, k);
            double x1, y1, x2, y2;
            hex_corner_xy(p, k, x1, y1);
            hex_corner_xy(q, (k + 4) % 6, x2, y2);
            CHECK(std::abs(x1 - x2) < 1e-9);
            CHECK(std::abs(y1 - y2) < 1e-9);
            hex_corner_xy(p, (k + 1) % 6, x1, y1);
            hex_corner_xy(q, (k + 3) % 6, x2, y2);
            CHECK(std::abs(x1 - x2) < 1e-9);
            CHECK(std::abs(y1 - y2) < 1e-9);
        }
    }
}

TEST_CASE("vertex canonicalization is consistent and geometric") {
    for (int i = 0; i < 100; ++i) {
        const HexCoord p{rnd(21) - 10, rnd(21) - 10};
        for (int v = 0; v < 6; ++v) {
            const VertexId id = canonical_vertex(p, v);
            CHECK((id.corner == 0 || id.corner == 1));
            double x0, y0;
            hex_corner_xy(p, v, x0, y0);
            bool found_self = false;
            for (const auto& [cell, corner] : vertex_incidences(id)) {
                double x1, y1;
                hex_corner_xy(cell, corner, x1, y1);
                CHECK(std::abs(x0 - x1) < 1e-9);
                CHECK(std::abs(y0 - y1) < 1e-9);
                CHECK(canonical_vertex(cell, corner) == id);
                if (cell == p && corner == v) found_self = true;
            }
            CHECK(found_self);
        }
    }
}

TEST_CASE("canonical edges") {
    for (int i = 0; i < 100; ++i) {
        const HexCoord p{rnd(21) - 10, rnd(21) - 10};
        for (int k = 0; k < 6; ++k) {
            const EdgeId e = canonical_edge(p, k);
            CHECK(e.k >= 0);
            CHECK(e.k < 3);
            CHECK(canonical_edge(neighbor(p, k), k + 3) == e);
        }
    }
}

TEST_CASE("hex distance disk sizes") {
    for (int r : {0, 1, 5, 8}) {
        long count = 0;
        for (int a = -r; a <= r; ++a)
            for (int b = -r; b <= r; ++b)
                if (hex_norm({a, b}) <= r) ++count;
        CHECK(count == 3L * r * (r + 1) + 1);
    }
}

TEST_CASE("tile state group") {
    CHECK(transform(TileState{0, Chirality::R}, {1, false}) == TileState{1, Chirality::R});
    for (int i = 0; i < kNumStates; ++i) {
        const TileState s = state_from_index(i);
        CHECK(rotate(s, 6) == s);
        CHECK(reflect(reflect(s)) == s);
        CHECK(parity_of(reflect(s)) == 1 - parity_of(s));
        CHECK(parity_of(rotate(s)) == parity_of(s));
        std::set<int> orbit;
        for (const LatticeSym& g : all_syms()) orbit.insert(state_index(transform(s, g)));
        CHECK(orbit.size() == kNumStates);
    }
}

TEST_CASE("lattice symmetries act correctly on directions") {
    for (const LatticeSym& g : all_syms())
        for (int k = 0; k < 6; ++k) CHECK(apply_sym(g, kDir[k]) == kDir[apply_sym_dir(g, k)]);
}

TEST_CASE("decoration invariants and equivariance") {
    const DecArtifact& art = DecArtifact::embedded_default();
    DecTable table(art.base);
    CHECK(table.check().empty());

    for (int i = 0; i < kNumStates; ++i) {
        const TileState s = state_from_index(i);
        const Decoration& d = table.of(s);
        CHECK(check_decoration(d).empty());
        std::vector<int> arcs;
        for (int v = 0; v < 6; ++v)
            if (table.arc_at(s, v)) arcs.push_back(v);
        REQUIRE(arcs.size() == 2);
        CHECK((arcs[0] + 3) % 6 == arcs[1]);

        for (const LatticeSym& g : all_syms()) CHECK(table.of(transform(s, g)) == transform(d, g));
    }

    // Reflection flips every vertex color.
    const Decoration& base = table.of({0, Chirality::R});
    const Decoration refl = table.of(reflect({0, Chirality::R}));
    for (int v = 0; v < 6; ++v)
        CHECK(refl.vertex_color[(1 - v + 6) % 6] == flip(base.vertex_color[v]));
}

TEST_CASE("invalid decorations are rejected") {
    const DecArtifact& art = DecArtifact::embedded_default();
    Decoration d = art.base;
    d.chord_of[0] = 0;
    CHECK(!check_decoration(d).empty());

    d = art.base;
    for (int k = 0; k < 6; ++k)
        if (d.kind_of[k] == ChordKind::LongStripe) d.edge_bit[k] = d.edge_bit[d.chord_of[k]];
    CHECK(check_decoration(d) == "long stripe crossings must sit at opposite ends");

    d = art.base;
    for (int v = 0; v < 6; ++v) d.vertex_color[v] = Color::Red;
    CHECK(check_decoration(d) == "diameters must be one red, one blue, one mixed");
}

TEST_CASE("parity equals the Boolean sum of stripe and diameter classes") {
    const DecArtifact& art = DecArtifact::embedded_default();
    for (int n = 1; n <= 3; ++n)
        for (int b = 0; b < 2; ++b)
            for (int r = 0; r < 2; ++r)
                CHECK(parity_of(art.comp_entry(n, b, r)) == ((b + r) & 1));
}
