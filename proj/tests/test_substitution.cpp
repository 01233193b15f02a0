#include <doctest.h>

#include <set>

#include "hexweave/artifact.hpp"
#include "hexweave/halfhex.hpp"
#include "hexweave/rules.hpp"

using namespace hexweave;

namespace {
const DecArtifact& art() { return DecArtifact::embedded_default(); }

HalfHexSymbol sym(const char* name) { return *parse_symbol(name); }

HalfHexPatch inflate_symbol(const char* name, int steps) {
    HalfHexPatch p;
    p.add({{0, 0}, sym(name), 0});
    return inflate(p, steps);
}
}  // namespace

TEST_CASE("published decomposition rows") {
    const auto a_l = decompose_children(sym("A_L"));
    CHECK(a_l[0] == sym("G_R"));   // side 6
    CHECK(a_l[1] == sym("D_R"));   // side 5
    CHECK(a_l[2] == sym("Gb_L"));  // side 4

    const auto c_r = decompose_children(sym("C_R"));
    CHECK(c_r[0] == sym("D_L"));   // side 1
    CHECK(c_r[1] == sym("E_L"));   // side 2
    CHECK(c_r[2] == sym("Db_R"));  // side 3

    const auto e_r = decompose_children(sym("E_R"));
    CHECK(e_r[0] == sym("G_L"));
    CHECK(e_r[1] == sym("Eb_L"));
    CHECK(e_r[2] == sym("Gb_R"));
}

TEST_CASE("decomposition commutes with mirroring") {
    for (int i = 0; i < kNumHalfHexSymbols; ++i) {
        const HalfHexSymbol s = symbol_from_index(i);
        const auto kids = decompose_children(s);
        const auto mirrored_kids = decompose_children(mirror(s));
        for (int j = 0; j < 3; ++j) CHECK(mirror(kids[j]) == mirrored_kids[j]);
    }
}

TEST_CASE("the starred arrangements are flagged and no legal row is") {
    CHECK(is_forbidden_arrangement(sym("C_L"), {sym("G_R"), sym("D_R"), sym("Bb_L")}));
    CHECK(is_forbidden_arrangement(sym("C_R"), {sym("A_L"), sym("Eb_L"), sym("Gb_R")}));
    CHECK(forbidden_arrangements().size() == 4);  // with mirrors
    for (const auto& [center, flanks] : forbidden_arrangements())
        CHECK(is_forbidden_arrangement(center, flanks));
    for (int i = 0; i < kNumHalfHexSymbols; ++i) {
        const HalfHexSymbol s = symbol_from_index(i);
        const HalfHexSymbol center{2, s.side, s.barred};  // letter C
        CHECK(!is_forbidden_arrangement(center, decompose_children(s)));
    }
}

TEST_CASE("symbol names round trip") {
    for (int i = 0; i < kNumHalfHexSymbols; ++i) {
        const HalfHexSymbol s = symbol_from_index(i);
        CHECK(parse_symbol(symbol_name(s)) == s);
        CHECK(mirror(mirror(s)) == s);
    }
    CHECK(!parse_symbol("H_L"));
    CHECK(!parse_symbol("A_X"));
}

TEST_CASE("inflation doubles the scale and grows fourfold") {
    HalfHexPatch one;
    one.add({{3, 1}, sym("F_R"), 2});
    const HalfHexPatch big = inflate(one, 1);
    // Four children in the doubled trapezoid around (6, 2), plus mates.
    CHECK(big.size() == 8);
    long core = 0;
    for (const auto& [key, cell] : big.cells())
        CHECK(hex_distance(cell.hex, {6, 2}) <= 1);
    (void)core;
}

TEST_CASE("composition inverts inflation (unique composition)") {
    for (int i = 0; i < kNumHalfHexSymbols; ++i) {
        const HalfHexSymbol s = symbol_from_index(i);
        for (int steps = 1; steps <= 3; ++steps) {
            HalfHexPatch p;
            p.add({{0, 0}, s, 0});
            HalfHexPatch big = inflate(p, steps);
            for (int c = 0; c < steps; ++c) big = compose_unique(big);
            REQUIRE(big.size() == 1);
            const HalfHexCell cell = big.cells().begin()->second;
            CHECK(cell.sym == s);
            CHECK(cell.orient == 0);
            CHECK(cell.hex == HexCoord{0, 0});
        }
    }
}

TEST_CASE("a deep starred arrangement raises UnknownArrangement") {
    // Build the starred triple around a C_L and bury it in filler hexagons
    // so it counts as deep interior.
    HalfHexPatch p;
    p.add({{0, 0}, sym("C_L"), 0});
    const auto& slots = child_slots(Side::L);
    const std::array<HalfHexSymbol, 3> star = {sym("G_R"), sym("D_R"), sym("Bb_L")};
    for (int i = 0; i < 3; ++i)
        p.add({slots[i].delta, star[i], slots[i].orient});
    // Complete every hexagon within distance 2.
    std::vector<HalfHexCell> mates;
    for (const auto& [key, cell] : p.cells())
        if (!p.at(cell.hex, body_dir(cell) + 3))
            mates.push_back({cell.hex,
                             {cell.sym.letter,
                              cell.sym.side == Side::L ? Side::R : Side::L,
                              cell.sym.barred},
                             cell.orient});
    for (const auto& m : mates) p.add(m);
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            const HexCoord q{a, b};
            if (hex_distance(q, {0, 0}) > 2 || !p.cells_of(q).empty()) continue;
            p.add({q, sym("A_L"), 0});
            p.add({q, sym("A_R"), 0});
        }
    CHECK_THROWS_AS((void)compose_unique(p), UnknownArrangement);
}

TEST_CASE("halves join into hexagons; C/E joins are rejected") {
    HalfHexPatch good;
    good.add({{0, 0}, sym("A_L"), 2});
    good.add({{0, 0}, sym("A_R"), 2});
    const auto hexes = to_hexagons(good, art().rot180);
    REQUIRE(hexes.size() == 1);
    CHECK(hexes.at({0, 0}).type == HexType{0, false});
    CHECK(hexes.at({0, 0}).orient == 2);

    HalfHexPatch mirrored_pair;
    mirrored_pair.add({{0, 0}, sym("Ab_L"), 1});
    mirrored_pair.add({{0, 0}, sym("Ab_R"), 1});
    CHECK(to_hexagons(mirrored_pair, art().rot180).at({0, 0}).type == HexType{0, true});

    HalfHexPatch bad;
    bad.add({{0, 0}, sym("C_L"), 0});
    bad.add({{0, 0}, sym("E_R"), 0});
    CHECK_THROWS_AS((void)to_hexagons(bad, art().rot180), IllegalPair);

    HalfHexPatch bad2;
    bad2.add({{0, 0}, sym("E_L"), 4});
    bad2.add({{0, 0}, sym("C_R"), 4});
    CHECK_THROWS_AS((void)to_hexagons(bad2, art().rot180), IllegalPair);
}

TEST_CASE("side-1 abutments only meet sides 6, 5 or 3") {
    const HalfHexPatch patch = inflate_symbol("A_L", 4);
    std::set<std::pair<int, int>> pairs;
    for (const auto& [key, cell] : patch.cells()) {
        const int sides_lo = cell.sym.side == Side::R ? 1 : 4;
        for (int s = sides_lo; s < sides_lo + 3; ++s) {
            const int edge = side_edge(cell, s);
            const HexCoord q = neighbor(cell.hex, edge);
            // Find the abutting cell presenting a short side on this edge.
            for (const auto other : patch.cells_of(q)) {
                const int lo2 = other.sym.side == Side::R ? 1 : 4;
                for (int s2 = lo2; s2 < lo2 + 3; ++s2)
                    if (side_edge(other, s2) == (edge + 3) % 6) pairs.insert({s, s2});
            }
        }
    }
    CHECK(!pairs.empty());
    for (const auto& [s, t] : pairs) {
        if (s == 1) CHECK((t == 6 || t == 5 || t == 3));
        if (t == 1) CHECK((s == 6 || s == 5 || s == 3));
    }
}

TEST_CASE("five-step inflation maps to a rule-clean patch") {
    const HalfHexPatch big = inflate_symbol("A_L", 5);
    const auto hexes = to_hexagons(big, art().rot180);
    Patch tiles;
    for (const auto& [p, h] : hexes) tiles.set(p, art().hex_state(h.type, h.orient));
    CHECK(tiles.size() > 1500);
    CHECK(validate(art().table(), tiles).total_failures() == 0);
}

TEST_CASE("mirrored hexagons map to reflected states") {
    for (int letter = 0; letter < 7; ++letter) {
        const TileState s = art().hex_state({letter, false}, 0);
        const TileState m = art().hex_state({letter, true}, 0);
        CHECK(m == transform(s, LatticeSym{3, true}));
        CHECK(parity_of(m) == 1 - parity_of(s));
        CHECK(art().hex_state({letter, false}, 4) == rotate(s, 4));
    }
}

TEST_CASE("glugon partition of an inflated patch") {
    const HalfHexPatch big = inflate_symbol("A_L", 4);
    const auto hexes = to_hexagons(big, art().rot180);
    const PolyhexPartition part = glugon_partition(hexes);
    CHECK(part.violations.empty());

    long glugons = 0, walls = 0, clusters = 0;
    std::set<HexCoord> covered;
    for (const Polyhex& ph : part.polyhexes) {
        if (ph.kind == PolyhexKind::Glugon) {
            CHECK(ph.members.size() == 3);
            ++glugons;
        } else if (ph.kind == PolyhexKind::CTile) {
            CHECK(ph.members.size() == 1);
            ++walls;
        } else {
            CHECK(ph.members.size() == 7);
            ++clusters;
        }
        for (const HexCoord& m : ph.members) CHECK(covered.insert(m).second);
    }
    CHECK(glugons > 0);
    CHECK(walls > 0);
    CHECK(clusters > 0);

    // Interior cells are all covered.
    for (const auto& [p, h] : hexes) {
        bool interior = true;
        for (int k = 0; k < 6; ++k)
            if (!hexes.count(neighbor(p, k))) interior = false;
        if (interior) CHECK(covered.count(p));
    }
}

TEST_CASE("an A tile forced against a D tile breaks the glugon lemma") {
    // A(0) expects Gbar at its edge-1 neighbor; put a D hexagon there.
    std::map<HexCoord, PlacedHex> hexes;
    hexes[{0, 0}] = {{0, false}, 0};            // A
    hexes[neighbor({0, 0}, 1)] = {{3, false}, 0};  // D in the Gbar slot
    hexes[neighbor({0, 0}, 2)] = {{1, false}, 4};  // B where it belongs
    const PolyhexPartition part = glugon_partition(hexes);
    REQUIRE(!part.violations.empty());
    CHECK(part.violations.front().cell == HexCoord{0, 0});
}

TEST_CASE("no ambiguous composition over random valid sub-patches") {
    const HalfHexPatch big = inflate_symbol("A_L", 5);
    std::vector<HalfHexCell> cells;
    for (const auto& [key, cell] : big.cells()) cells.push_back(cell);

    uint32_t rng = 12345;
    const auto rnd = [&rng](int n) {
        rng ^= rng << 13;
        rng ^= rng >> 17;
        rng ^= rng << 5;
        return int(rng % uint32_t(n));
    };
    for (int trial = 0; trial < 1000; ++trial) {
        const HalfHexCell& anchor = cells[size_t(rnd(int(cells.size())))];
        const int radius = 2 + rnd(4);
        HalfHexPatch sub;
        for (const auto& [key, cell] : big.cells())
            if (hex_distance(cell.hex, anchor.hex) <= radius) sub.add(cell);
        CHECK_NOTHROW((void)compose_unique(sub));
    }
}
