#include <doctest.h>

#include "hexweave/artifact.hpp"
#include "hexweave/cht.hpp"
#include "hexweave/rules.hpp"

using namespace hexweave;

namespace {
const DecArtifact& art() { return DecArtifact::embedded_default(); }
const DecTable& table() {
    static DecTable t = art().table();
    return t;
}
}  // namespace

TEST_CASE("R1 over all state pairs matches the crossing-bit definition") {
    // Between a tile and its direction-0 neighbor, stripes are continuous
    // exactly when the two crossing bits on the shared edge disagree
    // (local corner indices reverse across an edge).
    for (int i = 0; i < kNumStates; ++i) {
        for (int j = 0; j < kNumStates; ++j) {
            const TileState s = state_from_index(i), t = state_from_index(j);
            Patch patch;
            patch.set({0, 0}, s);
            patch.set({1, 0}, t);
            const bool expect =
                table().of(s).edge_bit[0] != table().of(t).edge_bit[3];
            CHECK(check_r1(table(), patch, {0, 0}, 0) ==
                  (expect ? CheckResult::Pass : CheckResult::Fail));
            // Anchor symmetry: the verdict is the same from either side.
            CHECK(check_r1(table(), patch, {1, 0}, 3) ==
                  check_r1(table(), patch, {0, 0}, 0));
        }
    }
}

TEST_CASE("boundary edges are unchecked") {
    Patch patch;
    patch.set({0, 0}, {0, Chirality::R});
    CHECK(check_r1(table(), patch, {0, 0}, 0) == CheckResult::Unchecked);
    CHECK(check_r2(table(), patch, {0, 0}, 0) == CheckResult::Unchecked);
    CHECK(check_r3(table(), patch, canonical_vertex({0, 0}, 0)) == CheckResult::Unchecked);
}

TEST_CASE("R2 reads only the two witnesses") {
    // The witnesses of edge (p, 0) are neighbor(p,1) at corner 5 and
    // neighbor(p,5) at corner 2; the edge's own tiles are irrelevant.
    for (int i = 0; i < kNumStates; ++i) {
        for (int j = 0; j < kNumStates; ++j) {
            const TileState s = state_from_index(i), t = state_from_index(j);
            Patch patch;
            patch.set(neighbor({0, 0}, 1), s);
            patch.set(neighbor({0, 0}, 5), t);
            const bool expect =
                table().vertex_color(s, 5) != table().vertex_color(t, 2);
            CHECK(check_r2(table(), patch, {0, 0}, 0) ==
                  (expect ? CheckResult::Pass : CheckResult::Fail));
        }
    }
}

TEST_CASE("R3 fails exactly on monochrome vertices") {
    const VertexId v = canonical_vertex({0, 0}, 0);
    int monochrome = 0, mixed = 0;
    for (int i = 0; i < kNumStates && (monochrome == 0 || mixed == 0); ++i)
        for (int j = 0; j < kNumStates && (monochrome == 0 || mixed == 0); ++j)
            for (int k = 0; k < kNumStates; ++k) {
                Patch patch;
                const auto inc = vertex_incidences(v);
                patch.set(inc[0].first, state_from_index(i));
                patch.set(inc[1].first, state_from_index(j));
                patch.set(inc[2].first, state_from_index(k));
                const Color c0 = table().vertex_color(state_from_index(i), inc[0].second);
                const Color c1 = table().vertex_color(state_from_index(j), inc[1].second);
                const Color c2 = table().vertex_color(state_from_index(k), inc[2].second);
                const bool mono = c0 == c1 && c1 == c2;
                CHECK(check_r3(table(), patch, v) ==
                      (mono ? CheckResult::Fail : CheckResult::Pass));
                if (mono)
                    ++monochrome;
                else
                    ++mixed;
                if (monochrome && mixed && k > 6) break;
            }
    CHECK(monochrome > 0);
    CHECK(mixed > 0);
}

TEST_CASE("validate on an empty patch is all zero") {
    const RuleReport rep = validate(table(), Patch{});
    CHECK(rep.r1.sites() == 0);
    CHECK(rep.r2.sites() == 0);
    CHECK(rep.r3.sites() == 0);
    CHECK(rep.violations.empty());
}

TEST_CASE("generator and checker round trip, with mutation") {
    Patch patch = build_patch(art(), 16, default_config(art()));
    RuleReport rep = validate(table(), patch);
    CHECK(rep.total_failures() == 0);
    // Exhaustiveness: every edge once, every vertex once.
    CHECK(rep.r1.sites() == rep.edge_sites);
    CHECK(rep.r2.sites() == rep.edge_sites);
    CHECK(rep.r3.sites() == rep.vertex_sites);

    // Re-rotating one interior tile must be caught and located.
    const HexCoord bad{3, 1};
    patch.set(bad, rotate(*patch.at(bad), 1));
    rep = validate(table(), patch);
    CHECK(rep.total_failures() >= 1);
    bool names_site = false;
    for (const Violation& v : rep.violations)
        if (hex_distance(v.cell, bad) <= 2) names_site = true;
    CHECK(names_site);
}

TEST_CASE("validate is deterministic") {
    Patch patch = build_patch(art(), 6, default_config(art()));
    patch.set({1, 1}, rotate(*patch.at({1, 1}), 2));
    const RuleReport a = validate(table(), patch);
    const RuleReport b = validate(table(), patch);
    CHECK(a.violations == b.violations);
}

TEST_CASE("torus site counts follow the quotient") {
    // On a full torus of index N there are exactly 3N edges and 2N vertices.
    for (const TorusBasis& basis :
         {TorusBasis{2, 0, 0, 2}, TorusBasis{3, 1, 0, 2}, TorusBasis{1, 0, 0, 5}}) {
        Patch patch = Patch::torus(basis);
        for (int a = 0; a < basis.c00; ++a)
            for (int b = 0; b < basis.c11; ++b) patch.set({a, b}, {0, Chirality::R});
        const long n = basis.index();
        const RuleReport rep = validate(table(), patch);
        CHECK(rep.edge_sites == 3 * n);
        CHECK(rep.vertex_sites == 2 * n);
        CHECK(rep.r1.unchecked == 0);  // the quotient has no boundary
    }
}

TEST_CASE("hermite form reduction") {
    const TorusBasis b = hermite_form({3, 1}, {1, 2});
    CHECK(b.index() == 5);
    CHECK(b.c10 == 0);
    CHECK(b.c00 > 0);
    CHECK(b.c11 > 0);
    CHECK(b.c01 >= 0);
    CHECK(b.c01 < b.c00);
    CHECK_THROWS(hermite_form({2, 1}, {4, 2}));
    // Reduction is sane: reducing any lattice point of the sublattice is 0.
    const HexCoord g1{b.c00, 0}, g2{b.c01, b.c11};
    CHECK(b.reduce(g1) == HexCoord{0, 0});
    CHECK(b.reduce(g2) == HexCoord{0, 0});
    CHECK(b.reduce(g1 * 3 + g2 * -2) == HexCoord{0, 0});
}
