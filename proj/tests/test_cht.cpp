#include <doctest.h>

#include <numeric>

#include "hexweave/artifact.hpp"
#include "hexweave/cht.hpp"

using namespace hexweave;

namespace {
const DecArtifact& art() { return DecArtifact::embedded_default(); }

// Independent frame scan: count decompositions satisfying the valuation
// condition by checking all three bases directly.
int frame_scan(HexCoord p, FrameDecomp* out = nullptr) {
    const auto vf = [](int64_t x) {
        int v = 0;
        while (x && !(x & 1)) {
            x >>= 1;
            ++v;
        }
        return x == 0 ? -1 : v;
    };
    const int64_t cand[3][2] = {
        {p.a - p.b, -p.b}, {p.b, p.a}, {-p.a, p.b - p.a}};
    int hits = 0;
    for (int n = 0; n < 3; ++n) {
        const int64_t i = cand[n][0], j = cand[n][1];
        if (i && j && vf(i < 0 ? -i : i) == vf(j < 0 ? -j : j)) {
            ++hits;
            if (out) *out = {n + 1, i, j};
        }
    }
    return hits;
}
}  // namespace

TEST_CASE("Q is the 2-part") {
    CHECK(q2part(1) == 1);
    CHECK(q2part(12) == 4);
    CHECK(q2part(8) == 8);
    CHECK_THROWS(q2part(0));
    for (uint64_t k = 1; k <= 1000; ++k) {
        CHECK((q2part(k) == 1) == (k % 2 == 1));
        CHECK(k % q2part(k) == 0);
        CHECK((k / q2part(k)) % 2 == 1);
    }
}

TEST_CASE("levels") {
    CHECK(level_of({0, 0}).central);
    CHECK(level_of({1, 0}).level == 1);
    CHECK(level_of({2, 2}).level == 2);
    CHECK(level_of({4, 0}).level == 3);
}

TEST_CASE("frame decomposition: published examples") {
    const FrameDecomp f1 = frame_of({1, 0});
    CHECK(f1.frame == 3);
    CHECK(f1.i == -1);
    CHECK(f1.j == -1);
    const FrameDecomp f2 = frame_of({3, 1});
    CHECK(f2.frame == 2);
    CHECK(f2.i == 1);
    CHECK(f2.j == 3);
    CHECK_THROWS(frame_of({0, 0}));
}

TEST_CASE("frame decomposition is unique for |p| <= 64 (exhaustive oracle)") {
    for (int a = -64; a <= 64; ++a) {
        for (int b = -64; b <= 64; ++b) {
            if (a == 0 && b == 0) continue;
            if (hex_norm({a, b}) > 64) continue;
            FrameDecomp scan;
            REQUIRE(frame_scan({a, b}, &scan) == 1);
            const FrameDecomp f = frame_of({a, b});
            CHECK(f.frame == scan.frame);
            CHECK(f.i == scan.i);
            CHECK(f.j == scan.j);
        }
    }
}

TEST_CASE("parity formulas: hand-evaluated anchors") {
    CHECK(pbs(1, 3) == 0);
    CHECK(prb(1, 3) == 0);
    CHECK(pbs(3, 1) == 1);
    CHECK(prb(3, 1) == 0);
    CHECK_THROWS(pbs(2, 2));
    CHECK_THROWS(prb(2, -2));

    const ChtConfig cfg = default_config(art());
    CHECK(parity_at({3, 1}, cfg) == 0);
    CHECK(parity_at({1, 3}, cfg) == 1);
    CHECK(parity_at({0, 0}, cfg) == parity_of(cfg.central));
}

TEST_CASE("rows of fixed difference are runs of Q(h)-1 tiles between gaps") {
    // Frame-2 cells along a row j - i = h: in-frame positions are exactly
    // the non-multiples of Q(h), and the stripe parity alternates per run.
    for (const int h : {2, 4, 8}) {
        const int64_t q = int64_t(q2part(uint64_t(h)));
        int last_run = -1;
        for (int64_t i = 1; i < 4 * q; ++i) {
            const int64_t j = i + h;
            const bool in_frame = frame_scan({int(j), int(i)}) == 1 &&
                                  frame_of({int(j), int(i)}).frame == 2;
            CHECK(in_frame == (i % q != 0));
            if (i % q != 0) {
                const int run = int(i / q);
                const int p = pbs(i, j);
                CHECK(p == (run & 1));
                last_run = run;
            }
        }
        CHECK(last_run >= 2);
    }
}

TEST_CASE("closed form is self-similar under doubling") {
    for (int choice : {1, 2}) {
        const ChtConfig cfg = default_config(art(), choice);
        for (int a = -20; a <= 20; ++a)
            for (int b = -20; b <= 20; ++b) {
                if (a == 0 && b == 0) continue;
                CHECK(cht_state(art(), {a, b}, cfg) ==
                      cht_state(art(), {2 * a, 2 * b}, cfg));
            }
    }
}

TEST_CASE("off-spoke states are independent of the configuration") {
    const ChtConfig c1 = default_config(art(), 1);
    const ChtConfig c2 = default_config(art(), 2);
    for (int a = -16; a <= 16; ++a)
        for (int b = -16; b <= 16; ++b) {
            if (a == 0 && b == 0) continue;
            if (spoke_of(frame_of({a, b})).kind != SpokeInfo::Off) continue;
            CHECK(cht_state(art(), {a, b}, c1) == cht_state(art(), {a, b}, c2));
        }
}

TEST_CASE("published spoke vectors map onto the artifact tables") {
    // Black-stripe constants match S after the figure-frame rotation; the
    // red-blue constants match the two published s choices likewise.
    const auto wrap = [](int n) { return ((n - 1) % 6 + 6) % 6; };  // 1..6 -> 0..5
    for (int m = 1; m <= 6; ++m) {
        CHECK(art().spoke_bs[0][m - 1] == (kSpokeS[wrap(m + 2)] ^ (m % 2 == 0 ? 1 : 0)));
        CHECK(art().spoke_rb[0][m - 1] == (kSpokeS1[wrap(6 - m)] ^ (m % 2 == 1 ? 1 : 0)));
        CHECK(art().spoke_bs[1][m - 1] == (kSpokeS[wrap(m + 1)] ^ (m % 2 == 0 ? 1 : 0)));
        CHECK(art().spoke_rb[1][m - 1] == (kSpokeS2[wrap(1 - m)] ^ (m % 2 == 1 ? 1 : 0)));
    }
}

TEST_CASE("patch construction and validation") {
    const ChtConfig cfg = default_config(art());
    CHECK(build_patch(art(), 0, cfg).size() == 1);
    Patch p8 = build_patch(art(), 8, cfg);
    CHECK(p8.size() == 217);
    CHECK(validate(art().table(), p8).total_failures() == 0);

    // Deterministic: equal cell-by-cell on rebuild.
    Patch again = build_patch(art(), 8, cfg);
    CHECK(p8.cells() == again.cells());

    Patch rhom = build_rhombus(art(), 9, 7, cfg);
    CHECK(rhom.size() == 63);
    CHECK(rhom.contains({0, 0}));
}

TEST_CASE("every central orientation of matching parity validates") {
    for (int choice : {1, 2}) {
        for (int k = 0; k < 6; ++k) {
            const TileState central = rotate(art().central[choice - 1], k);
            const ChtConfig cfg = config_with_central(art(), choice, central);
            CHECK(validate(art().table(), build_patch(art(), 6, cfg)).total_failures() == 0);
        }
        CHECK_THROWS(config_with_central(art(), choice,
                                         reflect(art().central[choice - 1])));
    }
}

TEST_CASE("level census approaches the geometric fractions") {
    const Patch patch = build_patch(art(), 64, default_config(art()));
    const auto census = level_census(patch);
    const double n = double(patch.size());
    CHECK(std::abs(census.at(1) / n - 0.75) < 0.02);
    CHECK(std::abs(census.at(2) / n - 0.1875) < 0.02);
    CHECK(census.at(0) == 1);  // the central hexagon
    long total = 0;
    for (const auto& [level, count] : census) total += count;
    CHECK(total == long(patch.size()));
}

TEST_CASE("small rings form the level-1 honeycomb") {
    const Patch patch = build_patch(art(), 16, default_config(art()));
    const auto rings = small_ring_vertices(art().table(), patch);
    CHECK(!rings.empty());

    // Independent characterization: rings sit at corner 0 of cells with both
    // coordinates odd and corner 1 of cells with (even, odd) coordinates.
    for (const VertexId& v : rings) {
        const int pa = ((v.cell.a % 2) + 2) % 2, pb = ((v.cell.b % 2) + 2) % 2;
        if (v.corner == 0) {
            CHECK(pa == 1);
            CHECK(pb == 1);
        } else {
            CHECK(pa == 0);
            CHECK(pb == 1);
        }
    }
    // Exhaustive on the interior: every such vertex with all three tiles
    // present is a ring.
    long expected = 0;
    for (const auto& [p, s] : patch.cells()) {
        for (int corner : {0, 1}) {
            const int pa = ((p.a % 2) + 2) % 2, pb = ((p.b % 2) + 2) % 2;
            const bool predicted =
                corner == 0 ? (pa == 1 && pb == 1) : (pa == 0 && pb == 1);
            if (!predicted) continue;
            bool interior = true;
            for (const auto& [cell, c2] : vertex_incidences({p, corner}))
                if (!patch.contains(cell)) interior = false;
            if (interior) ++expected;
        }
    }
    CHECK(long(rings.size()) == expected);

    // A mutation disturbs the ring set near the mutation site.
    Patch mutated = patch;
    mutated.set({2, 1}, rotate(*patch.at({2, 1}), 3));
    CHECK(small_ring_vertices(art().table(), mutated) != rings);

    CHECK(small_ring_vertices(art().table(), Patch{}).empty());
}

TEST_CASE("stripe loops come at doubling scales") {
    const Patch patch = build_patch(art(), 32, default_config(art()));
    const LoopCensus census = stripe_loops(art().table(), patch);
    // Loops of 3*2^k chords at scales 1, 2, 4, 8.
    REQUIRE(census.closed.count(3));
    REQUIRE(census.closed.count(6));
    REQUIRE(census.closed.count(12));
    REQUIRE(census.closed.count(24));
    for (const auto& [size, count] : census.closed) {
        CHECK(size % 3 == 0);
        long scale = size / 3;
        CHECK((scale & (scale - 1)) == 0);  // power of two
    }
    // Counts shrink by roughly a factor of four per scale.
    const double r1 = double(census.closed.at(3)) / double(census.closed.at(6));
    const double r2 = double(census.closed.at(6)) / double(census.closed.at(12));
    CHECK(r1 > 2.5);
    CHECK(r1 < 6.0);
    CHECK(r2 > 2.5);
    CHECK(r2 < 6.0);
    CHECK(census.open_chains > 0);  // boundary cuts

    Patch single;
    single.set({0, 0}, {0, Chirality::R});
    const LoopCensus one = stripe_loops(art().table(), single);
    CHECK(one.closed.empty());
}

TEST_CASE("frame of a tile fixes its long-stripe axis") {
    const Patch patch = build_patch(art(), 12, default_config(art()));
    // All tiles of one frame have parallel long stripes: the long-stripe
    // chord pair is a function of the frame alone.
    int axis_of_frame[4] = {-1, -1, -1, -1};
    for (const auto& [p, s] : patch.cells()) {
        if (p == HexCoord{0, 0}) continue;
        const int frame = frame_of(p).frame;
        const Decoration& d = art().table().of(s);
        int axis = -1;
        for (int k = 0; k < 6; ++k)
            if (d.kind_of[k] == ChordKind::LongStripe) axis = std::min(k, int(d.chord_of[k]));
        if (axis_of_frame[frame] < 0) axis_of_frame[frame] = axis;
        CHECK(axis_of_frame[frame] == axis);
    }
    CHECK(axis_of_frame[1] != axis_of_frame[2]);
    CHECK(axis_of_frame[2] != axis_of_frame[3]);
}
