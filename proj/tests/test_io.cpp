#include <doctest.h>

#include <cstdlib>

#include "hexweave/artifact.hpp"
#include "hexweave/cht.hpp"
#include "hexweave/io.hpp"
#include "hexweave/svg.hpp"

using namespace hexweave;

namespace {
const DecArtifact& art() { return DecArtifact::embedded_default(); }

uint32_t rng_state = 0xdecafbad;
int rnd(int n) {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 17;
    rng_state ^= rng_state << 5;
    return int(rng_state % uint32_t(n));
}
}  // namespace

TEST_CASE("patch files round trip") {
    for (int trial = 0; trial < 20; ++trial) {
        Patch patch;
        if (trial % 2) patch = Patch::torus(TorusBasis{1 + rnd(4), 0, 0, 1 + rnd(4)});
        const int n = 1 + rnd(40);
        for (int i = 0; i < n; ++i)
            patch.set({rnd(21) - 10, rnd(21) - 10}, state_from_index(rnd(12)));
        const std::string text = save_patch(patch);
        const Patch back = load_patch(text);
        CHECK(back.topology() == patch.topology());
        CHECK(back.cells() == patch.cells());
        CHECK(save_patch(back) == text);
    }
}

TEST_CASE("unknown headers and malformed lines are rejected with line numbers") {
    CHECK_THROWS_WITH_AS((void)load_patch("hexweave-patch/2\ntopology planar\n"),
                         doctest::Contains("line 1"), std::runtime_error);
    try {
        (void)load_patch("hexweave-patch/1\ntopology planar\ncell 0 0 9 R\n");
        FAIL("expected a throw");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS((void)load_halfhex("hexweave-hh/2\n"));
    CHECK_THROWS((void)load_halfhex("hexweave-hh/1\ncell 0 0 X_L 0\n"));
}

TEST_CASE("half-hex files round trip") {
    HalfHexPatch patch;
    patch.add({{0, 0}, {0, Side::L, false}, 0});
    patch.add({{0, 0}, {0, Side::R, false}, 0});
    patch.add({{2, 1}, {4, Side::R, true}, 3});
    const std::string text = save_halfhex(patch);
    const HalfHexPatch back = load_halfhex(text);
    CHECK(back.cells() == patch.cells());
    CHECK(save_halfhex(back) == text);
}

TEST_CASE("artifact serialization, digest and environment override") {
    const std::string text = art().to_text();
    const DecArtifact again = DecArtifact::from_text(text);
    CHECK(again.to_text() == text);
    CHECK(again.digest == art().digest);

    // Digest mismatch is caught.
    std::string corrupted = text;
    const auto pos = corrupted.find("colors");
    corrupted[pos + 7] = corrupted[pos + 7] == 'R' ? 'B' : 'R';
    CHECK_THROWS((void)DecArtifact::from_text(corrupted));

    // HEXWEAVE_DEC selects the artifact file.
    const std::string path = "/tmp/hexweave_test_artifact.dec";
    write_file(path, text);
    setenv("HEXWEAVE_DEC", path.c_str(), 1);
    const DecArtifact from_env = DecArtifact::load("");
    CHECK(from_env.digest == art().digest);
    unsetenv("HEXWEAVE_DEC");
    CHECK_THROWS(DecArtifact::load("/tmp/definitely-missing-artifact.dec"));
}

TEST_CASE("parity bitmap format") {
    std::map<HexCoord, uint8_t> bits;
    bits[{0, 0}] = 1;
    bits[{1, 0}] = 0;
    bits[{1, 1}] = 1;
    const std::string text = save_parity_bitmap(bits);
    CHECK(text == "hexweave-parity/1 rows=2 cols=2 origin=(0,0) row=b col=a\n10\n.1\n");
}

TEST_CASE("svg output is deterministic and layer-complete") {
    const Patch patch = build_patch(art(), 3, default_config(art()));
    const DecTable table = art().table();
    const std::string a =
        render_svg(table, patch, {"tiles", "stripes", "diameters", "rings"});
    const std::string b =
        render_svg(table, patch, {"tiles", "stripes", "diameters", "rings"});
    CHECK(a == b);
    CHECK(a.find("<polygon") != std::string::npos);
    CHECK(a.find("<line") != std::string::npos);
    CHECK(a.find("<path") != std::string::npos);    // corner arcs
    CHECK(a.find("<circle") != std::string::npos);  // small rings

    const std::string empty = render_svg(table, Patch{}, {"tiles"});
    CHECK(empty.rfind("<svg", 0) == 0);
    CHECK(empty.find("</svg>") != std::string::npos);

    CHECK(is_known_layer("parity"));
    CHECK(!is_known_layer("bogus"));
}
