#pragma once

#include <cstdint>
#include <string>

#include "hexweave/decoration.hpp"
#include "hexweave/halfhex.hpp"

namespace hexweave {

uint64_t fnv1a64(const std::string& data);

// The derived decoration artifact: everything figure-bound, pinned by the
// self-derive search and validated on load.
//   base       decoration of state (0, R); the other 11 follow by symmetry.
//   comp       composition table (frame, black-stripe parity, red-blue
//              parity) -> TileState, used by the closed-form generator.
//   central    central-hexagon state per published spoke vector choice.
//   hex_base   hexagon letter (A..G, then barred) -> TileState at orient 0.
//   rot180     half-hex symbol identification under 180-degree rotation.
struct DecArtifact {
    Decoration base;
    TileState comp[3][2][2]{};
    TileState central[2]{};
    // Spoke completion per published choice: constant black-stripe bit on the
    // six lattice-axis rays (index by angle, ray m at 60m degrees) and
    // constant red-blue bit on the six rays at 60m + 30 degrees. The other
    // bit of a spoke cell follows the paperfolding term in the frame
    // coordinate.
    uint8_t spoke_bs[2][6]{};
    uint8_t spoke_rb[2][6]{};
    TileState hex_base[14]{};
    std::array<uint8_t, 28> rot180{};
    uint64_t digest = 0;

    const TileState& comp_entry(int frame, int pbs, int prb) const {
        return comp[frame - 1][pbs][prb];
    }
    TileState hex_state(HexType t, int orient = 0) const {
        return rotate(hex_base[t.letter * 2 + (t.barred ? 1 : 0)], orient);
    }

    DecTable table() const { return DecTable(base); }

    // Canonical text form (digest line included).
    std::string to_text() const;
    // Parses and validates; throws std::runtime_error on malformed input,
    // failed decoration checks or digest mismatch.
    static DecArtifact from_text(const std::string& text);

    // Structural checks shared by the loader and the derive search; empty
    // string when fine.
    std::string check() const;

    // The artifact shipped with the library (produced by self-derive).
    static const DecArtifact& embedded_default();

    // Resolution order: explicit path argument, HEXWEAVE_DEC environment
    // variable, embedded default.
    static DecArtifact load(const std::string& path_or_empty);
};

}  // namespace hexweave
