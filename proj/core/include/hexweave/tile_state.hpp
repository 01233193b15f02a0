#pragma once

#include <array>
#include <cstdint>

#include "hexweave/hex.hpp"

namespace hexweave {

enum class Chirality : uint8_t { R = 0, L = 1 };

// One of the 12 states of the single prototile: 6 rotations x 2 mirror images.
// State (rot, chi) denotes the decorated tile obtained from the base tile
// (0, R) by first mirroring in the x axis when chi == L, then rotating by
// 60*rot degrees counterclockwise.
struct TileState {
    int rot = 0;  // 0..5
    Chirality chi = Chirality::R;

    friend bool operator==(const TileState&, const TileState&) = default;
    friend auto operator<=>(const TileState&, const TileState&) = default;
};

inline int state_index(TileState s) { return s.rot + (s.chi == Chirality::L ? 6 : 0); }
inline TileState state_from_index(int i) {
    return {i % 6, i < 6 ? Chirality::R : Chirality::L};
}
inline constexpr int kNumStates = 12;

// Group action of the dihedral symmetry g on tile states. With T(r, R) = R^r
// and T(r, L) = R^r M (M the x-axis mirror), left-composition gives:
//   rotate:  (r, c) -> (r+1, c)
//   mirror:  (r, c) -> (-r mod 6, flip c)
inline TileState transform(TileState s, LatticeSym g) {
    if (g.mirror) {
        s.rot = (6 - s.rot) % 6;
        s.chi = (s.chi == Chirality::R) ? Chirality::L : Chirality::R;
    }
    s.rot = (s.rot + g.rot) % 6;
    return s;
}

inline TileState rotate(TileState s, int k = 1) {
    return transform(s, LatticeSym{((k % 6) + 6) % 6, false});
}
inline TileState reflect(TileState s) { return transform(s, LatticeSym{0, true}); }

// Parity distinguishes the two mirror-image classes; 0 for the R class.
// Rotation-invariant, flipped by reflection.
inline int parity_of(TileState s) { return s.chi == Chirality::L ? 1 : 0; }

}  // namespace hexweave
