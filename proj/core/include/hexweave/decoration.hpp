#pragma once

#include <array>
#include <string>

#include "hexweave/tile_state.hpp"

namespace hexweave {

enum class Color : uint8_t { Red = 0, Blue = 1 };
inline Color flip(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

enum class ChordKind : uint8_t { LongStripe, CornerArc };

// Markings of one tile state.
//   edge_bit[k]    which endpoint of edge k the black stripe crosses nearest:
//                  0 = near corner k, 1 = near corner k+1.
//   chord_of[k]    the edge paired with edge k by the black decoration; the
//                  three chords form a perfect matching on the six edges.
//   kind_of[k]     kind of the chord through edge k.
//   vertex_color[v] color of the half-diameter terminating at corner v.
struct Decoration {
    std::array<uint8_t, 6> edge_bit{};
    std::array<uint8_t, 6> chord_of{};
    std::array<ChordKind, 6> kind_of{};
    std::array<Color, 6> vertex_color{};

    friend bool operator==(const Decoration&, const Decoration&) = default;
};

// Geometric transform of a decoration. Under the mirror, red and blue are
// interchanged as part of the reflection operation.
Decoration transform(const Decoration& d, LatticeSym g);

// Validity of a single decoration:
//  - chord_of is a perfect matching covering all six edges;
//  - exactly one chord is a long stripe (opposite edges) and the other two
//    are corner arcs (adjacent edges, crossings hugging the shared corner);
//  - opposite-vertex pairs carry exactly one (Red,Red), one (Blue,Blue) and
//    one mixed pair.
// Returns an empty string when valid, else a description of the violation.
std::string check_decoration(const Decoration& d);

// True when the chord through edges (k, chord_of[k]) is a corner arc sitting
// at corner v (its two crossings hug corner v).
bool arc_at_corner(const Decoration& d, int v);

// Decorations of all 12 states, derived from a base decoration for state
// (0, R) by equivariance: dec(s) = transform applied to the base.
class DecTable {
  public:
    DecTable() = default;
    explicit DecTable(const Decoration& base);

    const Decoration& of(TileState s) const { return dec_[state_index(s)]; }
    const Decoration& base() const { return dec_[0]; }

    // Validates all 12 states; empty string when fine.
    std::string check() const;

    // Per-state fast lookups.
    int edge_bit(TileState s, int k) const { return dec_[state_index(s)].edge_bit[k]; }
    Color vertex_color(TileState s, int v) const {
        return dec_[state_index(s)].vertex_color[v];
    }
    bool arc_at(TileState s, int v) const { return arc_corner_[state_index(s)][v]; }

  private:
    std::array<Decoration, kNumStates> dec_{};
    std::array<std::array<bool, 6>, kNumStates> arc_corner_{};
};

}  // namespace hexweave
