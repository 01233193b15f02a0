#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexweave/hex.hpp"
#include "hexweave/tile_state.hpp"

namespace hexweave {

enum class Side : uint8_t { L = 0, R = 1 };

// One of the 28 oriented half-hexagon prototile symbols: letters A..G, left
// or right half, barred = mirror image. mirror(A_L) = Abar_R.
struct HalfHexSymbol {
    int letter = 0;  // 0..6 for A..G
    Side side = Side::L;
    bool barred = false;

    friend bool operator==(const HalfHexSymbol&, const HalfHexSymbol&) = default;
    friend auto operator<=>(const HalfHexSymbol&, const HalfHexSymbol&) = default;
};

inline constexpr int kNumHalfHexSymbols = 28;
inline int symbol_index(HalfHexSymbol s) {
    return s.letter * 4 + (s.side == Side::R ? 2 : 0) + (s.barred ? 1 : 0);
}
inline HalfHexSymbol symbol_from_index(int i) {
    return {i / 4, (i % 4) >= 2 ? Side::R : Side::L, (i % 2) == 1};
}
inline HalfHexSymbol mirror(HalfHexSymbol s) {
    return {s.letter, s.side == Side::L ? Side::R : Side::L, !s.barred};
}
std::string symbol_name(HalfHexSymbol s);               // e.g. "A_L", "Gb_R"
std::optional<HalfHexSymbol> parse_symbol(const std::string& name);

// A placed half-hexagon. The standard pose (orient 0) of an L symbol is the
// left half of its hexagon cut along the vertical diameter; of an R symbol
// the right half. Orientation rotates the pose by 60*orient degrees about
// the hexagon center, so the tile body points at angle 60*orient (R) or
// 180 + 60*orient (L) and the occupied half is identified by that direction.
struct HalfHexCell {
    HexCoord hex;
    HalfHexSymbol sym;
    int orient = 0;  // 0..5

    friend bool operator==(const HalfHexCell&, const HalfHexCell&) = default;
};

inline int body_dir(const HalfHexCell& c) {
    return ((c.sym.side == Side::L ? 3 : 0) + c.orient) % 6;
}

// Lattice edge carrying short side s (1..6) of a placed cell.
// Standard-pose sides sit on hexagon edges: R: side1=e1, side2=e0, side3=e5;
// L: side4=e4, side5=e3, side6=e2.
int side_edge(const HalfHexCell& c, int side);

// Sparse half-hex patch; at most two cells per hexagon, on complementary
// halves. Keyed by (hexagon, body direction).
class HalfHexPatch {
  public:
    void add(const HalfHexCell& c);
    std::optional<HalfHexCell> at(HexCoord hex, int dir) const;
    std::vector<HalfHexCell> cells_of(HexCoord hex) const;
    const std::map<std::pair<HexCoord, int>, HalfHexCell>& cells() const { return cells_; }
    size_t size() const { return cells_.size(); }

  private:
    std::map<std::pair<HexCoord, int>, HalfHexCell> cells_;
};

// Child slot of the composed (doubled) half-hexagon: the child for short
// side `side` sits at hexagon offset `delta` with orientation offset
// `orient`, and is a left/right-side symbol per `child_side`. The center
// child (a C tile of the same side as the parent) sits at offset 0.
struct ChildSlot {
    int side;
    HexCoord delta;
    int orient;
    Side child_side;
};

// Fixed placement geometry: children tile the doubled half-hexagon exactly
// and carry the published side assignments (sides 6,5,4 around C_L; 1,2,3
// around C_R).
const std::array<ChildSlot, 3>& child_slots(Side parent_side);

// Child symbols around the center C tile, indexed by slot order
// (sides 6,5,4 for left parents, 1,2,3 for right parents).
std::array<HalfHexSymbol, 3> decompose_children(HalfHexSymbol parent);

// The two starred arrangements (and their mirrors): flank triples around a
// C tile that cannot occur in any tiling.
bool is_forbidden_arrangement(HalfHexSymbol center, const std::array<HalfHexSymbol, 3>& flanks);
std::vector<std::pair<HalfHexSymbol, std::array<HalfHexSymbol, 3>>> forbidden_arrangements();

// Replaces every cell by its four children at doubled scale; adds boundary
// completion cells so every touched hexagon forms an allowed small hexagon.
HalfHexPatch inflate(const HalfHexPatch& patch, int steps);
HalfHexPatch decompose_cell(const HalfHexCell& c);

struct ComposeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AmbiguousComposition : ComposeError {
    using ComposeError::ComposeError;
};
struct UnknownArrangement : ComposeError {
    using ComposeError::ComposeError;
};

// Unique composition: every interior C-centered arrangement is matched
// against the tables and replaced by its parent symbol at halved scale.
HalfHexPatch compose_unique(const HalfHexPatch& patch);

struct HexType {
    int letter = 0;
    bool barred = false;

    friend bool operator==(const HexType&, const HexType&) = default;
    friend auto operator<=>(const HexType&, const HexType&) = default;
};

struct PlacedHex {
    HexType type;
    int orient = 0;

    friend bool operator==(const PlacedHex&, const PlacedHex&) = default;
};

struct IllegalPair : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Joins left/right halves into hexagons. A half placed upside down relative
// to its mate is first renamed through the 180-degree symbol identification
// `rot180`. The C_L+E_R and E_L+C_R joins (and mirrors) are rejected.
std::map<HexCoord, PlacedHex> to_hexagons(const HalfHexPatch& patch,
                                          const std::array<uint8_t, 28>& rot180);

enum class PolyhexKind : uint8_t { Glugon, CTile, CCluster };

struct Polyhex {
    PolyhexKind kind;
    std::vector<HexCoord> members;
};

struct PartitionViolation {
    HexCoord cell;
    std::string reason;
};

struct PolyhexPartition {
    std::vector<Polyhex> polyhexes;
    std::vector<PartitionViolation> violations;
    std::vector<HexCoord> skipped_boundary;
};

// Groups a hexagon patch into glugons, wall C tiles and 7-hex C clusters.
// Interior cells that cannot be grouped are reported as violations.
PolyhexPartition glugon_partition(const std::map<HexCoord, PlacedHex>& hexes);

}  // namespace hexweave
