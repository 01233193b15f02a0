#pragma once

#include <map>
#include <vector>

#include "hexweave/cht.hpp"

namespace hexweave {

// Pointwise parity (mirror-image class) of a patch.
struct ParityField {
    std::map<HexCoord, uint8_t> bits;

    bool contains(HexCoord p) const { return bits.count(p) != 0; }
    int at(HexCoord p) const { return bits.at(p); }
};

ParityField parity_field(const Patch& patch);

// Maximal connected components of constant parity (edge adjacency). A
// component is interior when every neighbor of each member is present.
struct Island {
    int parity = 0;
    bool interior = false;
    std::vector<HexCoord> cells;  // sorted
};

struct IslandCensus {
    std::vector<Island> islands;  // sorted by (size, first cell)

    long count_interior_of_size(size_t n) const;
};

IslandCensus islands(const ParityField& field);

// Parity sequence along one of the twelve rays from the center, at arc
// distances 1..length. Rays are indexed by angle: ray k points at 30*k
// degrees (even k: black-stripe spokes, odd k: red-blue spokes).
std::vector<uint8_t> spoke_sequence(const ChtConfig& cfg, int ray_index, int length);

// Step vector of ray k (unit lattice step for even k, next-nearest step for
// odd k).
HexCoord ray_step(int ray_index);

// One-third sublattice extraction: the cells of one next-nearest-neighbor
// sublattice class, enlarged threefold, with purple marks copied from the
// source vertex colors. Purple continuity across a gap reproduces the R2
// verdict of the source edge between the two witnesses.
struct PeeCell {
    HexCoord src;
    std::array<Color, 6> mark;  // per corner direction
};

struct PeeContinuitySite {
    HexCoord cell;   // pee cell
    int corner;      // direction of the facing neighbor
    EdgeId src_edge; // source edge between the witnesses
    CheckResult verdict;
};

struct PeePatch {
    int sublattice = 1;  // 1..3
    std::vector<PeeCell> cells;
    std::vector<HexCoord> gap_fillers;  // source cells outside the sublattice
    std::vector<PeeContinuitySite> sites;
};

PeePatch extract_pee(const DecTable& dec, const Patch& patch, int sublattice);

// Demonstration that the three extractions differ as tilings while deriving
// from one source. Illustration only.
struct PeeDemo {
    std::array<PeePatch, 3> extractions;
    bool pairwise_distinct = false;
    bool all_continuous = false;
    std::string note;
};

PeeDemo same_pattern_different_pee(const DecTable& dec, const Patch& patch);

}  // namespace hexweave
