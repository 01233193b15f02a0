#pragma once

#include <cstdint>
#include <map>
#include <set>

#include "hexweave/artifact.hpp"
#include "hexweave/patch.hpp"
#include "hexweave/rules.hpp"

namespace hexweave {

// Q(n) = GCD(2^n, n) = the 2-part of n, for n >= 1. Q(0) is a symbolic
// infinity handled by the spoke cases below.
uint64_t q2part(uint64_t n);

// Level of the hierarchical honeycomb that fixes the tile at p: 1 plus the
// 2-adic valuation of gcd(|a|, |b|); the designated central hexagon (p = 0)
// is outside all levels.
struct Level {
    bool central = false;
    int level = 0;
};
Level level_of(HexCoord p);

// Unique decomposition p = i*e_n + j*e_m with m the cyclic predecessor of n
// (frame 1: (e1,e3), frame 2: (e2,e1), frame 3: (e3,e2)) and equal 2-adic
// valuations of |i| and |j|.
struct FrameDecomp {
    int frame = 0;  // 1..3
    int64_t i = 0;
    int64_t j = 0;
};
FrameDecomp frame_of(HexCoord p);  // throws std::domain_error for p = 0

// Black-stripe and red-blue parities of an off-spoke frame point,
// Eqs. floor(i / Q(|i-j|)) and floor(i / Q(|i+j|)) mod 2, floor toward -inf.
int pbs(int64_t i, int64_t j);  // requires i != j
int prb(int64_t i, int64_t j);  // requires i != -j

// Published spoke vectors: S on the black-stripe spokes at angles n*60,
// s (two choices) on the red-blue spokes at n*60 + 30, n = 1..6. The
// artifact stores their translation into this frame (see spoke_bs/spoke_rb);
// tests pin the correspondence.
extern const int kSpokeS[6];
extern const int kSpokeS1[6];
extern const int kSpokeS2[6];

struct ChtConfig {
    int s_choice = 1;  // 1 or 2
    TileState central;
    // Per-ray spoke constants for this choice, copied from the artifact.
    uint8_t spoke_bs[6]{};
    uint8_t spoke_rb[6]{};
};
// Default configuration: the requested published s choice with its derived
// central state (rotation 0).
ChtConfig default_config(const DecArtifact& art, int s_choice = 1);
// Same spoke tables with an overridden central state (parity must agree).
ChtConfig config_with_central(const DecArtifact& art, int s_choice, TileState central);

struct SpokeInfo {
    enum Kind : uint8_t { Off, BlackStripe, RedBlue } kind = Off;
    int ray = 0;     // 1..6, paper indexing by angle
    int64_t d = 0;   // nonnegative arc distance along the ray
};
SpokeInfo spoke_of(const FrameDecomp& f);

// Frame and the two parity bits of any noncentral cell; spokes use the
// published constants with the ray re-parameterized by arc distance.
struct CellBits {
    int frame;
    int bs;
    int rb;
};
CellBits cell_bits(HexCoord p, const ChtConfig& cfg);

// Overall parity (Boolean sum of the two bits); the center takes the parity
// of the configured central state.
int parity_at(HexCoord p, const ChtConfig& cfg);

TileState cht_state(const DecArtifact& art, HexCoord p, const ChtConfig& cfg);

// Hexagonal disk of the given radius (3r(r+1)+1 cells).
Patch build_patch(const DecArtifact& art, int radius, const ChtConfig& cfg);
// Rhombus m x n centered on the origin.
Patch build_rhombus(const DecArtifact& art, int m, int n, const ChtConfig& cfg);

// Cell counts per level; key 0 holds the central cell.
std::map<int, long> level_census(const Patch& patch);

// Vertices where all three incident tiles contribute their corner arcs.
std::set<VertexId> small_ring_vertices(const DecTable& dec, const Patch& patch);

// Census of closed black-stripe loops, keyed by chord count (3 * 2^k), plus
// the number of open chains cut by the patch boundary.
struct LoopCensus {
    std::map<long, long> closed;  // chord count -> loops
    long open_chains = 0;
};
LoopCensus stripe_loops(const DecTable& dec, const Patch& patch);

}  // namespace hexweave
