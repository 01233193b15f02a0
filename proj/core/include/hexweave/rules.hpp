#pragma once

#include <set>
#include <vector>

#include "hexweave/decoration.hpp"
#include "hexweave/patch.hpp"

namespace hexweave {

enum class CheckResult : uint8_t { Pass, Fail, Unchecked };

struct RuleSet {
    bool r1 = true;
    bool r2 = true;
    bool r3 = true;
};

// R1: black stripes continuous across the shared edge (p, k). Local vertex
// indices reverse across an edge, so the two crossing bits must differ.
CheckResult check_r1(const DecTable& dec, const Patch& patch, HexCoord p, int k);

// R2: the two tiles beyond the endpoints of edge (p, k) whose diameters are
// collinear with it must show different colors at the near endpoints.
// Witnesses: neighbor(p, k+1) at corner k+5 and neighbor(p, k-1) at corner k+2.
CheckResult check_r2(const DecTable& dec, const Patch& patch, HexCoord p, int k);

// R3: the three half-diameters meeting at a vertex must not all agree.
CheckResult check_r3(const DecTable& dec, const Patch& patch, VertexId v);

struct Violation {
    char rule;       // '1', '2' or '3'
    bool is_vertex;  // edge site otherwise
    HexCoord cell;
    int index;  // edge k (0..2) or corner (0..1), canonical

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct RuleCounts {
    long pass = 0, fail = 0, unchecked = 0;
    long sites() const { return pass + fail + unchecked; }
};

struct RuleReport {
    RuleCounts r1, r2, r3;
    std::vector<Violation> violations;
    long edge_sites = 0;
    long vertex_sites = 0;

    long total_failures() const { return r1.fail + r2.fail + r3.fail; }
};

// Exhaustive sweep over all edges and vertices of the patch (on a torus,
// over the quotient). Each site is visited exactly once, in deterministic
// order.
RuleReport validate(const DecTable& dec, const Patch& patch, RuleSet rules = {});

// Deterministic site enumerations (exposed for analyses and tests).
std::set<EdgeId> edge_sites(const Patch& patch);
std::set<VertexId> vertex_sites(const Patch& patch);

}  // namespace hexweave
