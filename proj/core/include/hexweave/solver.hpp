#pragma once

#include <functional>
#include <optional>

#include "hexweave/cht.hpp"
#include "hexweave/rules.hpp"

namespace hexweave {

using DomainMask = uint16_t;  // bit per TileState index
inline constexpr DomainMask kFullDomain = 0x0FFF;

// Finite constraint problem over tile-state domains: a planar cell set or a
// full torus quotient, with the rule set compiled to binary/ternary
// constraints, plus optional pins, domain restrictions and ring conditions.
struct Problem {
    std::vector<HexCoord> region;
    std::optional<TorusBasis> torus;
    RuleSet rules{true, true, false};
    std::vector<std::pair<HexCoord, TileState>> pins;
    std::vector<std::pair<HexCoord, DomainMask>> restrictions;
    std::vector<VertexId> forbid_rings;   // no small ring at these vertices
    bool forbid_rings_everywhere = false; // no small ring at any full vertex

    static Problem planar_disk(int radius);
    static Problem full_torus(TorusBasis basis);
};

// States whose corner arcs hug the given local corner.
DomainMask arc_mask(const DecTable& dec, int corner);
// Restricts the three cells around a vertex to ring-forming states.
void require_ring(const DecTable& dec, Problem& prob, VertexId v);

struct PropagationResult {
    bool contradiction = false;
    std::map<HexCoord, DomainMask> domains;
};

// Largest arc-consistent fixpoint of the domains (generalized consistency
// for the ternary vertex constraints). Order-independent.
PropagationResult propagate(const DecTable& dec, const Problem& prob);

struct SearchOutcome {
    bool unsat = false;            // search space exhausted, no solution
    bool truncated = false;        // solution limit reached
    bool budget_exhausted = false; // node budget reached: inconclusive
    long nodes = 0;
    long solution_count = 0;
    std::vector<std::map<HexCoord, TileState>> solutions;  // empty when a callback is given
};

// Exhaustive backtracking with propagation. Solutions appear in
// deterministic lexicographic cell/state order (static spiral variable
// order, state-index value order). limit = 0 means unlimited. When a
// callback is given, solutions are streamed to it instead of stored;
// returning false from it stops the search.
SearchOutcome enumerate(const DecTable& dec, const Problem& prob, long limit,
                        long node_budget = 0,
                        const std::function<bool(const std::map<HexCoord, TileState>&)>&
                            on_solution = nullptr);

struct BasisReport {
    TorusBasis basis;
    enum class Verdict : uint8_t { Unsatisfiable, Satisfiable, Inconclusive } verdict;
    long nodes = 0;
    double millis = 0.0;
    std::optional<std::map<HexCoord, TileState>> counterexample;
};

// All translation sublattices of index <= max_area (Hermite-form bases,
// deduplicated under the lattice point symmetry), each refuted under
// {R1, R2} by exhaustive search. Any satisfying assignment is returned as a
// counterexample. Outcomes are independent of the worker count.
std::vector<BasisReport> refute_torus(const DecTable& dec, int max_area,
                                      long node_budget = 100000000, int jobs = 1);

std::vector<TorusBasis> sublattices_up_to(int max_area);

struct RingForcingReport {
    bool ringfree_unsat = false;       // (a) no-ring radius-3 disk impossible
    long ringfree_nodes = 0;
    bool opposite_unsat = false;       // (b) ring pinned, opposite ring absent: impossible
    long opposite_nodes = 0;
    long solutions_checked = 0;        // (b) enumerated completions
    bool opposite_in_all = false;      // every enumerated completion has the opposite ring
};

// Exhaustive checks of the ring-forcing arguments on a radius-3 disk.
RingForcingReport verify_ring_forcing(const DecTable& dec, long enum_limit = 500);

struct DefectReport {
    std::array<TileState, 3> seed{};   // tiles around the monochrome vertex
    bool determined = false;           // all completions agree on the inner disk
    long solutions = 0;
    long nodes = 0;
    std::map<HexCoord, TileState> inner;  // the forced inner-disk assignment
    bool control_multiple = false;     // without the seed, inner completions differ
};

// Grows the three-tile monochrome-vertex defect on a disk of the given
// radius and checks that the inner disk (radius - 2) is fully determined.
DefectReport grow_defect(const DecTable& dec, int radius);

struct UniformityReport {
    long inner_configs = 0;     // distinct radius-r configurations, inner half
    long min_occurrences = 0;   // over the whole patch
    bool pass = false;
};

// Every radius-r configuration (up to congruence) seen in the inner half of
// the patch must occur at least min_count times in the whole patch.
UniformityReport uniformity_check(const Patch& patch, int r, long min_count);

}  // namespace hexweave
