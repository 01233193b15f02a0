#pragma once

#include <string>

#include "hexweave/artifact.hpp"

namespace hexweave {

struct DeriveOptions {
    int final_radius = 16;  // radius of the last full-validation gate
    bool corrupt = false;   // deliberately break one constraint (control run)
    bool verbose = false;
};

struct DeriveResult {
    bool ok = false;
    DecArtifact artifact;
    long bases_scanned = 0;      // base decorations enumerated
    long candidates_tested = 0;  // (base, table) pairs validated
    long survivors = 0;          // combos that passed every gate
    int orbits = 0;              // survivor classes under the declared symmetry
    std::string message;
};

// Exhaustive search over base decorations (edge bits x perfect matchings x
// vertex colorings) and equivariant composition tables for those making the
// closed-form generator pass R1/R2/R3, the spoke completion consistent, and
// the substitution system validate end to end. The shipped artifact is the
// canonical survivor: central state (0, R) for the first spoke choice,
// lexicographically smallest text among the remaining relabelings.
DeriveResult self_derive(const DeriveOptions& opt = {});

}  // namespace hexweave
