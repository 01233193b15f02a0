#include "hexweave/rules.hpp"

namespace hexweave {

namespace {
int mod6(int k) { return ((k % 6) + 6) % 6; }
}  // namespace

CheckResult check_r1(const DecTable& dec, const Patch& patch, HexCoord p, int k) {
    k = mod6(k);
    const auto s = patch.at(p);
    const auto t = patch.at(neighbor(p, k));
    if (!s || !t) return CheckResult::Unchecked;
    const int bs = dec.edge_bit(*s, k);
    const int bt = dec.edge_bit(*t, mod6(k + 3));
    return bs != bt ? CheckResult::Pass : CheckResult::Fail;
}

CheckResult check_r2(const DecTable& dec, const Patch& patch, HexCoord p, int k) {
    k = mod6(k);
    const auto a = patch.at(neighbor(p, k + 1));
    const auto b = patch.at(neighbor(p, k - 1));
    if (!a || !b) return CheckResult::Unchecked;
    const Color ca = dec.vertex_color(*a, mod6(k + 5));
    const Color cb = dec.vertex_color(*b, mod6(k + 2));
    return ca != cb ? CheckResult::Pass : CheckResult::Fail;
}

CheckResult check_r3(const DecTable& dec, const Patch& patch, VertexId v) {
    Color c[3];
    int i = 0;
    for (const auto& [cell, corner] : vertex_incidences(v)) {
        const auto s = patch.at(cell);
        if (!s) return CheckResult::Unchecked;
        c[i++] = dec.vertex_color(*s, corner);
    }
    return (c[0] == c[1] && c[1] == c[2]) ? CheckResult::Fail : CheckResult::Pass;
}

std::set<EdgeId> edge_sites(const Patch& patch) {
    std::set<EdgeId> out;
    for (const auto& [p, s] : patch.cells()) {
        for (int k = 0; k < 6; ++k) {
            EdgeId e = canonical_edge(p, k);
            e.cell = patch.canon(e.cell);
            out.insert(e);
        }
    }
    return out;
}

std::set<VertexId> vertex_sites(const Patch& patch) {
    std::set<VertexId> out;
    for (const auto& [p, s] : patch.cells()) {
        for (int v = 0; v < 6; ++v) {
            VertexId id = canonical_vertex(p, v);
            id.cell = patch.canon(id.cell);
            out.insert(id);
        }
    }
    return out;
}

RuleReport validate(const DecTable& dec, const Patch& patch, RuleSet rules) {
    RuleReport rep;
    const auto tally = [&rep](RuleCounts& counts, CheckResult r, Violation v) {
        switch (r) {
            case CheckResult::Pass: ++counts.pass; break;
            case CheckResult::Unchecked: ++counts.unchecked; break;
            case CheckResult::Fail:
                ++counts.fail;
                rep.violations.push_back(v);
                break;
        }
    };

    if (rules.r1 || rules.r2) {
        for (const EdgeId& e : edge_sites(patch)) {
            ++rep.edge_sites;
            if (rules.r1)
                tally(rep.r1, check_r1(dec, patch, e.cell, e.k),
                      {'1', false, e.cell, e.k});
            if (rules.r2)
                tally(rep.r2, check_r2(dec, patch, e.cell, e.k),
                      {'2', false, e.cell, e.k});
        }
    }
    if (rules.r3) {
        for (const VertexId& v : vertex_sites(patch)) {
            ++rep.vertex_sites;
            tally(rep.r3, check_r3(dec, patch, v), {'3', true, v.cell, v.corner});
        }
    }
    return rep;
}

}  // namespace hexweave
