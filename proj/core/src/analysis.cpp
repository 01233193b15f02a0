#include "hexweave/analysis.hpp"

#include <algorithm>
#include <set>

namespace hexweave {

namespace {
int mod6(int k) { return ((k % 6) + 6) % 6; }
}  // namespace

ParityField parity_field(const Patch& patch) {
    ParityField field;
    for (const auto& [p, s] : patch.cells()) field.bits[p] = uint8_t(parity_of(s));
    return field;
}

long IslandCensus::count_interior_of_size(size_t n) const {
    long count = 0;
    for (const Island& island : islands)
        if (island.interior && island.cells.size() == n) ++count;
    return count;
}

IslandCensus islands(const ParityField& field) {
    IslandCensus census;
    std::set<HexCoord> seen;
    for (const auto& [start, bit] : field.bits) {
        if (seen.count(start)) continue;
        Island island;
        island.parity = bit;
        island.interior = true;
        std::vector<HexCoord> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            const HexCoord p = stack.back();
            stack.pop_back();
            island.cells.push_back(p);
            for (int k = 0; k < 6; ++k) {
                const HexCoord q = neighbor(p, k);
                if (!field.contains(q)) {
                    island.interior = false;
                    continue;
                }
                if (field.at(q) != bit || seen.count(q)) continue;
                seen.insert(q);
                stack.push_back(q);
            }
        }
        std::sort(island.cells.begin(), island.cells.end());
        census.islands.push_back(std::move(island));
    }
    std::sort(census.islands.begin(), census.islands.end(),
              [](const Island& x, const Island& y) {
                  return std::make_tuple(x.cells.size(), x.cells.front()) <
                         std::make_tuple(y.cells.size(), y.cells.front());
              });
    return census;
}

HexCoord ray_step(int ray_index) {
    // Even rays at 60*(k/2) degrees step by a unit lattice vector; odd rays
    // at 30 + 60*(k/2) degrees step by a next-nearest-neighbor vector.
    static constexpr HexCoord kOdd[6] = {
        {2, 1}, {1, 2}, {-1, 1}, {-2, -1}, {-1, -2}, {1, -1},
    };
    const int k = ((ray_index % 12) + 12) % 12;
    return k % 2 == 0 ? kDir[k / 2] : kOdd[k / 2];
}

std::vector<uint8_t> spoke_sequence(const ChtConfig& cfg, int ray_index, int length) {
    std::vector<uint8_t> out;
    out.reserve(length);
    const HexCoord step = ray_step(ray_index);
    for (int d = 1; d <= length; ++d) out.push_back(uint8_t(parity_at(step * d, cfg)));
    return out;
}

PeePatch extract_pee(const DecTable& dec, const Patch& patch, int sublattice) {
    if (sublattice < 1 || sublattice > 3)
        throw std::invalid_argument("sublattice must be 1, 2 or 3");
    PeePatch pee;
    pee.sublattice = sublattice;
    const int want = sublattice - 1;
    const auto coset = [](HexCoord p) { return ((p.a + p.b) % 3 + 3) % 3; };

    for (const auto& [p, s] : patch.cells()) {
        if (coset(p) != want) {
            pee.gap_fillers.push_back(p);
            continue;
        }
        PeeCell cell;
        cell.src = p;
        for (int v = 0; v < 6; ++v) cell.mark[v] = dec.vertex_color(s, v);
        pee.cells.push_back(cell);
    }

    // Continuity: the purple stripe leaving cell p through corner direction v
    // meets the stripe of the facing sublattice neighbor q across one source
    // edge; the marks must differ exactly when that edge passes R2.
    std::map<HexCoord, const PeeCell*> by_src;
    for (const PeeCell& c : pee.cells) by_src[c.src] = &c;
    static constexpr HexCoord kCornerStep[6] = {
        {1, -1}, {2, 1}, {1, 2}, {-1, 1}, {-2, -1}, {-1, -2},
    };
    for (const PeeCell& c : pee.cells) {
        for (int v = 0; v < 6; ++v) {
            const HexCoord q = c.src + kCornerStep[v];
            const auto it = by_src.find(q);
            PeeContinuitySite site;
            site.cell = c.src;
            site.corner = v;
            site.src_edge = canonical_edge(c.src - kDir[mod6(v + 2)], mod6(v + 1));
            if (it == by_src.end()) {
                site.verdict = CheckResult::Unchecked;
            } else {
                site.verdict = c.mark[v] != it->second->mark[mod6(v + 3)]
                                   ? CheckResult::Pass
                                   : CheckResult::Fail;
            }
            pee.sites.push_back(site);
        }
    }
    return pee;
}

PeeDemo same_pattern_different_pee(const DecTable& dec, const Patch& patch) {
    PeeDemo demo;
    for (int n = 1; n <= 3; ++n) demo.extractions[n - 1] = extract_pee(dec, patch, n);
    demo.pairwise_distinct = true;
    for (int i = 0; i < 3; ++i) {
        std::set<HexCoord> si;
        for (const PeeCell& c : demo.extractions[i].cells) si.insert(c.src);
        for (int j = i + 1; j < 3; ++j)
            for (const PeeCell& c : demo.extractions[j].cells)
                if (si.count(c.src)) demo.pairwise_distinct = false;
    }
    demo.all_continuous = true;
    for (const PeePatch& pee : demo.extractions)
        for (const PeeContinuitySite& site : pee.sites)
            if (site.verdict == CheckResult::Fail) demo.all_continuous = false;
    demo.note =
        "illustration only: three valid extractions of one source patch; "
        "no finite patch identifies the intended sublattice";
    return demo;
}

}  // namespace hexweave
