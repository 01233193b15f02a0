#include "hexweave/solver.hpp"

#include <algorithm>
#include <bit>
#include <atomic>
#include <chrono>
#include <future>
#include <set>

namespace hexweave {

namespace {

int mod6(int k) { return ((k % 6) + 6) % 6; }

using RelTable = std::array<DomainMask, kNumStates>;

struct Relations {
    RelTable r1[6];   // state of p -> allowed neighbor(p, k) states
    RelTable r2[6];   // witness A of edge k -> allowed witness B states
    RelTable r2t[6];  // transpose
};

Relations build_relations(const DecTable& dec) {
    Relations rel{};
    for (int k = 0; k < 6; ++k) {
        for (int si = 0; si < kNumStates; ++si) {
            const TileState s = state_from_index(si);
            for (int ti = 0; ti < kNumStates; ++ti) {
                const TileState t = state_from_index(ti);
                if (dec.edge_bit(s, k) != dec.edge_bit(t, mod6(k + 3)))
                    rel.r1[k][si] |= DomainMask(1u << ti);
                if (dec.vertex_color(s, mod6(k + 5)) != dec.vertex_color(t, mod6(k + 2))) {
                    rel.r2[k][si] |= DomainMask(1u << ti);
                    rel.r2t[k][ti] |= DomainMask(1u << si);
                }
            }
        }
    }
    return rel;
}

struct BinCon {
    int a, b;
    const RelTable* fwd;  // allowed b-states per a-state
    const RelTable* rev;
};

struct TernCon {
    int var[3];
    int corner[3];
    bool no_ring;  // otherwise R3
};

struct Compiled {
    const DecTable* dec;
    std::vector<HexCoord> cells;  // static search order
    std::map<HexCoord, int> index;
    std::vector<DomainMask> unary;
    std::vector<BinCon> bins;
    std::vector<TernCon> terns;
    std::vector<std::vector<int>> bins_of, terns_of;
    Relations rel;

    int idx(HexCoord p) const {
        auto it = index.find(p);
        return it == index.end() ? -1 : it->second;
    }
};

Compiled compile(const DecTable& dec, const Problem& prob) {
    Compiled c;
    c.dec = &dec;
    c.rel = build_relations(dec);

    Patch shape = prob.torus ? Patch::torus(*prob.torus) : Patch::planar();
    std::set<HexCoord> region;
    for (HexCoord p : prob.region) region.insert(shape.canon(p));
    c.cells.assign(region.begin(), region.end());

    // Static variable order: spiral distance from the region center, then
    // lexicographic.
    long sa = 0, sb = 0;
    for (HexCoord p : c.cells) {
        sa += p.a;
        sb += p.b;
    }
    const HexCoord center{int(sa / long(c.cells.size())), int(sb / long(c.cells.size()))};
    std::stable_sort(c.cells.begin(), c.cells.end(), [&](HexCoord x, HexCoord y) {
        const int dx = hex_distance(x, center), dy = hex_distance(y, center);
        return std::tie(dx, x.a, x.b) < std::tie(dy, y.a, y.b);
    });
    for (int i = 0; i < int(c.cells.size()); ++i) c.index[c.cells[i]] = i;
    c.unary.assign(c.cells.size(), kFullDomain);

    const auto canon = [&](HexCoord p) { return shape.canon(p); };
    const auto add_bin = [&](int a, int b, const RelTable* fwd, const RelTable* rev) {
        if (a == b) {
            DomainMask m = 0;
            for (int s = 0; s < kNumStates; ++s)
                if ((*fwd)[s] & (1u << s)) m |= DomainMask(1u << s);
            c.unary[a] &= m;
        } else {
            c.bins.push_back({a, b, fwd, rev});
        }
    };

    std::set<EdgeId> edges;
    for (HexCoord p : c.cells)
        for (int k = 0; k < 6; ++k) {
            EdgeId e = canonical_edge(p, k);
            e.cell = canon(e.cell);
            edges.insert(e);
        }
    for (const EdgeId& e : edges) {
        if (prob.rules.r1) {
            const int a = c.idx(e.cell);
            const int b = c.idx(canon(neighbor(e.cell, e.k)));
            if (a >= 0 && b >= 0)
                add_bin(a, b, &c.rel.r1[e.k], &c.rel.r1[mod6(e.k + 3)]);
        }
        if (prob.rules.r2) {
            const int a = c.idx(canon(neighbor(e.cell, e.k + 1)));
            const int b = c.idx(canon(neighbor(e.cell, e.k - 1)));
            if (a >= 0 && b >= 0) add_bin(a, b, &c.rel.r2[e.k], &c.rel.r2t[e.k]);
        }
    }

    std::set<VertexId> verts;
    for (HexCoord p : c.cells)
        for (int v = 0; v < 6; ++v) {
            VertexId id = canonical_vertex(p, v);
            id.cell = canon(id.cell);
            verts.insert(id);
        }
    std::set<VertexId> forbid(prob.forbid_rings.begin(), prob.forbid_rings.end());
    for (const VertexId& v : verts) {
        TernCon t{};
        bool full = true;
        int i = 0;
        for (const auto& [cell, corner] : vertex_incidences(v)) {
            const int id = c.idx(canon(cell));
            if (id < 0) full = false;
            t.var[i] = id;
            t.corner[i] = corner;
            ++i;
        }
        if (!full) continue;
        if (prob.rules.r3) {
            TernCon r3 = t;
            r3.no_ring = false;
            c.terns.push_back(r3);
        }
        if (prob.forbid_rings_everywhere || forbid.count(v)) {
            TernCon nr = t;
            nr.no_ring = true;
            c.terns.push_back(nr);
        }
    }

    for (const auto& [p, mask] : prob.restrictions) {
        const int i = c.idx(canon(p));
        if (i >= 0) c.unary[i] &= mask;
    }
    for (const auto& [p, s] : prob.pins) {
        const int i = c.idx(canon(p));
        if (i >= 0) c.unary[i] &= DomainMask(1u << state_index(s));
    }

    c.bins_of.assign(c.cells.size(), {});
    c.terns_of.assign(c.cells.size(), {});
    for (int i = 0; i < int(c.bins.size()); ++i) {
        c.bins_of[c.bins[i].a].push_back(i);
        c.bins_of[c.bins[i].b].push_back(i);
    }
    for (int i = 0; i < int(c.terns.size()); ++i)
        for (int v : c.terns[i].var) c.terns_of[v].push_back(i);
    return c;
}

bool arc_at_state(const DecTable& dec, int si, int corner) {
    return dec.arc_at(state_from_index(si), corner);
}

// Revises one endpoint of a ternary constraint; returns the surviving mask.
DomainMask tern_revise(const DecTable& dec, const TernCon& t, int which,
                       const std::vector<DomainMask>& dom) {
    const int o1 = (which + 1) % 3, o2 = (which + 2) % 3;
    DomainMask out = 0;
    for (int s0 = 0; s0 < kNumStates; ++s0) {
        if (!(dom[t.var[which]] & (1u << s0))) continue;
        bool supported = false;
        for (int s1 = 0; s1 < kNumStates && !supported; ++s1) {
            if (!(dom[t.var[o1]] & (1u << s1))) continue;
            for (int s2 = 0; s2 < kNumStates; ++s2) {
                if (!(dom[t.var[o2]] & (1u << s2))) continue;
                bool ok;
                if (t.no_ring) {
                    ok = !(arc_at_state(dec, s0, t.corner[which]) &&
                           arc_at_state(dec, s1, t.corner[o1]) &&
                           arc_at_state(dec, s2, t.corner[o2]));
                } else {
                    const Color c0 = dec.vertex_color(state_from_index(s0), t.corner[which]);
                    const Color c1 = dec.vertex_color(state_from_index(s1), t.corner[o1]);
                    const Color c2 = dec.vertex_color(state_from_index(s2), t.corner[o2]);
                    ok = !(c0 == c1 && c1 == c2);
                }
                if (ok) {
                    supported = true;
                    break;
                }
            }
        }
        if (supported) out |= DomainMask(1u << s0);
    }
    return out;
}

// Propagates to the arc-consistent fixpoint; false on an emptied domain.
bool run_propagation(const Compiled& c, std::vector<DomainMask>& dom,
                     std::vector<int> seed_vars) {
    std::vector<char> dirty(c.cells.size(), 0);
    std::vector<int> queue = std::move(seed_vars);
    if (queue.empty()) {
        for (int i = 0; i < int(c.cells.size()); ++i) queue.push_back(i);
    }
    for (int v : queue) dirty[v] = 1;

    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        dirty[v] = 0;
        const auto touch = [&](int w) {
            if (!dirty[w]) {
                dirty[w] = 1;
                queue.push_back(w);
            }
        };
        for (int bi : c.bins_of[v]) {
            const BinCon& b = c.bins[bi];
            // Revise the side opposite to v (and v itself on first visit).
            for (int side = 0; side < 2; ++side) {
                const int from = side == 0 ? b.a : b.b;
                const int to = side == 0 ? b.b : b.a;
                const RelTable& table = side == 0 ? *b.fwd : *b.rev;
                DomainMask allowed = 0;
                DomainMask m = dom[from];
                while (m) {
                    const int s = std::countr_zero(m);
                    m &= DomainMask(m - 1);
                    allowed |= table[s];
                }
                const DomainMask next = dom[to] & allowed;
                if (next != dom[to]) {
                    dom[to] = next;
                    if (!next) return false;
                    touch(to);
                }
            }
        }
        for (int ti : c.terns_of[v]) {
            const TernCon& t = c.terns[ti];
            for (int which = 0; which < 3; ++which) {
                const DomainMask next = tern_revise(*c.dec, t, which, dom);
                if (next != dom[t.var[which]]) {
                    dom[t.var[which]] = next;
                    if (!next) return false;
                    touch(t.var[which]);
                }
            }
        }
    }
    return true;
}

struct Search {
    const Compiled& c;
    long limit;
    long budget;
    const std::function<bool(const std::map<HexCoord, TileState>&)>* cb;
    SearchOutcome out;
    bool stop = false;

    void emit(const std::vector<DomainMask>& dom) {
        std::map<HexCoord, TileState> sol;
        for (size_t i = 0; i < c.cells.size(); ++i)
            sol[c.cells[i]] = state_from_index(std::countr_zero(dom[i]));
        ++out.solution_count;
        if (cb && *cb) {
            if (!(*cb)(sol)) stop = true;
        } else {
            out.solutions.push_back(std::move(sol));
        }
        if (limit > 0 && out.solution_count >= limit) {
            out.truncated = true;
            stop = true;
        }
    }

    void dfs(std::vector<DomainMask>& dom, size_t next) {
        if (stop) return;
        while (next < dom.size() && std::popcount(dom[next]) == 1) ++next;
        if (next == dom.size()) {
            emit(dom);
            return;
        }
        const DomainMask options = dom[next];
        for (int s = 0; s < kNumStates && !stop; ++s) {
            if (!(options & (1u << s))) continue;
            ++out.nodes;
            if (budget > 0 && out.nodes > budget) {
                out.budget_exhausted = true;
                stop = true;
                return;
            }
            std::vector<DomainMask> child = dom;
            child[next] = DomainMask(1u << s);
            if (run_propagation(c, child, {int(next)})) dfs(child, next + 1);
        }
    }
};

}  // namespace

Problem Problem::planar_disk(int radius) {
    Problem prob;
    for (int a = -radius; a <= radius; ++a)
        for (int b = -radius; b <= radius; ++b)
            if (hex_norm({a, b}) <= radius) prob.region.push_back({a, b});
    return prob;
}

Problem Problem::full_torus(TorusBasis basis) {
    Problem prob;
    prob.torus = basis;
    for (int a = 0; a < basis.c00; ++a)
        for (int b = 0; b < basis.c11; ++b) prob.region.push_back({a, b});
    return prob;
}

DomainMask arc_mask(const DecTable& dec, int corner) {
    DomainMask m = 0;
    for (int s = 0; s < kNumStates; ++s)
        if (dec.arc_at(state_from_index(s), corner)) m |= DomainMask(1u << s);
    return m;
}

void require_ring(const DecTable& dec, Problem& prob, VertexId v) {
    for (const auto& [cell, corner] : vertex_incidences(v))
        prob.restrictions.push_back({cell, arc_mask(dec, corner)});
}

PropagationResult propagate(const DecTable& dec, const Problem& prob) {
    const Compiled c = compile(dec, prob);
    std::vector<DomainMask> dom = c.unary;
    PropagationResult res;
    res.contradiction = !run_propagation(c, dom, {});
    for (size_t i = 0; i < c.cells.size(); ++i) res.domains[c.cells[i]] = dom[i];
    return res;
}

SearchOutcome enumerate(const DecTable& dec, const Problem& prob, long limit,
                        long node_budget,
                        const std::function<bool(const std::map<HexCoord, TileState>&)>&
                            on_solution) {
    const Compiled c = compile(dec, prob);
    Search search{c, limit, node_budget, &on_solution, {}, false};
    std::vector<DomainMask> dom = c.unary;
    if (run_propagation(c, dom, {})) search.dfs(dom, 0);
    SearchOutcome out = std::move(search.out);
    out.unsat = out.solution_count == 0 && !out.budget_exhausted;
    return out;
}

std::vector<TorusBasis> sublattices_up_to(int max_area) {
    std::set<std::tuple<int, int, int>> canon;
    std::vector<TorusBasis> out;
    for (int n = 1; n <= max_area; ++n) {
        for (int c00 = 1; c00 <= n; ++c00) {
            if (n % c00) continue;
            const int c11 = n / c00;
            for (int c01 = 0; c01 < c00; ++c01) {
                const TorusBasis basis{c00, c01, 0, c11};
                std::tuple<int, int, int> best{INT32_MAX, 0, 0};
                for (const LatticeSym& g : all_syms()) {
                    const TorusBasis h = hermite_form(apply_sym(g, {basis.c00, 0}),
                                                      apply_sym(g, {basis.c01, basis.c11}));
                    best = std::min(best, std::tuple<int, int, int>{h.c00, h.c01, h.c11});
                }
                if (canon.insert(best).second)
                    out.push_back(TorusBasis{std::get<0>(best), std::get<1>(best), 0,
                                             std::get<2>(best)});
            }
        }
    }
    return out;
}

std::vector<BasisReport> refute_torus(const DecTable& dec, int max_area, long node_budget,
                                      int jobs) {
    const std::vector<TorusBasis> bases = sublattices_up_to(max_area);
    std::vector<BasisReport> reports(bases.size());
    const auto run_one = [&](size_t i) {
        const auto t0 = std::chrono::steady_clock::now();
        Problem prob = Problem::full_torus(bases[i]);
        prob.rules = {true, true, false};
        const SearchOutcome out = enumerate(dec, prob, 1, node_budget);
        BasisReport rep;
        rep.basis = bases[i];
        rep.nodes = out.nodes;
        if (!out.solutions.empty()) {
            rep.verdict = BasisReport::Verdict::Satisfiable;
            rep.counterexample = out.solutions.front();
        } else if (out.budget_exhausted) {
            rep.verdict = BasisReport::Verdict::Inconclusive;
        } else {
            rep.verdict = BasisReport::Verdict::Unsatisfiable;
        }
        rep.millis = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
        reports[i] = std::move(rep);
    };
    if (jobs <= 1) {
        for (size_t i = 0; i < bases.size(); ++i) run_one(i);
    } else {
        std::atomic<size_t> cursor{0};
        std::vector<std::future<void>> workers;
        for (int w = 0; w < jobs; ++w)
            workers.push_back(std::async(std::launch::async, [&] {
                for (size_t i = cursor++; i < bases.size(); i = cursor++) run_one(i);
            }));
        for (auto& f : workers) f.get();
    }
    return reports;
}

RingForcingReport verify_ring_forcing(const DecTable& dec, long enum_limit) {
    RingForcingReport rep;
    {
        Problem prob = Problem::planar_disk(3);
        prob.rules = {true, true, false};
        prob.forbid_rings_everywhere = true;
        const SearchOutcome out = enumerate(dec, prob, 1);
        rep.ringfree_unsat = out.unsat;
        rep.ringfree_nodes = out.nodes;
    }
    const VertexId pinned = canonical_vertex({0, 0}, 0);
    const VertexId opposite = canonical_vertex({0, 0}, 3);
    {
        Problem prob = Problem::planar_disk(3);
        prob.rules = {true, true, false};
        require_ring(dec, prob, pinned);
        prob.forbid_rings.push_back(opposite);
        const SearchOutcome out = enumerate(dec, prob, 1);
        rep.opposite_unsat = out.unsat;
        rep.opposite_nodes = out.nodes;
    }
    {
        Problem prob = Problem::planar_disk(3);
        prob.rules = {true, true, false};
        require_ring(dec, prob, pinned);
        bool all = true;
        long count = 0;
        const auto check = [&](const std::map<HexCoord, TileState>& sol) {
            ++count;
            for (const auto& [cell, corner] : vertex_incidences(opposite)) {
                if (!dec.arc_at(sol.at(cell), corner)) {
                    all = false;
                    return false;
                }
            }
            return true;
        };
        enumerate(dec, prob, enum_limit, 0, check);
        rep.solutions_checked = count;
        rep.opposite_in_all = all && count > 0;
    }
    return rep;
}

DefectReport grow_defect(const DecTable& dec, int radius) {
    DefectReport rep;
    // Seed: three tiles around a monochrome vertex (corner 0 of the origin),
    // pairwise consistent under R1.
    const HexCoord p0{0, 0}, p1 = neighbor(p0, 0), p2 = neighbor(p0, 5);
    std::vector<std::array<TileState, 3>> seeds;
    for (int i0 = 0; i0 < kNumStates; ++i0)
        for (int i1 = 0; i1 < kNumStates; ++i1)
            for (int i2 = 0; i2 < kNumStates; ++i2) {
                const TileState s0 = state_from_index(i0), s1 = state_from_index(i1),
                                s2 = state_from_index(i2);
                if (dec.vertex_color(s0, 0) != dec.vertex_color(s1, 4) ||
                    dec.vertex_color(s1, 4) != dec.vertex_color(s2, 2))
                    continue;
                if (dec.edge_bit(s0, 0) == dec.edge_bit(s1, 3)) continue;
                if (dec.edge_bit(s0, 5) == dec.edge_bit(s2, 2)) continue;
                if (dec.edge_bit(s1, 4) == dec.edge_bit(s2, 1)) continue;
                seeds.push_back({s0, s1, s2});
            }
    // First completable seed in deterministic order.
    bool found = false;
    for (const auto& seed : seeds) {
        Problem prob = Problem::planar_disk(2);
        prob.rules = {true, true, false};
        prob.pins = {{p0, seed[0]}, {p1, seed[1]}, {p2, seed[2]}};
        if (!enumerate(dec, prob, 1).solutions.empty()) {
            rep.seed = seed;
            found = true;
            break;
        }
    }
    if (!found) return rep;

    const int inner_radius = radius - 2;
    const auto inner_of = [&](const std::map<HexCoord, TileState>& sol) {
        std::map<HexCoord, TileState> inner;
        for (const auto& [p, s] : sol)
            if (hex_norm(p) <= inner_radius) inner[p] = s;
        return inner;
    };

    Problem prob = Problem::planar_disk(radius);
    prob.rules = {true, true, false};
    prob.pins = {{p0, rep.seed[0]}, {p1, rep.seed[1]}, {p2, rep.seed[2]}};

    bool differs = false;
    std::map<HexCoord, TileState> first;
    const auto watch = [&](const std::map<HexCoord, TileState>& sol) {
        const auto inner = inner_of(sol);
        if (first.empty()) {
            first = inner;
            return true;
        }
        if (inner != first) {
            differs = true;
            return false;
        }
        return true;
    };
    const long kSolutionCap = 100000;
    SearchOutcome out = enumerate(dec, prob, kSolutionCap, 0, watch);
    rep.solutions = out.solution_count;
    rep.nodes = out.nodes;
    rep.inner = first;
    if (differs) {
        rep.determined = false;
    } else if (!out.truncated) {
        rep.determined = !first.empty();
    } else {
        // Too many completions to list: prove determinedness by refuting
        // every alternative state on every inner cell.
        rep.determined = true;
        for (const auto& [cell, s] : first) {
            for (int alt = 0; alt < kNumStates && rep.determined; ++alt) {
                if (alt == state_index(s)) continue;
                Problem sub = prob;
                sub.restrictions.push_back({cell, DomainMask(1u << alt)});
                const SearchOutcome o = enumerate(dec, sub, 1);
                rep.nodes += o.nodes;
                if (!o.unsat) rep.determined = false;
            }
        }
    }

    // Control: without the seed, the inner disk is not determined.
    {
        Problem free = Problem::planar_disk(radius);
        free.rules = {true, true, false};
        std::map<HexCoord, TileState> first_free;
        bool multiple = false;
        const auto cb = [&](const std::map<HexCoord, TileState>& sol) {
            const auto inner = inner_of(sol);
            if (first_free.empty()) {
                first_free = inner;
                return true;
            }
            if (inner != first_free) {
                multiple = true;
                return false;
            }
            return true;
        };
        enumerate(dec, free, 0, 2000000, cb);
        rep.control_multiple = multiple;
    }
    return rep;
}

UniformityReport uniformity_check(const Patch& patch, int r, long min_count) {
    UniformityReport rep;
    std::vector<HexCoord> offsets;
    for (int a = -r; a <= r; ++a)
        for (int b = -r; b <= r; ++b)
            if (hex_norm({a, b}) <= r) offsets.push_back({a, b});

    int patch_radius = 0;
    for (const auto& [p, s] : patch.cells()) patch_radius = std::max(patch_radius, hex_norm(p));

    const auto config_key = [&](HexCoord c) -> std::optional<std::vector<uint8_t>> {
        std::optional<std::vector<uint8_t>> best;
        for (const LatticeSym& g : all_syms()) {
            const LatticeSym inv = g.mirror ? g : LatticeSym{(6 - g.rot) % 6, false};
            std::vector<uint8_t> key;
            key.reserve(offsets.size());
            for (HexCoord q : offsets) {
                const auto s = patch.at(c + apply_sym(inv, q));
                if (!s) return std::nullopt;
                key.push_back(uint8_t(state_index(transform(*s, g))));
            }
            if (!best || key < *best) best = std::move(key);
        }
        return best;
    };

    std::map<std::vector<uint8_t>, long> counts;
    std::set<std::vector<uint8_t>> inner;
    for (const auto& [c, s] : patch.cells()) {
        const auto key = config_key(c);
        if (!key) continue;
        ++counts[*key];
        if (hex_norm(c) * 2 <= patch_radius) inner.insert(*key);
    }
    rep.inner_configs = long(inner.size());
    rep.min_occurrences = -1;
    for (const auto& key : inner) {
        const long n = counts[key];
        if (rep.min_occurrences < 0 || n < rep.min_occurrences) rep.min_occurrences = n;
    }
    rep.pass = rep.inner_configs > 0 && rep.min_occurrences >= min_count;
    return rep;
}

}  // namespace hexweave
