#include "hexweave/halfhex.hpp"

#include <algorithm>
#include <cassert>

namespace hexweave {

namespace {

int mod6(int k) { return ((k % 6) + 6) % 6; }

enum : int { A, B, C, D, E, F, G };

constexpr HalfHexSymbol L(int letter, bool barred = false) {
    return {letter, Side::L, barred};
}
constexpr HalfHexSymbol R(int letter, bool barred = false) {
    return {letter, Side::R, barred};
}

struct Row {
    int parent;  // letter of the composed tile
    std::array<HalfHexSymbol, 3> child;
};

// Arrangements around a C_L tile, children on sides 6, 5, 4.
constexpr std::array<Row, 7> kLeftRows = {{
    {A, {R(G), R(D), L(G, true)}},
    {B, {R(B, true), R(F), L(G, true)}},
    {F, {R(B, true), R(F), L(B, true)}},
    {E, {R(B, true), R(E), L(B)}},
    {C, {R(F, true), R(E, true), L(F)}},
    {G, {R(B), R(D), L(G, true)}},
    {D, {R(B), R(D), L(B, true)}},
}};

// Arrangements around a C_R tile, children on sides 1, 2, 3.
constexpr std::array<Row, 7> kRightRows = {{
    {A, {L(A, true), L(D, true), R(A)}},
    {B, {L(G), L(F, true), R(A)}},
    {F, {L(G), L(E, true), R(A, true)}},
    {E, {L(G), L(E, true), R(G, true)}},
    {C, {L(D), L(E), R(D, true)}},
    {G, {L(A), L(F, true), R(A)}},
    {D, {L(A), L(E, true), R(A, true)}},
}};

// The starred arrangements that can find no long-side mate.
constexpr std::array<HalfHexSymbol, 3> kStarLeft = {R(G), R(D), L(B, true)};
constexpr std::array<HalfHexSymbol, 3> kStarRight = {L(A), L(E, true), R(G, true)};

std::array<HalfHexSymbol, 3> mirrored(const std::array<HalfHexSymbol, 3>& t) {
    return {mirror(t[0]), mirror(t[1]), mirror(t[2])};
}

const std::array<Row, 7>& rows_for(Side side) {
    return side == Side::L ? kLeftRows : kRightRows;
}

}  // namespace

std::string symbol_name(HalfHexSymbol s) {
    std::string n(1, char('A' + s.letter));
    if (s.barred) n += 'b';
    n += s.side == Side::L ? "_L" : "_R";
    return n;
}

std::optional<HalfHexSymbol> parse_symbol(const std::string& name) {
    if (name.size() < 3) return std::nullopt;
    HalfHexSymbol s;
    s.letter = name[0] - 'A';
    if (s.letter < 0 || s.letter > 6) return std::nullopt;
    size_t i = 1;
    if (name[i] == 'b') {
        s.barred = true;
        ++i;
    }
    if (name.size() != i + 2 || name[i] != '_') return std::nullopt;
    if (name[i + 1] == 'L')
        s.side = Side::L;
    else if (name[i + 1] == 'R')
        s.side = Side::R;
    else
        return std::nullopt;
    return s;
}

int side_edge(const HalfHexCell& c, int side) {
    static constexpr int kRightEdges[3] = {1, 0, 5};  // sides 1, 2, 3
    static constexpr int kLeftEdges[3] = {4, 3, 2};   // sides 4, 5, 6
    int base;
    if (c.sym.side == Side::R) {
        if (side < 1 || side > 3) throw std::invalid_argument("right tile has sides 1..3");
        base = kRightEdges[side - 1];
    } else {
        if (side < 4 || side > 6) throw std::invalid_argument("left tile has sides 4..6");
        base = kLeftEdges[side - 4];
    }
    return mod6(base + c.orient);
}

void HalfHexPatch::add(const HalfHexCell& c) {
    const int dir = body_dir(c);
    const auto key = std::make_pair(c.hex, dir);
    auto it = cells_.find(key);
    if (it != cells_.end()) {
        if (it->second == c) return;  // idempotent on agreeing cells
        throw std::runtime_error("half-hex overlap at hexagon (" +
                                 std::to_string(c.hex.a) + "," + std::to_string(c.hex.b) +
                                 ")");
    }
    // The two halves of a hexagon must share the cut axis.
    for (int d = 0; d < 6; ++d) {
        if (d != dir && d != (dir + 3) % 6 && cells_.count({c.hex, d}))
            throw std::runtime_error("inconsistent cut axes in one hexagon");
    }
    cells_.emplace(key, c);
}

std::optional<HalfHexCell> HalfHexPatch::at(HexCoord hex, int dir) const {
    auto it = cells_.find({hex, mod6(dir)});
    if (it == cells_.end()) return std::nullopt;
    return it->second;
}

std::vector<HalfHexCell> HalfHexPatch::cells_of(HexCoord hex) const {
    std::vector<HalfHexCell> out;
    for (int d = 0; d < 6; ++d)
        if (auto c = at(hex, d)) out.push_back(*c);
    return out;
}

const std::array<ChildSlot, 3>& child_slots(Side parent_side) {
    static const std::array<ChildSlot, 3> left = {{
        {6, {0, 1}, 5, Side::R},
        {5, {-1, 0}, 0, Side::R},
        {4, {-1, -1}, 4, Side::L},
    }};
    static const std::array<ChildSlot, 3> right = {{
        {1, {1, 1}, 1, Side::L},
        {2, {1, 0}, 0, Side::L},
        {3, {0, -1}, 2, Side::R},
    }};
    return parent_side == Side::L ? left : right;
}

std::array<HalfHexSymbol, 3> decompose_children(HalfHexSymbol parent) {
    if (parent.barred) return mirrored(decompose_children(mirror(parent)));
    for (const Row& row : rows_for(parent.side))
        if (row.parent == parent.letter) return row.child;
    throw std::logic_error("unreachable: all 28 symbols decompose");
}

bool is_forbidden_arrangement(HalfHexSymbol center,
                              const std::array<HalfHexSymbol, 3>& flanks) {
    if (center.letter != C) return false;
    if (center.barred) return is_forbidden_arrangement(mirror(center), mirrored(flanks));
    return (center.side == Side::L && flanks == kStarLeft) ||
           (center.side == Side::R && flanks == kStarRight);
}

std::vector<std::pair<HalfHexSymbol, std::array<HalfHexSymbol, 3>>> forbidden_arrangements() {
    return {
        {L(C), kStarLeft},
        {R(C), kStarRight},
        {mirror(L(C)), mirrored(kStarLeft)},
        {mirror(R(C)), mirrored(kStarRight)},
    };
}

HalfHexPatch decompose_cell(const HalfHexCell& c) {
    HalfHexPatch out;
    const HexCoord big = c.hex * 2;
    out.add({big, {C, c.sym.side, c.sym.barred}, c.orient});
    const auto children = decompose_children(c.sym);
    const auto& slots = child_slots(c.sym.side);
    for (int i = 0; i < 3; ++i) {
        assert(children[i].side == slots[i].child_side);
        out.add({big + apply_sym({c.orient, false}, slots[i].delta), children[i],
                 mod6(slots[i].orient + c.orient)});
    }
    return out;
}

HalfHexPatch inflate(const HalfHexPatch& patch, int steps) {
    HalfHexPatch cur = patch;
    for (int step = 0; step < steps; ++step) {
        HalfHexPatch next;
        for (const auto& [key, cell] : cur.cells()) {
            const HalfHexPatch children = decompose_cell(cell);
            for (const auto& [k2, child] : children.cells()) next.add(child);
        }
        // Boundary completion: a lone half is joined by its same-named mate
        // so every touched hexagon forms an allowed small hexagon.
        std::vector<HalfHexCell> completions;
        for (const auto& [key, cell] : next.cells()) {
            if (!next.at(cell.hex, body_dir(cell) + 3))
                completions.push_back(
                    {cell.hex,
                     {cell.sym.letter,
                      cell.sym.side == Side::L ? Side::R : Side::L, cell.sym.barred},
                     cell.orient});
        }
        for (const auto& c : completions) next.add(c);
        cur = std::move(next);
    }
    return cur;
}

HalfHexPatch compose_unique(const HalfHexPatch& patch) {
    HalfHexPatch out;
    std::optional<HexCoord> offset;
    // Boundary-completion cells can fabricate flank triples near the patch
    // rim that no tiling contains; those sites are skipped. A C tile counts
    // as deep interior when every hexagon within distance 2 is complete.
    const auto deep_interior = [&patch](HexCoord c) {
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b) {
                const HexCoord q = c + HexCoord{a, b};
                if (hex_distance(q, c) > 2) continue;
                if (patch.cells_of(q).size() != 2) return false;
            }
        return true;
    };
    for (const auto& [key, cell] : patch.cells()) {
        if (cell.sym.letter != C) continue;
        const auto& slots = child_slots(cell.sym.side);
        std::array<HalfHexCell, 3> flank;
        bool present = true, posed = true;
        for (int i = 0; i < 3; ++i) {
            const HexCoord at = cell.hex + apply_sym({cell.orient, false}, slots[i].delta);
            const int dir =
                mod6((slots[i].child_side == Side::L ? 3 : 0) + slots[i].orient + cell.orient);
            const auto f = patch.at(at, dir);
            if (!f) {
                present = false;
                break;
            }
            if (f->orient != mod6(slots[i].orient + cell.orient) ||
                f->sym.side != slots[i].child_side) {
                posed = false;
                break;
            }
            flank[i] = *f;
        }
        if (!present) continue;
        if (!posed) {
            if (deep_interior(cell.hex))
                throw UnknownArrangement("flank of C tile at (" +
                                         std::to_string(cell.hex.a) + "," +
                                         std::to_string(cell.hex.b) +
                                         ") has unexpected pose");
            continue;
        }

        std::array<HalfHexSymbol, 3> triple = {flank[0].sym, flank[1].sym, flank[2].sym};
        // Barred arrangements mirror to the opposite-side tables.
        auto rows = rows_for(cell.sym.barred
                                 ? (cell.sym.side == Side::L ? Side::R : Side::L)
                                 : cell.sym.side);
        auto match_triple = triple;
        if (cell.sym.barred) match_triple = mirrored(triple);
        int parent_letter = -1, matches = 0;
        for (const Row& row : rows) {
            if (row.child == match_triple) {
                parent_letter = row.parent;
                ++matches;
            }
        }
        if (matches > 1)
            throw AmbiguousComposition("arrangement matches several rows");
        if (matches == 0) {
            if (deep_interior(cell.hex))
                throw UnknownArrangement(
                    "arrangement around C tile at (" + std::to_string(cell.hex.a) + "," +
                    std::to_string(cell.hex.b) + ") matches no table row" +
                    (is_forbidden_arrangement(cell.sym, triple) ? " (starred arrangement)"
                                                                : ""));
            continue;
        }
        if (!offset) offset = HexCoord{((cell.hex.a % 2) + 2) % 2, ((cell.hex.b % 2) + 2) % 2};
        const HexCoord rel = cell.hex - *offset;
        if (rel.a % 2 || rel.b % 2)
            throw UnknownArrangement("C tiles do not sit on a common doubled lattice");
        out.add({{rel.a / 2, rel.b / 2},
                 {parent_letter, cell.sym.side, cell.sym.barred},
                 cell.orient});
    }
    return out;
}

std::map<HexCoord, PlacedHex> to_hexagons(const HalfHexPatch& patch,
                                          const std::array<uint8_t, 28>& rot180) {
    std::map<HexCoord, PlacedHex> out;
    for (const auto& [key, cell] : patch.cells()) {
        if (key.second >= 3) continue;  // visit each hexagon once, via the low half
        const auto mate = patch.at(cell.hex, key.second + 3);
        if (!mate) continue;  // incomplete hexagon, skipped
        HalfHexCell x = cell, y = *mate;
        if (x.sym.side == y.sym.side) {
            // One half sits upside down; rename it through the 180-degree
            // symbol identification to reach an upright L/R description.
            const uint8_t mate = rot180[symbol_index(y.sym)];
            if (mate == 255)
                throw std::runtime_error("no 180-degree mate for " + symbol_name(y.sym));
            y = {y.hex, symbol_from_index(mate), mod6(y.orient + 3)};
        }
        if (x.sym.side == Side::R) std::swap(x, y);
        if (x.sym.side != Side::L || y.sym.side != Side::R || x.orient != y.orient)
            throw std::runtime_error("halves do not form an upright hexagon");
        if (x.sym.barred == y.sym.barred &&
            ((x.sym.letter == C && y.sym.letter == E) ||
             (x.sym.letter == E && y.sym.letter == C)))
            throw IllegalPair("C/E half-hexagon join at (" + std::to_string(x.hex.a) +
                              "," + std::to_string(x.hex.b) + ")");
        if (x.sym.letter != y.sym.letter || x.sym.barred != y.sym.barred)
            throw std::runtime_error("half-hexagon letters do not pair at (" +
                                     std::to_string(x.hex.a) + "," +
                                     std::to_string(x.hex.b) + ")");
        out.emplace(x.hex, PlacedHex{{x.sym.letter, x.sym.barred}, x.orient});
    }
    return out;
}

namespace {

struct GlugonShape {
    // Neighbor direction and orientation offsets of the two mates of an A tile.
    int dir_g, ori_g, dir_b, ori_b;
};

// Unbarred glugon: A(o) with Gbar(o+2) across edge o+1 and B(o+4) across
// edge o+2; the barred glugon is its mirror image.
constexpr GlugonShape kGlugon = {1, 2, 2, 4};
constexpr GlugonShape kGlugonBar = {2, 4, 1, 2};

}  // namespace

PolyhexPartition glugon_partition(const std::map<HexCoord, PlacedHex>& hexes) {
    PolyhexPartition out;
    std::map<HexCoord, int> assigned;

    const auto interior = [&](HexCoord p) {
        for (int k = 0; k < 6; ++k)
            if (!hexes.count(neighbor(p, k))) return false;
        return true;
    };
    const auto glugon_letter = [](const PlacedHex& h) {
        return h.type.letter == A || h.type.letter == B || h.type.letter == G;
    };

    // Glugons, seeded from A tiles.
    for (const auto& [p, h] : hexes) {
        if (h.type.letter != A) continue;
        const GlugonShape& shape = h.type.barred ? kGlugonBar : kGlugon;
        const HexCoord pg = neighbor(p, shape.dir_g + h.orient);
        const HexCoord pb = neighbor(p, shape.dir_b + h.orient);
        const auto ig = hexes.find(pg);
        const auto ib = hexes.find(pb);
        if (ig == hexes.end() || ib == hexes.end()) {
            out.skipped_boundary.push_back(p);
            continue;
        }
        const PlacedHex want_g{{G, !h.type.barred}, mod6(h.orient + shape.ori_g)};
        const PlacedHex want_b{{B, h.type.barred}, mod6(h.orient + shape.ori_b)};
        if (!(ig->second == want_g) || !(ib->second == want_b)) {
            out.violations.push_back({p, "A tile without its glugon mates"});
            continue;
        }
        if (assigned.count(p) || assigned.count(pg) || assigned.count(pb)) {
            out.violations.push_back({p, "glugon overlaps another polyhex"});
            continue;
        }
        const int id = int(out.polyhexes.size());
        out.polyhexes.push_back({PolyhexKind::Glugon, {p, pg, pb}});
        assigned[p] = assigned[pg] = assigned[pb] = id;
    }
    // Leftover interior B/G-family tiles break the glugon lemma.
    for (const auto& [p, h] : hexes) {
        if (!assigned.count(p) && glugon_letter(h) && h.type.letter != A && interior(p))
            out.violations.push_back({p, "glugon-family tile outside any glugon"});
    }

    // C tiles: cluster centers have no glugon-family neighbor.
    std::vector<HexCoord> centers;
    for (const auto& [p, h] : hexes) {
        if (h.type.letter != C) continue;
        bool touches_glugon = false, undecidable = false;
        for (int k = 0; k < 6; ++k) {
            const auto it = hexes.find(neighbor(p, k));
            if (it == hexes.end())
                undecidable = true;
            else if (glugon_letter(it->second))
                touches_glugon = true;
        }
        if (touches_glugon) {
            out.polyhexes.push_back({PolyhexKind::CTile, {p}});
            assigned[p] = int(out.polyhexes.size()) - 1;
        } else if (undecidable) {
            out.skipped_boundary.push_back(p);
        } else {
            centers.push_back(p);
        }
    }
    for (const HexCoord& p : centers) {
        Polyhex cluster{PolyhexKind::CCluster, {p}};
        bool ok = true;
        for (int k = 0; k < 6; ++k) {
            const HexCoord q = neighbor(p, k);
            const int letter = hexes.at(q).type.letter;
            if (assigned.count(q) || (letter != D && letter != E && letter != F)) {
                out.violations.push_back({q, "bad C-cluster ring tile"});
                ok = false;
                break;
            }
            cluster.members.push_back(q);
        }
        if (!ok) continue;
        const int id = int(out.polyhexes.size());
        out.polyhexes.push_back(cluster);
        for (const HexCoord& q : cluster.members) assigned[q] = id;
    }
    // Leftover interior D/E/F tiles must have joined a cluster.
    for (const auto& [p, h] : hexes) {
        const int l = h.type.letter;
        if ((l == D || l == E || l == F) && !assigned.count(p) && interior(p))
            out.violations.push_back({p, "D/E/F tile outside any C cluster"});
    }

    // All C tiles share one doubled sublattice: one hexagon between any two.
    const HexCoord* first_c = nullptr;
    for (const auto& [p, h] : hexes) {
        if (h.type.letter != C) continue;
        if (!first_c)
            first_c = &p;
        else if (((p.a - first_c->a) % 2 + 2) % 2 || ((p.b - first_c->b) % 2 + 2) % 2)
            out.violations.push_back({p, "C tile off the triangular C grid"});
    }
    return out;
}

}  // namespace hexweave
