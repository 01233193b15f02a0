#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "hexweave/tile_state.hpp"

namespace hexweave {

// Translation sublattice spanned by columns (c00, c10) and (c01, c11),
// kept in Hermite normal form: c00 > 0, c11 > 0, 0 <= c01 < c00, c10 = 0.
struct TorusBasis {
    int c00 = 1, c01 = 0;
    int c10 = 0, c11 = 1;

    friend bool operator==(const TorusBasis&, const TorusBasis&) = default;
    friend auto operator<=>(const TorusBasis&, const TorusBasis&) = default;

    int index() const { return c00 * c11 - c01 * c10; }

    // Canonical representative of p modulo the sublattice.
    HexCoord reduce(HexCoord p) const {
        int y = p.b % c11;
        if (y < 0) y += c11;
        const int steps = (p.b - y) / c11;
        int x = (p.a - steps * c01) % c00;
        if (x < 0) x += c00;
        return {x, y};
    }
};

// Hermite normal form of the lattice spanned by two integer column vectors.
TorusBasis hermite_form(HexCoord u, HexCoord v);

enum class Topology : uint8_t { Planar, Torus };

// Finite set of decorated cells, either a plain planar region or a quotient
// under a torus basis (cell keys are canonical representatives).
class Patch {
  public:
    Patch() = default;
    static Patch planar() { return Patch{}; }
    static Patch torus(TorusBasis basis) {
        if (basis.index() <= 0) throw std::invalid_argument("torus basis is singular");
        Patch p;
        p.topology_ = Topology::Torus;
        p.basis_ = basis;
        return p;
    }

    Topology topology() const { return topology_; }
    const TorusBasis& basis() const { return basis_; }

    HexCoord canon(HexCoord p) const {
        return topology_ == Topology::Torus ? basis_.reduce(p) : p;
    }

    void set(HexCoord p, TileState s) { cells_[canon(p)] = s; }
    void erase(HexCoord p) { cells_.erase(canon(p)); }
    std::optional<TileState> at(HexCoord p) const {
        auto it = cells_.find(canon(p));
        if (it == cells_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(HexCoord p) const { return cells_.count(canon(p)) != 0; }

    const std::map<HexCoord, TileState>& cells() const { return cells_; }
    size_t size() const { return cells_.size(); }

  private:
    Topology topology_ = Topology::Planar;
    TorusBasis basis_{};
    std::map<HexCoord, TileState> cells_;
};

}  // namespace hexweave
